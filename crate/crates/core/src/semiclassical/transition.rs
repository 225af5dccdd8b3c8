use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{PhaseRegion, DEFAULT_BOUNDARY_EPS};

use super::surface::minimum_energy;

/// Step and tolerance for [`transition_order`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionProbe {
    pub step: f64,
    pub tol: f64,
    pub eps_boundary: f64,
}

impl Default for TransitionProbe {
    fn default() -> Self {
        TransitionProbe { step: 1e-3, tol: 1e-2, eps_boundary: DEFAULT_BOUNDARY_EPS }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TransitionReport {
    /// Lowest derivative order that jumps across `s0`; `None` if orders 0–2
    /// all agree.
    pub order: Option<u32>,
    /// `E₀/N` and its first two path derivatives, extrapolated to `s0` from below.
    pub left: [f64; 3],
    /// Same, from above.
    pub right: [f64; 3],
    pub left_region: PhaseRegion,
    pub right_region: PhaseRegion,
}

impl TransitionReport {
    /// `right − left` for each derivative order.
    pub fn jumps(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| self.right[i] - self.left[i])
    }
}

/// Ehrenfest order of the semiclassical ground-energy transition at `s0`
/// along `path: s ↦ (γ(s), ω_A(s))`.
///
/// Each side is sampled at `s0 ± i·h` for `i = 1..=4`; the interpolating
/// cubic gives one-sided limits of `E₀/N`, `dE₀/ds`, and `d²E₀/ds²`.
pub fn transition_order<F>(path: F, s0: f64, probe: &TransitionProbe) -> Result<TransitionReport>
where
    F: Fn(f64) -> (f64, f64),
{
    if probe.step.is_nan() || probe.step <= 0.0 || probe.tol.is_nan() || probe.tol < 0.0 {
        return Err(Error::InvalidParams("transition probe needs step > 0 and tol >= 0".into()));
    }
    let side = |sign: f64, name: &'static str| -> Result<([f64; 3], PhaseRegion)> {
        let nodes: Vec<f64> = (1..=4).map(|i| sign * i as f64 * probe.step).collect();
        let mut values = Vec::with_capacity(4);
        let mut region = None;
        for &t in &nodes {
            let (g, w) = path(s0 + t);
            let (r, e) = minimum_energy(g, w, probe.eps_boundary);
            match region {
                None => region = Some(r),
                Some(prev) if prev != r => return Err(Error::StencilStraddle { side: name, s0 }),
                _ => {}
            }
            values.push(e);
        }
        let weights = lagrange_at_zero(&nodes);
        let derivs = [0, 1, 2].map(|d| weights[d].iter().zip(&values).map(|(w, v)| w * v).sum());
        Ok((derivs, region.expect("four nodes")))
    };
    let (left, left_region) = side(-1.0, "left")?;
    let (right, right_region) = side(1.0, "right")?;
    let order = (0..3).find(|&i| (left[i] - right[i]).abs() > probe.tol).map(|i| i as u32);
    Ok(TransitionReport { order, left, right, left_region, right_region })
}

/// Weights `w[d][i]` such that `Σ_i w[d][i] f(x_i)` is the `d`-th derivative
/// at 0 of the polynomial interpolating `f` on `nodes`.
fn lagrange_at_zero(nodes: &[f64]) -> [Vec<f64>; 3] {
    let mut out = [vec![0.0; nodes.len()], vec![0.0; nodes.len()], vec![0.0; nodes.len()]];
    for (i, &xi) in nodes.iter().enumerate() {
        // coefficients of Π_{k≠i} (t − x_k)/(x_i − x_k), lowest degree first
        let mut poly = vec![1.0];
        for (k, &xk) in nodes.iter().enumerate() {
            if k == i {
                continue;
            }
            let scale = 1.0 / (xi - xk);
            let mut next = vec![0.0; poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c * scale;
                next[d] -= c * xk * scale;
            }
            poly = next;
        }
        out[0][i] = poly[0];
        out[1][i] = poly[1];
        out[2][i] = 2.0 * poly[2];
    }
    out
}
