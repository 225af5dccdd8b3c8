//! Lowest eigenpair of a real symmetric tridiagonal matrix.
//!
//! The eigenvalue comes from bisection on the Sturm count (the number of
//! negative pivots of `T − xI = LDLᵀ`), the eigenvector from inverse
//! iteration with a partially pivoted tridiagonal LU.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<f64>,
    /// `‖T v − value · v‖₂`.
    pub residual: f64,
}

/// `max_i Σ_j |T_ij|`.
pub fn inf_norm(diag: &[f64], off: &[f64]) -> f64 {
    (0..diag.len())
        .map(|i| {
            let lo = if i > 0 { off[i - 1].abs() } else { 0.0 };
            let hi = off.get(i).map_or(0.0, |e| e.abs());
            diag[i].abs() + lo + hi
        })
        .fold(0.0, f64::max)
}

fn pivot_floor(off: &[f64]) -> f64 {
    let max_e2 = off.iter().map(|e| e * e).fold(1.0, f64::max);
    f64::MIN_POSITIVE * max_e2
}

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let pivmin = pivot_floor(off);
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i > 0 { off[i - 1] * off[i - 1] / q } else { 0.0 };
        q = diag[i] - x - coupling;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Smallest eigenvalue by bisection, accurate to a few ulps of `‖T‖`.
pub fn lowest_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    // Gershgorin interval
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + off.get(i).map_or(0.0, |e| e.abs());
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    lo -= 2.0 * f64::EPSILON * scale;
    hi += 2.0 * f64::EPSILON * scale;
    for _ in 0..2100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * scale {
            break;
        }
        if sturm_count(diag, off, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `(T − shift·I) x = rhs` in place, replacing tiny pivots.
fn shifted_solve(diag: &[f64], off: &[f64], shift: f64, rhs: &mut [f64], tiny: f64) {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|x| x - shift).collect();
    let mut dl: Vec<f64> = off.to_vec();
    let mut du: Vec<f64> = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];

    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i].abs() < tiny {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            let temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -fact;
            }
            swapped[i] = true;
        }
    }
    if n > 0 && d[n - 1].abs() < tiny {
        d[n - 1] = tiny;
    }

    for i in 0..n.saturating_sub(1) {
        if swapped[i] {
            rhs.swap(i, i + 1);
        }
        rhs[i + 1] -= dl[i] * rhs[i];
    }
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        if i + 1 < n {
            acc -= du[i] * rhs[i + 1];
        }
        if i + 2 < n {
            acc -= du2[i] * rhs[i + 2];
        }
        rhs[i] = acc / d[i];
    }
}

fn residual(diag: &[f64], off: &[f64], value: f64, v: &[f64]) -> f64 {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let mut r = (diag[i] - value) * v[i];
            if i > 0 {
                r += off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                r += off[i] * v[i + 1];
            }
            r * r
        })
        .sum::<f64>()
        .sqrt()
}

/// Lowest eigenpair, normalised, with the largest-magnitude entry positive.
///
/// Fails if inverse iteration cannot bring the residual under
/// `1e-10 · max(1, ‖T‖∞)`.
pub fn lowest_eigenpair(diag: &[f64], off: &[f64]) -> Result<Eigenpair> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n {
        return Err(Error::NonConvergence {
            dim: n,
            reason: format!("malformed tridiagonal: {} diagonal, {} off-diagonal", n, off.len()),
        });
    }
    let norm = inf_norm(diag, off);
    if n == 1 || norm == 0.0 {
        let mut vector = vec![0.0; n];
        vector[0] = 1.0;
        return Ok(Eigenpair { value: diag[0], vector, residual: 0.0 });
    }
    let value = lowest_eigenvalue(diag, off);
    let bound = 1e-10 * norm.max(1.0);
    let tiny = f64::EPSILON * norm.max(f64::MIN_POSITIVE);

    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 1e-3 * (i % 7) as f64).collect();
    let mut res = f64::INFINITY;
    for _ in 0..8 {
        shifted_solve(diag, off, value, &mut v, tiny);
        let scale = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !scale.is_finite() || scale == 0.0 {
            return Err(Error::NonConvergence { dim: n, reason: "inverse iteration broke down".into() });
        }
        v.iter_mut().for_each(|x| *x /= scale);
        res = residual(diag, off, value, &v);
        if res <= 1e-3 * bound {
            break;
        }
    }
    if res.is_nan() || res > bound {
        return Err(Error::NonConvergence {
            dim: n,
            reason: format!("residual {res:e} above {bound:e}"),
        });
    }
    let lead = v.iter().copied().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
    if lead < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    Ok(Eigenpair { value, vector: v, residual: res })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    fn dense_lowest(diag: &[f64], off: &[f64]) -> f64 {
        let n = diag.len();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                diag[i]
            } else if i + 1 == j {
                off[i]
            } else if j + 1 == i {
                off[j]
            } else {
                0.0
            }
        });
        m.symmetric_eigen().eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn one_by_one() {
        let e = lowest_eigenpair(&[-0.4], &[]).unwrap();
        assert_eq!(e.value, -0.4);
        assert_eq!(e.vector, vec![1.0]);
    }

    #[test]
    fn two_by_two_closed_form() {
        let (a, b, c) = (0.3, -1.1, 0.7);
        let e = lowest_eigenpair(&[a, b], &[c]).unwrap();
        let expected = 0.5 * (a + b) - (0.25 * (a - b) * (a - b) + c * c).sqrt();
        assert_abs_diff_eq!(e.value, expected, epsilon = 1e-15);
    }

    #[test]
    fn decoupled_and_degenerate() {
        let e = lowest_eigenpair(&[2.0, -1.0, 3.0], &[0.0, 0.0]).unwrap();
        assert_eq!(e.value, -1.0);
        assert_abs_diff_eq!(e.vector[1], 1.0, epsilon = 1e-15);
        let e = lowest_eigenpair(&[0.0; 4], &[0.0; 3]).unwrap();
        assert_eq!((e.value, e.vector[0]), (0.0, 1.0));
        let e = lowest_eigenpair(&[0.5; 4], &[0.0; 3]).unwrap();
        assert_abs_diff_eq!(e.value, 0.5, epsilon = 1e-15);
        assert!(e.residual < 1e-14);
    }

    #[test]
    fn sturm_counts_every_eigenvalue() {
        // 1D Laplacian, eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 9;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        for k in 1..=n {
            let ev = 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert_eq!(sturm_count(&diag, &off, ev + 1e-9), k);
            assert_eq!(sturm_count(&diag, &off, ev - 1e-9), k - 1);
        }
    }

    #[test]
    fn malformed_is_rejected() {
        assert!(lowest_eigenpair(&[], &[]).is_err());
        assert!(lowest_eigenpair(&[1.0, 2.0], &[]).is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_dense_solver(
            diag in prop::collection::vec(-5.0..5.0f64, 1..40),
            seed in prop::collection::vec(-3.0..3.0f64, 40),
        ) {
            let off = &seed[..diag.len() - 1];
            let e = lowest_eigenpair(&diag, off).unwrap();
            prop_assert!((e.value - dense_lowest(&diag, off)).abs() < 1e-12);
            let norm: f64 = e.vector.iter().map(|x| x * x).sum();
            prop_assert!((norm - 1.0).abs() < 1e-12);
            prop_assert!(e.residual <= 1e-10 * inf_norm(&diag, off).max(1.0));
        }
    }
}
