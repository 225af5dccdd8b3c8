use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{HalfInt, ModelParams};
use crate::tridiag;

/// The Hamiltonian restricted to the invariant subspace of fixed `λ`,
/// spanned by `|ν⟩ ⊗ |j, λ − ν⟩` for ascending `ν ∈ [max(0, λ − j), λ + j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorHamiltonian {
    pub lambda: HalfInt,
    pub nu_min: usize,
    pub nu_max: usize,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl SectorHamiltonian {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn inf_norm(&self) -> f64 {
        tridiag::inf_norm(&self.diag, &self.offdiag)
    }
}

/// Number of excitations `k = λ + j`, validated against `j`.
pub(crate) fn excitations(params: &ModelParams, lambda: HalfInt) -> Result<usize> {
    let k = lambda + params.j_half();
    if !k.is_integer() {
        return Err(Error::InvalidParams(format!(
            "lambda = {lambda} has the wrong parity for j = {}",
            params.j_half()
        )));
    }
    if k.twice() < 0 {
        return Err(Error::LambdaOutOfRange { lambda, j: params.j_half() });
    }
    Ok((k.twice() / 2) as usize)
}

pub fn build_sector(params: &ModelParams, lambda: HalfInt) -> Result<SectorHamiltonian> {
    let k = excitations(params, lambda)?;
    Ok(build_sector_k(params, k))
}

pub(crate) fn build_sector_k(params: &ModelParams, k: usize) -> SectorHamiltonian {
    let two_j = params.n_atoms() as usize;
    let n = params.n();
    let lam = k as f64 - params.j();
    let nu_min = k.saturating_sub(two_j);
    let coupling = params.gamma() / (n * n.sqrt());
    let diag = (nu_min..=k)
        .map(|nu| {
            let m = lam - nu as f64;
            lam / n - params.delta() * m / n
        })
        .collect();
    // ⟨ν+1, m−1| a†J₋ |ν, m⟩ = √(ν+1) √((j+m)(j−m+1)), with j + m = k − ν excited atoms
    let offdiag = (nu_min..k)
        .map(|nu| {
            let excited = (k - nu) as f64;
            coupling * ((nu as f64 + 1.0) * excited * (two_j as f64 - excited + 1.0)).sqrt()
        })
        .collect();
    SectorHamiltonian {
        lambda: HalfInt::from_int(k as i64) - params.j_half(),
        nu_min,
        nu_max: k,
        diag,
        offdiag,
    }
}

/// Lowest eigenpair of one sector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectorSolution {
    pub lambda: HalfInt,
    pub nu_min: usize,
    pub energy_per_atom: f64,
    /// `c_ν` for `ν = nu_min, nu_min + 1, …`; unit norm, largest entry positive.
    pub coeffs: Vec<f64>,
    pub residual: f64,
}

impl SectorSolution {
    pub fn nu_max(&self) -> usize {
        self.nu_min + self.coeffs.len() - 1
    }

    /// `(ν, |c_ν|²)` pairs.
    pub fn photon_weights(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.nu_min + i, c * c))
    }
}

pub fn solve_sector(h: &SectorHamiltonian) -> Result<SectorSolution> {
    let pair = tridiag::lowest_eigenpair(&h.diag, &h.offdiag)?;
    Ok(SectorSolution {
        lambda: h.lambda,
        nu_min: h.nu_min,
        energy_per_atom: pair.value,
        coeffs: pair.vector,
        residual: pair.residual,
    })
}

/// Closed-form ground energy per atom of the three lowest sectors.
///
/// For `λ = −j + 2` the 3×3 block, shifted by its mean diagonal, has the
/// characteristic polynomial `x³ − p x − q` with `p = Δ² + (4N − 2)γ²/N` and
/// `q = 2γ²Δ/N`; its smallest root is `−2√(p/3) sin((2ψ + π)/6)` with
/// `ψ ∈ [0, π]` fixed by `tan ψ = N√(p³ − 27γ⁴Δ²/N²) / (3√3 γ² Δ)`.
pub fn analytic_sector_energy(params: &ModelParams, lambda: HalfInt) -> Result<f64> {
    let k = excitations(params, lambda)?;
    let n = params.n();
    let d = params.delta();
    let g2 = params.gamma() * params.gamma();
    match k {
        0 => Ok(-0.5 * (1.0 - d)),
        1 => Ok((2.0 - n - d + n * d - (4.0 * g2 + d * d).sqrt()) / (2.0 * n)),
        2 => {
            if params.n_atoms() < 2 {
                return Err(Error::InvalidParams("lambda = -j + 2 needs N >= 2".into()));
            }
            let p = (4.0 * n - 2.0) * g2 / n + d * d;
            let disc = (p.powi(3) - 27.0 * g2 * g2 * d * d / (n * n)).max(0.0);
            let psi = (n * disc.sqrt()).atan2(3.0 * 3f64.sqrt() * g2 * d);
            Ok((n * d - n - 2.0 * d + 4.0) / (2.0 * n)
                - 2.0 * p.sqrt() * ((2.0 * psi + PI) / 6.0).sin() / (3f64.sqrt() * n))
        }
        _ => Err(Error::UnsupportedSector { lambda }),
    }
}
