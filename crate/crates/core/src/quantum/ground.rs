use std::collections::BTreeMap;

use serde::Serialize;

use crate::distribution::{IndexKind, ProbabilityDistribution};
use crate::error::{Error, Result};
use crate::model::{HalfInt, ModelParams};
use crate::observables::ObservableSet;
use crate::semiclassical::{critical_point, observables_sc};

use super::sector::{build_sector_k, solve_sector, SectorSolution};

/// Energies closer than this are treated as degenerate.
const TIE_TOL: f64 = 1e-12;

/// How the sector index is scanned for the ground state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanPolicy {
    /// Consecutive increases past the running minimum that end a scan.
    pub patience: usize,
    /// Start at the semiclassical `λ` and walk outward; falls back to an
    /// ascending scan if the explored energies are not unimodal.
    pub guided: bool,
}

impl Default for ScanPolicy {
    fn default() -> Self {
        ScanPolicy { patience: 5, guided: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroundState {
    pub sector: SectorSolution,
    /// `(λ, E_λ/N)` for every sector solved, ascending in `λ`.
    pub scanned: Vec<(HalfInt, f64)>,
    /// Another sector lies within `1e-12` of the ground energy.
    pub tie: bool,
    pub observables: ObservableSet,
}

impl GroundState {
    pub fn lambda(&self) -> HalfInt {
        self.sector.lambda
    }

    pub fn energy_per_atom(&self) -> f64 {
        self.sector.energy_per_atom
    }
}

struct Scan<'a> {
    params: &'a ModelParams,
    cap_k: usize,
    energies: BTreeMap<usize, f64>,
}

impl Scan<'_> {
    fn energy(&mut self, k: usize) -> Result<f64> {
        if k > self.cap_k {
            return Err(Error::ScanCap { cap: HalfInt::from_int(self.cap_k as i64) - self.params.j_half() });
        }
        if let Some(&e) = self.energies.get(&k) {
            return Ok(e);
        }
        let e = solve_sector(&build_sector_k(self.params, k))?.energy_per_atom;
        self.energies.insert(k, e);
        Ok(e)
    }

    fn ascending(&mut self, patience: usize) -> Result<()> {
        let mut best = f64::INFINITY;
        let mut prev = f64::INFINITY;
        let mut rising = 0;
        for k in 0.. {
            let e = self.energy(k)?;
            rising = if e > prev { rising + 1 } else { 0 };
            best = best.min(e);
            prev = e;
            if rising >= patience && e > best {
                return Ok(());
            }
        }
        unreachable!()
    }

    /// Walks from `k0` upward or downward until `patience` increases in a row.
    fn walk(&mut self, k0: usize, up: bool, patience: usize) -> Result<()> {
        let mut prev = self.energy(k0)?;
        let mut rising = 0;
        let mut k = k0;
        while rising < patience {
            if up {
                k += 1;
            } else if k == 0 {
                return Ok(());
            } else {
                k -= 1;
            }
            let e = self.energy(k)?;
            rising = if e > prev { rising + 1 } else { 0 };
            prev = e;
        }
        Ok(())
    }

    fn unimodal(&self) -> bool {
        let values: Vec<f64> = self.energies.values().copied().collect();
        let min_at = argmin(&values);
        values[..=min_at].windows(2).all(|w| w[1] <= w[0] + TIE_TOL)
            && values[min_at..].windows(2).all(|w| w[1] + TIE_TOL >= w[0])
    }
}

fn argmin(values: &[f64]) -> usize {
    values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |(i0, e0), (i, &e)| if e < e0 { (i, e) } else { (i0, e0) })
        .0
}

/// Ground state over all sectors.
///
/// The scan stops `patience` sectors after the running minimum; it gives up
/// with [`Error::ScanCap`] past `λ_sc + max(50, 10 σ_λ)`, where `σ_λ²` is
/// the semiclassical variance of `λ`.
pub fn find_ground(params: &ModelParams, policy: &ScanPolicy) -> Result<GroundState> {
    if policy.patience == 0 {
        return Err(Error::InvalidParams("scan patience must be positive".into()));
    }
    let cp = critical_point(params);
    let sc = observables_sc(params);
    let sigma = (sc.var_n + sc.var_jz).max(0.0).sqrt();
    let k_sc = cp.lambda_sc + params.j();
    let cap_k = (k_sc + (10.0 * sigma).max(50.0)).ceil().max(0.0) as usize;
    let mut scan = Scan { params, cap_k, energies: BTreeMap::new() };

    if policy.guided {
        let k0 = (k_sc.round().max(0.0) as usize).min(cap_k);
        scan.walk(k0, true, policy.patience)?;
        scan.walk(k0, false, policy.patience)?;
        if !scan.unimodal() {
            scan.energies.clear();
            scan.ascending(policy.patience)?;
        }
    } else {
        scan.ascending(policy.patience)?;
    }

    let best = scan.energies.values().copied().fold(f64::INFINITY, f64::min);
    let near: Vec<usize> = scan.energies.iter().filter(|(_, &e)| e <= best + TIE_TOL).map(|(&k, _)| k).collect();
    let k = near[0];
    let sector = solve_sector(&build_sector_k(params, k))?;
    let observables = sector_observables(&sector, params);
    let j = params.j_half();
    Ok(GroundState {
        scanned: scan.energies.iter().map(|(&k, &e)| (HalfInt::from_int(k as i64) - j, e)).collect(),
        tie: near.len() > 1,
        sector,
        observables,
    })
}

/// Observables of the exact ground state.
pub fn observables_q(gs: &GroundState, params: &ModelParams) -> ObservableSet {
    sector_observables(&gs.sector, params)
}

/// Observables of a single-sector eigenstate. `⟨J_x⟩`, `⟨J_y⟩`, `⟨q⟩`, `⟨p⟩`
/// vanish by the `U(1)` symmetry, and `(ΔJ_x)² = (ΔJ_y)² = (j(j+1) − ⟨J_z²⟩)/2`.
fn sector_observables(sol: &SectorSolution, params: &ModelParams) -> ObservableSet {
    let j = params.j();
    let n = params.n();
    let lam = sol.lambda.value();
    let (mut jz, mut jz2, mut nu1, mut nu2, mut ent) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (nu, w) in sol.photon_weights() {
        let m = lam - nu as f64;
        let nu = nu as f64;
        jz += w * m;
        jz2 += w * m * m;
        nu1 += w * nu;
        nu2 += w * nu * nu;
        if w > 0.0 {
            ent -= w * w.ln();
        }
    }
    let var_perp = (0.5 * (j * (j + 1.0) - jz2)).max(0.0);
    ObservableSet {
        jz_per_n: jz / n,
        jx_per_n: 0.0,
        jy_per_n: 0.0,
        var_jx: var_perp,
        var_jy: var_perp,
        var_jz: (jz2 - jz * jz).max(0.0),
        n_per_n: nu1 / n,
        var_n: (nu2 - nu1 * nu1).max(0.0),
        q_mean: 0.0,
        p_mean: 0.0,
        var_q: nu1 + 0.5,
        var_p: nu1 + 0.5,
        entropy_nats: ent,
        squeezing_xi: (2.0 * var_perp / j).sqrt(),
    }
}

/// Photon-number and excited-atom distributions of the ground state.
pub fn reduced_distributions(gs: &GroundState) -> (ProbabilityDistribution, ProbabilityDistribution) {
    let weights: Vec<f64> = gs.sector.photon_weights().map(|(_, w)| w).collect();
    let photon = ProbabilityDistribution::new(
        IndexKind::Photons,
        HalfInt::from_int(gs.sector.nu_min as i64),
        weights.clone(),
        0.0,
    );
    // excited atoms k − ν run from 0 at ν = k down to the sector's ν_min
    let matter = ProbabilityDistribution::new(
        IndexKind::ExcitedAtoms,
        HalfInt::from_int(0),
        weights.into_iter().rev().collect(),
        0.0,
    );
    (photon, matter)
}
