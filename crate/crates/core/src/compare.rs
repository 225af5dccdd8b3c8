//! Semiclassical versus exact ground state.

use serde::Serialize;

use crate::distribution::{IndexKind, ProbabilityDistribution};
use crate::error::{Error, Result};
use crate::model::{HalfInt, ModelParams, PhaseRegion};
use crate::observables::ObservableSet;
use crate::quantum::{excitations, find_ground, reduced_distributions, ScanPolicy};
use crate::semiclassical::{critical_point, observables_sc, occupation_distribution, TrialCoefficients};

/// Bhattacharyya overlap `Σ √(q_n p_n)` of two distributions on the same support.
pub fn fidelity(a: &ProbabilityDistribution, b: &ProbabilityDistribution) -> Result<f64> {
    a.check_same_support(b)?;
    let f: f64 = a.weights().iter().zip(b.weights()).map(|(x, y)| (x.max(0.0) * y.max(0.0)).sqrt()).sum();
    Ok(f.clamp(0.0, 1.0))
}

/// The trial state projected on one `λ` sector and renormalised.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RestrictedTrial {
    pub lambda: HalfInt,
    /// Probability of the sector before renormalisation.
    pub weight: f64,
    pub photon_probs: ProbabilityDistribution,
}

pub fn restricted_trial(coeffs: &TrialCoefficients, lambda: HalfInt) -> Result<RestrictedTrial> {
    let j = coeffs.j_half();
    let k = lambda + j;
    let two_j = j.twice() as usize;
    if !k.is_integer() || k.twice() < 0 || (k.twice() / 2) as usize > coeffs.nu_max() + two_j {
        return Err(Error::LambdaOutOfRange { lambda, j });
    }
    let sector = coeffs.sector_weights((k.twice() / 2) as usize);
    let weight: f64 = sector.iter().map(|(_, w)| w).sum();
    if weight.is_nan() || weight <= 0.0 {
        return Err(Error::EmptySector(lambda));
    }
    let start = HalfInt::from_int(sector[0].0 as i64);
    let weights = sector.iter().map(|(_, w)| w / weight).collect();
    Ok(RestrictedTrial {
        lambda,
        weight,
        photon_probs: ProbabilityDistribution::new(IndexKind::Photons, start, weights, 0.0),
    })
}

/// Both ground states at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub params: ModelParams,
    pub region: PhaseRegion,
    pub energy_sc: f64,
    pub energy_q: f64,
    pub sc: ObservableSet,
    pub q: ObservableSet,
    /// Overlap of the excited-atom distributions over the quantum support.
    pub fidelity: f64,
    pub lambda_sc: f64,
    pub lambda_q: HalfInt,
    /// The quantum ground sector is degenerate with another within `1e-12`.
    pub tie: bool,
}

pub fn compare_point(params: &ModelParams) -> Result<ComparisonRecord> {
    let cp = critical_point(params);
    let gs = find_ground(params, &ScanPolicy::default())?;
    let (_, matter_q) = reduced_distributions(&gs);
    let matter_sc = occupation_distribution(params).restrict(matter_q.start(), matter_q.end());
    Ok(ComparisonRecord {
        params: *params,
        region: cp.region,
        energy_sc: cp.energy_per_atom,
        energy_q: gs.energy_per_atom(),
        sc: observables_sc(params),
        q: gs.observables,
        fidelity: fidelity(&matter_q, &matter_sc)?,
        lambda_sc: cp.lambda_sc,
        lambda_q: gs.lambda(),
        tie: gs.tie,
    })
}

/// Excited-atom distribution of the semiclassical state over the support of
/// the quantum sector `λ`.
pub fn matter_sc_on_sector(params: &ModelParams, lambda: HalfInt) -> Result<ProbabilityDistribution> {
    let k = excitations(params, lambda)?;
    let end = k.min(params.n_atoms() as usize) as i64;
    Ok(occupation_distribution(params).restrict(HalfInt::from_int(0), HalfInt::from_int(end)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiclassical::{trial_coefficients, NuMaxPolicy};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn dist(weights: Vec<f64>) -> ProbabilityDistribution {
        ProbabilityDistribution::new(IndexKind::ExcitedAtoms, HalfInt::from_int(0), weights, 0.0)
    }

    #[test]
    fn fidelity_examples() {
        let a = dist(vec![1.0, 0.0]);
        assert_eq!(fidelity(&a, &a).unwrap(), 1.0);
        assert_eq!(fidelity(&a, &dist(vec![0.0, 1.0])).unwrap(), 0.0);
        assert!(matches!(fidelity(&a, &dist(vec![1.0])), Err(Error::SupportMismatch(_))));
    }

    #[test]
    fn north_point_is_degenerate() {
        let params = ModelParams::with_delta(6, 0.2, 0.5).unwrap();
        let r = compare_point(&params).unwrap();
        assert_eq!(r.fidelity, 1.0);
        for ((name, a), (_, b)) in r.sc.fields().into_iter().zip(r.q.fields()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-15);
            assert!(a.is_finite(), "{name}");
        }
        assert_abs_diff_eq!(r.energy_sc, r.energy_q, epsilon = 1e-15);
    }

    #[test]
    fn fig8_point() {
        let params = ModelParams::with_delta(6, 0.2, -1.5).unwrap();
        let r = compare_point(&params).unwrap();
        assert_eq!(r.lambda_q, HalfInt::from_int(2));
        assert_abs_diff_eq!(r.lambda_sc, 1.8816666666666668, epsilon = 1e-12);
    }

    #[test]
    fn north_restricted_trial() {
        let params = ModelParams::with_delta(6, 0.2, 0.5).unwrap();
        let c = trial_coefficients(&params, &NuMaxPolicy::default()).unwrap();
        let r = restricted_trial(&c, HalfInt::from_int(-3)).unwrap();
        assert_eq!(r.weight, 1.0);
        assert_eq!(r.photon_probs.weights(), &[1.0]);
        assert!(matches!(restricted_trial(&c, HalfInt::from_int(0)), Err(Error::EmptySector(_))));
        assert!(restricted_trial(&c, HalfInt::from_int(-4)).is_err());
    }

    proptest! {
        #[test]
        fn fidelity_symmetric_and_bounded(
            a in prop::collection::vec(0.0..1.0f64, 1..12),
            b in prop::collection::vec(0.0..1.0f64, 12),
        ) {
            let norm = |v: &[f64]| { let s: f64 = v.iter().sum::<f64>().max(1e-300); v.iter().map(|x| x / s).collect::<Vec<_>>() };
            let pa = dist(norm(&a));
            let pb = dist(norm(&b[..a.len()]));
            let f = fidelity(&pa, &pb).unwrap();
            prop_assert!((0.0..=1.0).contains(&f));
            prop_assert_eq!(f, fidelity(&pb, &pa).unwrap());
            prop_assert!((fidelity(&pa, &pa).unwrap() - 1.0).abs() < 1e-12 || pa.total() == 0.0);
        }
    }
}
