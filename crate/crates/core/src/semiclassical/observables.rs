use crate::distribution::{IndexKind, ProbabilityDistribution};
use crate::model::{HalfInt, ModelParams};
use crate::observables::ObservableSet;
use crate::special;

use super::surface::{critical_point, minimum_angles};

/// Binomial excited-atom distribution `p_n(θ_c)` of the atomic coherent state.
pub fn occupation_distribution(params: &ModelParams) -> ProbabilityDistribution {
    let (_, theta, _, _) = minimum_angles(params.gamma(), params.omega_a(), params.eps_boundary());
    // p = sin²(θ/2), 1 − p = cos²(θ/2)
    let (s, c) = (theta / 2.0).sin_cos();
    let weights = if theta == 0.0 {
        point_mass(params.n_atoms() as usize + 1, 0)
    } else if theta == std::f64::consts::PI {
        point_mass(params.n_atoms() as usize + 1, params.n_atoms() as usize)
    } else {
        special::binomial_pmf(params.n_atoms() as u64, s * s, c * c)
    };
    ProbabilityDistribution::new(IndexKind::ExcitedAtoms, HalfInt::from_int(0), weights, 0.0)
}

fn point_mass(len: usize, at: usize) -> Vec<f64> {
    let mut w = vec![0.0; len];
    w[at] = 1.0;
    w
}

/// Observables of the coherent trial state at the energy minimum.
///
/// The atomic part is an SU(2) coherent state with Bloch vector
/// `r̂ = (sin θ cos φ, sin θ sin φ, −cos θ)`, so the variance along a unit axis
/// `n̂` is `(j/2)(1 − (n̂·r̂)²)`. The field part is a Glauber state: Poissonian
/// photon number and quadrature variances of `1/2`.
pub fn observables_sc(params: &ModelParams) -> ObservableSet {
    let cp = critical_point(params);
    let (_, _, cos_t, sin_t) = minimum_angles(params.gamma(), params.omega_a(), params.eps_boundary());
    let (sin_p, cos_p) = params.phi().sin_cos();
    let j = params.j();
    let n = params.n();
    let bloch = [sin_t * cos_p, sin_t * sin_p, -cos_t];
    let spin_var = |axis: [f64; 3]| {
        let proj: f64 = axis.iter().zip(bloch).map(|(a, b)| a * b).sum();
        0.5 * j * (1.0 - proj * proj).max(0.0)
    };
    // e_φ is orthogonal to r̂ for every (θ, φ)
    let var_perp = spin_var([-sin_p, cos_p, 0.0]);
    let alpha2 = 0.5 * (cp.q_c * cp.q_c + cp.p_c * cp.p_c);

    ObservableSet {
        jz_per_n: 0.5 * bloch[2],
        jx_per_n: 0.5 * bloch[0],
        jy_per_n: 0.5 * bloch[1],
        var_jx: spin_var([1.0, 0.0, 0.0]),
        var_jy: spin_var([0.0, 1.0, 0.0]),
        var_jz: spin_var([0.0, 0.0, 1.0]),
        n_per_n: alpha2 / n,
        var_n: alpha2,
        q_mean: cp.q_c,
        p_mean: cp.p_c,
        var_q: 0.5,
        var_p: 0.5,
        entropy_nats: occupation_distribution(params).entropy(),
        squeezing_xi: (2.0 * var_perp / j).sqrt(),
    }
}
