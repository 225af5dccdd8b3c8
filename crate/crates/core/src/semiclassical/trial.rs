use num_complex::Complex64;
use serde::Serialize;

use crate::distribution::{IndexKind, ProbabilityDistribution};
use crate::error::{Error, Result};
use crate::model::{HalfInt, ModelParams};
use crate::special::{ln_binomial, ln_poisson, ln_pow, poisson_upper_tail};

use super::surface::{critical_point, minimum_angles};

/// How far the photon number of the trial state is expanded.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NuMaxPolicy {
    /// First `ν_max` to try; `None` picks `⌈⟨n⟩ + 12√(⟨n⟩+1) + 25⌉`.
    pub initial: Option<usize>,
    /// Largest admissible `ν_max`; the window doubles up to here.
    pub hard_cap: usize,
    /// Photon probability allowed beyond `ν_max`.
    pub tail_target: f64,
}

impl Default for NuMaxPolicy {
    fn default() -> Self {
        NuMaxPolicy { initial: None, hard_cap: 20_000, tail_target: 1e-12 }
    }
}

impl NuMaxPolicy {
    fn choose(&self, mean_photons: f64) -> Result<(usize, f64)> {
        let mut nu_max = self.initial.unwrap_or_else(|| {
            (mean_photons + 12.0 * (mean_photons + 1.0).sqrt() + 25.0).ceil() as usize
        });
        nu_max = nu_max.min(self.hard_cap);
        loop {
            let tail = poisson_upper_tail(mean_photons, nu_max as u64);
            if tail < self.tail_target {
                return Ok((nu_max, tail));
            }
            if nu_max >= self.hard_cap {
                return Err(Error::Truncation { nu_max, tail, target: self.tail_target });
            }
            nu_max = (2 * nu_max.max(1)).min(self.hard_cap);
        }
    }
}

/// Expansion coefficients `A_{m,ν}` of the minimising trial state
/// `|α⟩ ⊗ |ζ⟩ = Σ A_{m,ν} |ν⟩ ⊗ |j, m⟩`, truncated at `ν_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialCoefficients {
    two_j: u32,
    nu_max: usize,
    // row-major: excited-atom number n = j + m, then ν
    amplitudes: Vec<Complex64>,
    tail_mass: f64,
    mean_photons: f64,
}

impl TrialCoefficients {
    pub fn j_half(&self) -> HalfInt {
        HalfInt::from_twice(self.two_j as i64)
    }

    pub fn nu_max(&self) -> usize {
        self.nu_max
    }

    /// Probability beyond `ν_max` (Poisson upper tail).
    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// `|α|²` of the field coherent state.
    pub fn mean_photons(&self) -> f64 {
        self.mean_photons
    }

    /// `A_{m,ν}` addressed by the number of excited atoms `n = j + m`.
    pub fn amplitude_excited(&self, n: usize, nu: usize) -> Complex64 {
        if n > self.two_j as usize || nu > self.nu_max {
            return Complex64::new(0.0, 0.0);
        }
        self.amplitudes[n * (self.nu_max + 1) + nu]
    }

    /// `A_{m,ν}`; zero outside `|m| ≤ j`, `0 ≤ ν ≤ ν_max`.
    pub fn amplitude(&self, m: HalfInt, nu: usize) -> Complex64 {
        let n = m + self.j_half();
        if n.twice() < 0 || !n.is_integer() {
            return Complex64::new(0.0, 0.0);
        }
        self.amplitude_excited((n.twice() / 2) as usize, nu)
    }

    pub fn probability_excited(&self, n: usize, nu: usize) -> f64 {
        self.amplitude_excited(n, nu).norm_sqr()
    }

    pub fn total_probability(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Photon-number marginal over `[0, ν_max]`.
    pub fn photon_distribution(&self) -> ProbabilityDistribution {
        let weights = (0..=self.nu_max)
            .map(|nu| (0..=self.two_j as usize).map(|n| self.probability_excited(n, nu)).sum())
            .collect();
        ProbabilityDistribution::new(IndexKind::Photons, HalfInt::from_int(0), weights, self.tail_mass)
    }

    /// Probability of the sector with `k = λ + j` excitations, restricted to
    /// the stored photon range.
    pub(crate) fn sector_weights(&self, k: usize) -> Vec<(usize, f64)> {
        let two_j = self.two_j as usize;
        (k.saturating_sub(two_j)..=k.min(self.nu_max))
            .map(|nu| (nu, self.probability_excited(k - nu, nu)))
            .collect()
    }
}

/// Builds `A_{m,ν}` in log space for the minimum of `params`.
///
/// Outside the parallel region the trial state is the product `|0⟩⊗|j,∓j⟩`
/// and the same construction returns that point mass.
pub fn trial_coefficients(params: &ModelParams, policy: &NuMaxPolicy) -> Result<TrialCoefficients> {
    let cp = critical_point(params);
    let (_, _, cos_t, _) = minimum_angles(params.gamma(), params.omega_a(), params.eps_boundary());
    let mean_photons = 0.5 * (cp.q_c * cp.q_c + cp.p_c * cp.p_c);
    let (nu_max, tail_mass) = policy.choose(mean_photons)?;

    let two_j = params.n_atoms();
    // sin²(θ/2), cos²(θ/2)
    let (s2, c2) = (0.5 * (1.0 - cos_t), 0.5 * (1.0 + cos_t));
    let phi = params.phi();
    let field_sign = if params.gamma() > 0.0 { -1.0 } else { 1.0 };

    let ln_field: Vec<f64> = (0..=nu_max).map(|nu| 0.5 * ln_poisson(mean_photons, nu as u64)).collect();
    let mut amplitudes = Vec::with_capacity((two_j as usize + 1) * (nu_max + 1));
    for n in 0..=two_j as u64 {
        let ln_spin = 0.5
            * (ln_binomial(two_j as u64, n) + ln_pow(s2, n) + ln_pow(c2, two_j as u64 - n));
        for (nu, lf) in ln_field.iter().enumerate() {
            let modulus = (ln_spin + lf).exp();
            let sign = if nu % 2 == 1 { field_sign } else { 1.0 };
            let phase = (n as f64 - nu as f64) * phi;
            amplitudes.push(Complex64::from_polar(sign * modulus, phase));
        }
    }
    Ok(TrialCoefficients { two_j, nu_max, amplitudes, tail_mass, mean_photons })
}

/// Distribution of `λ = m + ν` in the trial state with its first two moments.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaDistribution {
    pub distribution: ProbabilityDistribution,
    pub mean: f64,
    pub stddev: f64,
}

pub fn trial_lambda_distribution(coeffs: &TrialCoefficients) -> LambdaDistribution {
    let two_j = coeffs.two_j as usize;
    let mut weights = vec![0.0; two_j + coeffs.nu_max + 1];
    for n in 0..=two_j {
        for nu in 0..=coeffs.nu_max {
            weights[n + nu] += coeffs.probability_excited(n, nu);
        }
    }
    let distribution = ProbabilityDistribution::new(
        IndexKind::Lambda,
        HalfInt::from_int(0) - coeffs.j_half(),
        weights,
        coeffs.tail_mass,
    );
    let mean = distribution.mean();
    let stddev = distribution.variance().sqrt();
    LambdaDistribution { distribution, mean, stddev }
}
