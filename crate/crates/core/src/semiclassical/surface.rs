use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{classify_region, ModelParams, PhaseRegion};

/// A point `(q, p, θ, φ)` of the coherent-state manifold.
///
/// `(q, p)` are the field quadrature expectations (`α = (q + ip)/√2`) and
/// `(θ, φ)` the Bloch-sphere angles of the atomic state (`ζ = tan(θ/2) e^{iφ}`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SurfacePoint {
    pub q: f64,
    pub p: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SurfacePoint {
    /// Clamps `θ` into `[0, π]` and wraps `φ` into `[0, 2π)`.
    pub fn new(q: f64, p: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(q.is_finite() && p.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(Error::InvalidParams("surface point must be finite".into()));
        }
        Ok(SurfacePoint { q, p, theta: theta.clamp(0.0, PI), phi: phi.rem_euclid(TAU) })
    }
}

/// Energy per atom of the trial state at `point`, and `⟨Λ⟩` (absolute).
///
/// `E = λ/N + Δ (j/N) cos θ + γ/√(2N) sin θ (q cos φ − p sin φ)` with
/// `λ = (q² + p²)/2 − j cos θ`.
pub fn energy_surface(params: &ModelParams, point: &SurfacePoint) -> (f64, f64) {
    energy_at(params, point.q, point.p, point.theta, point.phi)
}

/// [`energy_surface`] without clamping, so `θ < 0` and `θ > π` evaluate the
/// analytic continuation (used for finite differences at the poles).
pub fn energy_at(params: &ModelParams, q: f64, p: f64, theta: f64, phi: f64) -> (f64, f64) {
    let n = params.n();
    let j = params.j();
    let lambda = 0.5 * (q * q + p * p) - j * theta.cos();
    let energy = lambda / n
        + params.delta() * (j / n) * theta.cos()
        + params.gamma() / (2.0 * n).sqrt() * theta.sin() * (q * phi.cos() - p * phi.sin());
    (energy, lambda)
}

/// The minimum of the energy surface.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub region: PhaseRegion,
    pub theta_c: f64,
    pub q_c: f64,
    pub p_c: f64,
    pub energy_per_atom: f64,
    /// Semiclassical `⟨Λ⟩`, not divided by `N`.
    pub lambda_sc: f64,
    /// Hessian eigenvalues in `(q, p, θ)` at `φ = 0`, ascending.
    pub hessian_eigs: [f64; 3],
    /// Set on the separatrix, where one Hessian eigenvalue vanishes.
    pub degenerate: bool,
}

impl CriticalPoint {
    pub fn is_minimum(&self) -> bool {
        self.hessian_eigs.iter().all(|&e| e >= -1e-12)
    }
}

/// Hessian spectrum at `θ = 0`, minimum for `ω_A > γ²`.
pub fn north_hessian(j: f64, omega_a: f64, gamma: f64) -> [f64; 3] {
    let root = ((1.0 - j * omega_a).powi(2) + 4.0 * j * gamma * gamma).sqrt();
    sorted([
        1.0 / (2.0 * j),
        (1.0 + j * omega_a + root) / (4.0 * j),
        (1.0 + j * omega_a - root) / (4.0 * j),
    ])
}

/// Hessian spectrum at `θ = π`, minimum for `ω_A < −γ²`.
pub fn south_hessian(j: f64, omega_a: f64, gamma: f64) -> [f64; 3] {
    let root = ((1.0 + j * omega_a).powi(2) + 4.0 * j * gamma * gamma).sqrt();
    sorted([
        1.0 / (2.0 * j),
        (1.0 - j * omega_a + root) / (4.0 * j),
        (1.0 - j * omega_a - root) / (4.0 * j),
    ])
}

/// Hessian spectrum at `cos θ = ω_A/γ²`, defined for `|ω_A| ≤ γ²`.
pub fn parallel_hessian(j: f64, omega_a: f64, gamma: f64) -> [f64; 3] {
    let g2 = gamma * gamma;
    let g4 = g2 * g2;
    let root = (g4 * (1.0 - j * g2).powi(2) + 4.0 * j * omega_a * omega_a * g2).sqrt();
    sorted([
        1.0 / (2.0 * j),
        (g2 * (1.0 + j * g2) + root) / (4.0 * j * g2),
        (g2 * (1.0 + j * g2) - root) / (4.0 * j * g2),
    ])
}

fn sorted(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(f64::total_cmp);
    v
}

/// Angles of the minimum: `(region, θ_c, cos θ_c, sin θ_c)`.
///
/// On an arm of the separatrix the adjacent pole is returned (it coincides
/// with the limiting parallel solution); the vertex maps to the North Pole.
pub(crate) fn minimum_angles(gamma: f64, omega_a: f64, eps: f64) -> (PhaseRegion, f64, f64, f64) {
    let region = classify_region(gamma, omega_a, eps);
    match region {
        PhaseRegion::NorthPole | PhaseRegion::BoundaryVertex => (region, 0.0, 1.0, 0.0),
        PhaseRegion::SouthPole => (region, PI, -1.0, 0.0),
        PhaseRegion::BoundaryArm if omega_a >= 0.0 => (region, 0.0, 1.0, 0.0),
        PhaseRegion::BoundaryArm => (region, PI, -1.0, 0.0),
        PhaseRegion::Parallel => {
            let c = (omega_a / (gamma * gamma)).clamp(-1.0, 1.0);
            (region, c.acos(), c, (1.0 - c * c).sqrt())
        }
    }
}

/// Region and minimum energy per atom; independent of `N`.
pub fn minimum_energy(gamma: f64, omega_a: f64, eps: f64) -> (PhaseRegion, f64) {
    let (region, _, cos_t, _) = minimum_angles(gamma, omega_a, eps);
    let energy = match region {
        PhaseRegion::Parallel => -(omega_a * omega_a + gamma.powi(4)) / (4.0 * gamma * gamma),
        _ => -0.5 * omega_a * cos_t,
    };
    (region, energy)
}

pub fn critical_point(params: &ModelParams) -> CriticalPoint {
    let (gamma, omega_a, j) = (params.gamma(), params.omega_a(), params.j());
    let (region, theta_c, cos_t, sin_t) = minimum_angles(gamma, omega_a, params.eps_boundary());
    let (_, energy_per_atom) = minimum_energy(gamma, omega_a, params.eps_boundary());
    let lambda_sc = match region {
        PhaseRegion::Parallel => {
            j * (-omega_a * (omega_a + 2.0) + gamma.powi(4)) / (2.0 * gamma * gamma)
        }
        _ => -j * cos_t,
    };
    let hessian_eigs = match region {
        PhaseRegion::Parallel => parallel_hessian(j, omega_a, gamma),
        _ if cos_t > 0.0 => north_hessian(j, omega_a, gamma),
        _ => south_hessian(j, omega_a, gamma),
    };
    let amp = j.sqrt() * gamma * sin_t;
    CriticalPoint {
        region,
        theta_c,
        q_c: -amp * params.phi().cos(),
        p_c: amp * params.phi().sin(),
        energy_per_atom,
        lambda_sc,
        hessian_eigs,
        degenerate: region.is_boundary(),
    }
}
