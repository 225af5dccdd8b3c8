//! Model parameters and the phase diagram of the coherent-state minimum.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Tolerance used to decide whether `(γ, ω_A)` sits on the separatrix.
pub const DEFAULT_BOUNDARY_EPS: f64 = 1e-12;

/// An integer or half-integer, stored as twice its value.
///
/// `j = N/2` and the excitation number `λ` are half-integers when `N` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Nearest half-integer to `x` with the same parity as `like`.
    pub fn nearest_with_parity(x: f64, like: HalfInt) -> Self {
        let shift = like.0.rem_euclid(2);
        let k = ((2.0 * x - shift as f64) / 2.0).round() as i64;
        HalfInt(2 * k + shift)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 + 2 * rhs)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 - 2 * rhs)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integer() {
            serializer.serialize_i64(self.0 / 2)
        } else {
            serializer.serialize_f64(self.value())
        }
    }
}

/// Parameters of the intensive Hamiltonian
/// `H = Λ/N − (Δ/N) J_z + γ/(N√N) (a† J₋ + a J₊)`, with `ω_A = 1 − Δ`.
///
/// Only the symmetric (superradiant) multiplet `j = N/2` is considered.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModelParams {
    n_atoms: u32,
    gamma: f64,
    omega_a: f64,
    delta: f64,
    phi: f64,
    eps_boundary: f64,
}

impl ModelParams {
    pub const MAX_ATOMS: u32 = 10_000;

    pub fn with_delta(n_atoms: u32, delta: f64, gamma: f64) -> Result<Self> {
        Self::build(n_atoms, 1.0 - delta, delta, gamma)
    }

    pub fn with_omega_a(n_atoms: u32, omega_a: f64, gamma: f64) -> Result<Self> {
        Self::build(n_atoms, omega_a, 1.0 - omega_a, gamma)
    }

    fn build(n_atoms: u32, omega_a: f64, delta: f64, gamma: f64) -> Result<Self> {
        if n_atoms == 0 || n_atoms > Self::MAX_ATOMS {
            return Err(Error::InvalidParams(format!(
                "n_atoms must be in 1..={}, got {n_atoms}",
                Self::MAX_ATOMS
            )));
        }
        if !omega_a.is_finite() || !delta.is_finite() {
            return Err(Error::InvalidParams("detuning must be finite".into()));
        }
        if !gamma.is_finite() {
            return Err(Error::InvalidParams(format!("gamma must be finite, got {gamma}")));
        }
        Ok(ModelParams {
            n_atoms,
            gamma,
            omega_a,
            delta,
            phi: 0.0,
            eps_boundary: DEFAULT_BOUNDARY_EPS,
        })
    }

    pub fn with_phi(mut self, phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::InvalidParams(format!("phi must be finite, got {phi}")));
        }
        self.phi = phi;
        Ok(self)
    }

    pub fn with_gamma(mut self, gamma: f64) -> Result<Self> {
        if !gamma.is_finite() {
            return Err(Error::InvalidParams(format!("gamma must be finite, got {gamma}")));
        }
        self.gamma = gamma;
        Ok(self)
    }

    pub fn with_eps_boundary(mut self, eps: f64) -> Result<Self> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::InvalidParams(format!(
                "boundary tolerance must be finite and >= 0, got {eps}"
            )));
        }
        self.eps_boundary = eps;
        Ok(self)
    }

    pub fn n_atoms(&self) -> u32 {
        self.n_atoms
    }

    /// `N` as a float.
    pub fn n(&self) -> f64 {
        self.n_atoms as f64
    }

    /// `j = N/2` as an exact half-integer.
    pub fn j_half(&self) -> HalfInt {
        HalfInt::from_twice(self.n_atoms as i64)
    }

    pub fn j(&self) -> f64 {
        self.n() / 2.0
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn omega_a(&self) -> f64 {
        self.omega_a
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eps_boundary(&self) -> f64 {
        self.eps_boundary
    }

    pub fn region(&self) -> PhaseRegion {
        classify_region(self.gamma, self.omega_a, self.eps_boundary)
    }
}

/// Where the minimum of the coherent-state energy surface lies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseRegion {
    /// `ω_A > γ²`: all atoms down, no photons.
    NorthPole,
    /// `ω_A < −γ²`: all atoms up, no photons.
    SouthPole,
    /// `|ω_A| < γ²`.
    Parallel,
    /// On one arm `ω_A = ±γ²` of the separatrix, away from the vertex.
    BoundaryArm,
    /// `γ = ω_A = 0`.
    BoundaryVertex,
}

impl PhaseRegion {
    pub fn as_str(self) -> &'static str {
        match self {
            PhaseRegion::NorthPole => "north_pole",
            PhaseRegion::SouthPole => "south_pole",
            PhaseRegion::Parallel => "parallel",
            PhaseRegion::BoundaryArm => "boundary_arm",
            PhaseRegion::BoundaryVertex => "boundary_vertex",
        }
    }

    pub fn is_boundary(self) -> bool {
        matches!(self, PhaseRegion::BoundaryArm | PhaseRegion::BoundaryVertex)
    }
}

impl fmt::Display for PhaseRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies `(γ, ω_A)` against the separatrix `ω_A = ±γ²`.
pub fn classify_region(gamma: f64, omega_a: f64, eps: f64) -> PhaseRegion {
    let g2 = gamma * gamma;
    if omega_a - g2 > eps {
        PhaseRegion::NorthPole
    } else if omega_a + g2 < -eps {
        PhaseRegion::SouthPole
    } else if g2 - omega_a.abs() > eps {
        PhaseRegion::Parallel
    } else if gamma.abs() <= eps && omega_a.abs() <= eps {
        PhaseRegion::BoundaryVertex
    } else {
        PhaseRegion::BoundaryArm
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EPS: f64 = DEFAULT_BOUNDARY_EPS;

    #[test]
    fn table_regions() {
        assert_eq!(classify_region(0.5, 0.8, EPS), PhaseRegion::NorthPole);
        assert_eq!(classify_region(1.5, 0.8, EPS), PhaseRegion::Parallel);
        assert_eq!(classify_region(0.0, 0.0, EPS), PhaseRegion::BoundaryVertex);
        assert_eq!(classify_region(1.0, -1.5, EPS), PhaseRegion::SouthPole);
        assert_eq!(classify_region(0.5, 0.25, EPS), PhaseRegion::BoundaryArm);
        assert_eq!(classify_region(0.5, -0.25, EPS), PhaseRegion::BoundaryArm);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(ModelParams::with_delta(0, 0.2, 1.0).is_err());
        assert!(ModelParams::with_delta(10_001, 0.2, 1.0).is_err());
        assert!(ModelParams::with_delta(6, f64::NAN, 1.0).is_err());
        assert!(ModelParams::with_delta(6, 0.2, f64::INFINITY).is_err());
        let p = ModelParams::with_delta(6, 0.2, 1.0).unwrap();
        assert!(p.with_eps_boundary(-1.0).is_err());
        assert!(p.with_phi(f64::NAN).is_err());
    }

    #[test]
    fn half_int_display_and_parity() {
        assert_eq!(HalfInt::from_int(-3).to_string(), "-3");
        assert_eq!(HalfInt::from_twice(5).to_string(), "2.5");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-0.5");
        let j = HalfInt::from_twice(5);
        assert_eq!(HalfInt::nearest_with_parity(1.8, j), HalfInt::from_twice(3));
        assert_eq!(HalfInt::nearest_with_parity(1.8, HalfInt::from_int(3)), HalfInt::from_int(2));
        assert_eq!(serde_json::to_string(&HalfInt::from_int(2)).unwrap(), "2");
    }

    proptest! {
        #[test]
        fn region_depends_on_gamma_squared(g in -5.0..5.0f64, w in -5.0..5.0f64) {
            prop_assert_eq!(classify_region(g, w, EPS), classify_region(-g, w, EPS));
        }

        #[test]
        fn omega_reflection_swaps_poles(g in -5.0..5.0f64, w in -5.0..5.0f64) {
            let a = classify_region(g, w, EPS);
            let b = classify_region(g, -w, EPS);
            let expected = match a {
                PhaseRegion::NorthPole => PhaseRegion::SouthPole,
                PhaseRegion::SouthPole => PhaseRegion::NorthPole,
                other => other,
            };
            prop_assert_eq!(b, expected);
        }

        #[test]
        fn delta_and_omega_sum_to_one(d in -1.0..1.0f64, n in 1u32..200) {
            let a = ModelParams::with_delta(n, d, 1.0).unwrap();
            prop_assert!((a.delta() + a.omega_a() - 1.0).abs() <= f64::EPSILON);
            let b = ModelParams::with_omega_a(n, d, 1.0).unwrap();
            prop_assert!((b.delta() + b.omega_a() - 1.0).abs() <= f64::EPSILON);
            prop_assert_eq!(a.j_half().twice(), n as i64);
        }
    }
}
