use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::HalfInt;
use crate::special;

/// What the integer index of a [`ProbabilityDistribution`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// Photon number `ν`.
    Photons,
    /// Number of excited atoms `n = j + m`.
    ExcitedAtoms,
    /// Excitation number `λ = ν + m`.
    Lambda,
}

/// Non-negative weights over a contiguous range of indices.
///
/// `tail_mass` is the probability known to lie outside the stored range
/// (truncation), so the weights sum to `1 − tail_mass` up to rounding.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbabilityDistribution {
    kind: IndexKind,
    start: HalfInt,
    weights: Vec<f64>,
    tail_mass: f64,
}

impl ProbabilityDistribution {
    pub fn new(kind: IndexKind, start: HalfInt, weights: Vec<f64>, tail_mass: f64) -> Self {
        debug_assert!(weights.iter().all(|w| *w >= 0.0), "negative probability");
        ProbabilityDistribution { kind, start, weights, tail_mass }
    }

    /// A point mass at `index`.
    pub fn point(kind: IndexKind, index: HalfInt) -> Self {
        Self::new(kind, index, vec![1.0], 0.0)
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn start(&self) -> HalfInt {
        self.start
    }

    pub fn end(&self) -> HalfInt {
        self.start + (self.weights.len() as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// Weight at `index`, zero outside the stored range.
    pub fn get(&self, index: HalfInt) -> f64 {
        let offset = index - self.start;
        if offset.twice() < 0 || !offset.is_integer() {
            return 0.0;
        }
        self.weights.get((offset.twice() / 2) as usize).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (HalfInt, f64)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .map(move |(i, &w)| (self.start + i as i64, w))
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(k, w)| k.value() * w).sum::<f64>() / self.total()
    }

    /// Central second moment about [`Self::mean`].
    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.iter()
            .map(|(k, w)| (k.value() - mean).powi(2) * w)
            .sum::<f64>()
            / self.total()
    }

    pub fn entropy(&self) -> f64 {
        special::entropy(&self.weights)
    }

    /// Keeps only `[start, end]` of this distribution; dropped mass moves to the tail.
    pub fn restrict(&self, start: HalfInt, end: HalfInt) -> Self {
        let len = ((end - start).twice() / 2 + 1).max(0) as usize;
        let weights: Vec<f64> = (0..len).map(|i| self.get(start + i as i64)).collect();
        let dropped = (self.total() - weights.iter().sum::<f64>()).max(0.0);
        Self::new(self.kind, start, weights, self.tail_mass + dropped)
    }

    /// Errors unless both distributions index the same kind over the same range.
    pub fn check_same_support(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind || self.start != other.start || self.len() != other.len() {
            return Err(Error::SupportMismatch(format!(
                "{:?} [{}, {}] vs {:?} [{}, {}]",
                self.kind,
                self.start,
                self.end(),
                other.kind,
                other.start,
                other.end()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_and_lookup() {
        let d = ProbabilityDistribution::new(
            IndexKind::Lambda,
            HalfInt::from_int(-1),
            vec![0.25, 0.5, 0.25],
            0.0,
        );
        assert_eq!(d.mean(), 0.0);
        assert_eq!(d.variance(), 0.5);
        assert_eq!(d.get(HalfInt::from_int(1)), 0.25);
        assert_eq!(d.get(HalfInt::from_int(2)), 0.0);
        assert_eq!(d.get(HalfInt::from_twice(1)), 0.0);
        assert_eq!(d.end(), HalfInt::from_int(1));
    }

    #[test]
    fn restrict_moves_mass_to_tail() {
        let d = ProbabilityDistribution::new(
            IndexKind::ExcitedAtoms,
            HalfInt::from_int(0),
            vec![0.5, 0.25, 0.25],
            0.0,
        );
        let r = d.restrict(HalfInt::from_int(0), HalfInt::from_int(1));
        assert_eq!(r.weights(), &[0.5, 0.25]);
        assert_eq!(r.tail_mass(), 0.25);
        assert!(r.check_same_support(&d).is_err());
        assert!(r.check_same_support(&r.clone()).is_ok());
    }
}
