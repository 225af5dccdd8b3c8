//! Named reference parameter sets.
//!
//! Each preset fixes the number of atoms `N` explicitly rather than the
//! pseudospin `j = N/2`; `note` says what the set is used for.

use crate::error::{Error, Result};
use crate::model::{HalfInt, ModelParams};

/// An inclusive grid `start, start + step, …, stop`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) || step <= 0.0 || stop < start {
            return Err(Error::InvalidParams(format!("range {start}:{stop}:{step} is empty or has a non-positive step")));
        }
        Ok(Range { start, stop, step })
    }

    /// `⌊(stop − start)/step⌋ + 1`, tolerant of representation error in the quotient.
    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid values computed as `start + i·step` to avoid accumulated drift.
    pub fn values(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.start + i as f64 * self.step).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub n_atoms: u32,
    pub delta: f64,
    pub gamma: Option<f64>,
    pub gamma_range: Option<Range>,
    /// Sector of interest for restricted-trial comparisons.
    pub lambda: Option<HalfInt>,
    pub note: &'static str,
}

impl Preset {
    /// Parameters at the preset's single `γ`.
    pub fn params(&self) -> Result<ModelParams> {
        let gamma = self
            .gamma
            .ok_or_else(|| Error::InvalidParams(format!("preset {} has no single gamma", self.name)))?;
        ModelParams::with_delta(self.n_atoms, self.delta, gamma)
    }
}

pub const NAMES: [&str; 7] = ["fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig12"];

pub fn preset(name: &str) -> Result<Preset> {
    let sweep = |stop| Some(Range { start: 0.5, stop, step: 0.01 });
    let p = match name {
        "fig5" => Preset {
            name: "fig5",
            n_atoms: 6,
            delta: 0.2,
            gamma: Some(2.0),
            gamma_range: sweep(2.5),
            lambda: None,
            note: "energies and lambda versus gamma, N = 6",
        },
        "fig6" => Preset {
            name: "fig6",
            n_atoms: 6,
            delta: 0.2,
            gamma: Some(2.0),
            gamma_range: sweep(2.5),
            lambda: None,
            note: "observables and entropy versus gamma, N = 6",
        },
        "fig7" => Preset {
            name: "fig7",
            n_atoms: 6,
            delta: 0.2,
            gamma: Some(2.0),
            gamma_range: Some(Range { start: 0.0, stop: 2.5, step: 0.01 }),
            lambda: None,
            note: "fidelity versus gamma, N = 6",
        },
        "fig8" => Preset {
            name: "fig8",
            n_atoms: 6,
            delta: 0.2,
            gamma: Some(-1.5),
            gamma_range: None,
            lambda: Some(HalfInt::from_int(2)),
            note: "matter distributions, N = 6",
        },
        "fig9" => Preset {
            name: "fig9",
            n_atoms: 100,
            delta: 0.0,
            gamma: Some(-2.0),
            gamma_range: None,
            lambda: Some(HalfInt::from_int(81)),
            note: "matter distributions, N = 100 at resonance",
        },
        "fig10" => Preset {
            name: "fig10",
            n_atoms: 6,
            delta: 0.2,
            gamma: Some(-1.5),
            gamma_range: None,
            lambda: Some(HalfInt::from_int(2)),
            note: "lambda distribution of the trial state, N = 6",
        },
        "fig12" => Preset {
            name: "fig12",
            n_atoms: 20,
            delta: 0.2,
            gamma: Some(5.0),
            gamma_range: None,
            lambda: Some(HalfInt::from_int(124)),
            note: "trial state restricted to the ground sector lambda = 124, j = 10",
        },
        other => {
            return Err(Error::InvalidParams(format!("unknown preset {other:?}; known: {}", NAMES.join(", "))))
        }
    };
    Ok(p)
}
