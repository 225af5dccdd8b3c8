use thiserror::Error;

use crate::model::HalfInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("lambda = {lambda} is outside the sectors available for j = {j}")]
    LambdaOutOfRange { lambda: HalfInt, j: HalfInt },

    #[error("no closed form for lambda = {lambda} (supported: -j, -j+1, -j+2)")]
    UnsupportedSector { lambda: HalfInt },

    #[error("photon truncation failed: tail mass {tail:e} still above {target:e} at nu_max = {nu_max}")]
    Truncation { nu_max: usize, tail: f64, target: f64 },

    #[error("eigensolver failed for a sector of dimension {dim}: {reason}")]
    NonConvergence { dim: usize, reason: String },

    #[error("lambda scan reached its cap {cap} without the energy turning up")]
    ScanCap { cap: HalfInt },

    #[error("distribution supports differ: {0}")]
    SupportMismatch(String),

    #[error("trial state carries no probability at lambda = {0}")]
    EmptySector(HalfInt),

    #[error("finite-difference stencil on the {side} side of s0 = {s0} crosses a region boundary")]
    StencilStraddle { side: &'static str, s0: f64 },
}

impl Error {
    /// True for errors caused by bad input rather than by a numerical failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParams(_)
                | Error::LambdaOutOfRange { .. }
                | Error::UnsupportedSector { .. }
                | Error::EmptySector(_)
                | Error::StencilStraddle { .. }
        )
    }
}
