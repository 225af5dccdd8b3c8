//! The coherent-state (semiclassical) description of the ground state.
//!
//! The trial state `|α⟩ ⊗ |ζ⟩` is minimised over the energy surface; all
//! quantities at the minimum are closed-form functions of `θ_c`.

mod observables;
mod surface;
mod transition;
mod trial;

pub use observables::{observables_sc, occupation_distribution};
pub use surface::{
    critical_point, energy_at, energy_surface, minimum_energy, north_hessian, parallel_hessian,
    south_hessian, CriticalPoint, SurfacePoint,
};
pub use transition::{transition_order, TransitionProbe, TransitionReport};
pub use trial::{
    trial_coefficients, trial_lambda_distribution, LambdaDistribution, NuMaxPolicy,
    TrialCoefficients,
};
