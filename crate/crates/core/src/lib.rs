//! Ground states of the Tavis-Cummings model.
//!
//! Two routes to the ground state of `N` two-level atoms coupled to a single
//! cavity mode are implemented side by side:
//!
//! * [`semiclassical`]: a product of a field coherent state and an SU(2)
//!   atomic coherent state, minimised over its four real parameters. All
//!   observables at the minimum are closed-form.
//! * [`quantum`]: exact diagonalisation. The excitation number
//!   `Λ = a†a + J_z` commutes with the Hamiltonian, so each `λ` sector is a
//!   small symmetric tridiagonal matrix whose lowest eigenpair is found by
//!   Sturm bisection and inverse iteration ([`tridiag`]).
//!
//! [`compare`] puts the two side by side (fidelity of the reduced matter
//! distributions, the trial state restricted to a single `λ`, and matched
//! observable records).
//!
//! Energies are per atom and in units of the field frequency throughout.

pub mod compare;
pub mod distribution;
pub mod error;
pub mod model;
pub mod observables;
pub mod presets;
pub mod quantum;
pub mod semiclassical;
pub mod special;
pub mod tridiag;

pub use compare::{compare_point, fidelity, matter_sc_on_sector, restricted_trial, ComparisonRecord, RestrictedTrial};
pub use presets::{preset, Preset, Range};
pub use distribution::{IndexKind, ProbabilityDistribution};
pub use error::{Error, Result};
pub use model::{classify_region, HalfInt, ModelParams, PhaseRegion, DEFAULT_BOUNDARY_EPS};
pub use observables::ObservableSet;
pub use quantum::{
    analytic_sector_energy, build_sector, find_ground, observables_q, reduced_distributions,
    solve_sector, GroundState, ScanPolicy, SectorHamiltonian, SectorSolution,
};
pub use semiclassical::{
    critical_point, energy_surface, observables_sc, occupation_distribution, transition_order,
    trial_coefficients, trial_lambda_distribution, CriticalPoint, LambdaDistribution,
    NuMaxPolicy, SurfacePoint, TransitionProbe, TransitionReport, TrialCoefficients,
};
