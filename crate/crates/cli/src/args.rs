//! Command-line arguments and their resolution into model parameters.

use clap::{Args, Parser, Subcommand, ValueEnum};
use tavis_core::presets::{preset, Range};
use tavis_core::{ModelParams, DEFAULT_BOUNDARY_EPS};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "tavis", version, about = "Exact and semiclassical ground states of the Tavis-Cummings model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare both ground states at one parameter point.
    Point(PointArgs),
    /// One comparison row per coupling on a gamma grid.
    Sweep(PointArgs),
    /// Region, polar angle and energy over a (gamma, omega_a) grid.
    PhaseDiagram(PhaseArgs),
    /// Probability distributions at one parameter point, in long format.
    Distributions(DistributionArgs),
    /// Order of the semiclassical transition along a straight path.
    TransitionOrder(TransitionArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Named parameter set (fig5, fig6, fig7, fig8, fig9, fig10, fig12); explicit flags override it.
    #[arg(long)]
    pub preset: Option<String>,
    /// Number of atoms N.
    #[arg(long)]
    pub n_atoms: Option<u32>,
    /// Detuning Delta = 1 - omega_a.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "omega_a")]
    pub delta: Option<f64>,
    /// Atomic frequency in units of the field frequency.
    #[arg(long, allow_hyphen_values = true)]
    pub omega_a: Option<f64>,
    /// Coupling gamma.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "gamma_range")]
    pub gamma: Option<f64>,
    /// Inclusive coupling grid start:stop:step.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub gamma_range: Option<Range>,
    /// Field phase phi.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub phi: f64,
    /// Tolerance for placing a point on the separatrix.
    #[arg(long, default_value_t = DEFAULT_BOUNDARY_EPS)]
    pub eps_boundary: f64,
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output if absent.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Write failed grid rows as nan and exit nonzero instead of aborting.
    #[arg(long)]
    pub keep_going: bool,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub common: Common,
    /// Inclusive omega_a grid start:stop:step.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub omega_a_range: Option<Range>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "matter_q")]
    MatterQ,
    #[value(name = "matter_sc")]
    MatterSc,
    #[value(name = "photon_q")]
    PhotonQ,
    #[value(name = "photon_trial_full")]
    PhotonTrialFull,
    #[value(name = "photon_trial_restricted")]
    PhotonTrialRestricted,
    #[value(name = "lambda_trial")]
    LambdaTrial,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::MatterQ,
        Kind::MatterSc,
        Kind::PhotonQ,
        Kind::PhotonTrialFull,
        Kind::PhotonTrialRestricted,
        Kind::LambdaTrial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::MatterQ => "matter_q",
            Kind::MatterSc => "matter_sc",
            Kind::PhotonQ => "photon_q",
            Kind::PhotonTrialFull => "photon_trial_full",
            Kind::PhotonTrialRestricted => "photon_trial_restricted",
            Kind::LambdaTrial => "lambda_trial",
        }
    }
}

#[derive(Args, Debug)]
pub struct DistributionArgs {
    #[command(flatten)]
    pub common: Common,
    /// Distributions to emit, comma separated; all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub kinds: Vec<Kind>,
    /// Sector for photon_trial_restricted; the quantum ground sector by default.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    /// s -> (gamma = s, omega_a fixed).
    Gamma,
    /// s -> (gamma fixed, omega_a = s).
    OmegaA,
    /// s -> (gamma = s, omega_a = s).
    Diagonal,
}

#[derive(Args, Debug)]
pub struct TransitionArgs {
    #[command(flatten)]
    pub common: Common,
    /// Parameter moved along the path.
    #[arg(long, value_enum)]
    pub vary: Vary,
    /// Path position s0 of the suspected transition.
    #[arg(long, allow_hyphen_values = true)]
    pub at: f64,
    /// Finite-difference step along the path.
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Smallest jump reported as a discontinuity.
    #[arg(long, default_value_t = 1e-2)]
    pub tol: f64,
}

fn parse_range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("expected start:stop:step, got {s:?}"));
    };
    let f = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    Range::new(f(a)?, f(b)?, f(c)?).map_err(|e| e.to_string())
}

/// Flags merged over an optional preset.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub n_atoms: Option<u32>,
    pub delta: Option<f64>,
    pub omega_a: Option<f64>,
    pub gamma: Option<f64>,
    pub gamma_range: Option<Range>,
    pub phi: f64,
    pub eps_boundary: f64,
}

impl Common {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let preset = self.preset.as_deref().map(preset).transpose()?;
        let explicit_omega = self.delta.is_some() || self.omega_a.is_some();
        let explicit_gamma = self.gamma.is_some() || self.gamma_range.is_some();
        Ok(Resolved {
            n_atoms: self.n_atoms.or(preset.as_ref().map(|p| p.n_atoms)),
            delta: self.delta.or(if explicit_omega { None } else { preset.as_ref().map(|p| p.delta) }),
            omega_a: self.omega_a,
            gamma: self.gamma.or(if explicit_gamma { None } else { preset.as_ref().and_then(|p| p.gamma) }),
            gamma_range: self.gamma_range.or(if explicit_gamma { None } else { preset.as_ref().and_then(|p| p.gamma_range) }),
            phi: self.phi,
            eps_boundary: self.eps_boundary,
        })
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

impl Resolved {
    pub fn n_atoms(&self) -> Result<u32, CliError> {
        self.n_atoms.ok_or_else(|| CliError::usage("--n-atoms is required"))
    }

    pub fn omega_a(&self) -> Result<f64, CliError> {
        match (self.delta, self.omega_a) {
            (Some(_), Some(_)) => Err(CliError::usage("give exactly one of --delta and --omega-a")),
            (Some(d), None) => Ok(1.0 - d),
            (None, Some(w)) => Ok(w),
            (None, None) => Err(CliError::usage("one of --delta or --omega-a is required")),
        }
    }

    pub fn gamma(&self) -> Result<f64, CliError> {
        if self.gamma_range.is_some() && self.gamma.is_none() {
            return Err(CliError::usage("this command takes a single --gamma, not --gamma-range"));
        }
        self.gamma.ok_or_else(|| CliError::usage("--gamma is required"))
    }

    pub fn gamma_grid(&self) -> Result<Vec<f64>, CliError> {
        match (self.gamma_range, self.gamma) {
            (Some(r), _) => Ok(r.values()),
            (None, Some(g)) => Ok(vec![g]),
            (None, None) => Err(CliError::usage("--gamma-range is required")),
        }
    }

    /// Parameters at `gamma` with the configured detuning.
    pub fn params(&self, gamma: f64) -> Result<ModelParams, CliError> {
        self.omega_a()?;
        let base = match self.delta {
            Some(d) => ModelParams::with_delta(self.n_atoms()?, d, gamma)?,
            None => ModelParams::with_omega_a(self.n_atoms()?, self.omega_a()?, gamma)?,
        };
        self.finish(base)
    }

    fn finish(&self, base: ModelParams) -> Result<ModelParams, CliError> {
        Ok(base.with_phi(self.phi)?.with_eps_boundary(self.eps_boundary)?)
    }
}
