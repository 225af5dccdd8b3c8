//! Subcommand drivers. Each returns the full output text; nothing is written
//! until every grid point has been evaluated.

use rayon::prelude::*;
use serde::Serialize;
use tavis_core::semiclassical::{minimum_energy, transition_order, TransitionProbe};
use tavis_core::{
    compare_point, critical_point, find_ground, occupation_distribution, reduced_distributions,
    restricted_trial, trial_coefficients, trial_lambda_distribution, ComparisonRecord, HalfInt, ModelParams,
    NuMaxPolicy, PhaseRegion, ProbabilityDistribution, ScanPolicy,
};

use crate::args::{DistributionArgs, Format, Kind, PhaseArgs, PointArgs, TransitionArgs, Vary};
use crate::error::CliError;
use crate::format::{half, num, Table};

/// Output text and, with `--keep-going`, the error that should set the exit code.
pub struct Outcome {
    pub text: String,
    pub deferred: Option<CliError>,
}

impl Outcome {
    fn done(text: String) -> Self {
        Outcome { text, deferred: None }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable output");
    s.push('\n');
    s
}

const SWEEP_HEADER: [&str; 18] = [
    "gamma", "omega_a", "region", "lambda_sc", "lambda_q", "e_sc", "e_q", "jz_sc", "jz_q", "n_sc", "n_q", "varn_sc",
    "varn_q", "se_sc", "se_q", "xi_sc", "xi_q", "fidelity",
];

/// One comparison row; field names match the CSV header.
#[derive(Serialize)]
struct SweepRow {
    gamma: f64,
    omega_a: f64,
    region: PhaseRegion,
    lambda_sc: f64,
    lambda_q: Option<HalfInt>,
    e_sc: f64,
    e_q: f64,
    jz_sc: f64,
    jz_q: f64,
    n_sc: f64,
    n_q: f64,
    varn_sc: f64,
    varn_q: f64,
    se_sc: f64,
    se_q: f64,
    xi_sc: f64,
    xi_q: f64,
    fidelity: f64,
}

impl SweepRow {
    fn from_record(r: &ComparisonRecord) -> Self {
        SweepRow {
            gamma: r.params.gamma(),
            omega_a: r.params.omega_a(),
            region: r.region,
            lambda_sc: r.lambda_sc,
            lambda_q: Some(r.lambda_q),
            e_sc: r.energy_sc,
            e_q: r.energy_q,
            jz_sc: r.sc.jz_per_n,
            jz_q: r.q.jz_per_n,
            n_sc: r.sc.n_per_n,
            n_q: r.q.n_per_n,
            varn_sc: r.sc.var_n,
            varn_q: r.q.var_n,
            se_sc: r.sc.entropy_nats,
            se_q: r.q.entropy_nats,
            xi_sc: r.sc.squeezing_xi,
            xi_q: r.q.squeezing_xi,
            fidelity: r.fidelity,
        }
    }

    fn failed(params: &ModelParams) -> Self {
        let nan = f64::NAN;
        SweepRow {
            gamma: params.gamma(),
            omega_a: params.omega_a(),
            region: params.region(),
            lambda_sc: nan,
            lambda_q: None,
            e_sc: nan,
            e_q: nan,
            jz_sc: nan,
            jz_q: nan,
            n_sc: nan,
            n_q: nan,
            varn_sc: nan,
            varn_q: nan,
            se_sc: nan,
            se_q: nan,
            xi_sc: nan,
            xi_q: nan,
            fidelity: nan,
        }
    }

    fn cells(&self) -> Vec<String> {
        let mut c = vec![num(self.gamma), num(self.omega_a), self.region.as_str().to_string(), num(self.lambda_sc)];
        c.push(self.lambda_q.map_or_else(|| "nan".to_string(), half));
        c.extend(
            [
                self.e_sc, self.e_q, self.jz_sc, self.jz_q, self.n_sc, self.n_q, self.varn_sc, self.varn_q, self.se_sc,
                self.se_q, self.xi_sc, self.xi_q, self.fidelity,
            ]
            .map(num),
        );
        c
    }
}

fn sweep_output(rows: &[SweepRow], format: Format, single: bool) -> String {
    match format {
        Format::Json if single => json(&rows[0]),
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = Table::new(&SWEEP_HEADER);
            rows.iter().for_each(|r| t.row(&r.cells()));
            t.finish()
        }
    }
}

/// Evaluates `f` on every grid point in parallel, keeping grid order.
/// Without `keep_going` the first failure (in grid order) aborts.
fn evaluate<T, R, F, G>(points: Vec<T>, keep_going: bool, f: F, on_error: G) -> Result<(Vec<R>, Option<CliError>), CliError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, CliError> + Sync,
    G: Fn(&T) -> R,
{
    let results: Vec<Result<R, CliError>> = points.par_iter().map(&f).collect();
    let total = results.len();
    let mut rows = Vec::with_capacity(total);
    let mut first = None;
    let mut failed = 0;
    for (point, result) in points.iter().zip(results) {
        match result {
            Ok(r) => rows.push(r),
            Err(e) if keep_going => {
                failed += 1;
                first.get_or_insert(e);
                rows.push(on_error(point));
            }
            Err(e) => return Err(e),
        }
    }
    Ok((rows, first.map(|e| CliError::Partial { failed, total, first: Box::new(e) })))
}

pub fn point(args: &PointArgs) -> Result<Outcome, CliError> {
    let cfg = args.common.resolve()?;
    let params = cfg.params(cfg.gamma()?)?;
    let row = SweepRow::from_record(&compare_point(&params)?);
    Ok(Outcome::done(sweep_output(&[row], args.common.format_or(Format::Json), true)))
}

pub fn sweep(args: &PointArgs) -> Result<Outcome, CliError> {
    let cfg = args.common.resolve()?;
    let params: Vec<ModelParams> = cfg.gamma_grid()?.into_iter().map(|g| cfg.params(g)).collect::<Result<_, _>>()?;
    let (rows, deferred) = evaluate(
        params,
        args.common.keep_going,
        |p| Ok(SweepRow::from_record(&compare_point(p)?)),
        SweepRow::failed,
    )?;
    Ok(Outcome { text: sweep_output(&rows, args.common.format_or(Format::Csv), false), deferred })
}

#[derive(Serialize)]
struct PhaseRow {
    gamma: f64,
    omega_a: f64,
    region: PhaseRegion,
    theta_c: f64,
    e0_per_n: f64,
}

pub fn phase_diagram(args: &PhaseArgs) -> Result<Outcome, CliError> {
    let cfg = args.common.resolve()?;
    let omegas = args.omega_a_range.ok_or_else(|| CliError::usage("--omega-a-range is required"))?.values();
    let gammas = cfg.gamma_grid()?;
    let n_atoms = cfg.n_atoms.unwrap_or(1);
    let mut rows = Vec::with_capacity(omegas.len() * gammas.len());
    for &w in &omegas {
        for &g in &gammas {
            let params = ModelParams::with_omega_a(n_atoms, w, g)?.with_eps_boundary(cfg.eps_boundary)?;
            let cp = critical_point(&params);
            let (_, e0) = minimum_energy(g, w, cfg.eps_boundary);
            rows.push(PhaseRow { gamma: g, omega_a: w, region: cp.region, theta_c: cp.theta_c, e0_per_n: e0 });
        }
    }
    let text = match args.common.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = Table::new(&["gamma", "omega_a", "region", "theta_c", "e0_per_n"]);
            for r in &rows {
                t.row(&[num(r.gamma), num(r.omega_a), r.region.as_str().into(), num(r.theta_c), num(r.e0_per_n)]);
            }
            t.finish()
        }
    };
    Ok(Outcome::done(text))
}

#[derive(Serialize)]
struct DistRow {
    kind: &'static str,
    index: HalfInt,
    probability: f64,
}

pub fn distributions(args: &DistributionArgs) -> Result<Outcome, CliError> {
    let cfg = args.common.resolve()?;
    let params = cfg.params(cfg.gamma()?)?;
    let kinds = if args.kinds.is_empty() { Kind::ALL.to_vec() } else { args.kinds.clone() };
    let needs_ground = kinds.iter().any(|k| matches!(k, Kind::MatterQ | Kind::PhotonQ))
        || (kinds.contains(&Kind::PhotonTrialRestricted) && args.lambda.is_none());
    let ground = needs_ground.then(|| find_ground(&params, &ScanPolicy::default())).transpose()?;
    let needs_trial = kinds.iter().any(|k| matches!(k, Kind::PhotonTrialFull | Kind::PhotonTrialRestricted | Kind::LambdaTrial));
    let trial = needs_trial.then(|| trial_coefficients(&params, &NuMaxPolicy::default())).transpose()?;

    let mut rows = Vec::new();
    for kind in kinds {
        let dist: ProbabilityDistribution = match kind {
            Kind::MatterQ => reduced_distributions(ground.as_ref().expect("ground state")).1,
            Kind::PhotonQ => reduced_distributions(ground.as_ref().expect("ground state")).0,
            Kind::MatterSc => occupation_distribution(&params),
            Kind::PhotonTrialFull => trial.as_ref().expect("trial state").photon_distribution(),
            Kind::LambdaTrial => trial_lambda_distribution(trial.as_ref().expect("trial state")).distribution,
            Kind::PhotonTrialRestricted => {
                let lambda = match args.lambda {
                    Some(l) => lambda_arg(l, &params)?,
                    None => ground.as_ref().expect("ground state").lambda(),
                };
                restricted_trial(trial.as_ref().expect("trial state"), lambda)?.photon_probs
            }
        };
        rows.extend(dist.iter().map(|(index, probability)| DistRow { kind: kind.name(), index, probability }));
    }
    let text = match args.common.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = Table::new(&["kind", "index", "probability"]);
            rows.iter().for_each(|r| t.row(&[r.kind.into(), half(r.index), num(r.probability)]));
            t.finish()
        }
    };
    Ok(Outcome::done(text))
}

fn lambda_arg(value: f64, params: &ModelParams) -> Result<HalfInt, CliError> {
    let lambda = HalfInt::nearest_with_parity(value, params.j_half());
    if (lambda.value() - value).abs() > 1e-9 {
        return Err(CliError::usage(format!("--lambda {value} must differ from j = {} by an integer", params.j_half())));
    }
    Ok(lambda)
}

#[derive(Serialize)]
struct TransitionRow {
    vary: &'static str,
    at: f64,
    order: Option<u32>,
    left_region: PhaseRegion,
    right_region: PhaseRegion,
    left: [f64; 3],
    right: [f64; 3],
}

pub fn transition(args: &TransitionArgs) -> Result<Outcome, CliError> {
    let cfg = args.common.resolve()?;
    let probe = TransitionProbe { step: args.step, tol: args.tol, eps_boundary: cfg.eps_boundary };
    let (name, report) = match args.vary {
        Vary::Gamma => {
            let w = cfg.omega_a()?;
            ("gamma", transition_order(|s| (s, w), args.at, &probe)?)
        }
        Vary::OmegaA => {
            let g = cfg.gamma()?;
            ("omega_a", transition_order(|s| (g, s), args.at, &probe)?)
        }
        Vary::Diagonal => ("diagonal", transition_order(|s| (s, s), args.at, &probe)?),
    };
    let row = TransitionRow {
        vary: name,
        at: args.at,
        order: report.order,
        left_region: report.left_region,
        right_region: report.right_region,
        left: report.left,
        right: report.right,
    };
    let text = match args.common.format_or(Format::Csv) {
        Format::Json => json(&row),
        Format::Csv => {
            let mut t = Table::new(&[
                "vary", "at", "order", "left_region", "right_region", "left_e", "left_d1", "left_d2", "right_e",
                "right_d1", "right_d2",
            ]);
            let mut cells = vec![
                row.vary.to_string(),
                num(row.at),
                row.order.map_or_else(|| "none".to_string(), |o| o.to_string()),
                row.left_region.as_str().into(),
                row.right_region.as_str().into(),
            ];
            cells.extend(row.left.iter().chain(&row.right).map(|&x| num(x)));
            t.row(&cells);
            t.finish()
        }
    };
    Ok(Outcome::done(text))
}
