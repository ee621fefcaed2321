//! `list`, `simulate` and `verify`.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use geoflow_core::actions::{builtin_scenarios, TwoSidedAction};
use geoflow_core::dynamics::{exact_biinvariant_geodesic, integrate, Drift, Watch};
use geoflow_core::format::{f64_17, to_json_string};
use geoflow_core::metrics::MetricSide;
use geoflow_core::verify::{
    completeness_check, conservation_certificate, horizontal_regularity, sample_state, torus_dimension, CompletenessReport,
    ConservationReport, IntegralFamily, RegularityReport, TorusReport,
};
use geoflow_core::{CotangentState, Error, MetricSpec, VERSION};
use serde::Serialize;

use crate::config::{InitialKind, RunConfig};
use crate::CliError;

/// Result of `simulate` or `verify`.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: &'static str,
    pub pass: bool,
    /// Report JSON as written to disk.
    pub report: String,
    /// Human-readable lines.
    pub summary: Vec<String>,
}

pub fn cmd_list(json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let entries = builtin_scenarios();
    if json {
        write!(out, "{}", to_json_string(&entries)?)?;
    } else {
        for e in &entries {
            writeln!(out, "{}({})  {}", e.name, e.parameters, e.description)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Header<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    seed: u64,
    scenario: String,
    config: &'a RunConfig,
}

fn header<'a>(cfg: &'a RunConfig, command: &'static str, action: &TwoSidedAction) -> Header<'a> {
    Header {
        tool: "geoflow",
        version: VERSION,
        command,
        seed: cfg.seed,
        scenario: action.name().to_string(),
        config: cfg,
    }
}

/// Outcome of one configured check: either a report or the error that
/// stopped it (which counts as a failure).
#[derive(Serialize)]
struct Check<T: Serialize> {
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<T>,
}

impl<T: Serialize> Check<T> {
    fn from_result(r: geoflow_core::Result<T>, pass: impl FnOnce(&T) -> bool) -> Result<Self, CliError> {
        match r {
            Ok(report) => Ok(Self {
                pass: pass(&report),
                error: None,
                report: Some(report),
            }),
            Err(e @ (Error::ToleranceAmbiguity { .. } | Error::HypothesisFailed(_) | Error::RankMismatch { .. })) => Ok(Self {
                pass: false,
                error: Some(e.to_string()),
                report: None,
            }),
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Serialize, Default)]
struct Checks {
    #[serde(skip_serializing_if = "Option::is_none")]
    completeness: Option<Check<CompletenessReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regularity: Option<Check<RegularityReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    torus: Option<Check<TorusReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conservation: Option<Check<ConservationReport>>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    metric: MetricSummary,
    family: String,
    vertical_dim: usize,
    horizontal_dim: usize,
    collapsed_pairs: usize,
    checks: Checks,
    pass: bool,
}

#[derive(Serialize)]
struct MetricSummary {
    left: &'static str,
    right: &'static str,
    left_positive_definite: Option<bool>,
    right_positive_definite: Option<bool>,
}

fn metric_summary(metric: &MetricSpec) -> MetricSummary {
    let pd = |s: &MetricSide| match s {
        MetricSide::Sectional(op) => Some(op.is_positive_definite().0),
        _ => None,
    };
    MetricSummary {
        left: metric.left().label(),
        right: metric.right().label(),
        left_positive_definite: pd(metric.left()),
        right_positive_definite: pd(metric.right()),
    }
}

fn setup(cfg: &RunConfig) -> Result<(TwoSidedAction, MetricSpec), CliError> {
    let action = cfg.scenario.build()?;
    let metric = cfg.metric.build(action.spec())?;
    Ok((action, metric))
}

fn write_file(dir: &Path, name: &str, contents: &[u8]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join(name), contents)?;
    Ok(())
}

/// Wall-clock time goes to a sidecar so reports stay byte-identical.
pub fn write_timing(dir: &Path, command: &str, seconds: f64) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Timing<'a> {
        command: &'a str,
        wall_clock_seconds: f64,
    }
    let text = to_json_string(&Timing {
        command,
        wall_clock_seconds: seconds,
    })?;
    write_file(dir, "timing.json", text.as_bytes())
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn cmd_verify(cfg: &RunConfig, out_dir: &Path) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let (action, metric) = setup(cfg)?;
    let spec = action.spec().clone();
    let policy = cfg.tolerances.rank_policy();
    let family = IntegralFamily::for_metric(&spec, &metric, &cfg.lambdas)?;
    let vh = action.vertical_horizontal_with(policy);
    let mut checks = Checks::default();
    let mut summary = Vec::new();

    if let Some(c) = cfg.checks.completeness {
        let check = Check::from_result(completeness_check(&spec, &family, c.samples, cfg.seed, policy), |r| r.pass)?;
        let detail = match &check.report {
            Some(r) => format!(
                "ddim={:?} dind={:?} ambiguous={}/{}",
                r.modal_ddim, r.modal_dind, r.ambiguous, r.samples
            ),
            None => check.error.clone().unwrap_or_default(),
        };
        summary.push(format!("completeness  {}  {detail}", pass_word(check.pass)));
        checks.completeness = Some(check);
    }
    if let Some(c) = cfg.checks.regularity {
        let check = Check::from_result(horizontal_regularity(&action, c.samples, cfg.seed, policy), |r| r.pass)?;
        let detail = match &check.report {
            Some(r) => format!("regular={}/{}", r.regular, r.samples),
            None => check.error.clone().unwrap_or_default(),
        };
        summary.push(format!("regularity    {}  {detail}", pass_word(check.pass)));
        checks.regularity = Some(check);
    }
    if let Some(c) = cfg.checks.torus {
        let check = Check::from_result(torus_dimension(&action, c.samples, cfg.seed, policy), |r| {
            r.supported && c.expect.is_none_or(|e| e == r.torus_dimension)
        })?;
        let detail = match &check.report {
            Some(r) => format!("torus_dimension={} min_u_xi={}", r.torus_dimension, r.min_u_xi),
            None => check.error.clone().unwrap_or_default(),
        };
        summary.push(format!("torus         {}  {detail}", pass_word(check.pass)));
        checks.torus = Some(check);
    }
    if let Some(c) = cfg.checks.conservation {
        let r = conservation_certificate(&metric, &action, &family, &cfg.integrator, cfg.seed, c.samples, &cfg.tolerances);
        let check = Check::from_result(r, |r| r.pass)?;
        let detail = match &check.report {
            Some(r) => {
                let worst = r.trajectories.iter().map(|t| t.max_relative_drift).fold(0.0, f64::max);
                let moment = r.trajectories.iter().map(|t| t.moment_drift).fold(0.0, f64::max);
                format!("max_relative_drift={worst:.3e} moment_drift={moment:.3e}")
            }
            None => check.error.clone().unwrap_or_default(),
        };
        summary.push(format!("conservation  {}  {detail}", pass_word(check.pass)));
        checks.conservation = Some(check);
    }

    let flags = [
        checks.completeness.as_ref().map(|c| c.pass),
        checks.regularity.as_ref().map(|c| c.pass),
        checks.torus.as_ref().map(|c| c.pass),
        checks.conservation.as_ref().map(|c| c.pass),
    ];
    let pass = flags.iter().all(|f| f.unwrap_or(true));
    let report = VerifyReport {
        header: header(cfg, "verify", &action),
        metric: metric_summary(&metric),
        family: family.name.clone(),
        vertical_dim: vh.vertical.dim(),
        horizontal_dim: vh.horizontal.dim(),
        collapsed_pairs: vh.collapsed,
        checks,
        pass,
    };
    let text = to_json_string(&report)?;
    write_file(out_dir, "report.json", text.as_bytes())?;
    summary.push(format!("verify        {}", pass_word(pass)));
    Ok(Outcome {
        command: "verify",
        pass,
        report: text,
        summary,
    })
}

#[derive(Serialize)]
struct SimulateReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    metric: MetricSummary,
    initial: InitialKind,
    initial_momentum: Vec<f64>,
    steps: usize,
    rows: usize,
    trajectory: &'static str,
    drift: Vec<Drift>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_error: Option<f64>,
    unitarity_defect: f64,
    pass: bool,
}

pub fn cmd_simulate(cfg: &RunConfig, out_dir: &Path) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let (action, metric) = setup(cfg)?;
    let spec = action.spec().clone();
    let x0 = match cfg.simulate.initial {
        InitialKind::Horizontal => {
            let xi = action
                .sample_horizontal(cfg.seed, 1)
                .pop()
                .expect("one sample requested");
            CotangentState::at_identity(xi)
        }
        InitialKind::Random => sample_state(&spec, cfg.seed, 0),
    }
    .scaled(cfg.simulate.momentum_scale);

    let mut watch = vec![Watch::Hamiltonian];
    for k in spec.default_degrees() {
        watch.push(Watch::LeftPoly(k));
        watch.push(Watch::RightPoly(k));
    }
    if let MetricSide::Sectional(op) = metric.left() {
        for k in spec.default_degrees() {
            for &lambda in &cfg.lambdas {
                watch.push(Watch::Shift {
                    degree: k,
                    lambda,
                    a: op.a().clone(),
                });
            }
        }
    }
    watch.push(Watch::Moment(Arc::new(action.clone())));
    let bi = metric.is_bi_invariant();
    if !bi {
        watch.push(Watch::Reconstruction);
    }
    let traj = integrate(&metric, &x0, &cfg.integrator, &watch)?;

    let closed_form_error = if bi {
        let omega = metric.velocity(&x0);
        let mut err: f64 = 0.0;
        for (t, x) in traj.times.iter().zip(&traj.states) {
            err = err.max(x.g().distance(&exact_biinvariant_geodesic(x0.g(), &omega, *t)?));
        }
        Some(err)
    } else {
        None
    };
    let tol = &cfg.tolerances;
    let drift_ok = traj.drift.iter().all(|d| {
        if d.quantity.starts_with("moment_") {
            d.max_abs <= tol.moment
        } else if d.quantity == "reconstruction" {
            d.max_abs <= tol.reconstruction
        } else {
            d.relative <= tol.drift
        }
    });
    let pass = drift_ok && closed_form_error.is_none_or(|e| e <= tol.reconstruction);

    let mut csv = Vec::new();
    traj.write_csv(&mut csv)?;
    write_file(out_dir, "trajectory.csv", &csv)?;

    let report = SimulateReport {
        header: header(cfg, "simulate", &action),
        metric: metric_summary(&metric),
        initial: cfg.simulate.initial,
        initial_momentum: x0.m().coords().iter().copied().collect(),
        steps: traj.times.len() - 1,
        rows: traj.times.len(),
        trajectory: "trajectory.csv",
        drift: traj.drift.clone(),
        closed_form_error,
        unitarity_defect: traj.last().g().unitarity_defect(),
        pass,
    };
    let text = to_json_string(&report)?;
    write_file(out_dir, "simulate.json", text.as_bytes())?;

    let mut summary: Vec<String> = traj
        .drift
        .iter()
        .map(|d| format!("{:<24} drift {} (relative {})", d.quantity, f64_17(d.max_abs), f64_17(d.relative)))
        .collect();
    if let Some(e) = closed_form_error {
        summary.push(format!("{:<24} {}", "closed_form_error", f64_17(e)));
    }
    summary.push(format!("simulate      {}  rows={}", pass_word(pass), report.rows));
    Ok(Outcome {
        command: "simulate",
        pass,
        report: text,
        summary,
    })
}
