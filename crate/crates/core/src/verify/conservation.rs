//! Conservation certificates: integrate from horizontal initial data and
//! bound the drift of the moment map and of a family of integrals.

use rayon::prelude::*;
use serde::Serialize;

use super::integrals::{Integral, IntegralFamily};
use super::Tolerances;
use crate::actions::TwoSidedAction;
use crate::dynamics::{exact_biinvariant_geodesic, integrate, CotangentState, IntegratorConfig, Watch};
use crate::error::Result;
use crate::metrics::MetricSpec;

#[derive(Debug, Clone, Serialize)]
pub struct QuantityDrift {
    pub quantity: String,
    pub initial: f64,
    pub max_abs: f64,
    pub relative: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryCertificate {
    pub index: usize,
    /// Initial moment vanishes, i.e. the start is horizontal.
    pub in_zero_level: bool,
    pub moment_initial_max: f64,
    /// `max_t max_i |phi_i(t) - phi_i(0)|`
    pub moment_drift: f64,
    pub drifts: Vec<QuantityDrift>,
    pub max_relative_drift: f64,
    /// "closed_form" against `g0 exp(t Omega)` for bi-invariant metrics,
    /// otherwise "spatial" (`|Ad_g m - n|` with `n` integrated separately).
    pub reconstruction_kind: String,
    pub reconstruction_error: f64,
    pub unitarity_defect: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConservationReport {
    pub action: String,
    pub family: String,
    pub horizon: f64,
    pub h: f64,
    pub trajectories: Vec<TrajectoryCertificate>,
    pub pass: bool,
}

/// Certificates for `samples` unit horizontal vectors at the identity.
pub fn conservation_certificate(
    metric: &MetricSpec,
    action: &TwoSidedAction,
    family: &IntegralFamily,
    cfg: &IntegratorConfig,
    seed: u64,
    samples: usize,
    tol: &Tolerances,
) -> Result<ConservationReport> {
    let starts: Vec<_> = action
        .sample_horizontal(seed, samples)
        .into_iter()
        .map(CotangentState::at_identity)
        .collect();
    conservation_from(metric, action, family, cfg, &starts, tol)
}

pub fn conservation_from(
    metric: &MetricSpec,
    action: &TwoSidedAction,
    family: &IntegralFamily,
    cfg: &IntegratorConfig,
    starts: &[CotangentState],
    tol: &Tolerances,
) -> Result<ConservationReport> {
    let certs: Vec<Result<TrajectoryCertificate>> = starts
        .par_iter()
        .enumerate()
        .map(|(i, x0)| certify_one(metric, action, family, cfg, x0, i, tol))
        .collect();
    let trajectories: Vec<_> = certs.into_iter().collect::<Result<_>>()?;
    let pass = !trajectories.is_empty() && trajectories.iter().all(|t| t.pass);
    Ok(ConservationReport {
        action: action.name().to_string(),
        family: family.name.clone(),
        horizon: cfg.horizon,
        h: cfg.h,
        trajectories,
        pass,
    })
}

fn certify_one(
    metric: &MetricSpec,
    action: &TwoSidedAction,
    family: &IntegralFamily,
    cfg: &IntegratorConfig,
    x0: &CotangentState,
    index: usize,
    tol: &Tolerances,
) -> Result<TrajectoryCertificate> {
    let spec = x0.m().spec();
    let mut watch = vec![Watch::Hamiltonian];
    for k in spec.default_degrees() {
        watch.push(Watch::LeftPoly(k));
        watch.push(Watch::RightPoly(k));
    }
    let bi = metric.is_bi_invariant();
    if !bi {
        watch.push(Watch::Reconstruction);
    }
    let traj = integrate(metric, x0, cfg, &watch)?;

    let mut drifts: Vec<QuantityDrift> = traj
        .drift
        .iter()
        .filter(|d| d.quantity != "reconstruction")
        .map(|d| QuantityDrift {
            quantity: d.quantity.clone(),
            initial: d.initial,
            max_abs: d.max_abs,
            relative: d.relative,
        })
        .collect();
    for f in &family.members {
        if matches!(f, Integral::MCoord(_) | Integral::NCoord(_)) {
            // Coordinates are covered by the momentum drift below.
            continue;
        }
        drifts.push(drift_of(f, &traj.states)?);
    }
    let coords_m = traj.states.iter().map(|x| (x.m().clone() - x0.m().clone()).norm()).fold(0.0, f64::max);
    let coords_n = traj.states.iter().map(|x| (x.n().clone() - x0.n().clone()).norm()).fold(0.0, f64::max);
    if family.members.iter().any(|f| matches!(f, Integral::MCoord(_))) {
        drifts.push(QuantityDrift {
            quantity: "m".into(),
            initial: x0.m().norm(),
            max_abs: coords_m,
            relative: coords_m / x0.m().norm().max(1.0),
        });
    }
    if family.members.iter().any(|f| matches!(f, Integral::NCoord(_))) {
        drifts.push(QuantityDrift {
            quantity: "n".into(),
            initial: x0.n().norm(),
            max_abs: coords_n,
            relative: coords_n / x0.n().norm().max(1.0),
        });
    }

    let phi0 = action.moment(x0);
    let moment_initial_max = phi0.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let moment_drift = traj
        .states
        .iter()
        .map(|x| {
            action
                .moment(x)
                .iter()
                .zip(&phi0)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    let in_zero_level = moment_initial_max <= 1e-12 * x0.m().norm().max(1.0);

    let (reconstruction_kind, reconstruction_error) = if bi {
        let omega = metric.velocity(x0);
        let mut err: f64 = 0.0;
        for (t, x) in traj.times.iter().zip(&traj.states) {
            let exact = exact_biinvariant_geodesic(x0.g(), &omega, *t)?;
            err = err.max(x.g().distance(&exact));
        }
        ("closed_form".to_string(), err)
    } else {
        let d = traj.drift_of("reconstruction").map(|d| d.max_abs).unwrap_or(0.0);
        ("spatial".to_string(), d)
    };

    let max_relative_drift = drifts.iter().map(|d| d.relative).fold(0.0, f64::max);
    let unitarity_defect = traj.last().g().unitarity_defect();
    let pass = in_zero_level
        && moment_drift <= tol.moment
        && max_relative_drift <= tol.drift
        && reconstruction_error <= tol.reconstruction;
    Ok(TrajectoryCertificate {
        index,
        in_zero_level,
        moment_initial_max,
        moment_drift,
        drifts,
        max_relative_drift,
        reconstruction_kind,
        reconstruction_error,
        unitarity_defect,
        pass,
    })
}

fn drift_of(f: &Integral, states: &[CotangentState]) -> Result<QuantityDrift> {
    let initial = f.value(&states[0])?;
    let mut max_abs: f64 = 0.0;
    for x in states {
        max_abs = max_abs.max((f.value(x)? - initial).abs());
    }
    Ok(QuantityDrift {
        quantity: f.label(),
        initial,
        max_abs,
        relative: max_abs / initial.abs().max(1.0),
    })
}

/// Moment drift along a trajectory from an arbitrary start, for starts that
/// are not horizontal.
pub fn moment_levels(action: &TwoSidedAction, states: &[CotangentState]) -> Vec<Vec<f64>> {
    states.iter().map(|x| action.moment(x)).collect()
}

