//! Regularity of horizontal vectors and the reduced torus dimension
//! `rank G - min dim u_xi`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::completeness::mode;
use crate::actions::TwoSidedAction;
use crate::error::{Error, Result};
use crate::liealg::AlgebraElement;
use crate::linalg::RankPolicy;

#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    pub action: String,
    pub samples: usize,
    pub regular: usize,
    pub fraction_regular: f64,
    pub rank: usize,
    pub degrees: Vec<usize>,
    /// Rank of `{grad p_k(xi)}` per sample.
    pub gradient_ranks: Vec<usize>,
    /// Every regular sample has full gradient rank.
    pub gradients_independent_at_regular: bool,
    pub pass: bool,
}

/// Scans `samples` unit horizontal vectors at the identity. Passes when the
/// generic (modal) sample is regular.
pub fn horizontal_regularity(action: &TwoSidedAction, samples: usize, seed: u64, policy: RankPolicy) -> Result<RegularityReport> {
    let spec = action.spec();
    let degrees = spec.default_degrees();
    let xis = action.sample_horizontal(seed, samples);
    let per: Vec<Result<(bool, usize)>> = xis
        .par_iter()
        .map(|xi| Ok((xi.is_regular(policy), xi.gradient_rank(&degrees, policy)?)))
        .collect();
    let per: Vec<(bool, usize)> = per.into_iter().collect::<Result<_>>()?;
    let regular = per.iter().filter(|p| p.0).count();
    let rank = spec.rank();
    let gradients_independent_at_regular = per.iter().filter(|p| p.0).all(|p| p.1 == rank);
    let modal_regular = mode(per.iter().map(|p| p.0)).unwrap_or(false);
    Ok(RegularityReport {
        action: action.name().to_string(),
        samples,
        regular,
        fraction_regular: if samples == 0 { 0.0 } else { regular as f64 / samples as f64 },
        rank,
        degrees,
        gradient_ranks: per.iter().map(|p| p.1).collect(),
        gradients_independent_at_regular,
        pass: samples > 0 && modal_regular && 2 * regular > samples,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TorusReport {
    pub action: String,
    pub rank: usize,
    pub samples: usize,
    pub regular_samples: usize,
    pub min_u_xi: usize,
    pub modal_u_xi: usize,
    /// `dim u_xi -> count`
    pub histogram: BTreeMap<usize, usize>,
    /// `rank - min dim u_xi`
    pub torus_dimension: usize,
    /// `rank - modal dim u_xi`
    pub generic_torus_dimension: usize,
    /// False when the sampled horizontal vectors are not generically regular.
    pub supported: bool,
}

/// Torus dimension from sampled unit horizontal vectors at the identity.
pub fn torus_dimension(action: &TwoSidedAction, samples: usize, seed: u64, policy: RankPolicy) -> Result<TorusReport> {
    torus_dimension_over(action, &action.sample_horizontal(seed, samples), policy)
}

/// Torus dimension over an explicit list of `xi`. Fails with
/// `HypothesisFailed` if none of them is regular.
pub fn torus_dimension_over(action: &TwoSidedAction, xis: &[AlgebraElement], policy: RankPolicy) -> Result<TorusReport> {
    let vertical = action.vertical_horizontal_with(policy).vertical;
    let per: Vec<(bool, usize)> = xis
        .par_iter()
        .map(|xi| (xi.is_regular(policy), action.u_xi_dim_with(xi, &vertical, policy)))
        .collect();
    let regular_samples = per.iter().filter(|p| p.0).count();
    if regular_samples == 0 {
        return Err(Error::HypothesisFailed(format!(
            "{}: none of {} sampled horizontal vectors is regular",
            action.name(),
            xis.len()
        )));
    }
    let mut histogram = BTreeMap::new();
    for p in &per {
        *histogram.entry(p.1).or_insert(0) += 1;
    }
    let rank = action.spec().rank();
    let min_u_xi = per.iter().map(|p| p.1).min().unwrap_or(0);
    let modal_u_xi = mode(per.iter().map(|p| p.1)).unwrap_or(0);
    Ok(TorusReport {
        action: action.name().to_string(),
        rank,
        samples: xis.len(),
        regular_samples,
        min_u_xi,
        modal_u_xi,
        histogram,
        torus_dimension: rank.saturating_sub(min_u_xi),
        generic_torus_dimension: rank.saturating_sub(modal_u_xi),
        supported: 2 * regular_samples > xis.len(),
    })
}
