//! Sampled completeness: modal ddim + dind against `dim T*G`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::bracket::{ddim_dind, PointRank};
use super::integrals::IntegralFamily;
use crate::dynamics::CotangentState;
use crate::error::{Error, Result};
use crate::liealg::{AlgebraElement, AlgebraSpec, GroupElement};
use crate::linalg::RankPolicy;
use crate::sampling;

#[derive(Debug, Clone, Serialize)]
pub struct PointOutcome {
    pub index: usize,
    /// `None` when the rank decision was ambiguous at this point.
    pub rank: Option<PointRank>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessReport {
    pub family: String,
    pub samples: usize,
    pub points: Vec<PointOutcome>,
    pub modal_ddim: Option<usize>,
    pub modal_dind: Option<usize>,
    pub ambiguous: usize,
    pub dim_phase_space: usize,
    pub pass: bool,
}

/// Most frequent value; ties go to the smallest.
pub fn mode<T: Ord + Copy>(values: impl IntoIterator<Item = T>) -> Option<T> {
    let mut counts = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    let mut best: Option<(T, usize)> = None;
    for (v, c) in counts {
        if best.is_none_or(|(_, bc)| c > bc) {
            best = Some((v, c));
        }
    }
    best.map(|(v, _)| v)
}

/// Random state number `index` of a scan: Haar-like `g`, Gaussian `m`.
pub fn sample_state(spec: &Arc<AlgebraSpec>, seed: u64, index: usize) -> CotangentState {
    let mut rng = sampling::stream(seed, index as u64);
    let g = GroupElement::random(spec, &mut rng);
    let m = AlgebraElement::random(spec, &mut rng);
    CotangentState::new(g, m).expect("sampled state shares one algebra")
}

pub fn completeness_check(
    spec: &Arc<AlgebraSpec>,
    family: &IntegralFamily,
    samples: usize,
    seed: u64,
    policy: RankPolicy,
) -> Result<CompletenessReport> {
    let states: Vec<_> = (0..samples).map(|i| sample_state(spec, seed, i)).collect();
    completeness_at(spec, family, &states, policy)
}

/// Same as [`completeness_check`] on given states. Ambiguous points are
/// excluded from the mode; the check fails if they are not a minority.
pub fn completeness_at(
    spec: &Arc<AlgebraSpec>,
    family: &IntegralFamily,
    states: &[CotangentState],
    policy: RankPolicy,
) -> Result<CompletenessReport> {
    let results: Vec<Result<Option<PointRank>>> = states
        .par_iter()
        .map(|x| match ddim_dind(family, x, policy) {
            Ok(r) => Ok(Some(r)),
            Err(Error::ToleranceAmbiguity { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut points = Vec::with_capacity(states.len());
    for (index, r) in results.into_iter().enumerate() {
        points.push(PointOutcome { index, rank: r? });
    }
    let ambiguous = points.iter().filter(|p| p.rank.is_none()).count();
    let modal = mode(points.iter().filter_map(|p| p.rank.as_ref().map(|r| (r.ddim, r.dind))));
    let dim_phase_space = 2 * spec.dim();
    let pass = !states.is_empty()
        && 2 * ambiguous < states.len()
        && modal.is_some_and(|(l, r)| l + r == dim_phase_space);
    Ok(CompletenessReport {
        family: family.name.clone(),
        samples: states.len(),
        points,
        modal_ddim: modal.map(|m| m.0),
        modal_dind: modal.map(|m| m.1),
        ambiguous,
        dim_phase_space,
        pass,
    })
}
