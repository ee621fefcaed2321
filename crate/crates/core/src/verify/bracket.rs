//! Canonical Poisson bracket on `T*G` in left trivialization, and the
//! ddim/dind rank computation for families of functions.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::integrals::{Integral, IntegralFamily};
use crate::dynamics::CotangentState;
use crate::error::{Error, Result};
use crate::liealg::AlgebraElement;
use crate::linalg::{self, RankPolicy};

/// `{F, K} = <D_g F, dK> - <D_g K, dF> - <m, [dF, dK]>`
pub fn poisson_bracket(f: &Integral, k: &Integral, x: &CotangentState) -> Result<f64> {
    let df = f.differential(x)?;
    let dk = k.differential(x)?;
    Ok(bracket_of_differentials(&df, &dk, x.m()))
}

pub fn bracket_of_differentials(
    df: &(AlgebraElement, AlgebraElement),
    dk: &(AlgebraElement, AlgebraElement),
    m: &AlgebraElement,
) -> f64 {
    df.0.inner_unchecked(&dk.1) - dk.0.inner_unchecked(&df.1) - m.inner_unchecked(&df.1.bracket_unchecked(&dk.1))
}

/// The bracket as a bilinear form on stacked normalized differentials
/// `(D_g, d/dm)`: `[[0, I], [-I, -ad_m^T]]`.
pub fn poisson_matrix(m: &AlgebraElement) -> DMatrix<f64> {
    let d = m.spec().dim();
    let mut p = DMatrix::zeros(2 * d, 2 * d);
    for i in 0..d {
        p[(i, d + i)] = 1.0;
        p[(d + i, i)] = -1.0;
    }
    let ad = m.ad_matrix();
    p.view_mut((d, d), (d, d)).copy_from(&(-ad.transpose()));
    p
}

/// Differentials of all members, one stacked column each.
pub fn differential_matrix(family: &IntegralFamily, x: &CotangentState) -> Result<DMatrix<f64>> {
    let d = x.m().spec().dim();
    let mut cols = Vec::with_capacity(family.len());
    for f in &family.members {
        let (dg, dm) = f.differential(x)?;
        let (dg, dm) = (dg.normalized(), dm.normalized());
        cols.push(DVector::from_fn(2 * d, |i, _| if i < d { dg[i] } else { dm[i - d] }));
    }
    if cols.is_empty() {
        return Ok(DMatrix::zeros(2 * d, 0));
    }
    Ok(DMatrix::from_columns(&cols))
}

/// Rank data at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointRank {
    pub ddim: usize,
    pub dind: usize,
    /// Rank of the bracket form on the span of differentials.
    pub bracket_rank: usize,
    /// Smallest singular value counted in `ddim` (0 if none).
    pub smallest_kept: f64,
    /// Largest singular value discarded from `ddim` (0 if none).
    pub largest_dropped: f64,
}

/// `ddim` = rank of the differentials; `dind` = `ddim` minus the rank of the
/// bracket restricted to their span.
///
/// Columns are rescaled to unit length before the rank decision so that
/// functions of different homogeneity degree are weighed equally; columns
/// below `1e-12` of the largest are treated as exactly zero.
pub fn ddim_dind(family: &IntegralFamily, x: &CotangentState, policy: RankPolicy) -> Result<PointRank> {
    let raw = differential_matrix(family, x)?;
    let largest = raw.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
    let cols: Vec<DVector<f64>> = raw
        .column_iter()
        .filter_map(|c| {
            let n = c.norm();
            (n > 1e-12 * largest && n > 0.0).then(|| c / n)
        })
        .collect();
    if cols.is_empty() {
        return Ok(PointRank {
            ddim: 0,
            dind: 0,
            bracket_rank: 0,
            smallest_kept: 0.0,
            largest_dropped: 0.0,
        });
    }
    let a = DMatrix::from_columns(&cols);
    let sv = linalg::singular_values(&a);
    if policy.is_ambiguous(&sv) {
        return Err(Error::ToleranceAmbiguity { threshold: policy.threshold(&sv) });
    }
    let l = policy.rank(&sv);
    let smallest_kept = if l > 0 { sv[l - 1] } else { 0.0 };
    let largest_dropped = sv.get(l).copied().unwrap_or(0.0);

    if l == 0 {
        return Ok(PointRank {
            ddim: 0,
            dind: 0,
            bracket_rank: 0,
            smallest_kept,
            largest_dropped,
        });
    }
    let chosen = linalg::pivoted_columns(&a, l);
    let sel = DMatrix::from_columns(&chosen.iter().map(|&j| a.column(j).into_owned()).collect::<Vec<_>>());
    let q = sel.qr().q();
    let b = q.transpose() * poisson_matrix(x.m()) * &q;
    let bsv = linalg::singular_values(&b);
    if policy.is_ambiguous(&bsv) {
        return Err(Error::ToleranceAmbiguity { threshold: policy.threshold(&bsv) });
    }
    let r = policy.rank(&bsv);
    if r % 2 == 1 {
        return Err(Error::ToleranceAmbiguity { threshold: policy.threshold(&bsv) });
    }
    Ok(PointRank {
        ddim: l,
        dind: l - r,
        bracket_rank: r,
        smallest_kept,
        largest_dropped,
    })
}
