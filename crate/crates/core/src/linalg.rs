//! Dense numerical helpers: singular-value rank decisions, null spaces and
//! orthonormal spans.
//!
//! Every dimension claim in the crate (centralizers, ddim, dind, vertical
//! spans) goes through [`RankPolicy`], so one threshold governs all of them.

use nalgebra::{Complex, DMatrix, DVector};
use serde::{Deserialize, Serialize};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;

/// Default relative singular-value threshold.
pub const DEFAULT_TOL_RANK: f64 = 1e-8;

/// Relative singular-value threshold: `sigma < tol * max(sigma_max, 1)` is zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankPolicy {
    pub tol: f64,
}

impl Default for RankPolicy {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL_RANK,
        }
    }
}

impl RankPolicy {
    pub fn new(tol: f64) -> Self {
        Self { tol }
    }

    pub fn threshold(&self, singular_values: &[f64]) -> f64 {
        let largest = singular_values.iter().cloned().fold(0.0_f64, f64::max);
        self.tol * largest.max(1.0)
    }

    pub fn rank(&self, singular_values: &[f64]) -> usize {
        let thr = self.threshold(singular_values);
        singular_values.iter().filter(|&&s| s >= thr).count()
    }

    /// True when some singular value sits within one decade of the threshold,
    /// i.e. the rank decision would flip under a 10x change of `tol`.
    pub fn is_ambiguous(&self, singular_values: &[f64]) -> bool {
        let thr = self.threshold(singular_values);
        singular_values
            .iter()
            .any(|&s| s > thr / 10.0 && s < thr * 10.0)
    }
}

/// Singular values of a real matrix, sorted descending.
pub fn singular_values(a: &DMatrix<f64>) -> Vec<f64> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = a.clone().singular_values().iter().cloned().collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

pub fn numerical_rank(a: &DMatrix<f64>, policy: RankPolicy) -> usize {
    policy.rank(&singular_values(a))
}

/// Orthonormal basis (as columns) of the null space of `a`, together with the
/// full list of singular values used for the decision.
pub fn null_space(a: &DMatrix<f64>, policy: RankPolicy) -> (DMatrix<f64>, Vec<f64>) {
    let n = a.ncols();
    if n == 0 {
        return (DMatrix::zeros(0, 0), Vec::new());
    }
    // pad to at least n rows so the SVD returns a complete right basis
    let a = if a.nrows() < n {
        let mut padded = DMatrix::zeros(n, n);
        padded.view_mut((0, 0), (a.nrows(), n)).copy_from(a);
        padded
    } else {
        a.clone()
    };
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    let thr = policy.threshold(&sv);
    let cols: Vec<DVector<f64>> = sv
        .iter()
        .enumerate()
        .filter(|(_, &s)| s < thr)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect();
    let mut sorted = sv;
    sorted.sort_by(|x, y| y.partial_cmp(x).unwrap());
    if cols.is_empty() {
        (DMatrix::zeros(n, 0), sorted)
    } else {
        (DMatrix::from_columns(&cols), sorted)
    }
}

/// Orthonormal basis of the column span of `a`.
pub fn orthonormal_span(a: &DMatrix<f64>, policy: RankPolicy) -> DMatrix<f64> {
    let m = a.nrows();
    if a.ncols() == 0 || m == 0 {
        return DMatrix::zeros(m, 0);
    }
    // left singular vectors of the padded matrix cover all of R^m
    let a = if a.ncols() < m {
        let mut padded = DMatrix::zeros(m, m);
        padded.view_mut((0, 0), (m, a.ncols())).copy_from(a);
        padded
    } else {
        a.clone()
    };
    let svd = a.svd(true, false);
    let u = svd.u.expect("u requested");
    let sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    let thr = policy.threshold(&sv);
    let cols: Vec<DVector<f64>> = sv
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= thr)
        .map(|(i, _)| u.column(i).into_owned())
        .collect();
    if cols.is_empty() {
        DMatrix::zeros(m, 0)
    } else {
        DMatrix::from_columns(&cols)
    }
}

/// Greedy column-pivoted Gram-Schmidt: indices of a maximal independent set
/// of columns, chosen by largest residual norm first.
pub fn pivoted_columns(a: &DMatrix<f64>, rank: usize) -> Vec<usize> {
    let mut residual = a.clone();
    let mut chosen = Vec::with_capacity(rank);
    for _ in 0..rank {
        let (best, norm) = (0..residual.ncols())
            .filter(|j| !chosen.contains(j))
            .map(|j| (j, residual.column(j).norm()))
            .fold((usize::MAX, -1.0), |acc, c| if c.1 > acc.1 { c } else { acc });
        if best == usize::MAX || norm <= 0.0 {
            break;
        }
        chosen.push(best);
        let q = residual.column(best) / norm;
        for j in 0..residual.ncols() {
            let proj = q.dot(&residual.column(j));
            let mut col = residual.column_mut(j);
            col.axpy(-proj, &q, 1.0);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Frobenius norm of a complex matrix.
pub fn cnorm(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn commutator(x: &CMat, y: &CMat) -> CMat {
    x * y - y * x
}
