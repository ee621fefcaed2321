//! Left-, right- and bi-invariant metrics on a compact group, written as
//! Hamiltonians on the left-trivialized cotangent bundle.
//!
//! A side of the metric is either absent, the identity operator (bi-invariant
//! contribution) or a sectional operator `phi` with `phi|t = D` and
//! `phi|t^perp = ad_a^{-1} ad_b`. The Hamiltonian is
//! `H = 1/2 <phi_left m, m> + 1/2 <phi_right n, n>` with `n = Ad_g m`.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::dynamics::CotangentState;
use crate::error::{Error, Result};
use crate::liealg::{AlgebraElement, AlgebraSpec, Subspace};
use crate::linalg::{self, RankPolicy};

/// Symmetric operator on the algebra built from a Cartan subalgebra `t`,
/// a regular `a in t`, any `b in t` and a symmetric `D` on `t`.
#[derive(Clone)]
pub struct SectionalOperator {
    t: Subspace,
    a: AlgebraElement,
    b: AlgebraElement,
    d: DMatrix<f64>,
    matrix: DMatrix<f64>,
    symmetry_defect: f64,
}

impl fmt::Debug for SectionalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SectionalOperator")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("d", &self.d.as_slice())
            .finish()
    }
}

impl SectionalOperator {
    /// `d` is expressed in the orthonormal basis of `t`.
    pub fn build(
        t: &Subspace,
        a: &AlgebraElement,
        b: &AlgebraElement,
        d: &DMatrix<f64>,
        policy: RankPolicy,
    ) -> Result<Self> {
        let spec = t.spec().clone();
        for x in [a, b] {
            if !spec.same_as(x.spec()) {
                return Err(Error::SpecMismatch {
                    left: spec.name(),
                    right: x.spec().name(),
                });
            }
            if t.residual(x) > 1e-10 * x.norm().max(1.0) {
                return Err(Error::InvalidParameters(
                    "sectional data a, b must lie in t".into(),
                ));
            }
        }
        let k = t.dim();
        if d.nrows() != k || d.ncols() != k {
            return Err(Error::InvalidParameters(format!(
                "D must be {k}x{k}, got {}x{}",
                d.nrows(),
                d.ncols()
            )));
        }
        if (d - d.transpose()).norm() > 1e-12 * d.norm().max(1.0) {
            return Err(Error::InvalidParameters("D must be symmetric".into()));
        }
        let t_elems = t.elements();
        for (i, x) in t_elems.iter().enumerate() {
            for y in &t_elems[i + 1..] {
                let c = x.bracket_unchecked(y).norm();
                if c > 1e-10 {
                    return Err(Error::NotCartan(format!("basis elements fail to commute ({c:.3e})")));
                }
            }
        }

        let perp = t.orthogonal_complement();
        let pp = perp.matrix();
        let ad_a = pp.transpose() * a.ad_matrix() * pp;
        let ad_b = pp.transpose() * b.ad_matrix() * pp;
        let inv = pseudo_inverse(&ad_a, policy).ok_or_else(|| {
            Error::NotRegular(format!("ad_a is singular on t^perp in {}", spec.name()))
        })?;
        let on_perp = inv * ad_b;
        let tm = t.matrix();
        let raw = tm * d * tm.transpose() + pp * on_perp * pp.transpose();
        let symmetry_defect = (&raw - raw.transpose()).norm();
        let matrix = (&raw + raw.transpose()) * 0.5;
        Ok(Self {
            t: t.clone(),
            a: a.clone(),
            b: b.clone(),
            d: d.clone(),
            matrix,
            symmetry_defect,
        })
    }

    /// Sectional operator on the standard Cartan subalgebra, with `a` and `b`
    /// given as Cartan data (see [`AlgebraElement::cartan`]).
    pub fn standard(
        spec: &Arc<AlgebraSpec>,
        a_values: &[f64],
        b_values: &[f64],
        d: &DMatrix<f64>,
    ) -> Result<Self> {
        let t = Subspace::cartan(spec);
        let a = AlgebraElement::cartan(spec, a_values)?;
        let b = AlgebraElement::cartan(spec, b_values)?;
        Self::build(&t, &a, &b, d, RankPolicy::default())
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        self.t.spec()
    }

    pub fn cartan(&self) -> &Subspace {
        &self.t
    }

    pub fn a(&self) -> &AlgebraElement {
        &self.a
    }

    pub fn b(&self) -> &AlgebraElement {
        &self.b
    }

    pub fn d(&self) -> &DMatrix<f64> {
        &self.d
    }

    /// Dense symmetric matrix of the operator in normalized coordinates.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Antisymmetric part of the operator before symmetrization.
    pub fn symmetry_defect(&self) -> f64 {
        self.symmetry_defect
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::denormalize(x.spec(), &(&self.matrix * x.normalized()))
    }

    /// `(positive definite, smallest eigenvalue)`
    pub fn is_positive_definite(&self) -> (bool, f64) {
        let eig = self.matrix.clone().symmetric_eigen();
        let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        (min > 0.0, min)
    }

    /// `||phi ad_a - ad_a phi||` restricted to `t^perp`.
    pub fn ad_a_commutator_defect(&self) -> f64 {
        let pp = self.t.orthogonal_complement();
        let p = pp.matrix();
        let ad = p.transpose() * self.a.ad_matrix() * p;
        let phi = p.transpose() * &self.matrix * p;
        (&phi * &ad - &ad * &phi).norm()
    }
}

fn pseudo_inverse(a: &DMatrix<f64>, policy: RankPolicy) -> Option<DMatrix<f64>> {
    if a.nrows() == 0 {
        return Some(DMatrix::zeros(0, 0));
    }
    let sv = linalg::singular_values(a);
    if policy.rank(&sv) < a.nrows() {
        return None;
    }
    a.clone().try_inverse()
}

/// One side of a metric.
#[derive(Clone, Debug)]
pub enum MetricSide {
    None,
    Identity,
    Sectional(Arc<SectionalOperator>),
}

impl MetricSide {
    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        match self {
            MetricSide::None => AlgebraElement::zero(x.spec()),
            MetricSide::Identity => x.clone(),
            MetricSide::Sectional(op) => op.apply(x),
        }
    }

    pub fn is_present(&self) -> bool {
        !matches!(self, MetricSide::None)
    }

    /// The side acts as a multiple of the identity, so its momentum is
    /// conserved by its own Euler equation.
    pub fn is_scalar(&self) -> bool {
        matches!(self, MetricSide::None | MetricSide::Identity)
    }

    pub fn label(&self) -> &'static str {
        match self {
            MetricSide::None => "none",
            MetricSide::Identity => "identity",
            MetricSide::Sectional(_) => "sectional",
        }
    }
}

/// A metric on the group given by its left and right operators.
#[derive(Clone, Debug)]
pub struct MetricSpec {
    left: MetricSide,
    right: MetricSide,
}

impl MetricSpec {
    pub fn new(left: MetricSide, right: MetricSide) -> Result<Self> {
        if !left.is_present() && !right.is_present() {
            return Err(Error::InvalidParameters(
                "a metric needs at least one side".into(),
            ));
        }
        Ok(Self { left, right })
    }

    pub fn bi_invariant() -> Self {
        Self {
            left: MetricSide::Identity,
            right: MetricSide::None,
        }
    }

    pub fn left_only(op: SectionalOperator) -> Self {
        Self {
            left: MetricSide::Sectional(Arc::new(op)),
            right: MetricSide::None,
        }
    }

    pub fn right_only(op: SectionalOperator) -> Self {
        Self {
            left: MetricSide::None,
            right: MetricSide::Sectional(Arc::new(op)),
        }
    }

    pub fn sum(left: SectionalOperator, right: SectionalOperator) -> Self {
        Self {
            left: MetricSide::Sectional(Arc::new(left)),
            right: MetricSide::Sectional(Arc::new(right)),
        }
    }

    pub fn left(&self) -> &MetricSide {
        &self.left
    }

    pub fn right(&self) -> &MetricSide {
        &self.right
    }

    pub fn is_bi_invariant(&self) -> bool {
        self.left.is_scalar() && self.right.is_scalar()
    }

    pub fn hamiltonian(&self, x: &CotangentState) -> f64 {
        let m = x.m();
        let n = x.n();
        let mut h = 0.0;
        if self.left.is_present() {
            h += 0.5 * self.left.apply(m).inner_unchecked(m);
        }
        if self.right.is_present() {
            h += 0.5 * self.right.apply(n).inner_unchecked(n);
        }
        h
    }

    /// `Ad_{g^{-1}} phi_right n`, the right side's share of the velocity.
    pub fn right_velocity(&self, x: &CotangentState) -> AlgebraElement {
        match &self.right {
            MetricSide::None => AlgebraElement::zero(x.m().spec()),
            MetricSide::Identity => x.m().clone(),
            MetricSide::Sectional(op) => x.g().ad_inv_unchecked(&op.apply(x.n())),
        }
    }

    /// Fiber derivative `dH/dm = phi_left m + Ad_{g^{-1}} phi_right Ad_g m`.
    pub fn velocity(&self, x: &CotangentState) -> AlgebraElement {
        self.left.apply(x.m()) + self.right_velocity(x)
    }
}
