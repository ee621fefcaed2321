//! Compact matrix Lie algebras su(n), so(n), sp(n) and their groups.
//!
//! Elements are stored as real coordinates over a fixed orthogonal basis of
//! the defining complex representation. The invariant inner product is
//! `<X, Y> = -Re tr(XY)`; each basis matrix has squared norm 2.
//!
//! Internally most linear algebra runs in *normalized* coordinates (the basis
//! rescaled to be orthonormal), where the inner product is the dot product and
//! symmetric operators are symmetric matrices.

mod basis;
mod group;
mod poly;
mod subspace;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

pub use basis::symplectic_form;
pub use group::{GroupElement, DEFAULT_STRUCTURE_TOL};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat, RankPolicy, C64};
use crate::sampling;

/// Seed for the random centralizer scan behind [`rank_of_algebra`].
const RANK_SCAN_SEED: u64 = 0x5eed_0001;
const RANK_SCAN_SAMPLES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Su,
    So,
    Sp,
}

impl Family {
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            Family::Sp => 2 * n,
            _ => n,
        }
    }

    pub fn dimension(self, n: usize) -> usize {
        match self {
            Family::Su => n * n - 1,
            Family::So => n * (n - 1) / 2,
            Family::Sp => n * (2 * n + 1),
        }
    }

    /// Rank of the algebra from the classification.
    pub fn closed_form_rank(self, n: usize) -> usize {
        match self {
            Family::Su => n - 1,
            Family::So => n / 2,
            Family::Sp => n,
        }
    }

    /// Degrees of the power sums used as generators of the invariant
    /// polynomials. Odd power sums vanish identically on so(n) and sp(n).
    pub fn default_degrees(self, n: usize) -> Vec<usize> {
        match self {
            Family::Su => (2..=n).collect(),
            Family::So | Family::Sp => (1..=self.closed_form_rank(n)).map(|k| 2 * k).collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Su => "su",
            Family::So => "so",
            Family::Sp => "sp",
        })
    }
}

/// A compact matrix Lie algebra with a fixed real basis.
pub struct AlgebraSpec {
    family: Family,
    n: usize,
    basis: Vec<CMat>,
    gram: Vec<f64>,
    norms: Vec<f64>,
    cartan: Vec<usize>,
    rank: usize,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({})", self.name())
    }
}

impl AlgebraSpec {
    /// Builds the algebra and certifies its rank by a sampled centralizer scan.
    pub fn new(family: Family, n: usize) -> Result<Arc<Self>> {
        let min_n = if family == Family::Sp { 1 } else { 2 };
        if n < min_n || (family == Family::So && n < 3) {
            return Err(Error::InvalidParameters(format!(
                "{family}({n}) is not a supported compact algebra"
            )));
        }
        let raw = basis::build(family, n);
        let gram: Vec<f64> = raw
            .matrices
            .iter()
            .map(|b| -(b * b).trace().re)
            .collect();
        let norms = gram.iter().map(|g| g.sqrt()).collect();
        let mut spec = AlgebraSpec {
            family,
            n,
            basis: raw.matrices,
            gram,
            norms,
            cartan: raw.cartan,
            rank: family.closed_form_rank(n),
        };
        spec.rank = rank_of_algebra(&spec)?;
        Ok(Arc::new(spec))
    }

    pub fn su(n: usize) -> Result<Arc<Self>> {
        Self::new(Family::Su, n)
    }

    pub fn so(n: usize) -> Result<Arc<Self>> {
        Self::new(Family::So, n)
    }

    pub fn sp(n: usize) -> Result<Arc<Self>> {
        Self::new(Family::Sp, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> String {
        format!("{}({})", self.family, self.n)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.family.matrix_size(self.n)
    }

    pub fn basis(&self) -> &[CMat] {
        &self.basis
    }

    /// Diagonal of the Gram matrix.
    pub fn gram(&self) -> &[f64] {
        &self.gram
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    /// Indices of the basis vectors spanning the standard Cartan subalgebra
    /// (diagonal for su and sp, 2x2 rotation blocks for so).
    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    pub fn default_degrees(&self) -> Vec<usize> {
        self.family.default_degrees(self.n)
    }

    pub fn same_as(&self, other: &AlgebraSpec) -> bool {
        self.family == other.family && self.n == other.n
    }

    /// Residual of the defining relations (skew-Hermitian, traceless,
    /// symplectic) for a matrix.
    pub fn algebra_defect(&self, x: &CMat) -> f64 {
        basis::algebra_defect(self.family, x)
    }

    pub fn gram_matrix(&self) -> DMatrix<f64> {
        basis::gram(&self.basis)
    }

    /// Worst residual of re-expanding `[b_i, b_j]` in the basis.
    pub fn closure_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let c = linalg::commutator(&self.basis[i], &self.basis[j]);
                let back = self.matrix_from_coords(&self.project_coords(&c));
                worst = worst.max(linalg::cnorm(&(c - back)));
            }
        }
        worst
    }

    pub(crate) fn project_coords(&self, m: &CMat) -> DVector<f64> {
        DVector::from_iterator(
            self.dim(),
            self.basis
                .iter()
                .zip(&self.gram)
                .map(|(b, g)| -trace_product(m, b).re / g),
        )
    }

    pub(crate) fn matrix_from_coords(&self, coords: &DVector<f64>) -> CMat {
        let s = self.matrix_size();
        let mut m = CMat::zeros(s, s);
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0.0 {
                m += b * C64::from(*c);
            }
        }
        m
    }

    pub(crate) fn to_normalized(&self, coords: &DVector<f64>) -> DVector<f64> {
        coords.component_mul(&DVector::from_column_slice(&self.norms))
    }

    pub(crate) fn denormalize(&self, v: &DVector<f64>) -> DVector<f64> {
        v.component_div(&DVector::from_column_slice(&self.norms))
    }
}

/// `tr(AB)` without forming the product.
pub(crate) fn trace_product(a: &CMat, b: &CMat) -> C64 {
    let n = a.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

fn check_same(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::SpecMismatch {
            left: a.name(),
            right: b.name(),
        })
    }
}

/// An element of a compact matrix Lie algebra.
#[derive(Clone)]
pub struct AlgebraElement {
    spec: Arc<AlgebraSpec>,
    coords: DVector<f64>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.spec.name(), self.coords.as_slice())
    }
}

impl AlgebraElement {
    pub fn new(spec: &Arc<AlgebraSpec>, coords: DVector<f64>) -> Result<Self> {
        if coords.len() != spec.dim() {
            return Err(Error::InvalidParameters(format!(
                "expected {} coordinates for {}, got {}",
                spec.dim(),
                spec.name(),
                coords.len()
            )));
        }
        Ok(Self {
            spec: spec.clone(),
            coords,
        })
    }

    pub fn from_slice(spec: &Arc<AlgebraSpec>, coords: &[f64]) -> Result<Self> {
        Self::new(spec, DVector::from_column_slice(coords))
    }

    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        Self {
            spec: spec.clone(),
            coords: DVector::zeros(spec.dim()),
        }
    }

    /// The `i`-th basis element.
    pub fn basis(spec: &Arc<AlgebraSpec>, i: usize) -> Self {
        let mut coords = DVector::zeros(spec.dim());
        coords[i] = 1.0;
        Self {
            spec: spec.clone(),
            coords,
        }
    }

    /// Projects a matrix onto the basis, rejecting matrices outside the
    /// algebra.
    pub fn from_matrix(spec: &Arc<AlgebraSpec>, m: &CMat) -> Result<Self> {
        let coords = spec.project_coords(m);
        let back = spec.matrix_from_coords(&coords);
        let residual = linalg::cnorm(&(m - back));
        if residual > 1e-10 * linalg::cnorm(m).max(1.0) {
            return Err(Error::NotInAlgebra {
                algebra: spec.name(),
                residual,
            });
        }
        Ok(Self {
            spec: spec.clone(),
            coords,
        })
    }

    /// Orthogonal projection of an arbitrary complex matrix onto the algebra.
    pub fn project(spec: &Arc<AlgebraSpec>, m: &CMat) -> Self {
        Self {
            spec: spec.clone(),
            coords: spec.project_coords(m),
        }
    }

    /// Element of the standard Cartan subalgebra from its diagonal data:
    /// `i diag(values)` for su(n) (values summing to zero, length n),
    /// `i diag(h, -h)` for sp(n) (length n), and the sum of
    /// `values[j]` times the j-th 2x2 rotation generator for so(n).
    pub fn cartan(spec: &Arc<AlgebraSpec>, values: &[f64]) -> Result<Self> {
        let n = spec.n();
        let s = spec.matrix_size();
        let expected = match spec.family() {
            Family::Su | Family::Sp => n,
            Family::So => n / 2,
        };
        if values.len() != expected {
            return Err(Error::InvalidParameters(format!(
                "{} Cartan data needs {expected} values, got {}",
                spec.name(),
                values.len()
            )));
        }
        let mut m = CMat::zeros(s, s);
        match spec.family() {
            Family::Su => {
                for (j, v) in values.iter().enumerate() {
                    m[(j, j)] = C64::new(0.0, *v);
                }
            }
            Family::Sp => {
                for (j, v) in values.iter().enumerate() {
                    m[(j, j)] = C64::new(0.0, *v);
                    m[(n + j, n + j)] = C64::new(0.0, -*v);
                }
            }
            Family::So => {
                for (j, v) in values.iter().enumerate() {
                    m[(2 * j, 2 * j + 1)] = C64::from(*v);
                    m[(2 * j + 1, 2 * j)] = C64::from(-*v);
                }
            }
        }
        Self::from_matrix(spec, &m)
    }

    /// Gaussian coordinates in the fixed basis.
    pub fn random<R: Rng + ?Sized>(spec: &Arc<AlgebraSpec>, rng: &mut R) -> Self {
        Self {
            spec: spec.clone(),
            coords: sampling::gaussian_vector(rng, spec.dim()),
        }
    }

    pub(crate) fn denormalize(spec: &Arc<AlgebraSpec>, v: &DVector<f64>) -> Self {
        Self {
            spec: spec.clone(),
            coords: spec.denormalize(v),
        }
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    /// Coordinates in the orthonormal rescaling of the basis.
    pub fn normalized(&self) -> DVector<f64> {
        self.spec.to_normalized(&self.coords)
    }

    pub fn matrix(&self) -> CMat {
        self.spec.matrix_from_coords(&self.coords)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: &self.coords * s,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0.0)
    }

    /// `[X, Y] = XY - YX`, re-expanded in the basis.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        check_same(&self.spec, &other.spec)?;
        Ok(self.bracket_unchecked(other))
    }

    pub(crate) fn bracket_unchecked(&self, other: &Self) -> Self {
        let c = linalg::commutator(&self.matrix(), &other.matrix());
        Self::project(&self.spec, &c)
    }

    /// Invariant inner product `-Re tr(XY)`.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        check_same(&self.spec, &other.spec)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .zip(&self.spec.gram)
            .map(|((a, b), g)| a * b * g)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner_unchecked(self).sqrt()
    }

    /// Matrix of `ad_X` in normalized coordinates.
    pub fn ad_matrix(&self) -> DMatrix<f64> {
        let spec = &self.spec;
        let x = self.matrix();
        let d = spec.dim();
        let mut ad = DMatrix::zeros(d, d);
        for j in 0..d {
            let bj = &spec.basis[j] * C64::from(1.0 / spec.norms[j]);
            let c = linalg::commutator(&x, &bj);
            let col = spec.to_normalized(&spec.project_coords(&c));
            ad.set_column(j, &col);
        }
        ad
    }

    /// Orthonormal basis of `{ eta in within : [self, eta] = 0 }`.
    pub fn centralizer(&self, within: Option<&Subspace>, policy: RankPolicy) -> Subspace {
        let w = match within {
            Some(s) => s.matrix().clone(),
            None => DMatrix::identity(self.spec.dim(), self.spec.dim()),
        };
        if self.is_zero() {
            return Subspace::from_orthonormal(&self.spec, w);
        }
        let (null, _) = linalg::null_space(&(self.ad_matrix() * &w), policy);
        Subspace::from_orthonormal(&self.spec, w * null)
    }

    pub fn centralizer_dim(&self, within: Option<&Subspace>, policy: RankPolicy) -> usize {
        self.centralizer(within, policy).dim()
    }

    /// Regular iff the centralizer has the dimension of the rank.
    pub fn is_regular(&self, policy: RankPolicy) -> bool {
        self.centralizer_dim(None, policy) == self.spec.rank
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(self.spec.same_as(&rhs.spec), "algebra mismatch in add");
        AlgebraElement {
            spec: self.spec.clone(),
            coords: &self.coords + &rhs.coords,
        }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(self.spec.same_as(&rhs.spec), "algebra mismatch in sub");
        AlgebraElement {
            spec: self.spec.clone(),
            coords: &self.coords - &rhs.coords,
        }
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul<f64> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, s: f64) -> AlgebraElement {
        self.scale(s)
    }
}

impl Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, s: f64) -> AlgebraElement {
        self.scale(s)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-1.0)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-1.0)
    }
}

/// Minimum centralizer dimension over a seeded random scan, checked against
/// the closed-form rank of the family.
pub fn rank_of_algebra(spec: &AlgebraSpec) -> Result<usize> {
    // a throwaway Arc so sampled elements can reference the algebra
    let shared = Arc::new(AlgebraSpec {
        family: spec.family,
        n: spec.n,
        basis: spec.basis.clone(),
        gram: spec.gram.clone(),
        norms: spec.norms.clone(),
        cartan: spec.cartan.clone(),
        rank: spec.family.closed_form_rank(spec.n),
    });
    let mut rng = sampling::rng(RANK_SCAN_SEED);
    let sampled = (0..RANK_SCAN_SAMPLES)
        .map(|_| AlgebraElement::random(&shared, &mut rng).centralizer_dim(None, RankPolicy::default()))
        .min()
        .unwrap_or(0);
    let closed_form = spec.family.closed_form_rank(spec.n);
    if sampled != closed_form {
        return Err(Error::RankMismatch {
            algebra: spec.name(),
            sampled,
            closed_form,
        });
    }
    Ok(sampled)
}

#[cfg(test)]
mod tests;
