use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use super::{AlgebraElement, AlgebraSpec};
use crate::error::{Error, Result};
use crate::linalg::{self, RankPolicy};

/// A linear subspace of an algebra, stored as an orthonormal basis in
/// normalized coordinates (one column per basis vector).
#[derive(Clone)]
pub struct Subspace {
    spec: Arc<AlgebraSpec>,
    basis: DMatrix<f64>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace<{}>(dim {})", self.spec.name(), self.dim())
    }
}

impl Subspace {
    pub(crate) fn from_orthonormal(spec: &Arc<AlgebraSpec>, basis: DMatrix<f64>) -> Self {
        debug_assert_eq!(basis.nrows(), spec.dim());
        Self {
            spec: spec.clone(),
            basis,
        }
    }

    pub fn whole(spec: &Arc<AlgebraSpec>) -> Self {
        Self::from_orthonormal(spec, DMatrix::identity(spec.dim(), spec.dim()))
    }

    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        Self::from_orthonormal(spec, DMatrix::zeros(spec.dim(), 0))
    }

    /// Orthonormalized span of a list of elements (rank-revealing).
    pub fn span(spec: &Arc<AlgebraSpec>, elements: &[AlgebraElement], policy: RankPolicy) -> Result<Self> {
        for e in elements {
            if !spec.same_as(e.spec()) {
                return Err(Error::SpecMismatch {
                    left: spec.name(),
                    right: e.spec().name(),
                });
            }
        }
        if elements.is_empty() {
            return Ok(Self::zero(spec));
        }
        let cols: Vec<_> = elements.iter().map(|e| e.normalized()).collect();
        let a = DMatrix::from_columns(&cols);
        Ok(Self::from_orthonormal(spec, linalg::orthonormal_span(&a, policy)))
    }

    /// The standard Cartan subalgebra of the family.
    pub fn cartan(spec: &Arc<AlgebraSpec>) -> Self {
        let d = spec.dim();
        let idx = spec.cartan_indices();
        let mut b = DMatrix::zeros(d, idx.len());
        for (col, &i) in idx.iter().enumerate() {
            b[(i, col)] = 1.0;
        }
        Self::from_orthonormal(spec, b)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Orthonormal basis as normalized-coordinate columns.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn elements(&self) -> Vec<AlgebraElement> {
        self.basis
            .column_iter()
            .map(|c| AlgebraElement::denormalize(&self.spec, &c.into_owned()))
            .collect()
    }

    /// Element with the given coordinates along the orthonormal basis.
    pub fn element(&self, coeffs: &nalgebra::DVector<f64>) -> AlgebraElement {
        AlgebraElement::denormalize(&self.spec, &(&self.basis * coeffs))
    }

    /// Orthogonal projector onto the subspace, in normalized coordinates.
    pub fn projector(&self) -> DMatrix<f64> {
        &self.basis * self.basis.transpose()
    }

    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::denormalize(&self.spec, &(self.projector() * x.normalized()))
    }

    pub fn orthogonal_complement(&self) -> Self {
        let d = self.spec.dim();
        let p = DMatrix::identity(d, d) - self.projector();
        Self::from_orthonormal(&self.spec, linalg::orthonormal_span(&p, RankPolicy::new(1e-8)))
    }

    /// Distance of `x` from the subspace.
    pub fn residual(&self, x: &AlgebraElement) -> f64 {
        let v = x.normalized();
        (&v - self.projector() * &v).norm()
    }

    /// `||B^T B - I||`
    pub fn orthonormality_defect(&self) -> f64 {
        let k = self.dim();
        (self.basis.transpose() * &self.basis - DMatrix::identity(k, k)).norm()
    }

    /// Largest principal angle between two subspaces of equal dimension
    /// (`pi/2` when dimensions differ).
    pub fn max_principal_angle(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return std::f64::consts::FRAC_PI_2;
        }
        if self.dim() == 0 {
            return 0.0;
        }
        let sv = linalg::singular_values(&(self.basis.transpose() * &other.basis));
        let smallest = sv.iter().cloned().fold(1.0_f64, f64::min).clamp(-1.0, 1.0);
        smallest.acos()
    }
}
