use std::fmt;
use std::sync::Arc;

use nalgebra::linalg::SymmetricEigen;
use nalgebra::DVector;
use rand::Rng;

use super::{basis, AlgebraElement, AlgebraSpec, Family};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, C64};

/// Tolerance for unitarity and family constraints of group elements.
pub const DEFAULT_STRUCTURE_TOL: f64 = 1e-10;

/// A unitary (orthogonal, compact symplectic) matrix in the group of a spec.
#[derive(Clone)]
pub struct GroupElement {
    spec: Arc<AlgebraSpec>,
    matrix: CMat,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement<{}>{}", self.spec.name(), self.matrix)
    }
}

/// Eigen-decomposition of the Hermitian matrix `iX` for skew-Hermitian `X`.
pub(crate) fn hermitian_eigen(x: &CMat) -> Result<SymmetricEigen<C64, nalgebra::Dyn>> {
    let h = x * C64::new(0.0, 1.0);
    let h = (&h + h.adjoint()) * C64::from(0.5);
    SymmetricEigen::try_new(h, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::NumericalFailure("Hermitian eigensolver did not converge".into()))
}

impl GroupElement {
    pub fn identity(spec: &Arc<AlgebraSpec>) -> Self {
        let s = spec.matrix_size();
        Self {
            spec: spec.clone(),
            matrix: CMat::identity(s, s),
        }
    }

    /// Validates unitarity and the family constraint to `DEFAULT_STRUCTURE_TOL`.
    pub fn new(spec: &Arc<AlgebraSpec>, matrix: CMat) -> Result<Self> {
        Self::with_tolerance(spec, matrix, DEFAULT_STRUCTURE_TOL)
    }

    pub fn with_tolerance(spec: &Arc<AlgebraSpec>, matrix: CMat, tol: f64) -> Result<Self> {
        let s = spec.matrix_size();
        if matrix.nrows() != s || matrix.ncols() != s {
            return Err(Error::NotInGroup {
                group: spec.name(),
                reason: format!("expected {s}x{s} matrix"),
            });
        }
        let g = Self {
            spec: spec.clone(),
            matrix,
        };
        let u = g.unitarity_defect();
        if u > tol {
            return Err(Error::NotInGroup {
                group: spec.name(),
                reason: format!("unitarity defect {u:.3e}"),
            });
        }
        let f = g.family_defect();
        if f > tol {
            return Err(Error::NotInGroup {
                group: spec.name(),
                reason: format!("family constraint defect {f:.3e}"),
            });
        }
        Ok(g)
    }

    #[cfg(test)]
    pub(crate) fn from_matrix_unchecked(spec: &Arc<AlgebraSpec>, matrix: CMat) -> Self {
        Self {
            spec: spec.clone(),
            matrix,
        }
    }

    /// `exp(tX)` via the eigen-decomposition of the normal matrix `X`.
    pub fn exp(x: &AlgebraElement, t: f64) -> Result<Self> {
        let spec = x.spec();
        if t == 0.0 || x.is_zero() {
            return Ok(Self::identity(spec));
        }
        let eig = hermitian_eigen(&x.matrix())?;
        // X = -i V diag(mu) V^*, so exp(tX) = V diag(exp(-i t mu)) V^*
        let phases = DVector::from_iterator(
            eig.eigenvalues.len(),
            eig.eigenvalues.iter().map(|mu| C64::from_polar(1.0, -t * mu)),
        );
        let v = &eig.eigenvectors;
        let mut scaled = v.clone();
        for (j, p) in phases.iter().enumerate() {
            scaled.column_mut(j).iter_mut().for_each(|z| *z *= *p);
        }
        Ok(Self {
            spec: spec.clone(),
            matrix: scaled * v.adjoint(),
        })
    }

    /// Haar-ish random element: exponential of a Gaussian algebra element.
    pub fn random<R: Rng + ?Sized>(spec: &Arc<AlgebraSpec>, rng: &mut R) -> Self {
        let x = AlgebraElement::random(spec, rng).scale(std::f64::consts::PI);
        Self::exp(&x, 1.0).expect("eigensolver on a small skew-Hermitian matrix")
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            spec: self.spec.clone(),
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            spec: self.spec.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    /// `Ad_g X = g X g^{-1}`.
    pub fn ad(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.ad_unchecked(x))
    }

    pub(crate) fn ad_unchecked(&self, x: &AlgebraElement) -> AlgebraElement {
        let m = &self.matrix * x.matrix() * self.matrix.adjoint();
        AlgebraElement::project(&self.spec, &m)
    }

    /// `Ad_{g^{-1}} X = g^{-1} X g`.
    pub fn ad_inv(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.ad_inv_unchecked(x))
    }

    pub(crate) fn ad_inv_unchecked(&self, x: &AlgebraElement) -> AlgebraElement {
        let m = self.matrix.adjoint() * x.matrix() * &self.matrix;
        AlgebraElement::project(&self.spec, &m)
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if self.spec.same_as(x.spec()) {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.spec.name(),
                right: x.spec().name(),
            })
        }
    }

    /// `||g^* g - I||_F`
    pub fn unitarity_defect(&self) -> f64 {
        let s = self.matrix.nrows();
        linalg::cnorm(&(self.matrix.adjoint() * &self.matrix - CMat::identity(s, s)))
    }

    /// `|det g - 1|` for SU and SO, `||g^T J g - J||_F` for Sp.
    pub fn family_defect(&self) -> f64 {
        match self.spec.family() {
            Family::Su => (self.matrix.determinant() - C64::from(1.0)).norm(),
            Family::So => {
                let imag = self.matrix.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
                imag + (self.matrix.determinant() - C64::from(1.0)).norm()
            }
            Family::Sp => {
                let j = basis::symplectic_form(self.spec.n());
                linalg::cnorm(&(self.matrix.transpose() * &j * &self.matrix - j))
            }
        }
    }

    /// Frobenius distance between the matrices.
    pub fn distance(&self, other: &Self) -> f64 {
        linalg::cnorm(&(&self.matrix - &other.matrix))
    }

    /// Nearest group element: the matrix is first symmetrized into the
    /// real (SO) or quaternionic (Sp) matrices, then replaced by its polar
    /// factor; for SU the determinant phase is removed.
    pub fn reproject(&self) -> Result<Self> {
        let m = match self.spec.family() {
            Family::Su => self.matrix.clone(),
            Family::So => self.matrix.map(|z| C64::new(z.re, 0.0)),
            Family::Sp => {
                let j = basis::symplectic_form(self.spec.n());
                (&self.matrix - &j * self.matrix.map(|z| z.conj()) * &j) * C64::from(0.5)
            }
        };
        let svd = m.svd(true, true);
        let (u, v_t) = match (svd.u, svd.v_t) {
            (Some(u), Some(v_t)) => (u, v_t),
            _ => return Err(Error::NumericalFailure("polar decomposition failed".into())),
        };
        let mut q = u * v_t;
        match self.spec.family() {
            Family::Su => {
                let det = q.determinant();
                let s = q.nrows() as f64;
                q *= C64::from_polar(1.0, -det.arg() / s);
            }
            Family::So => q = q.map(|z| C64::new(z.re, 0.0)),
            Family::Sp => {}
        }
        Ok(Self {
            spec: self.spec.clone(),
            matrix: q,
        })
    }
}
