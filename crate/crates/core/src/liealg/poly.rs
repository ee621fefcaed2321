//! Invariant polynomials as eigenvalue power sums.
//!
//! For `X` with spectrum `{i lambda_j}`, `p_k(X) = sum_j lambda_j^k =
//! tr((-iX)^k)`, real for every family.

use nalgebra::DMatrix;

use super::{group::hermitian_eigen, trace_product, AlgebraElement};
use crate::error::Result;
use crate::linalg::{self, CMat, RankPolicy, C64};

impl AlgebraElement {
    /// Real numbers `lambda_j` with spectrum `{i lambda_j}`, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        let eig = hermitian_eigen(&self.matrix())?;
        // eigenvalues of iX are -lambda
        let mut lam: Vec<f64> = eig.eigenvalues.iter().map(|mu| -mu).collect();
        lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(lam)
    }

    pub fn invariant_poly(&self, k: usize) -> Result<f64> {
        Ok(self.spectrum()?.iter().map(|l| l.powi(k as i32)).sum())
    }

    /// Gradient of `p_k` with respect to the invariant inner product:
    /// `<grad p_k(X), Y> = k Re[(-i)^k tr(X^{k-1} Y)]`.
    pub fn grad_invariant_poly(&self, k: usize) -> Result<AlgebraElement> {
        let spec = self.spec();
        let x = self.matrix();
        let s = x.nrows();
        let mut power = CMat::identity(s, s);
        for _ in 1..k {
            power = &power * &x;
        }
        if power.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(crate::Error::NumericalFailure("overflow in matrix power".into()));
        }
        let factor = C64::new(0.0, -1.0).powu(k as u32) * (k as f64);
        let coords = spec
            .basis()
            .iter()
            .zip(spec.gram())
            .map(|(b, g)| (factor * trace_product(&power, b)).re / g);
        AlgebraElement::new(spec, nalgebra::DVector::from_iterator(spec.dim(), coords))
    }

    /// Numerical rank of `{grad p_k(X) : k in degrees}`.
    pub fn gradient_rank(&self, degrees: &[usize], policy: RankPolicy) -> Result<usize> {
        if degrees.is_empty() {
            return Ok(0);
        }
        let cols = degrees
            .iter()
            .map(|&k| self.grad_invariant_poly(k).map(|g| g.normalized()))
            .collect::<Result<Vec<_>>>()?;
        Ok(linalg::numerical_rank(&DMatrix::from_columns(&cols), policy))
    }
}
