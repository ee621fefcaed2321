//! Real bases for su(n), so(n) and sp(n) in their defining complex
//! representations. Every basis matrix has `<X, X> = -Re tr(X X) = 2`, and
//! distinct basis matrices are orthogonal.

use nalgebra::DMatrix;

use super::Family;
use crate::linalg::{CMat, C64};

const I: C64 = C64::new(0.0, 1.0);
const ONE: C64 = C64::new(1.0, 0.0);

fn unit(n: usize, j: usize, k: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(j, k)] = ONE;
    m
}

/// Basis matrices together with the indices spanning the standard Cartan
/// subalgebra.
pub(crate) struct RawBasis {
    pub matrices: Vec<CMat>,
    pub cartan: Vec<usize>,
}

pub(crate) fn build(family: Family, n: usize) -> RawBasis {
    match family {
        Family::Su => su(n),
        Family::So => so(n),
        Family::Sp => sp(n),
    }
}

fn su(n: usize) -> RawBasis {
    let mut matrices = Vec::with_capacity(n * n - 1);
    for j in 0..n {
        for k in (j + 1)..n {
            matrices.push(unit(n, j, k) - unit(n, k, j));
            matrices.push((unit(n, j, k) + unit(n, k, j)) * I);
        }
    }
    let mut cartan = Vec::with_capacity(n - 1);
    for l in 1..n {
        let scale = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut h = CMat::zeros(n, n);
        for j in 0..l {
            h[(j, j)] = I * scale;
        }
        h[(l, l)] = I * (-(l as f64) * scale);
        cartan.push(matrices.len());
        matrices.push(h);
    }
    RawBasis { matrices, cartan }
}

fn so(n: usize) -> RawBasis {
    let mut matrices = Vec::with_capacity(n * (n - 1) / 2);
    let mut cartan = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            if j % 2 == 0 && k == j + 1 {
                cartan.push(matrices.len());
            }
            matrices.push(unit(n, j, k) - unit(n, k, j));
        }
    }
    RawBasis { matrices, cartan }
}

/// `[[A, 0], [0, conj A]]`
fn embed_a(a: &CMat) -> CMat {
    let n = a.nrows();
    let mut m = CMat::zeros(2 * n, 2 * n);
    m.view_mut((0, 0), (n, n)).copy_from(a);
    m.view_mut((n, n), (n, n)).copy_from(&a.map(|z| z.conj()));
    m
}

/// `[[0, B], [-conj B, 0]]` for complex symmetric `B`.
fn embed_b(b: &CMat) -> CMat {
    let n = b.nrows();
    let mut m = CMat::zeros(2 * n, 2 * n);
    m.view_mut((0, n), (n, n)).copy_from(b);
    m.view_mut((n, 0), (n, n)).copy_from(&b.map(|z| -z.conj()));
    m
}

fn sp(n: usize) -> RawBasis {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut matrices = Vec::with_capacity(2 * n * n + n);
    for j in 0..n {
        for k in (j + 1)..n {
            matrices.push(embed_a(&(unit(n, j, k) - unit(n, k, j))) * C64::from(r));
            matrices.push(embed_a(&((unit(n, j, k) + unit(n, k, j)) * I)) * C64::from(r));
        }
    }
    let mut cartan = Vec::with_capacity(n);
    for j in 0..n {
        cartan.push(matrices.len());
        matrices.push(embed_a(&(unit(n, j, j) * I)));
    }
    for j in 0..n {
        for k in j..n {
            let (sym, scale) = if j == k {
                (unit(n, j, j), 1.0)
            } else {
                (unit(n, j, k) + unit(n, k, j), r)
            };
            matrices.push(embed_b(&sym) * C64::from(scale));
            matrices.push(embed_b(&(sym * I)) * C64::from(scale));
        }
    }
    RawBasis { matrices, cartan }
}

/// The standard symplectic form `J = [[0, I], [-I, 0]]` of size `2n`.
pub fn symplectic_form(n: usize) -> CMat {
    let mut j = CMat::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = ONE;
        j[(n + k, k)] = -ONE;
    }
    j
}

/// Residual of the defining relations of `family` for a candidate matrix.
pub(crate) fn algebra_defect(family: Family, x: &CMat) -> f64 {
    let skew = crate::linalg::cnorm(&(x + x.adjoint()));
    let extra = match family {
        Family::Su => x.trace().norm(),
        Family::So => x.iter().map(|z| z.im.abs()).fold(0.0, f64::max),
        Family::Sp => {
            let j = symplectic_form(x.nrows() / 2);
            crate::linalg::cnorm(&(x.transpose() * &j + &j * x))
        }
    };
    skew + extra
}

/// Gram matrix of a list of basis matrices under `-Re tr(XY)`.
pub(crate) fn gram(matrices: &[CMat]) -> DMatrix<f64> {
    let d = matrices.len();
    DMatrix::from_fn(d, d, |i, j| -(&matrices[i] * &matrices[j]).trace().re)
}
