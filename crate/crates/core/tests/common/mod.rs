//! Independent oracle: canonical coordinates `(q, p)` on `T*G` near a base
//! point `g0`, with `g(q) = g0 exp(sum q_i e_i)` over the orthonormal basis.
//! Brackets and flows are taken from the textbook canonical formulas by
//! central differences; nothing here uses the library's own bracket.

#![allow(dead_code)]

use std::sync::Arc;

use geoflow_core::{AlgebraElement, AlgebraSpec, CotangentState, GroupElement};
use nalgebra::{DMatrix, DVector};

pub const H: f64 = 1e-5;

pub type Func<'a> = &'a dyn Fn(&CotangentState) -> f64;

pub struct Chart {
    pub spec: Arc<AlgebraSpec>,
    pub g0: GroupElement,
    /// Orthonormal basis `e_i`.
    pub units: Vec<AlgebraElement>,
}

impl Chart {
    pub fn new(g0: &GroupElement) -> Self {
        let spec = g0.spec().clone();
        let units = (0..spec.dim())
            .map(|i| AlgebraElement::basis(&spec, i).scale(1.0 / spec.norms()[i]))
            .collect();
        Self {
            spec,
            g0: g0.clone(),
            units,
        }
    }

    fn algebra(&self, v: &DVector<f64>) -> AlgebraElement {
        let mut x = AlgebraElement::zero(&self.spec);
        for (c, e) in v.iter().zip(&self.units) {
            x = x + e.scale(*c);
        }
        x
    }

    fn coords(&self, x: &AlgebraElement) -> DVector<f64> {
        DVector::from_iterator(self.units.len(), self.units.iter().map(|e| x.inner(e).unwrap()))
    }

    /// `g0^{-1} d/dq_i g(q)` = `sum_k (-1)^k / (k+1)! ad_X^k e_i`.
    fn frame(&self, q: &DVector<f64>) -> DMatrix<f64> {
        let x = self.algebra(q);
        let d = self.units.len();
        let mut cols = Vec::with_capacity(d);
        for e in &self.units {
            let mut term = e.clone();
            let mut sum = e.clone();
            let mut fact = 1.0;
            for k in 1..25 {
                term = x.bracket(&term).unwrap();
                fact *= (k + 1) as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sum = sum + term.scale(sign / fact);
            }
            cols.push(self.coords(&sum));
        }
        DMatrix::from_columns(&cols)
    }

    /// State at chart point `(q, p)`.
    pub fn state(&self, q: &DVector<f64>, p: &DVector<f64>) -> CotangentState {
        let g = self.g0.mul(&GroupElement::exp(&self.algebra(q), 1.0).unwrap());
        // p_i = <m, L_i>  =>  L^T m = p
        let l = self.frame(q);
        let m = l.transpose().lu().solve(p).unwrap();
        CotangentState::new(g, self.algebra(&m)).unwrap()
    }

    /// Chart coordinates of a state based at `g0` itself.
    pub fn momenta_at_origin(&self, x: &CotangentState) -> DVector<f64> {
        self.coords(x.m())
    }

    /// `(dF/dq, dF/dp)` at `q = 0`.
    pub fn gradient(&self, f: Func, p0: &DVector<f64>) -> (DVector<f64>, DVector<f64>) {
        let d = self.units.len();
        let q0 = DVector::zeros(d);
        let mut gq = DVector::zeros(d);
        let mut gp = DVector::zeros(d);
        for i in 0..d {
            let mut qp = q0.clone();
            qp[i] += H;
            let mut qm = q0.clone();
            qm[i] -= H;
            gq[i] = (f(&self.state(&qp, p0)) - f(&self.state(&qm, p0))) / (2.0 * H);
            let mut pp = p0.clone();
            pp[i] += H;
            let mut pm = p0.clone();
            pm[i] -= H;
            gp[i] = (f(&self.state(&q0, &pp)) - f(&self.state(&q0, &pm))) / (2.0 * H);
        }
        (gq, gp)
    }
}

/// Canonical bracket `sum dF/dq dK/dp - dF/dp dK/dq` at `x`.
pub fn canonical_bracket(f: Func, k: Func, x: &CotangentState) -> f64 {
    let chart = Chart::new(x.g());
    let p0 = chart.momenta_at_origin(x);
    let (fq, fp) = chart.gradient(f, &p0);
    let (kq, kp) = chart.gradient(k, &p0);
    fq.dot(&kp) - fp.dot(&kq)
}

/// Hamiltonian flow of `h` at `x` from Hamilton's equations in the chart:
/// returns the body velocity `g^{-1} g'` and `m'`.
pub fn canonical_field(h: Func, x: &CotangentState) -> (AlgebraElement, AlgebraElement) {
    let chart = Chart::new(x.g());
    let d = chart.units.len();
    let p0 = chart.momenta_at_origin(x);
    let (hq, hp) = chart.gradient(h, &p0);
    // q' = dH/dp, p' = -dH/dq; at q = 0 the frame is the identity.
    let qdot = hp;
    let pdot = -hq;
    let m_of = |q: &DVector<f64>, p: &DVector<f64>| chart.coords(chart.state(q, p).m());
    let zero = DVector::zeros(d);
    let mut mdot = DVector::zeros(d);
    for i in 0..d {
        let mut qp = zero.clone();
        qp[i] += H;
        let mut qm = zero.clone();
        qm[i] -= H;
        let dm_dqi = (m_of(&qp, &p0) - m_of(&qm, &p0)) / (2.0 * H);
        mdot += dm_dqi * qdot[i];
    }
    mdot += &pdot;
    (chart.algebra(&qdot), chart.algebra(&mdot))
}
