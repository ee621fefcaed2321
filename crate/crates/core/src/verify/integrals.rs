//! Scalar functions on `T*G` with analytic differentials.
//!
//! A differential is returned as the pair `(D_g F, dF/dm)` of algebra
//! elements: the left-trivialized group derivative and the fiber derivative.

use std::fmt;
use std::sync::Arc;

use crate::actions::{moment_component, Pair};
use crate::dynamics::CotangentState;
use crate::error::{Error, Result};
use crate::liealg::{AlgebraElement, AlgebraSpec, GroupElement};
use crate::metrics::{MetricSide, MetricSpec};
use crate::sampling;

/// Which momentum a function reads: body `m` or spatial `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

type ScalarFn = dyn Fn(&CotangentState) -> f64 + Send + Sync;

#[derive(Clone)]
pub enum Integral {
    Constant(f64),
    /// Coordinate `m_i` in the fixed basis.
    MCoord(usize),
    /// Coordinate `n_i` in the fixed basis.
    NCoord(usize),
    /// `p_k(m)`
    LeftPoly(usize),
    /// `p_k(n)`
    RightPoly(usize),
    /// `<n, a1> - <m, a2>`
    Moment(Pair),
    /// `p_k(m + lambda a)` or `p_k(n + lambda a)`
    Shift {
        side: Side,
        degree: usize,
        lambda: f64,
        a: AlgebraElement,
    },
    Hamiltonian(Arc<MetricSpec>),
    /// Arbitrary function; differentiated by central differences.
    Custom { name: String, f: Arc<ScalarFn> },
}

impl fmt::Debug for Integral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Step for central differences of custom functions.
pub const FD_STEP: f64 = 1e-5;

impl Integral {
    pub fn custom(name: impl Into<String>, f: impl Fn(&CotangentState) -> f64 + Send + Sync + 'static) -> Self {
        Integral::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Integral::Constant(c) => format!("const({c})"),
            Integral::MCoord(i) => format!("m_{i}"),
            Integral::NCoord(i) => format!("n_{i}"),
            Integral::LeftPoly(k) => format!("p{k}(m)"),
            Integral::RightPoly(k) => format!("p{k}(n)"),
            Integral::Moment(_) => "moment".into(),
            Integral::Shift { side, degree, lambda, .. } => {
                let v = if *side == Side::Left { "m" } else { "n" };
                format!("p{degree}({v}+{lambda}a)")
            }
            Integral::Hamiltonian(_) => "H".into(),
            Integral::Custom { name, .. } => name.clone(),
        }
    }

    pub fn value(&self, x: &CotangentState) -> Result<f64> {
        Ok(match self {
            Integral::Constant(c) => *c,
            Integral::MCoord(i) => x.m().coords()[*i],
            Integral::NCoord(i) => x.n().coords()[*i],
            Integral::LeftPoly(k) => x.m().invariant_poly(*k)?,
            Integral::RightPoly(k) => x.n().invariant_poly(*k)?,
            Integral::Moment(p) => moment_component(p, x),
            Integral::Shift { side, degree, lambda, a } => {
                let base = if *side == Side::Left { x.m() } else { x.n() };
                (base + &a.scale(*lambda)).invariant_poly(*degree)?
            }
            Integral::Hamiltonian(h) => h.hamiltonian(x),
            Integral::Custom { f, .. } => f(x),
        })
    }

    /// `(D_g F, dF/dm)` at `x`.
    pub fn differential(&self, x: &CotangentState) -> Result<(AlgebraElement, AlgebraElement)> {
        let spec = x.m().spec();
        let zero = || AlgebraElement::zero(spec);
        // For F = f(n): dF/dm = Ad_{g^-1} grad f(n), D_g F = [m, dF/dm].
        let through_n = |grad_n: AlgebraElement| {
            let delta = x.g().ad_inv_unchecked(&grad_n);
            (x.m().bracket_unchecked(&delta), delta)
        };
        Ok(match self {
            Integral::Constant(_) => (zero(), zero()),
            Integral::MCoord(i) => (zero(), dual_basis(spec, *i)),
            Integral::NCoord(i) => through_n(dual_basis(spec, *i)),
            Integral::LeftPoly(k) => (zero(), x.m().grad_invariant_poly(*k)?),
            Integral::RightPoly(k) => through_n(x.n().grad_invariant_poly(*k)?),
            Integral::Moment((a1, a2)) => {
                let r = x.g().ad_inv_unchecked(a1);
                (x.m().bracket_unchecked(&r), r - a2.clone())
            }
            Integral::Shift { side, degree, lambda, a } => match side {
                Side::Left => (zero(), (x.m() + &a.scale(*lambda)).grad_invariant_poly(*degree)?),
                Side::Right => through_n((x.n() + &a.scale(*lambda)).grad_invariant_poly(*degree)?),
            },
            Integral::Hamiltonian(h) => {
                let r = h.right_velocity(x);
                let dg = match h.right() {
                    MetricSide::None => zero(),
                    _ => x.m().bracket_unchecked(&r),
                };
                (dg, h.velocity(x))
            }
            Integral::Custom { f, .. } => numerical_differential(|y| Ok(f(y)), x, FD_STEP)?,
        })
    }
}

/// Element `b_i / <b_i, b_i>`, the gradient of the `i`-th coordinate.
fn dual_basis(spec: &Arc<AlgebraSpec>, i: usize) -> AlgebraElement {
    AlgebraElement::basis(spec, i).scale(1.0 / spec.gram()[i])
}

/// Central-difference differential: `g -> g exp(eps e_i)` and
/// `m -> m + eps e_i` over the orthonormal basis `e_i`.
pub fn numerical_differential<F>(f: F, x: &CotangentState, h: f64) -> Result<(AlgebraElement, AlgebraElement)>
where
    F: Fn(&CotangentState) -> Result<f64>,
{
    let spec = x.m().spec();
    let d = spec.dim();
    let mut dg = nalgebra::DVector::zeros(d);
    let mut dm = nalgebra::DVector::zeros(d);
    for i in 0..d {
        let e = unit(spec, i);
        let gp = x.g().mul(&GroupElement::exp(&e, h)?);
        let gm = x.g().mul(&GroupElement::exp(&e, -h)?);
        let fp = f(&CotangentState::new(gp, x.m().clone())?)?;
        let fm = f(&CotangentState::new(gm, x.m().clone())?)?;
        dg[i] = (fp - fm) / (2.0 * h);
        let fp = f(&x.with_momentum(x.m() + &e.scale(h)))?;
        let fm = f(&x.with_momentum(x.m() - &e.scale(h)))?;
        dm[i] = (fp - fm) / (2.0 * h);
    }
    Ok((
        AlgebraElement::denormalize(spec, &dg),
        AlgebraElement::denormalize(spec, &dm),
    ))
}

/// Unit-norm basis element `b_i / |b_i|`.
fn unit(spec: &Arc<AlgebraSpec>, i: usize) -> AlgebraElement {
    AlgebraElement::basis(spec, i).scale(1.0 / spec.norms()[i])
}

/// A named list of functions on `T*G`.
#[derive(Clone, Debug)]
pub struct IntegralFamily {
    pub name: String,
    pub members: Vec<Integral>,
}

/// Default argument-shift grid.
pub const DEFAULT_LAMBDAS: [f64; 3] = [0.1, 0.5, 1.0];

impl IntegralFamily {
    pub fn new(name: impl Into<String>, members: Vec<Integral>) -> Self {
        Self {
            name: name.into(),
            members,
        }
    }

    /// `{m_i} + {n_i}`: left and right translations of linear functions.
    pub fn coordinates(spec: &AlgebraSpec) -> Self {
        let d = spec.dim();
        let mut members: Vec<_> = (0..d).map(Integral::MCoord).collect();
        members.extend((0..d).map(Integral::NCoord));
        Self::new("coordinates", members)
    }

    pub fn left_coordinates(spec: &AlgebraSpec) -> Self {
        Self::new("left_coordinates", (0..spec.dim()).map(Integral::MCoord).collect())
    }

    /// `p_k(m)` and `p_k(n)` over the default degrees.
    pub fn invariant_polynomials(spec: &AlgebraSpec) -> Self {
        let degrees = spec.default_degrees();
        let mut members: Vec<_> = degrees.iter().map(|&k| Integral::LeftPoly(k)).collect();
        members.extend(degrees.iter().map(|&k| Integral::RightPoly(k)));
        Self::new("invariant_polynomials", members)
    }

    /// Integrals adapted to a metric: each scalar side contributes the
    /// coordinates of its momentum, each sectional side the shifted
    /// polynomials `p_k(. + lambda a)` over `lambdas`.
    pub fn for_metric(spec: &Arc<AlgebraSpec>, metric: &MetricSpec, lambdas: &[f64]) -> Result<Self> {
        let degrees = spec.default_degrees();
        let sectional = |side: &MetricSide| match side {
            MetricSide::Sectional(op) => Some(op.a().clone()),
            _ => None,
        };
        let (left, right) = (sectional(metric.left()), sectional(metric.right()));
        if lambdas.is_empty() && (left.is_some() || right.is_some()) {
            return Err(Error::InvalidParameters("shift grid is empty".into()));
        }
        let mut members = Vec::new();
        let mut parts = Vec::new();
        match left {
            Some(a) => {
                parts.push("shift_m");
                push_shifts(&mut members, Side::Left, &degrees, lambdas, &a);
            }
            None => {
                parts.push("m");
                members.extend((0..spec.dim()).map(Integral::MCoord));
            }
        }
        match right {
            Some(a) => {
                parts.push("shift_n");
                push_shifts(&mut members, Side::Right, &degrees, lambdas, &a);
            }
            None => {
                parts.push("n");
                members.extend((0..spec.dim()).map(Integral::NCoord));
            }
        }
        Ok(Self::new(parts.join("+"), members))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Worst relative mismatch between analytic and central-difference
    /// differentials over `samples` random states.
    pub fn gradient_check(&self, spec: &Arc<AlgebraSpec>, seed: u64, samples: usize) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for s in 0..samples {
            let mut rng = sampling::stream(seed, s as u64);
            let g = GroupElement::random(spec, &mut rng);
            let m = AlgebraElement::random(spec, &mut rng);
            let x = CotangentState::new(g, m)?;
            for f in &self.members {
                let (ag, am) = f.differential(&x)?;
                let (ng, nm) = numerical_differential(|y| f.value(y), &x, FD_STEP)?;
                let scale = ag.norm().max(am.norm()).max(1.0);
                worst = worst.max((ag - ng).norm() / scale).max((am - nm).norm() / scale);
            }
        }
        Ok(worst)
    }
}

fn push_shifts(members: &mut Vec<Integral>, side: Side, degrees: &[usize], lambdas: &[f64], a: &AlgebraElement) {
    for &k in degrees {
        for &lambda in lambdas {
            members.push(Integral::Shift {
                side,
                degree: k,
                lambda,
                a: a.clone(),
            });
        }
    }
}
