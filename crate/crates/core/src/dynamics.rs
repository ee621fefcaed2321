//! Geodesic and Hamiltonian flows on the left-trivialized cotangent bundle.
//!
//! With body momentum `m` and spatial momentum `n = Ad_g m`, the flow of
//! `H = 1/2 <phi_L m, m> + 1/2 <phi_R n, n>` is
//!
//! ```text
//! g' = g Omega,   Omega = phi_L m + Ad_{g^{-1}} phi_R n
//! m' = [m, phi_L m]
//! ```
//!
//! and the spatial momentum follows `n' = [phi_R n, n]`.

use std::io::Write;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::actions::TwoSidedAction;
use crate::error::{Error, Result};
use crate::format::f64_17;
use crate::liealg::{AlgebraElement, GroupElement};
use crate::metrics::{MetricSide, MetricSpec};

/// A point `(g, m)` of `T*G = G x g*`; caches `n = Ad_g m`.
#[derive(Clone, Debug)]
pub struct CotangentState {
    g: GroupElement,
    m: AlgebraElement,
    n: AlgebraElement,
}

impl CotangentState {
    pub fn new(g: GroupElement, m: AlgebraElement) -> Result<Self> {
        let n = g.ad(&m)?;
        Ok(Self { g, m, n })
    }

    pub fn at_identity(m: AlgebraElement) -> Self {
        let g = GroupElement::identity(m.spec());
        Self { n: m.clone(), g, m }
    }

    pub fn g(&self) -> &GroupElement {
        &self.g
    }

    pub fn m(&self) -> &AlgebraElement {
        &self.m
    }

    pub fn n(&self) -> &AlgebraElement {
        &self.n
    }

    /// Same group element, different momentum.
    pub fn with_momentum(&self, m: AlgebraElement) -> Self {
        let n = self.g.ad_unchecked(&m);
        Self {
            g: self.g.clone(),
            m,
            n,
        }
    }

    /// Momentum and group element scaled: `(g, s m)`.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            g: self.g.clone(),
            m: self.m.scale(s),
            n: self.n.scale(s),
        }
    }

    /// `||Ad_g m - n_cached||`
    pub fn cache_defect(&self) -> f64 {
        (self.g.ad_unchecked(&self.m) - self.n.clone()).norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum Method {
    #[default]
    #[serde(rename = "lie-rk4")]
    LieRk4,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IntegratorConfig {
    pub h: f64,
    pub horizon: f64,
    pub method: Method,
    pub reprojection: bool,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            h: 1e-3,
            horizon: 10.0,
            method: Method::LieRk4,
            reprojection: true,
        }
    }
}

impl IntegratorConfig {
    pub fn new(h: f64, horizon: f64) -> Self {
        Self {
            h,
            horizon,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0 && self.h.is_finite()) {
            return Err(Error::InvalidParameters(format!("step h must be positive, got {}", self.h)));
        }
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "horizon must be positive, got {}",
                self.horizon
            )));
        }
        Ok(())
    }

    /// Step sizes covering `[0, horizon]`; the last one absorbs rounding.
    pub fn steps(&self) -> Vec<f64> {
        let ratio = self.horizon / self.h;
        let count = (ratio - 1e-9).ceil().max(1.0) as usize;
        let mut steps = vec![self.h; count];
        let last = self.horizon - self.h * (count - 1) as f64;
        steps[count - 1] = last;
        steps
    }
}

/// Closed-form body field: `(Omega, m')`.
pub fn vector_field(metric: &MetricSpec, x: &CotangentState) -> (AlgebraElement, AlgebraElement) {
    field(metric, x.g(), x.m())
}

fn field(metric: &MetricSpec, g: &GroupElement, m: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
    let (left_vel, m_dot) = match metric.left() {
        MetricSide::None => (AlgebraElement::zero(m.spec()), AlgebraElement::zero(m.spec())),
        MetricSide::Identity => (m.clone(), AlgebraElement::zero(m.spec())),
        MetricSide::Sectional(op) => {
            let v = op.apply(m);
            let md = m.bracket_unchecked(&v);
            (v, md)
        }
    };
    let right_vel = match metric.right() {
        MetricSide::None => None,
        MetricSide::Identity => Some(m.clone()),
        MetricSide::Sectional(op) => {
            let n = g.ad_unchecked(m);
            Some(g.ad_inv_unchecked(&op.apply(&n)))
        }
    };
    let omega = match right_vel {
        Some(r) => left_vel + r,
        None => left_vel,
    };
    (omega, m_dot)
}

/// `n' = [phi_R n, n]`
pub fn spatial_field(metric: &MetricSpec, n: &AlgebraElement) -> AlgebraElement {
    match metric.right() {
        MetricSide::Sectional(op) => op.apply(n).bracket_unchecked(n),
        _ => AlgebraElement::zero(n.spec()),
    }
}

/// Inverse of the left-trivialized differential of `exp`, truncated after
/// the second commutator: `v + [u, v]/2 + [u, [u, v]]/12`.
fn dexpinv(u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
    let c1 = u.bracket_unchecked(v);
    let c2 = u.bracket_unchecked(&c1);
    v + &(c1.scale(0.5) + c2.scale(1.0 / 12.0))
}

/// One lie-rk4 step (Munthe-Kaas RK4 on the group, classical RK4 on `m`).
pub fn step(metric: &MetricSpec, x: &CotangentState, h: f64, reproject: bool) -> Result<CotangentState> {
    if h == 0.0 {
        return Ok(x.clone());
    }
    let g = x.g();
    let m = x.m();
    let group_dependent = matches!(metric.right(), MetricSide::Sectional(_));
    let stage_group = |u: &AlgebraElement| -> Result<GroupElement> {
        if group_dependent {
            Ok(g.mul(&GroupElement::exp(u, 1.0)?))
        } else {
            Ok(g.clone())
        }
    };

    let (o1, l1) = field(metric, g, m);
    let k1 = o1.scale(h);
    let l1 = l1.scale(h);

    let u2 = k1.scale(0.5);
    let m2 = m + &l1.scale(0.5);
    let (o2, l2) = field(metric, &stage_group(&u2)?, &m2);
    let k2 = dexpinv(&u2, &o2).scale(h);
    let l2 = l2.scale(h);

    let u3 = k2.scale(0.5);
    let m3 = m + &l2.scale(0.5);
    let (o3, l3) = field(metric, &stage_group(&u3)?, &m3);
    let k3 = dexpinv(&u3, &o3).scale(h);
    let l3 = l3.scale(h);

    let u4 = k3.clone();
    let m4 = m + &l3;
    let (o4, l4) = field(metric, &stage_group(&u4)?, &m4);
    let k4 = dexpinv(&u4, &o4).scale(h);
    let l4 = l4.scale(h);

    let v = (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(1.0 / 6.0);
    let m_new = m + &(l1 + l2.scale(2.0) + l3.scale(2.0) + l4).scale(1.0 / 6.0);
    let mut g_new = g.mul(&GroupElement::exp(&v, 1.0)?);
    if reproject {
        g_new = g_new.reproject()?;
    }
    let n_new = g_new.ad_unchecked(&m_new);
    Ok(CotangentState {
        g: g_new,
        m: m_new,
        n: n_new,
    })
}

fn rk4_spatial(metric: &MetricSpec, n: &AlgebraElement, h: f64) -> AlgebraElement {
    let k1 = spatial_field(metric, n);
    let k2 = spatial_field(metric, &(n + &k1.scale(0.5 * h)));
    let k3 = spatial_field(metric, &(n + &k2.scale(0.5 * h)));
    let k4 = spatial_field(metric, &(n + &k3.scale(h)));
    n + &(k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0)
}

/// Closed-form geodesic of a bi-invariant metric: `g0 exp(t m)`.
pub fn exact_biinvariant_geodesic(g0: &GroupElement, m: &AlgebraElement, t: f64) -> Result<GroupElement> {
    Ok(g0.mul(&GroupElement::exp(m, t)?))
}

/// Conserved quantities tracked along a trajectory.
#[derive(Clone, Debug)]
pub enum Watch {
    Hamiltonian,
    /// `p_k(m)`
    LeftPoly(usize),
    /// `p_k(n)`
    RightPoly(usize),
    /// All moment-map components of an action.
    Moment(Arc<TwoSidedAction>),
    /// `p_k(m + lambda a)`
    Shift {
        degree: usize,
        lambda: f64,
        a: AlgebraElement,
    },
    /// `||Ad_g m - n||` where `n` is evolved by its own equation.
    Reconstruction,
}

impl Watch {
    fn names(&self) -> Vec<String> {
        match self {
            Watch::Hamiltonian => vec!["H".into()],
            Watch::LeftPoly(k) => vec![format!("p{k}_m")],
            Watch::RightPoly(k) => vec![format!("p{k}_n")],
            Watch::Moment(action) => (0..action.pairs().len()).map(|i| format!("moment_{i}")).collect(),
            Watch::Shift { degree, lambda, .. } => vec![format!("shift_p{degree}_l{lambda}")],
            Watch::Reconstruction => vec!["reconstruction".into()],
        }
    }

    fn evaluate(&self, metric: &MetricSpec, x: &CotangentState, n_evolved: &AlgebraElement, out: &mut Vec<f64>) -> Result<()> {
        match self {
            Watch::Hamiltonian => out.push(metric.hamiltonian(x)),
            Watch::LeftPoly(k) => out.push(x.m().invariant_poly(*k)?),
            Watch::RightPoly(k) => out.push(x.n().invariant_poly(*k)?),
            Watch::Moment(action) => out.extend(action.moment(x).iter()),
            Watch::Shift { degree, lambda, a } => {
                out.push((x.m() + &a.scale(*lambda)).invariant_poly(*degree)?)
            }
            Watch::Reconstruction => out.push((x.n().clone() - n_evolved.clone()).norm()),
        }
        Ok(())
    }
}

/// Maximum deviation of one watched quantity from its initial value.
#[derive(Debug, Clone, Serialize)]
pub struct Drift {
    pub quantity: String,
    pub initial: f64,
    pub max_abs: f64,
    /// `max_abs / max(1, |initial|)`
    pub relative: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<CotangentState>,
    pub columns: Vec<String>,
    /// One row of watched values per time.
    pub values: Vec<Vec<f64>>,
    pub drift: Vec<Drift>,
}

impl Trajectory {
    pub fn drift_of(&self, quantity: &str) -> Option<&Drift> {
        self.drift.iter().find(|d| d.quantity == quantity)
    }

    pub fn max_relative_drift(&self) -> f64 {
        self.drift.iter().map(|d| d.relative).fold(0.0, f64::max)
    }

    pub fn last(&self) -> &CotangentState {
        self.states.last().expect("trajectory has at least one state")
    }

    /// CSV with columns `time, m_*, n_*, <watched>`; floats with 17
    /// significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let d = self.states[0].m().spec().dim();
        let mut header = vec!["time".to_string()];
        header.extend((0..d).map(|i| format!("m_{i}")));
        header.extend((0..d).map(|i| format!("n_{i}")));
        header.extend(self.columns.iter().cloned());
        writeln!(w, "{}", header.join(","))?;
        for ((t, x), vals) in self.times.iter().zip(&self.states).zip(&self.values) {
            let mut row = Vec::with_capacity(header.len());
            row.push(f64_17(*t));
            row.extend(x.m().coords().iter().map(|v| f64_17(*v)));
            row.extend(x.n().coords().iter().map(|v| f64_17(*v)));
            row.extend(vals.iter().map(|v| f64_17(*v)));
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Integrates from `x0` over `[0, cfg.horizon]`, recording every state and
/// the drift of each watched quantity (maximum over the whole trajectory).
pub fn integrate(metric: &MetricSpec, x0: &CotangentState, cfg: &IntegratorConfig, watch: &[Watch]) -> Result<Trajectory> {
    cfg.validate()?;
    let columns: Vec<String> = watch.iter().flat_map(|w| w.names()).collect();
    let steps = cfg.steps();
    let mut times = Vec::with_capacity(steps.len() + 1);
    let mut states = Vec::with_capacity(steps.len() + 1);
    let mut values = Vec::with_capacity(steps.len() + 1);

    let record = |x: &CotangentState, n_ev: &AlgebraElement| -> Result<Vec<f64>> {
        let mut row = Vec::with_capacity(columns.len());
        for w in watch {
            w.evaluate(metric, x, n_ev, &mut row)?;
        }
        Ok(row)
    };

    let mut x = x0.clone();
    let mut n_ev = x0.n().clone();
    let mut t = 0.0;
    times.push(t);
    values.push(record(&x, &n_ev)?);
    states.push(x.clone());
    for (i, h) in steps.iter().enumerate() {
        let next = step(metric, &x, *h, cfg.reprojection)?;
        n_ev = rk4_spatial(metric, &n_ev, *h);
        x = next;
        t = if i + 1 == steps.len() { cfg.horizon } else { cfg.h * (i + 1) as f64 };
        times.push(t);
        values.push(record(&x, &n_ev)?);
        states.push(x.clone());
    }

    let drift = columns
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let initial = values[0][j];
            let max_abs = values.iter().map(|row| (row[j] - initial).abs()).fold(0.0, f64::max);
            Drift {
                quantity: name.clone(),
                initial,
                max_abs,
                relative: max_abs / initial.abs().max(1.0),
            }
        })
        .collect();
    Ok(Trajectory {
        times,
        states,
        columns,
        values,
        drift,
    })
}
