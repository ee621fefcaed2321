//! Two-sided actions `(g1, g2) . g = g1 g g2^{-1}` of subgroups `U` of
//! `G x G`, their moment maps and the vertical/horizontal splitting at `e`.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dynamics::CotangentState;
use crate::error::{Error, Result};
use crate::liealg::{AlgebraElement, AlgebraSpec, Family, GroupElement, Subspace};
use crate::linalg::{self, RankPolicy};
use crate::sampling;

/// Tolerance for subalgebra closure of the pair span.
pub const CLOSURE_TOL: f64 = 1e-10;

/// An element `(a1, a2)` of `g + g`.
pub type Pair = (AlgebraElement, AlgebraElement);

#[derive(Clone)]
pub struct TwoSidedAction {
    spec: Arc<AlgebraSpec>,
    pairs: Vec<Pair>,
    name: String,
    /// Orthonormal basis of span(pairs) in `g + g`, normalized coordinates.
    span: DMatrix<f64>,
}

impl fmt::Debug for TwoSidedAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoSidedAction({}, {} pairs on {})", self.name, self.pairs.len(), self.spec.name())
    }
}

/// Vertical and horizontal spaces at the identity.
#[derive(Clone, Debug)]
pub struct VerticalData {
    pub vertical: Subspace,
    pub horizontal: Subspace,
    /// Number of pairs lost when `{a1 - a2}` is spanned.
    pub collapsed: usize,
}

impl VerticalData {
    /// The non-fatal `DegenerateVertical` condition, if it occurs.
    pub fn degeneracy(&self) -> Option<Error> {
        (self.collapsed > 0).then(|| Error::DegenerateVertical {
            rank: self.vertical.dim(),
            pairs: self.vertical.dim() + self.collapsed,
        })
    }
}

fn stack(pair: &Pair) -> DVector<f64> {
    let a = pair.0.normalized();
    let b = pair.1.normalized();
    let d = a.len();
    DVector::from_fn(2 * d, |i, _| if i < d { a[i] } else { b[i - d] })
}

impl TwoSidedAction {
    pub fn new(spec: &Arc<AlgebraSpec>, pairs: Vec<Pair>, name: impl Into<String>) -> Result<Self> {
        Self::with_policy(spec, pairs, name, RankPolicy::default())
    }

    /// Checks independence of the pairs at `policy` and closure under the
    /// componentwise bracket.
    pub fn with_policy(spec: &Arc<AlgebraSpec>, pairs: Vec<Pair>, name: impl Into<String>, policy: RankPolicy) -> Result<Self> {
        let name = name.into();
        for (a1, a2) in &pairs {
            for a in [a1, a2] {
                if !spec.same_as(a.spec()) {
                    return Err(Error::SpecMismatch {
                        left: spec.name(),
                        right: a.spec().name(),
                    });
                }
            }
        }
        if pairs.is_empty() {
            return Err(Error::InvalidParameters(format!("action {name} has no pairs")));
        }
        let cols: Vec<_> = pairs.iter().map(stack).collect();
        let a = DMatrix::from_columns(&cols);
        let sv = linalg::singular_values(&a);
        let rank = policy.rank(&sv);
        if rank < pairs.len() {
            return Err(Error::InvalidParameters(format!(
                "action {name}: pairs are dependent (rank {rank} of {})",
                pairs.len()
            )));
        }
        let span = linalg::orthonormal_span(&a, policy);
        let action = Self {
            spec: spec.clone(),
            pairs,
            name,
            span,
        };
        let residual = action.closure_residual();
        if residual > CLOSURE_TOL {
            return Err(Error::InvalidParameters(format!(
                "action {}: pair span is not a subalgebra (residual {residual:e})",
                action.name
            )));
        }
        Ok(action)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Largest relative distance of a componentwise bracket of two pairs
    /// from the pair span.
    pub fn closure_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, p) in self.pairs.iter().enumerate() {
            for q in &self.pairs[i + 1..] {
                let br = (p.0.bracket_unchecked(&q.0), p.1.bracket_unchecked(&q.1));
                let v = stack(&br);
                let proj = &self.span * (self.span.transpose() * &v);
                worst = worst.max((v.clone() - proj).norm() / v.norm().max(1.0));
            }
        }
        worst
    }

    /// Whether the componentwise brackets of all pairs vanish.
    pub fn is_abelian(&self) -> bool {
        self.pairs.iter().enumerate().all(|(i, p)| {
            self.pairs[i + 1..].iter().all(|q| {
                let br = (p.0.bracket_unchecked(&q.0), p.1.bracket_unchecked(&q.1));
                stack(&br).norm() <= CLOSURE_TOL
            })
        })
    }

    /// Left-trivialized generators `Ad_{g^{-1}} a1 - a2`.
    pub fn generators_at(&self, g: &GroupElement) -> Result<Vec<AlgebraElement>> {
        if !self.spec.same_as(g.spec()) {
            return Err(Error::SpecMismatch {
                left: self.spec.name(),
                right: g.spec().name(),
            });
        }
        Ok(self
            .pairs
            .iter()
            .map(|(a1, a2)| g.ad_inv_unchecked(a1) - a2.clone())
            .collect())
    }

    /// Moment components `<n, a1> - <m, a2>`, one per pair.
    pub fn moment(&self, x: &CotangentState) -> Vec<f64> {
        self.pairs
            .iter()
            .map(|p| moment_component(p, x))
            .collect()
    }

    pub fn vertical_horizontal(&self) -> VerticalData {
        self.vertical_horizontal_with(RankPolicy::default())
    }

    pub fn vertical_horizontal_with(&self, policy: RankPolicy) -> VerticalData {
        let diffs: Vec<_> = self.pairs.iter().map(|(a1, a2)| a1.clone() - a2.clone()).collect();
        let vertical = Subspace::span(&self.spec, &diffs, policy).expect("pairs share one algebra");
        let horizontal = vertical.orthogonal_complement();
        let collapsed = self.pairs.len() - vertical.dim();
        VerticalData {
            vertical,
            horizontal,
            collapsed,
        }
    }

    /// Unit-norm Gaussian samples of the horizontal space at `e`; sample `i`
    /// is drawn from its own stream so scans can run in any order.
    pub fn sample_horizontal(&self, seed: u64, count: usize) -> Vec<AlgebraElement> {
        let horizontal = self.vertical_horizontal().horizontal;
        (0..count)
            .map(|i| sample_unit(&horizontal, &mut sampling::stream(seed, i as u64)))
            .collect()
    }

    /// `dim {eta in vertical : [eta, xi] = 0}`
    pub fn u_xi_dim(&self, xi: &AlgebraElement) -> usize {
        self.u_xi_dim_with(xi, &self.vertical_horizontal().vertical, RankPolicy::default())
    }

    pub fn u_xi_dim_with(&self, xi: &AlgebraElement, vertical: &Subspace, policy: RankPolicy) -> usize {
        xi.centralizer_dim(Some(vertical), policy)
    }

    /// Smallest singular value of the generator map `u -> g`, with `u`
    /// carrying the product inner product of `g + g`.
    pub fn generator_singular_value(&self, g: &GroupElement) -> f64 {
        let d = self.spec.dim();
        let cols: Vec<DVector<f64>> = self
            .span
            .column_iter()
            .map(|c| {
                let a1 = AlgebraElement::denormalize(&self.spec, &c.rows(0, d).into_owned());
                let a2 = AlgebraElement::denormalize(&self.spec, &c.rows(d, d).into_owned());
                (g.ad_inv_unchecked(&a1) - a2).normalized()
            })
            .collect();
        let m = DMatrix::from_columns(&cols);
        linalg::singular_values(&m).last().copied().unwrap_or(0.0)
    }

    /// Minimum of [`Self::generator_singular_value`] over random group
    /// elements.
    pub fn infinitesimal_freeness(&self, seed: u64, samples: usize) -> f64 {
        (0..samples)
            .map(|i| {
                let g = GroupElement::random(&self.spec, &mut sampling::stream(seed, i as u64));
                self.generator_singular_value(&g)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Random element of the Lie algebra of `U`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Pair {
        let c = sampling::gaussian_vector(rng, self.pairs.len());
        let mut a1 = AlgebraElement::zero(&self.spec);
        let mut a2 = AlgebraElement::zero(&self.spec);
        for (ci, (p1, p2)) in c.iter().zip(&self.pairs) {
            a1 = a1 + p1.scale(*ci);
            a2 = a2 + p2.scale(*ci);
        }
        (a1, a2)
    }
}

/// `phi_a(x) = <n, a1> - <m, a2>`
pub fn moment_component(a: &Pair, x: &CotangentState) -> f64 {
    x.n().inner_unchecked(&a.0) - x.m().inner_unchecked(&a.1)
}

/// Componentwise bracket in `g + g`.
pub fn pair_bracket(a: &Pair, b: &Pair) -> Pair {
    (a.0.bracket_unchecked(&b.0), a.1.bracket_unchecked(&b.1))
}

pub(crate) fn sample_unit<R: Rng + ?Sized>(space: &Subspace, rng: &mut R) -> AlgebraElement {
    if space.dim() == 0 {
        return AlgebraElement::zero(space.spec());
    }
    loop {
        let c = sampling::gaussian_vector(rng, space.dim());
        let norm = c.norm();
        if norm > 1e-12 {
            return space.element(&(c / norm));
        }
    }
}

#[cfg(test)]
pub(crate) fn sample_unit_for_tests<R: Rng + ?Sized>(space: &Subspace, rng: &mut R) -> AlgebraElement {
    sample_unit(space, rng)
}

/// `U_{k,l,p,q}`: the circle `z -> (diag(z^k, z^l, z^{-k-l}), diag(z^p, z^q, z^{-p-q}))`
/// acting on SU(3).
pub fn eschenburg(k: i64, l: i64, p: i64, q: i64) -> Result<TwoSidedAction> {
    let spec = AlgebraSpec::su(3)?;
    let left = [k as f64, l as f64, -(k + l) as f64];
    let right = [p as f64, q as f64, -(p + q) as f64];
    if left.iter().sum::<f64>() != 0.0 || right.iter().sum::<f64>() != 0.0 {
        return Err(Error::InvalidParameters("exponents must sum to zero".into()));
    }
    if left.iter().chain(&right).all(|v| *v == 0.0) {
        return Err(Error::InvalidParameters("eschenburg exponents are all zero".into()));
    }
    let a1 = AlgebraElement::cartan(&spec, &left)?;
    let a2 = AlgebraElement::cartan(&spec, &right)?;
    TwoSidedAction::new(&spec, vec![(a1, a2)], format!("eschenburg({k},{l},{p},{q})"))
}

/// Diagonal block index with complex `a` and `b` as (re, im).
type QuaternionSlot = (usize, (f64, f64), (f64, f64));

/// Quaternion `a + b j` with complex `a`, `b`, placed in the `(block, block)`
/// slot of an sp(n) matrix.
fn quaternion_in_sp(spec: &Arc<AlgebraSpec>, slots: &[QuaternionSlot]) -> Result<AlgebraElement> {
    use crate::linalg::{CMat, C64};
    let n = spec.n();
    let mut m = CMat::zeros(2 * n, 2 * n);
    for &(j, (ar, ai), (br, bi)) in slots {
        let a = C64::new(ar, ai);
        let b = C64::new(br, bi);
        m[(j, j)] += a;
        m[(n + j, n + j)] += a.conj();
        m[(j, n + j)] += b;
        m[(n + j, j)] -= b.conj();
    }
    AlgebraElement::from_matrix(spec, &m)
}

/// Sp(1) acting on Sp(2) by `x -> (diag(x, x), diag(x, 1))`;
/// acting on Sp(2); algebra pairs `(diag(x, x), diag(x, 0))`.
pub fn gromoll_meyer() -> Result<TwoSidedAction> {
    let spec = AlgebraSpec::sp(2)?;
    let units = [((0.0, 1.0), (0.0, 0.0)), ((0.0, 0.0), (1.0, 0.0)), ((0.0, 0.0), (0.0, 1.0))];
    let mut pairs = Vec::with_capacity(3);
    for (a, b) in units {
        let a1 = quaternion_in_sp(&spec, &[(0, a, b), (1, a, b)])?;
        let a2 = quaternion_in_sp(&spec, &[(0, a, b)])?;
        pairs.push((a1, a2));
    }
    TwoSidedAction::new(&spec, pairs, "gromoll_meyer")
}

/// `U = {e} x T` with `T` the standard maximal torus.
pub fn flag(spec: &Arc<AlgebraSpec>) -> Result<TwoSidedAction> {
    let pairs = Subspace::cartan(spec)
        .elements()
        .into_iter()
        .map(|t| (AlgebraElement::zero(spec), t))
        .collect();
    TwoSidedAction::new(spec, pairs, format!("flag({})", spec.name()))
}

/// Graph of `Ad_h`, `h = exp(s)` with `s` given as Cartan data:
/// pairs `(Ad_h x, x)` over the basis. For generic `s` the vertical space is
/// the orthocomplement of the Cartan subalgebra.
pub fn twisted_diagonal(spec: &Arc<AlgebraSpec>, s: &[f64]) -> Result<TwoSidedAction> {
    let s = AlgebraElement::cartan(spec, s)?;
    let h = GroupElement::exp(&s, 1.0)?;
    let pairs = (0..spec.dim())
        .map(|i| {
            let x = AlgebraElement::basis(spec, i);
            (h.ad_unchecked(&x), x)
        })
        .collect();
    TwoSidedAction::new(spec, pairs, format!("twisted_diagonal({})", spec.name()))
}

/// Diagonal subgroup `{(g, g)}`; every generator vanishes at `e`.
pub fn diagonal(spec: &Arc<AlgebraSpec>) -> Result<TwoSidedAction> {
    let pairs = (0..spec.dim())
        .map(|i| {
            let x = AlgebraElement::basis(spec, i);
            (x.clone(), x)
        })
        .collect();
    TwoSidedAction::new(spec, pairs, format!("diagonal({})", spec.name()))
}

/// Scenario selector, as it appears in run configurations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum Scenario {
    Eschenburg { k: i64, l: i64, p: i64, q: i64 },
    GromollMeyer {},
    Flag { family: Family, n: usize },
    TwistedDiagonal { family: Family, n: usize, s: Vec<f64> },
}

impl Scenario {
    pub fn build(&self) -> Result<TwoSidedAction> {
        match self {
            Scenario::Eschenburg { k, l, p, q } => eschenburg(*k, *l, *p, *q),
            Scenario::GromollMeyer {} => gromoll_meyer(),
            Scenario::Flag { family, n } => flag(&AlgebraSpec::new(*family, *n)?),
            Scenario::TwistedDiagonal { family, n, s } => twisted_diagonal(&AlgebraSpec::new(*family, *n)?, s),
        }
    }
}

/// One catalog line: name, parameter signature, description.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static str,
    pub description: &'static str,
}

/// The scenarios shipped with the library (empty without the
/// `builtin-catalog` feature).
pub fn builtin_scenarios() -> Vec<CatalogEntry> {
    #[cfg(feature = "builtin-catalog")]
    {
        vec![
            CatalogEntry {
                name: "eschenburg",
                parameters: "k: int, l: int, p: int, q: int",
                description: "circle acting on SU(3) by (diag(z^k,z^l,z^-k-l), diag(z^p,z^q,z^-p-q))",
            },
            CatalogEntry {
                name: "gromoll_meyer",
                parameters: "",
                description: "Sp(1) acting on Sp(2) by (diag(x,x), diag(x,1))",
            },
            CatalogEntry {
                name: "flag",
                parameters: "family: su|so|sp, n: int",
                description: "maximal torus acting on the right, U = {e} x T",
            },
        ]
    }
    #[cfg(not(feature = "builtin-catalog"))]
    {
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    #[test]
    fn eschenburg_generator_at_identity() {
        let act = eschenburg(1, -1, 2, 2).unwrap();
        let gens = act.generators_at(&GroupElement::identity(act.spec())).unwrap();
        assert_eq!(gens.len(), 1);
        let m = gens[0].matrix();
        let expected = [-1.0, -3.0, 4.0];
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { C64::new(0.0, expected[i]) } else { C64::new(0.0, 0.0) };
                assert!((m[(i, j)] - e).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn eschenburg_rejects_zero_exponents() {
        assert!(matches!(eschenburg(0, 0, 0, 0), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn flag_generators_are_constant() {
        let spec = AlgebraSpec::su(3).unwrap();
        let act = flag(&spec).unwrap();
        let mut rng = sampling::rng(3);
        let g = GroupElement::random(&spec, &mut rng);
        for (gen, (_, a2)) in act.generators_at(&g).unwrap().iter().zip(act.pairs()) {
            assert!((gen.clone() + a2.clone()).norm() < 1e-14);
        }
    }

    #[test]
    fn generators_spec_mismatch() {
        let act = eschenburg(1, -1, 2, 2).unwrap();
        let g = GroupElement::identity(&AlgebraSpec::su(2).unwrap());
        assert!(matches!(act.generators_at(&g), Err(Error::SpecMismatch { .. })));
    }

    #[test]
    fn vertical_dimensions() {
        let spec = AlgebraSpec::su(3).unwrap();
        let f = flag(&spec).unwrap().vertical_horizontal();
        assert_eq!((f.vertical.dim(), f.horizontal.dim()), (2, 6));
        assert!(f.vertical.max_principal_angle(&Subspace::cartan(&spec)) < 1e-12);
        assert!(f.degeneracy().is_none());

        let e = eschenburg(1, -1, 2, 2).unwrap().vertical_horizontal();
        assert_eq!((e.vertical.dim(), e.horizontal.dim()), (1, 7));

        let d = diagonal(&spec).unwrap().vertical_horizontal();
        assert_eq!(d.vertical.dim(), 0);
        assert_eq!(d.collapsed, 8);
        assert!(matches!(d.degeneracy(), Some(Error::DegenerateVertical { rank: 0, pairs: 8 })));

        let t = twisted_diagonal(&spec, &[0.7, 0.2, -0.9]).unwrap().vertical_horizontal();
        assert_eq!((t.vertical.dim(), t.horizontal.dim(), t.collapsed), (6, 2, 2));
        assert!(t.horizontal.max_principal_angle(&Subspace::cartan(&spec)) < 1e-10);
    }

    #[test]
    fn vertical_is_orthogonal_to_horizontal() {
        for act in [eschenburg(1, -1, 2, 2).unwrap(), gromoll_meyer().unwrap()] {
            let vh = act.vertical_horizontal();
            let cross = vh.vertical.matrix().transpose() * vh.horizontal.matrix();
            assert!(cross.amax() < 1e-12);
            assert_eq!(vh.vertical.dim() + vh.horizontal.dim(), act.spec().dim());
        }
    }

    #[test]
    fn catalog_closure() {
        let gm = gromoll_meyer().unwrap();
        assert_eq!(gm.pairs().len(), 3);
        assert!(gm.closure_residual() <= 1e-10);
        assert!(!gm.is_abelian());
        assert_eq!(gm.vertical_horizontal().vertical.dim(), 3);
        let fl = flag(&AlgebraSpec::su(3).unwrap()).unwrap();
        assert_eq!(fl.pairs().len(), 2);
        assert!(fl.is_abelian());
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let spec = AlgebraSpec::su(2).unwrap();
        let e1 = AlgebraElement::basis(&spec, 0);
        let e2 = AlgebraElement::basis(&spec, 1);
        let z = AlgebraElement::zero(&spec);
        let r = TwoSidedAction::new(&spec, vec![(e1, z.clone()), (e2, z)], "bad");
        assert!(matches!(r, Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn dependent_pairs_are_rejected() {
        let spec = AlgebraSpec::su(2).unwrap();
        let e3 = AlgebraElement::basis(&spec, 2);
        let r = TwoSidedAction::new(&spec, vec![(e3.clone(), e3.clone()), (e3.scale(2.0), e3.scale(2.0))], "dup");
        assert!(matches!(r, Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn moment_at_identity_and_horizontal() {
        let act = eschenburg(1, -1, 2, 2).unwrap();
        let spec = act.spec().clone();
        let mut rng = sampling::rng(9);
        let m = AlgebraElement::random(&spec, &mut rng);
        let x = CotangentState::at_identity(m.clone());
        let (a1, a2) = &act.pairs()[0];
        assert!((act.moment(&x)[0] - m.inner(&(a1.clone() - a2.clone())).unwrap()).abs() < 1e-12);
        for xi in act.sample_horizontal(4, 20) {
            let x = CotangentState::at_identity(xi);
            assert!(act.moment(&x).iter().all(|v| v.abs() <= 1e-12));
        }
    }

    #[test]
    fn moment_matches_generator_pairing() {
        let act = gromoll_meyer().unwrap();
        let spec = act.spec().clone();
        let mut rng = sampling::rng(10);
        let g = GroupElement::random(&spec, &mut rng);
        let m = AlgebraElement::random(&spec, &mut rng);
        let x = CotangentState::new(g.clone(), m.clone()).unwrap();
        for (phi, gen) in act.moment(&x).iter().zip(act.generators_at(&g).unwrap()) {
            assert!((phi - m.inner(&gen).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn horizontal_samples() {
        let act = eschenburg(1, -1, 2, 2).unwrap();
        assert!(act.sample_horizontal(1, 0).is_empty());
        let a = act.sample_horizontal(77, 5);
        let b = act.sample_horizontal(77, 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.coords(), y.coords());
            assert!((x.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn u_xi_examples() {
        let act = eschenburg(1, -1, 2, 2).unwrap();
        let spec = act.spec().clone();
        assert_eq!(act.u_xi_dim(&AlgebraElement::zero(&spec)), 1);
        let xi = act.sample_horizontal(5, 1).pop().unwrap();
        assert_eq!(act.u_xi_dim(&xi), 0);
        let (a1, a2) = &act.pairs()[0];
        assert!(act.u_xi_dim(&(a1.clone() - a2.clone())) >= 1);
    }

    #[test]
    fn freeness_examples() {
        let spec = AlgebraSpec::su(3).unwrap();
        assert!(flag(&spec).unwrap().infinitesimal_freeness(1, 20) > 0.5);
        let diag = diagonal(&spec).unwrap();
        assert!(diag.generator_singular_value(&GroupElement::identity(&spec)) < 1e-12);
        assert!(eschenburg(1, -1, 2, 2).unwrap().infinitesimal_freeness(2, 100) > 1e-6);
    }

    #[test]
    fn scenario_config_round_trip() {
        let s: Scenario = serde_json::from_str(r#"{"name":"eschenburg","k":1,"l":-1,"p":2,"q":2}"#).unwrap();
        assert_eq!(s, Scenario::Eschenburg { k: 1, l: -1, p: 2, q: 2 });
        let f: Scenario = serde_json::from_str(r#"{"name":"flag","family":"su","n":3}"#).unwrap();
        assert_eq!(f.build().unwrap().pairs().len(), 2);
        assert!(serde_json::from_str::<Scenario>(r#"{"name":"gromoll_meyer","extra":1}"#).is_err());
    }

    #[cfg(feature = "builtin-catalog")]
    #[test]
    fn catalog_names() {
        let names: Vec<_> = builtin_scenarios().iter().map(|e| e.name).collect();
        assert_eq!(names, ["eschenburg", "gromoll_meyer", "flag"]);
    }
}
