use std::f64::consts::FRAC_PI_2;

use nalgebra::DMatrix;
use proptest::prelude::*;

use super::*;
use crate::sampling;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn diag_i(spec: &Arc<AlgebraSpec>, values: &[f64]) -> AlgebraElement {
    let n = values.len();
    let m = CMat::from_fn(n, n, |i, j| if i == j { c(0.0, values[i]) } else { c(0.0, 0.0) });
    AlgebraElement::from_matrix(spec, &m).unwrap()
}

fn all_specs() -> Vec<Arc<AlgebraSpec>> {
    vec![
        AlgebraSpec::su(2).unwrap(),
        AlgebraSpec::su(3).unwrap(),
        AlgebraSpec::su(4).unwrap(),
        AlgebraSpec::so(3).unwrap(),
        AlgebraSpec::so(4).unwrap(),
        AlgebraSpec::so(5).unwrap(),
        AlgebraSpec::sp(1).unwrap(),
        AlgebraSpec::sp(2).unwrap(),
    ]
}

#[test]
fn basis_satisfies_defining_relations_and_is_orthogonal() {
    for spec in all_specs() {
        assert_eq!(spec.dim(), spec.family().dimension(spec.n()), "{}", spec.name());
        for b in spec.basis() {
            assert!(spec.algebra_defect(b) < 1e-12, "{}", spec.name());
        }
        let g = spec.gram_matrix();
        for i in 0..spec.dim() {
            assert!(g[(i, i)] > 0.0);
            for j in 0..spec.dim() {
                if i != j {
                    assert!(g[(i, j)].abs() < 1e-12, "{} gram ({i},{j})", spec.name());
                }
            }
        }
        assert!(spec.closure_residual() <= 1e-12, "{} closure", spec.name());
    }
}

#[test]
fn su2_bracket_matches_hand_computed_matrices() {
    let spec = AlgebraSpec::su(2).unwrap();
    let e1m = CMat::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(-1., 0.), c(0., 0.)]);
    let e2m = CMat::from_row_slice(2, 2, &[c(0., 0.), c(0., 1.), c(0., 1.), c(0., 0.)]);
    let e3m = CMat::from_row_slice(2, 2, &[c(0., 1.), c(0., 0.), c(0., 0.), c(0., -1.)]);
    let e1 = AlgebraElement::from_matrix(&spec, &e1m).unwrap();
    let e2 = AlgebraElement::from_matrix(&spec, &e2m).unwrap();
    let e3 = AlgebraElement::from_matrix(&spec, &e3m).unwrap();
    // e1 e2 = diag(i,-i), e2 e1 = diag(-i,i)
    let expected = e3.scale(2.0);
    let got = e1.bracket(&e2).unwrap();
    assert!((got.coords() - expected.coords()).norm() < 1e-14);
    assert!(e1.bracket(&e1).unwrap().norm() == 0.0);
    assert!((e3.inner(&e3).unwrap() - 2.0).abs() < 1e-15);
}

#[test]
fn su3_bracket_matches_dense_commutator() {
    let spec = AlgebraSpec::su(3).unwrap();
    let mut rng = sampling::rng(7);
    for _ in 0..10 {
        let x = AlgebraElement::random(&spec, &mut rng);
        let y = AlgebraElement::random(&spec, &mut rng);
        let oracle = x.matrix() * y.matrix() - y.matrix() * x.matrix();
        let got = x.bracket(&y).unwrap().matrix();
        assert!(linalg::cnorm(&(oracle - got)) < 1e-12);
    }
}

#[test]
fn mismatched_specs_are_rejected() {
    let a = AlgebraSpec::su(2).unwrap();
    let b = AlgebraSpec::su(3).unwrap();
    let x = AlgebraElement::basis(&a, 0);
    let y = AlgebraElement::basis(&b, 0);
    assert!(matches!(x.bracket(&y), Err(Error::SpecMismatch { .. })));
    assert!(matches!(x.inner(&y), Err(Error::SpecMismatch { .. })));
    let g = GroupElement::identity(&b);
    assert!(matches!(g.ad(&x), Err(Error::SpecMismatch { .. })));
}

#[test]
fn jacobi_and_ad_invariance_on_random_samples() {
    for spec in all_specs() {
        let mut rng = sampling::rng(11);
        for _ in 0..100 {
            let x = AlgebraElement::random(&spec, &mut rng);
            let y = AlgebraElement::random(&spec, &mut rng);
            let z = AlgebraElement::random(&spec, &mut rng);
            let j = x.bracket(&y.bracket(&z).unwrap()).unwrap()
                + y.bracket(&z.bracket(&x).unwrap()).unwrap()
                + z.bracket(&x.bracket(&y).unwrap()).unwrap();
            let scale = x.norm() * y.norm() * z.norm();
            assert!(j.norm() <= 1e-10 * scale.max(1.0), "{} jacobi", spec.name());

            let g = GroupElement::random(&spec, &mut rng);
            let gx = g.ad(&x).unwrap();
            let gy = g.ad(&y).unwrap();
            let defect = (gx.inner(&gy).unwrap() - x.inner(&y).unwrap()).abs();
            assert!(defect <= 1e-10 * scale.max(1.0), "{} inner invariance", spec.name());
            for k in spec.default_degrees() {
                let a = x.invariant_poly(k).unwrap();
                let b = gx.invariant_poly(k).unwrap();
                assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0), "{} p_{k}", spec.name());
            }
        }
    }
}

#[test]
fn exp_examples() {
    let spec = AlgebraSpec::su(2).unwrap();
    let e3 = AlgebraElement::basis(&spec, 2);
    let g = GroupElement::exp(&e3, FRAC_PI_2).unwrap();
    let expected = CMat::from_row_slice(2, 2, &[c(0., 1.), c(0., 0.), c(0., 0.), c(0., -1.)]);
    assert!(linalg::cnorm(&(g.matrix() - expected)) < 1e-14);
    let id = GroupElement::exp(&e3, 0.0).unwrap();
    assert_eq!(id.matrix(), &CMat::identity(2, 2));

    for spec in all_specs() {
        let mut rng = sampling::rng(3);
        let x = AlgebraElement::random(&spec, &mut rng);
        let g = GroupElement::exp(&x, 1.0).unwrap();
        let h = GroupElement::exp(&x, -1.0).unwrap();
        let s = spec.matrix_size();
        assert!(linalg::cnorm(&(g.mul(&h).matrix() - CMat::identity(s, s))) < 1e-12);
        // passes the group invariants
        GroupElement::new(&spec, g.matrix().clone()).unwrap();
    }
}

#[test]
fn exp_agrees_with_taylor_series() {
    let spec = AlgebraSpec::sp(2).unwrap();
    let mut rng = sampling::rng(5);
    let x = AlgebraElement::random(&spec, &mut rng).scale(0.3);
    let m = x.matrix();
    let s = m.nrows();
    let mut term = CMat::identity(s, s);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &m * C64::from(1.0 / k as f64);
        sum += &term;
    }
    let g = GroupElement::exp(&x, 1.0).unwrap();
    assert!(linalg::cnorm(&(g.matrix() - sum)) < 1e-13);
}

#[test]
fn ad_preserves_spectrum_and_brackets() {
    let spec = AlgebraSpec::su(3).unwrap();
    let mut rng = sampling::rng(9);
    let x = AlgebraElement::random(&spec, &mut rng);
    let y = AlgebraElement::random(&spec, &mut rng);
    let id = GroupElement::identity(&spec);
    assert!((id.ad(&x).unwrap().coords() - x.coords()).norm() < 1e-14);
    let g = GroupElement::random(&spec, &mut rng);
    let sx = x.spectrum().unwrap();
    let sg = g.ad(&x).unwrap().spectrum().unwrap();
    for (a, b) in sx.iter().zip(&sg) {
        assert!((a - b).abs() < 1e-10);
    }
    let lhs = g.ad(&x.bracket(&y).unwrap()).unwrap();
    let rhs = g.ad(&x).unwrap().bracket(&g.ad(&y).unwrap()).unwrap();
    assert!((lhs - rhs).norm() < 1e-10);
    let back = g.ad_inv(&g.ad(&x).unwrap()).unwrap();
    assert!((back - x).norm() < 1e-12);
}

/// Oracle: brute-force null space of the dense commutator map on all of u(n)
/// restricted to the algebra, computed from raw basis matrices.
fn centralizer_dim_oracle(spec: &Arc<AlgebraSpec>, xi: &CMat) -> usize {
    let cols: Vec<_> = spec
        .basis()
        .iter()
        .map(|b| {
            let comm = xi * b - b * xi;
            nalgebra::DVector::from_iterator(
                2 * comm.len(),
                comm.iter().flat_map(|z| [z.re, z.im]),
            )
        })
        .collect();
    let a = DMatrix::from_columns(&cols);
    spec.dim() - linalg::numerical_rank(&a, RankPolicy::default())
}

#[test]
fn centralizer_examples() {
    let spec = AlgebraSpec::su(3).unwrap();
    let p = RankPolicy::default();
    let generic = diag_i(&spec, &[1.0, 2.0, -3.0]);
    let degenerate = diag_i(&spec, &[1.0, 1.0, -2.0]);
    assert_eq!(centralizer_dim_oracle(&spec, &generic.matrix()), 2);
    assert_eq!(centralizer_dim_oracle(&spec, &degenerate.matrix()), 4);
    assert_eq!(generic.centralizer_dim(None, p), 2);
    assert_eq!(degenerate.centralizer_dim(None, p), 4);
    assert_eq!(AlgebraElement::zero(&spec).centralizer_dim(None, p), 8);
    assert!(generic.is_regular(p));
    assert!(!degenerate.is_regular(p));
    assert!(!AlgebraElement::zero(&spec).is_regular(p));

    let cz = generic.centralizer(None, p);
    assert!(cz.orthonormality_defect() < 1e-10);
    assert!(cz.max_principal_angle(&Subspace::cartan(&spec)) < 1e-8);
    for eta in cz.elements() {
        assert!(generic.bracket(&eta).unwrap().norm() < 1e-10);
    }
}

#[test]
fn centralizer_within_subspace() {
    let spec = AlgebraSpec::su(3).unwrap();
    let p = RankPolicy::default();
    let t = Subspace::cartan(&spec);
    let xi = diag_i(&spec, &[1.0, 2.0, -3.0]);
    assert_eq!(xi.centralizer_dim(Some(&t), p), 2);
    let perp = t.orthogonal_complement();
    assert_eq!(xi.centralizer_dim(Some(&perp), p), 0);
    assert_eq!(AlgebraElement::zero(&spec).centralizer_dim(Some(&perp), p), 6);
}

#[test]
fn invariant_polynomial_examples() {
    let su2 = AlgebraSpec::su(2).unwrap();
    let e3 = AlgebraElement::basis(&su2, 2);
    assert!((e3.invariant_poly(2).unwrap() - 2.0).abs() < 1e-14);
    let su4 = AlgebraSpec::su(4).unwrap();
    let mut rng = sampling::rng(1);
    for _ in 0..10 {
        let x = AlgebraElement::random(&su4, &mut rng);
        assert!(x.invariant_poly(1).unwrap().abs() < 1e-12);
    }
    let sp2 = AlgebraSpec::sp(2).unwrap();
    let x = AlgebraElement::random(&sp2, &mut rng);
    assert!(x.invariant_poly(3).unwrap().abs() < 1e-10);
}

#[test]
fn gradients_match_central_differences_and_commute() {
    for spec in all_specs() {
        let mut rng = sampling::rng(21);
        for _ in 0..100 {
            let xi = AlgebraElement::random(&spec, &mut rng);
            for k in 1..=4 {
                let grad = xi.grad_invariant_poly(k).unwrap();
                assert!(xi.bracket(&grad).unwrap().norm() <= 1e-8, "{} k={k}", spec.name());
            }
        }
        for _ in 0..5 {
            let xi = AlgebraElement::random(&spec, &mut rng);
            let eta = AlgebraElement::random(&spec, &mut rng);
            let h = 1e-5;
            for k in 2..=4 {
                let grad = xi.grad_invariant_poly(k).unwrap();
                let analytic = grad.inner(&eta).unwrap();
                let fd = ((&xi + &eta.scale(h)).invariant_poly(k).unwrap()
                    - (&xi - &eta.scale(h)).invariant_poly(k).unwrap())
                    / (2.0 * h);
                let scale = analytic.abs().max(1.0);
                assert!((analytic - fd).abs() <= 1e-6 * scale, "{} k={k}: {analytic} vs {fd}", spec.name());
            }
        }
    }
}

#[test]
fn quadratic_gradient_is_parallel_to_argument() {
    let spec = AlgebraSpec::su(2).unwrap();
    let mut rng = sampling::rng(2);
    let xi = AlgebraElement::random(&spec, &mut rng);
    let g = xi.grad_invariant_poly(2).unwrap();
    assert!((g - xi.scale(2.0)).norm() < 1e-12);
}

#[test]
fn gradient_span_has_rank_of_algebra_at_regular_points() {
    for spec in all_specs() {
        let mut rng = sampling::rng(31);
        let degrees = spec.default_degrees();
        let mut checked = 0;
        for _ in 0..100 {
            let xi = AlgebraElement::random(&spec, &mut rng);
            if !xi.is_regular(RankPolicy::default()) {
                continue;
            }
            checked += 1;
            assert_eq!(
                xi.gradient_rank(&degrees, RankPolicy::default()).unwrap(),
                spec.rank(),
                "{}",
                spec.name()
            );
        }
        assert!(checked > 90);
    }
}

#[test]
fn rank_examples() {
    assert_eq!(AlgebraSpec::su(3).unwrap().rank(), 2);
    assert_eq!(AlgebraSpec::sp(2).unwrap().rank(), 2);
    assert_eq!(AlgebraSpec::su(2).unwrap().rank(), 1);
    assert_eq!(AlgebraSpec::so(5).unwrap().rank(), 2);
    assert_eq!(AlgebraSpec::so(4).unwrap().rank(), 2);
}

#[test]
fn group_invariants_reject_bad_matrices() {
    let spec = AlgebraSpec::su(2).unwrap();
    let m = CMat::from_row_slice(2, 2, &[c(2., 0.), c(0., 0.), c(0., 0.), c(0.5, 0.)]);
    assert!(matches!(GroupElement::new(&spec, m), Err(Error::NotInGroup { .. })));
    // unitary with det -1
    let m = CMat::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
    assert!(matches!(GroupElement::new(&spec, m), Err(Error::NotInGroup { .. })));
}

#[test]
fn reprojection_restores_structure() {
    let spec = AlgebraSpec::sp(2).unwrap();
    let mut rng = sampling::rng(4);
    let g = GroupElement::random(&spec, &mut rng);
    let noisy = g.matrix() + CMat::from_fn(4, 4, |i, j| c(1e-7 * (i as f64 - j as f64), 0.0));
    let h = GroupElement::from_matrix_unchecked(&spec, noisy).reproject().unwrap();
    assert!(h.unitarity_defect() < 1e-13);
    assert!(h.family_defect() < 1e-12);
}

#[test]
fn from_matrix_rejects_non_members() {
    let spec = AlgebraSpec::su(2).unwrap();
    let m = CMat::identity(2, 2);
    assert!(matches!(
        AlgebraElement::from_matrix(&spec, &m),
        Err(Error::NotInAlgebra { .. })
    ));
}

proptest! {
    #[test]
    fn matrix_view_round_trips(coords in proptest::collection::vec(-10.0f64..10.0, 10)) {
        let spec = AlgebraSpec::sp(2).unwrap();
        let x = AlgebraElement::from_slice(&spec, &coords).unwrap();
        let back = AlgebraElement::from_matrix(&spec, &x.matrix()).unwrap();
        prop_assert!((back.coords() - x.coords()).norm() <= 1e-12 * x.coords().norm().max(1.0));
    }

    #[test]
    fn bracket_is_antisymmetric(a in proptest::collection::vec(-5.0f64..5.0, 8),
                                b in proptest::collection::vec(-5.0f64..5.0, 8)) {
        let spec = AlgebraSpec::su(3).unwrap();
        let x = AlgebraElement::from_slice(&spec, &a).unwrap();
        let y = AlgebraElement::from_slice(&spec, &b).unwrap();
        let s = x.bracket(&y).unwrap() + y.bracket(&x).unwrap();
        prop_assert!(s.norm() < 1e-12);
    }
}
