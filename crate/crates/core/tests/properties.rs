use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use hopflab::crossed::{check_beta_algebra_map, crossed_product, is_lazy_crossed, CrossedSystem};
use hopflab::families::*;
use hopflab::forms::{conv_inverse_bi, conv_inverse_lin, frac};
use hopflab::galois::*;
use hopflab::kac::{restrict, sigma_from_pairing, CentralPairing};
use hopflab::lazy::*;
use hopflab::oracle::{brute_pairings, enumerate_z2l, OracleConfig};
use hopflab::projrep::{basic_morphism_space, dual_projrep, regular_projrep, tensor_projrep};
use hopflab::*;

fn q() -> Field {
    Field::Rational
}

fn algebras() -> &'static [HopfAlgebra; 3] {
    static A: OnceLock<[HopfAlgebra; 3]> = OnceLock::new();
    A.get_or_init(|| {
        let f = q();
        let klein = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        [sweedler(&f).unwrap(), en_algebra(2, &f).unwrap(), group_algebra(&klein, &f).unwrap()]
    })
}

fn h4() -> &'static HopfAlgebra {
    &algebras()[0]
}

fn lin(h: &HopfAlgebra, v: &[i64]) -> LinForm {
    LinForm::from_fn(h, |i| Scalar::from_i64(h.field(), v[i]))
}

fn bi(h: &HopfAlgebra, v: &[i64]) -> BiForm {
    let n = h.dim();
    BiForm::from_fn(h, |i, j| Scalar::from_i64(h.field(), v[(i * n + j) % v.len()]))
}

fn entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

fn half(t: i64) -> Scalar {
    frac(&q(), t, 2)
}

/// `σ_t ∗ ∂μ` for a lazy `μ` on `H₄`, with `μ` drawn from the lazy forms.
fn lazy_cocycle_h4(t: i64, c: &[i64]) -> Option<BiForm> {
    let h = h4();
    let basis = lazy_form_space(h);
    let mut m = vec![Scalar::zero(&q()); 4];
    for (b, &k) in basis.iter().zip(c) {
        for (x, y) in m.iter_mut().zip(&b.0) {
            x.add_mul(&Scalar::from_i64(&q(), k), y);
        }
    }
    let mu = LinForm(m);
    conv_inverse_lin(h, &mu).ok()?;
    Some(sigma_t(h, &half(t)).unwrap().convolve(&coboundary(&mu, h).unwrap(), h).unwrap())
}

/// `(μ⊗μ) ∗ σ_t ∗ (μ⁻¹∘m)` with `μ(1) = 1`, a normalized left cocycle
/// that is lazy only for special `μ`.
fn gauge_cocycle_h4(t: i64, m: &[i64]) -> Option<BiForm> {
    let h = h4();
    let mut m = m.to_vec();
    m[0] = 1;
    let mu = lin(h, &m);
    let inv = conv_inverse_lin(h, &mu).ok()?;
    let s = sigma_t(h, &half(t)).unwrap();
    Some(mu.tensor_square().convolve(&s, h).unwrap().convolve(&inv.after_mult(h), h).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_is_associative(k in 0usize..3, a in entries(16), b in entries(16), c in entries(16)) {
        let h = &algebras()[k];
        let (a, b, c) = (lin(h, &a), lin(h, &b), lin(h, &c));
        prop_assert_eq!(a.convolve(&b, h).unwrap().convolve(&c, h).unwrap(), a.convolve(&b.convolve(&c, h).unwrap(), h).unwrap());
    }

    #[test]
    fn bilinear_convolution_is_associative(k in 0usize..3, a in entries(7), b in entries(5), c in entries(3)) {
        let h = &algebras()[k];
        let (a, b, c) = (bi(h, &a), bi(h, &b), bi(h, &c));
        prop_assert_eq!(a.convolve(&b, h).unwrap().convolve(&c, h).unwrap(), a.convolve(&b.convolve(&c, h).unwrap(), h).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(k in 0usize..3, a in entries(16), b in entries(11)) {
        let h = &algebras()[k];
        let a = lin(h, &a);
        if let Ok(inv) = conv_inverse_lin(h, &a) {
            prop_assert_eq!(a.convolve(&inv, h).unwrap(), LinForm::counit(h));
            prop_assert_eq!(inv.convolve(&a, h).unwrap(), LinForm::counit(h));
        }
        let b = bi(h, &b);
        if let Ok(inv) = conv_inverse_bi(h, &b) {
            prop_assert_eq!(b.convolve(&inv, h).unwrap(), BiForm::counit(h));
            prop_assert_eq!(inv.convolve(&b, h).unwrap(), BiForm::counit(h));
        }
    }

    #[test]
    fn cocommutative_forms_are_lazy(n in 2usize..5, v in entries(9)) {
        let h = group_algebra(&FiniteGroup::cyclic(n), &q()).unwrap();
        let s = bi(&h, &v);
        prop_assert!(is_lazy2(&s, &h));
    }

    #[test]
    fn lazy_cocycles_form_a_group(t in -4i64..=4, u in -4i64..=4, c in entries(4), d in entries(4)) {
        let h = h4();
        let (Some(s), Some(w)) = (lazy_cocycle_h4(t, &c), lazy_cocycle_h4(u, &d)) else { return Ok(()) };
        let p = s.convolve(&w, h).unwrap();
        prop_assert!(is_lazy2(&p, h) && is_left_cocycle(&p, h));
        prop_assert!(is_left_cocycle(&conv_inverse_bi(h, &s).unwrap(), h));
        prop_assert!(is_right_cocycle(&s, h));
    }

    #[test]
    fn coboundary_identities(k in 0usize..3, m in entries(16), p in entries(16), c in entries(8), t in -4i64..=4) {
        let h = &algebras()[k];
        let mu = lin(h, &m);
        let phi = lin(h, &p);
        prop_assume!(conv_inverse_lin(h, &mu).is_ok() && conv_inverse_lin(h, &phi).is_ok());
        let basis = lazy_form_space(h);
        let mut ml = vec![Scalar::zero(&q()); h.dim()];
        for (b, &k) in basis.iter().zip(c.iter().cycle()) {
            for (x, y) in ml.iter_mut().zip(&b.0) {
                x.add_mul(&Scalar::from_i64(&q(), k), y);
            }
        }
        let ml = LinForm(ml);
        prop_assume!(conv_inverse_lin(h, &ml).is_ok());
        let dml = coboundary(&ml, h).unwrap();
        prop_assert!(is_lazy2(&dml, h));
        prop_assert_eq!(
            coboundary(&ml.convolve(&phi, h).unwrap(), h).unwrap(),
            coboundary(&phi, h).unwrap().convolve(&dml, h).unwrap()
        );
        prop_assert_eq!(coboundary(&mu, h).unwrap() == BiForm::counit(h), mu.is_algebra_map(h).holds());
        if k == 0 {
            let s = sigma_t(h, &half(t)).unwrap();
            prop_assert_eq!(dml.convolve(&s, h).unwrap(), s.convolve(&dml, h).unwrap());
        }
    }

    #[test]
    fn lazy_twist_leaves_structure(t in -4i64..=4, c in entries(4)) {
        let h = h4();
        let Some(s) = lazy_cocycle_h4(t, &c) else { return Ok(()) };
        prop_assert!(doi_twist(h, &s).unwrap().same_structure(h));
    }

    #[test]
    fn r_forms_give_lazy_cocycles(t in -4i64..=4, u in -4i64..=4) {
        let h = h4();
        let f = q();
        let gen = |t: i64| Matrix::from_rows(&f, vec![vec![Scalar::from_i64(&f, -1), Scalar::zero(&f)], vec![Scalar::zero(&f), half(t)]]).unwrap();
        let r = RForm::new(extend_r_form(h, &gen(t)).unwrap(), h).unwrap();
        let s = RForm::new(extend_r_form(h, &gen(u)).unwrap(), h).unwrap();
        let c = rtau_s(&r, &s, h).unwrap();
        prop_assert!(is_lazy2(&c, h) && is_left_cocycle(&c, h));
    }

    #[test]
    fn ad_is_a_homomorphism(k in 0usize..3, a in entries(16), b in entries(16)) {
        let h = &algebras()[k];
        let (g, t) = (lin(h, &a), lin(h, &b));
        prop_assume!(conv_inverse_lin(h, &g).is_ok() && conv_inverse_lin(h, &t).is_ok());
        let lhs = ad_map(&g.convolve(&t, h).unwrap(), h).unwrap();
        let rhs = ad_map(&t, h).unwrap().then(&ad_map(&g, h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_map_bijective_and_gen_antipode(t in -4i64..=4, m in entries(4)) {
        let h = h4();
        let Some(s) = gauge_cocycle_h4(t, &m) else { return Ok(()) };
        prop_assert!(is_left_cocycle(&s, h));
        prop_assert!(check_galois(&galois_object(h, &s, Side::Right).unwrap()));
        let rep = check_gen_antipode(h, &s, &gen_antipode(h, &s).unwrap()).unwrap();
        prop_assert!(rep.passes(), "{:?}", rep);
    }

    #[test]
    fn cotensor_multiplies_classes(t in -4i64..=4, u in -4i64..=4) {
        let h = h4();
        let (st, su) = (sigma_t(h, &half(t)).unwrap(), sigma_t(h, &half(u)).unwrap());
        let c = cotensor(&galois_object(h, &st, Side::Bi).unwrap(), &galois_object(h, &su, Side::Bi).unwrap()).unwrap();
        let target = galois_object(h, &st.convolve(&su, h).unwrap(), Side::Bi).unwrap();
        let delta = delta_into_cotensor(h, &c).unwrap();
        prop_assert!(comodule_map_report(&delta.0, &target, &c.object).unwrap().is_iso());
    }

    #[test]
    fn psi_is_additive(a in entries(3), b in entries(3)) {
        let f = q();
        let e2 = &algebras()[1];
        let s = SuperSpace::sign(2, &f).unwrap();
        let iso = en_bosonization_iso(e2, &s).unwrap();
        let sym = |v: &[i64]| Matrix::from_fn(&f, 2, 2, |i, j| Scalar::from_i64(&f, v[i + j]));
        let (r1, r2) = (sym(&a), sym(&b));
        let sig = |r: &Matrix| exp_twist_cocycle(&s, r).unwrap().pullback(&iso);
        let psi = |x: &BiForm| psi_invariant(x, e2).unwrap();
        let total = psi(&sig(&r1).convolve(&sig(&r2), e2).unwrap());
        prop_assert_eq!(&total, &psi(&sig(&r1)).add(&psi(&sig(&r2))).unwrap());
        prop_assert_eq!(total.add(&total.transpose()).unwrap(), r1.add(&r2).unwrap().scale(&Scalar::from_i64(&f, -2)));
    }

    #[test]
    fn projective_tensor_and_dual(t in -3i64..=3, u in -3i64..=3) {
        let h = h4();
        let (st, su) = (sigma_t(h, &half(t)).unwrap(), sigma_t(h, &half(u)).unwrap());
        let x = regular_projrep(h, &st).unwrap();
        let y = regular_projrep(h, &su).unwrap();
        prop_assert_eq!(tensor_projrep(&x, &y, h).unwrap().sigma, st.convolve(&su, h).unwrap());
        prop_assert_eq!(dual_projrep(&x, h).unwrap().sigma, conv_inverse_bi(h, &st).unwrap());
    }

    #[test]
    fn crossed_laziness_matches_beta(t in -4i64..=4, m in entries(4)) {
        let h = h4();
        let Some(s) = gauge_cocycle_h4(t, &m) else { return Ok(()) };
        let cs = CrossedSystem::scalar(h, &s).unwrap();
        let z = crossed_product(&cs).unwrap();
        prop_assert_eq!(is_lazy_crossed(&cs), check_beta_algebra_map(&cs, &z).holds());
        prop_assert_eq!(is_lazy_crossed(&cs), is_lazy2(&s, h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn taft_invariant_is_additive(a in -3i64..=3, b in -3i64..=3) {
        let gd = taft_datum(3).unwrap();
        let h = monomial_hopf(&gd).unwrap();
        let f = gd.field();
        let id: Vec<usize> = (0..3).collect();
        let sig = |a: i64| {
            let z = galois_monomial(&gd, &trivial_cochain(&gd.group, &f), &id, &Scalar::from_i64(&f, a)).unwrap();
            cocycle_from_cleft(&z, &monomial_section(&gd)).unwrap()
        };
        let (sa, sb) = (sig(a), sig(b));
        prop_assert!(is_lazy2(&sa, &h));
        let p = sa.convolve(&sb, &h).unwrap();
        prop_assert_eq!(twisted_power_invariant(&h, &gd, &p).unwrap(), Scalar::from_i64(&f, a + b));
    }

    #[test]
    fn oracle_agrees_with_predicates(v in prop::collection::vec(0i64..3, 16)) {
        let (h, r) = sweedler_f3();
        let f = h.field().clone();
        let s = BiForm::from_fn(h, |i, j| Scalar::from_i64(&f, v[i * 4 + j]));
        let normalized = check_normalized(&s, h).holds();
        let member = r.z2.contains(&s);
        let passes = normalized && cocycle_report(&s, h).is_lazy_cocycle();
        prop_assert_eq!(member, passes);
    }
}

fn sweedler_f3() -> &'static (HopfAlgebra, hopflab::oracle::Z2LResult) {
    static R: OnceLock<(HopfAlgebra, hopflab::oracle::Z2LResult)> = OnceLock::new();
    R.get_or_init(|| {
        let h = sweedler(&Field::Prime(3)).unwrap();
        let r = enumerate_z2l(&h, &OracleConfig::default()).unwrap();
        (h, r)
    })
}

#[test]
fn dual_of_family_outputs_is_hopf() {
    let f = q();
    let mut hs: Vec<HopfAlgebra> = algebras().to_vec();
    hs.push(taft(3).unwrap());
    hs.push(drinfeld_double(h4()).unwrap());
    hs.push(bosonization(&SuperSpace::sign(2, &f).unwrap()).unwrap());
    for h in &hs {
        assert!(h.verify_hopf_axioms().passes());
        assert!(dual_hopf(h).unwrap().verify_hopf_axioms().passes());
    }
}

#[test]
fn enumerated_members_pass_predicates() {
    let (h, r) = sweedler_f3();
    for s in &r.z2 {
        assert!(check_normalized(s, h).holds());
        assert!(cocycle_report(s, h).is_lazy_cocycle());
    }
}

#[test]
fn cosets_partition_cocycles() {
    let f5 = Field::Prime(5);
    let k = group_algebra(&FiniteGroup::cyclic(2), &f5).unwrap();
    let kk = tensor_hopf(&k, &k).unwrap();
    let r = enumerate_z2l(&kk, &OracleConfig::default()).unwrap();
    let mut seen = HashSet::new();
    for rep in &r.representatives {
        let coset: Vec<BiForm> = r.b2.iter().map(|b| rep.convolve(b, &kk).unwrap()).collect();
        for c in &coset {
            assert!(r.z2.contains(c));
            assert!(seen.insert(format!("{:?}", c.0.entries())), "cosets overlap");
        }
    }
    assert_eq!(seen.len(), r.z2.len());
}

#[test]
fn enumeration_is_deterministic_across_threads() {
    let h = sweedler(&Field::Prime(5)).unwrap();
    let one = enumerate_z2l(&h, &OracleConfig { threads: 1, ..OracleConfig::default() }).unwrap();
    let many = enumerate_z2l(&h, &OracleConfig { threads: 4, ..OracleConfig::default() }).unwrap();
    assert_eq!(one.z2, many.z2);
    assert_eq!(one.quotient, many.quotient);
}

#[test]
fn pairings_restrict_trivially_and_commute() {
    let f5 = Field::Prime(5);
    let k = group_algebra(&FiniteGroup::cyclic(2), &f5).unwrap();
    let mp = MatchedPair::trivial(&k, &k).unwrap();
    let kk = tensor_hopf(&k, &k).unwrap();
    let zp = brute_pairings(&mp, &OracleConfig::default()).unwrap();
    let eps = BiForm::counit(&k);
    for b in &zp {
        assert_eq!(restrict(&sigma_from_pairing(b), &mp).unwrap(), (eps.clone(), eps.clone()));
    }
    let as_form = |p: &CentralPairing| LinForm(p.matrix().entries().to_vec());
    for a in &zp {
        for b in &zp {
            let (x, y) = (as_form(a), as_form(b));
            assert_eq!(x.convolve(&y, &kk).unwrap(), y.convolve(&x, &kk).unwrap());
        }
    }
}

#[test]
fn different_classes_admit_no_morphisms() {
    let f3 = Field::Prime(3);
    let h = sweedler(&f3).unwrap();
    let units = hopflab::oracle::enumerate_lazy_units(&h, &OracleConfig::default()).unwrap();
    let x = regular_projrep(&h, &sigma_t(&h, &Scalar::from_i64(&f3, 1)).unwrap()).unwrap();
    let y = regular_projrep(&h, &sigma_t(&h, &Scalar::from_i64(&f3, 2)).unwrap()).unwrap();
    for mu in &units {
        assert!(basic_morphism_space(&x, &y, mu, &h).is_empty());
    }
}

/// `H²_L` of `A(d, n, N, α, q)` over small prime fields.
#[test]
fn cyclic_data_quotient_orders() {
    let cases = [
        // d = n = N: k
        ((3, 3, 3, 1), 7, 2, 7),
        // otherwise: k·/(k·)^(N/n)
        ((2, 2, 4, 1), 5, 2, 2),
        // d = n < N, gcd(N/n, n) = 1, α = N/n: k·/(k·)^(N/n) × k
        ((2, 2, 6, 3), 5, 4, 5),
        ((2, 2, 6, 3), 7, 6, 21),
    ];
    for ((d, n, nn, al), p, qv, expect) in cases {
        let f = Field::Prime(p);
        let gd = CyclicDatum::new(d, n, nn, al, Scalar::from_i64(&f, qv)).unwrap().group_datum().unwrap();
        let h = monomial_hopf(&gd).unwrap();
        let r = enumerate_z2l(&h, &OracleConfig::default()).unwrap();
        assert_eq!(r.quotient.order, expect, "datum ({d},{n},{nn},{al}) over F{p}");
        assert!(r.quotient.is_cyclic());
    }
}
