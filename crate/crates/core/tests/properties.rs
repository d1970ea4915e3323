use proptest::prelude::*;

use qserre::algebras::{build_q4, build_u, build_vcheck};
use qserre::derivations::{self as der};
use qserre::free::{self, FreeElt};
use qserre::pbw::{AlgebraSpec, Element, Mono};
use qserre::RatF;

fn laurent_term() -> impl Strategy<Value = (i64, i32, i32)> {
    (-5i64..=5, -2i32..=2, -2i32..=2)
}

fn poly_ratf() -> impl Strategy<Value = RatF> {
    prop::collection::vec(laurent_term(), 1..3)
        .prop_map(|ts| ts.into_iter().fold(RatF::zero(), |acc, (c, a, b)| &acc + &(&RatF::from_int(c) * &RatF::monomial(a, b))))
}

fn ratf() -> impl Strategy<Value = RatF> {
    (poly_ratf(), poly_ratf()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

fn element(nvars: usize, lo: i32, hi: i32, terms: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((prop::collection::vec(lo..=hi, nvars), -3i64..=3, -1i32..=1), 1..=terms).prop_map(|ts| {
        let mut e = Element::zero();
        for (exps, c, a) in ts {
            let c = if c == 0 { 1 } else { c };
            e.add_term(Mono(exps), &RatF::from_int(c) * &RatF::monomial(a, 0));
        }
        e
    })
}

fn u_element() -> impl Strategy<Value = Element> {
    element(4, 0, 1, 3)
}

fn free_element() -> impl Strategy<Value = FreeElt> {
    prop::collection::vec((prop::collection::vec(0u8..=1, 0..=4), -3i64..=3), 1..=4).prop_map(|ts| {
        let mut f = FreeElt::zero();
        for (w, c) in ts {
            f.add_term(w, RatF::from_int(c));
        }
        f
    })
}

/// Rewrites a PBW element of `U` back into the free algebra through `X1..X4`.
fn lift(spec: &AlgebraSpec, x: &Element) -> FreeElt {
    let gens: Vec<FreeElt> = spec.vars().iter().map(|v| free::named(v).expect("generator")).collect();
    let mut out = FreeElt::zero();
    for (m, c) in x {
        let mut w = FreeElt::scalar(RatF::one());
        for (i, &e) in m.0.iter().enumerate() {
            w = w.mul(&gens[i].pow(e as u32));
        }
        out = out.add(&w.scale(c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(a in ratf(), b in ratf(), c in ratf()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratf_canonical_form_round_trips(a in ratf()) {
        let back: RatF = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn u_is_associative(x in u_element(), y in u_element(), z in u_element()) {
        let u = build_u();
        let s = &u.spec;
        prop_assert_eq!(s.mul(&s.mul(&x, &y), &z), s.mul(&x, &s.mul(&y, &z)));
    }

    #[test]
    fn vcheck_is_associative(x in element(6, 0, 1, 2), y in element(6, -1, 1, 2), z in element(6, 0, 1, 2)) {
        let v = build_vcheck();
        let s = &v.spec;
        let fix = |e: &Element| Element::from_terms(e.iter().map(|(m, c)| {
            let mut m = m.clone();
            for k in 2..6 { m.0[k] = m.0[k].abs(); }
            (m, c.clone())
        }));
        let (x, y, z) = (fix(&x), fix(&y), fix(&z));
        prop_assert_eq!(s.mul(&s.mul(&x, &y), &z), s.mul(&x, &s.mul(&y, &z)));
    }

    #[test]
    fn ordered_products_are_normal(m in prop::collection::vec(0i32..=2, 4)) {
        let u = build_u();
        let s = &u.spec;
        let mut p = s.one();
        for (i, &e) in m.iter().enumerate() {
            p = s.mul(&p, &s.pow(&s.var(i), e as u32));
        }
        prop_assert_eq!(p, Element::mono(Mono(m)));
    }

    #[test]
    fn products_add_weights(a in prop::collection::vec(0i32..=2, 4), b in prop::collection::vec(0i32..=2, 4)) {
        let u = build_u();
        let s = &u.spec;
        let (a, b) = (Mono(a), Mono(b));
        let w = (s.weight_of(&a).0 + s.weight_of(&b).0, s.weight_of(&a).1 + s.weight_of(&b).1);
        let p = s.mul_mono(&a, &b);
        prop_assert_eq!(s.is_homogeneous(&p), Some(w));
    }

    #[test]
    fn laurent_inverses_are_coherent(x in element(4, -2, 2, 1), y in element(4, -2, 2, 2)) {
        let q4 = build_q4();
        let s = &q4.spec;
        let inv = s.inverse(&x).unwrap();
        prop_assert_eq!(s.mul(&x, &inv), s.one());
        prop_assert_eq!(s.mul(&inv, &x), s.one());
        prop_assert_eq!(s.mul(&s.mul(&x, &y), &inv), s.mul(&x, &s.mul(&y, &inv)));
    }

    #[test]
    fn pbw_model_is_faithful(f in free_element()) {
        let u = build_u();
        let image = f.map_to(&u.spec, &u.e1, &u.e2);
        let diff = f.sub(&lift(&u.spec, &image));
        let (member, _) = free::ideal_member(&diff, diff.degree().max(f.degree())).unwrap();
        prop_assert!(member);
        if !image.is_zero() {
            let (member, _) = free::ideal_member(&f, f.degree()).unwrap();
            prop_assert!(!member);
        }
    }

    #[test]
    fn leibniz_holds_for_valid_derivations(
        t in u_element(), m1 in -3i64..=3, m2 in -3i64..=3, x in u_element(), y in u_element()
    ) {
        let u = build_u();
        let s = &u.spec;
        let d = der::inner(s, &t)
            .add(&der::d1(s).scale(&RatF::from_int(m1)))
            .add(&der::d2(s).scale(&RatF::from_int(m2)));
        prop_assert!(der::is_valid(s, &d));
        let lhs = d.apply(s, &s.mul(&x, &y));
        let rhs = s.mul(&d.apply(s, &x), &y).add(&s.mul(&x, &d.apply(s, &y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inner_is_linear(a in u_element(), b in u_element(), k in ratf()) {
        let u = build_u();
        let s = &u.spec;
        let lhs = der::inner(s, &a.add(&b.scale(&k)));
        let rhs = der::inner(s, &a).add(&der::inner(s, &b).scale(&k));
        prop_assert_eq!(lhs.images, rhs.images);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn decompose_round_trips(
        terms in prop::collection::vec((prop::collection::vec(0i32..=2, 4), -4i64..=4), 1..=3),
        m1 in -3i64..=3,
        m2 in -3i64..=3,
    ) {
        let u = build_u();
        let s = &u.spec;
        let mut t = Element::zero();
        for (m, c) in terms {
            let m = Mono(m);
            if m.degree() <= 4 {
                t.add_term(m, RatF::from_int(c));
            }
        }
        let (m1, m2) = (RatF::from_int(m1), RatF::from_int(m2));
        let d = der::inner(s, &t).add(&der::d1(s).scale(&m1)).add(&der::d2(s).scale(&m2));
        let dec = der::decompose(&u, &d, 5).expect("decomposition exists");
        prop_assert_eq!(dec.mu1, m1);
        prop_assert_eq!(dec.mu2, m2);
        prop_assert!(dec.t.sub(&t).as_scalar().is_some() || dec.t.sub(&t).is_zero());
    }
}
