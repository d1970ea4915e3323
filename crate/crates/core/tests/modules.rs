use qserre::algebras::{self, build_u, build_ugeq0, build_vcheck};
use qserre::free::{self, FreeElt};
use qserre::hopf::{self, auto::AutoCandidate};
use qserre::pbw::doc::{parse_spec, to_json};
use qserre::suites::{U_JSON, U_MISPRINT_JSON, U_NONCONFLUENT_JSON};
use qserre::{Error, RatF};

#[test]
fn shipped_spec_round_trips() {
    let u = build_u();
    assert_eq!(parse_spec(U_JSON).unwrap(), u.spec);
    assert_eq!(parse_spec(&to_json(&u.spec)).unwrap(), u.spec);
}

#[test]
fn nonconfluent_spec_names_the_overlap() {
    let err = parse_spec(U_NONCONFLUENT_JSON).unwrap_err().to_string();
    assert!(err.contains("not confluent on overlap X4 X3 X1"), "{err}");
}

#[test]
fn misprinted_delta_is_still_confluent_but_breaks_x2() {
    let m = parse_spec(U_MISPRINT_JSON).unwrap();
    let x2 = m.mul(&m.var(0), &m.var(3)).sub(&m.mul(&m.var(3), &m.var(0)).scale(&RatF::parse("r^2").unwrap()));
    assert_eq!(m.format(&x2.sub(&m.var(1))), "(r - 1)*X2");
}

#[test]
fn malformed_documents_report_positions() {
    let err = parse_spec("{\n  \"vars\": [\"X1\",\n  }").unwrap_err().to_string();
    assert!(err.contains("line 3"), "{err}");
    let err = parse_spec(r#"{"vars": ["X1", "X2"], "q": {"(2,1)": "s^-2"}, "extra": 1}"#).unwrap_err().to_string();
    assert!(err.contains("unknown field"), "{err}");
    let err = parse_spec(r#"{"vars": ["X1", "X2"], "q": {"(2,1)": "0"}}"#).unwrap_err();
    assert!(matches!(err, Error::InvalidSpec(_)), "{err}");
}

#[test]
fn lambda_has_the_closed_form() {
    let l = RatF::parse("r / ((r^2 - s^2) (r - s))").unwrap();
    assert_eq!(algebras::lambda(), l);
    assert_eq!(l.to_string(), "r/(r^3 - r^2*s - r*s^2 + s^3)");
}

#[test]
fn oracle_rejects_too_small_bounds_and_non_members() {
    let (r1, _) = free::serre_relators();
    assert!(matches!(free::ideal_member(&r1, 2), Err(Error::Usage(_))));
    let (member, cert) = free::ideal_member(&r1, 3).unwrap();
    assert!(member);
    assert_eq!(cert.unwrap().expand(), r1);
    let e1e2 = FreeElt::e1().mul(&FreeElt::e2());
    assert!(!free::ideal_member(&e1e2, 4).unwrap().0);
}

#[test]
fn solved_antipodes_print_as_expected() {
    let u = build_ugeq0();
    let h = hopf::solved_hopf_data(&u);
    assert_eq!(u.spec.format(&h.antipode[2]), "-w1^(-1) X1");
    assert_eq!(u.spec.format(&h.antipode[3]), "-w2^(-1) X4");
    let v = build_vcheck();
    let h = hopf::solved_hopf_data(&v);
    assert_eq!(v.spec.format(&h.antipode[0]), "k1^(-1)");
}

#[test]
fn group_likes_invert_inside_the_window() {
    let v = build_vcheck();
    let basis = hopf::window_monomials(&v.spec, 1, 2);
    let k = v.parse("k1 k2^-1").unwrap();
    let inv = hopf::find_inverse(&v.spec, &k, &basis).unwrap();
    assert_eq!(inv, v.parse("k1^-1 k2").unwrap());
    assert!(hopf::find_inverse(&v.spec, &v.parse("X1").unwrap(), &basis).is_none());
}

#[test]
fn candidate_literals_parse_strictly() {
    let c = AutoCandidate::parse("sigma=id a=1 b=2 c=1 d=-3").unwrap();
    assert_eq!(c.exps, [1, 2, 1, -3]);
    assert_eq!(AutoCandidate::parse(&c.to_string()).unwrap().exps, c.exps);
    assert!(AutoCandidate::parse("a=1 b=2").is_err());
    assert!(AutoCandidate::parse("sigma=id lambda1=0").is_err());
    assert!(AutoCandidate::parse("sigma=(123)").is_err());
    assert!(AutoCandidate::parse("sigma=swap").unwrap().swap);
}

#[test]
fn candidate_is_an_automorphism_but_not_hopf() {
    let v = build_vcheck();
    let c = AutoCandidate::parse("sigma=id a=1 b=2 c=1 d=-3").unwrap();
    assert!(hopf::auto::is_automorphism(&v, &c).automorphism());
    let h = hopf::solved_hopf_data(&v);
    assert!(!hopf::all_ok(&hopf::auto::delta_compatibility(&v, &h, &c)));
}

#[test]
fn named_algebras_resolve() {
    for n in ["u", "gru", "b4", "b3", "b2", "q4", "ugeq0", "vcheck"] {
        assert!(algebras::by_name(n).is_ok(), "{n}");
    }
    assert!(algebras::by_name("sl3").is_err());
}

#[test]
fn e3_is_x2_in_u() {
    let u = build_u();
    assert_eq!(u.parse("e3").unwrap(), u.spec.var(1));
    assert_eq!(u.parse("e2 e3 - s^-2 e3 e2").unwrap(), u.spec.var(2));
}
