use std::collections::BTreeSet;

use qserre::report::{Config, Status, VerificationReport};
use qserre::suites::{explain, run_suite, SUITES};
use qserre::Error;

#[test]
fn full_run_has_no_failures_and_expected_discrepancies() {
    let report = run_suite("all", &Config::default(), false).unwrap();
    assert!(report.ids_unique());
    let fails: Vec<&str> = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert!(fails.is_empty(), "failing checks: {fails:?}");
    let disc: BTreeSet<&str> = report.checks.iter().filter(|c| c.status == Status::Discrepancy).map(|c| c.id.as_str()).collect();
    let expected: BTreeSet<&str> = [
        "ore.delta4.X1",
        "torus.T1T4",
        "derivations.D2-printed",
        "derivations.alpha-statement",
        "derivations.delta-T3",
        "hopf.ugeq0.antipode-printed",
        "hopf.vcheck.antipode-printed",
        "hopf.vcheck.header",
    ]
    .into_iter()
    .collect();
    assert_eq!(disc, expected);
    assert!(report.timing.is_none());
    for c in &report.checks {
        assert!(explain(&c.id).is_some(), "no explanation for {}", c.id);
        let words = c.paper_anchor.split_whitespace().count();
        assert!((3..=6).contains(&words), "anchor length for {}: {}", c.id, c.paper_anchor);
    }
    let back = VerificationReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let c = Config::default();
    for s in ["derivations", "torus", "hopf-axioms"] {
        assert_eq!(run_suite(s, &c, false).unwrap().to_json(), run_suite(s, &c, false).unwrap().to_json());
    }
}

#[test]
fn lemma12_gives_six_passes() {
    let r = run_suite("lemma12", &Config::default(), false).unwrap();
    assert_eq!(r.summary().pass, 6);
    assert_eq!(r.checks.len(), 6);
}

#[test]
fn derivations_suite_flags_printed_d2() {
    let r = run_suite("derivations", &Config::default(), false).unwrap();
    let rec = r.get("derivations.D2-printed").unwrap();
    assert_eq!(rec.status, Status::Discrepancy);
    assert_eq!(rec.residual, "X3");
}

#[test]
fn timing_is_opt_in() {
    let r = run_suite("perm-lemma", &Config::default(), true).unwrap();
    assert!(r.timing.as_ref().unwrap().contains_key("perm-lemma"));
}

#[test]
fn numeric_sample_fills_residuals() {
    let c = Config { numeric_sample: Some(["2".into(), "3".into()]), ..Config::default() };
    let r = run_suite("derivations", &c, false).unwrap();
    assert_eq!(r.get("derivations.D2-printed").unwrap().numeric_residual.as_deref(), Some("[1]"));
    let r = run_suite("ore-data", &c, false).unwrap();
    // (r - 1) X2 at r = 2
    assert_eq!(r.get("ore.delta4.X1").unwrap().numeric_residual.as_deref(), Some("[1]"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert!(matches!(run_suite("nope", &Config::default(), false), Err(Error::Usage(_))));
    assert_eq!(SUITES.len(), 17);
}

#[test]
fn explain_cites_anchor() {
    let t = explain("torus.T1T4").unwrap();
    assert!(t.contains("describes the relations between the variables"));
    assert!(t.contains("T4 X2"));
    assert!(explain("no-such-check").is_none());
}
