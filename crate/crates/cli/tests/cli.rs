use std::path::PathBuf;
use std::process::{Command, Output};

fn qserre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qserre")).args(args).env_remove("QSERRE_DEGBOUND").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn spec_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/specs").join(name)
}

fn json(path: &std::path::Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_writes_versioned_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lemma12.json");
    let o = qserre(&["verify", "lemma12", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lemma12: 6 pass, 0 fail, 0 discrepancy"));
    let v = json(&out);
    assert_eq!(v["schema"], "report/v1");
    assert_eq!(v["config"]["degbound"], 6);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
    assert!(v.get("timing").is_none());
    let first = &v["checks"][0];
    for key in ["id", "paper_anchor", "status", "residual", "note"] {
        assert!(first.get(key).is_some(), "{key}");
    }
}

#[test]
fn discrepancies_do_not_fail_the_run() {
    let o = qserre(&["verify", "derivations"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disc  derivations.D2-printed"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        assert_eq!(qserre(&["verify", "torus", "--out", p.to_str().unwrap()]).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn environment_sets_the_degree_bound() {
    let o = Command::new(env!("CARGO_BIN_EXE_qserre")).args(["verify", "lemma12", "--json"]).env("QSERRE_DEGBOUND", "7").output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["degbound"], 7);
    let o = qserre(&["verify", "lemma12", "--degbound", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["degbound"], 5);
}

#[test]
fn timing_and_numeric_sample_are_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = qserre(&["verify", "derivations", "--timing", "--numeric-sample", "2", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&out);
    assert!(v["timing"]["derivations"].is_number());
    let rec = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "derivations.D2-printed").unwrap();
    assert_eq!(rec["numeric_residual"], "[1]");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(qserre(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qserre(&["verify"]).status.code(), Some(2));
    assert_eq!(qserre(&["verify", "lemma12", "--degbound", "0"]).status.code(), Some(2));
    assert_eq!(qserre(&["verify", "lemma12", "--numeric-sample", "x", "1"]).status.code(), Some(2));
    assert_eq!(qserre(&["explain", "nothing-here"]).status.code(), Some(2));
    let bad = Command::new(env!("CARGO_BIN_EXE_qserre")).args(["verify", "lemma12"]).env("QSERRE_DEGBOUND", "six").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn ingest_accepts_shipped_spec_and_rejects_nonconfluent() {
    let o = qserre(&["ingest", spec_file("u.json").to_str().unwrap(), "--compare", "u"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equal to U"));
    let o = qserre(&["ingest", spec_file("u_nonconfluent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not confluent on overlap X4 X3 X1"));
}

#[test]
fn ingest_reports_json_positions() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\n  \"vars\": [\"X1\"],\n  \"q\": {\"(2,1)\": \"s\"},\n}\n").unwrap();
    let o = qserre(&["ingest", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn explain_names_anchor_and_computation() {
    let o = qserre(&["explain", "torus.T1T4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("anchor: \"describes the relations between the variables\""));
    assert!(s.contains("B3"));
}

#[test]
fn derivation_check_flags_printed_d2() {
    let o = qserre(&["derivations", "check", "X2=X2", "X3=X3", "X4=X4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  leibniz.relation(4,2)"));
    let o = qserre(&["derivations", "check", "X2=X2", "X3=2 X3", "X4=X4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mu1 = 0, mu2 = 1"));
    assert_eq!(qserre(&["derivations", "check", "X9=X1"]).status.code(), Some(2));
}

#[test]
fn derivation_scan_totals_two() {
    let o = qserre(&["derivations", "scan", "--window", "1", "--degbound", "5", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("outer dimension 2"));
}

#[test]
fn hopf_commands() {
    let o = qserre(&["hopf", "verify", "--algebra", "vcheck"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disc  printed.convolution"));
    assert_eq!(qserre(&["hopf", "verify", "--algebra", "u"]).status.code(), Some(2));
    let o = qserre(&["hopf", "check-candidate", "sigma=id a=1 b=2 c=1 d=-3"]);
    assert!(stdout(&o).contains("pass  theta.invertible"));
    assert_eq!(o.status.code(), Some(1));
    let o = qserre(&["hopf", "check-candidate", "sigma=id lambda1=1 lambda2=1 gamma1=5 gamma2=7"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qserre(&["hopf", "auto-scan", "--window", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("auto(0,0,0,0)"));
    assert_eq!(qserre(&["hopf", "check-candidate", "a=1"]).status.code(), Some(2));
}
