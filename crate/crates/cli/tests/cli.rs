use std::fs;
use std::process::{Command, Output};

fn dcoset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcoset"))
        .args(args)
        .env_remove("DCOSET_MAX_ALPHA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn dims_prints_every_route() {
    let o = dcoset(&["dims", "--alpha", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(" 34\n").count(), 4, "{}", stdout(&o));
}

#[test]
fn normalize_word() {
    let o = dcoset(&["normalize", "--alpha", "2", "--word", "T2 T1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "A((12))Θ2 - A((12))Θ1 + Θ1Θ2");
    let o = dcoset(&["normalize", "--alpha", "2", "--word", "T1 T1 A(12)"]);
    assert_eq!(stdout(&o).trim(), "ν·A((12)) + (ν - 1)·A((12))Θ2");
}

#[test]
fn crosscheck_passes() {
    let o = dcoset(&["verify", "crosscheck", "--alpha", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["suite"], "crosscheck");
}

#[test]
fn relations_report_carries_the_coset_warning() {
    let o = dcoset(&["verify", "relations", "--alpha", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let warnings = report["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("enumerated 4")));
    assert!(stderr(&o).contains("WARN coset size"));
}

#[test]
fn table_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = dcoset(&["table", "--alpha", "2", "--format", "json", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let o = dcoset(&["reread", "--in", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, first);
}

#[test]
fn evaluated_csv() {
    let o = dcoset(&["table", "--alpha", "1", "--nu", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("p,q,r,value\n"));
    assert!(text.contains("2,2,1,3/1\n"), "{text}");
    assert!(text.contains("2,2,2,2/1\n"), "{text}");
}

#[test]
fn gram_at_five() {
    let o = dcoset(&["gram", "--alpha", "1", "--nu", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  1/1 0/1\n  0/1 5/1\n"), "{text}");
    assert!(text.contains("positive definite: yes"));
    let o = dcoset(&["gram", "--alpha", "1", "--nu=-1/2"]);
    assert!(stdout(&o).contains("positive definite: no"));
}

#[test]
fn limit_table() {
    let o = dcoset(&["limit", "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equals the rook monoid table: yes"));
}

#[test]
fn exit_codes() {
    assert_eq!(dcoset(&["dims"]).status.code(), Some(2));
    assert_eq!(dcoset(&["table", "--alpha", "1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(dcoset(&["normalize", "--alpha", "2", "--word", "T3"]).status.code(), Some(2));
    assert_eq!(dcoset(&["verify", "crosscheck", "--alpha", "2", "--n", "1"]).status.code(), Some(2));
    let o = dcoset(&["dims", "--alpha", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("alpha"));
    assert_eq!(dcoset(&["verify", "crosscheck", "--alpha", "4", "--n", "5"]).status.code(), Some(3));
}

#[test]
fn capacity_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_dcoset"))
        .args(["verify", "dims", "--alpha", "7"])
        .env("DCOSET_MAX_ALPHA", "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["metrics"]["rook_enumeration"], "130922");
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let o = dcoset(&["--jobs", "2", "verify", "limit", "--alpha", "2"]);
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["metrics"].as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(run(), run());
}
