use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spectral-ds"));
    c.env_remove("SPECTRAL_DS_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

/// `(exact, multiplicity)` pairs of a JSON spectrum.
fn entries(spectrum: &Value) -> Vec<(String, u64)> {
    spectrum
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["value"]["exact"].as_str().unwrap().to_string(),
                e["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect()
}

fn pairs(v: &[(&str, u64)]) -> Vec<(String, u64)> {
    v.iter().map(|(s, k)| (s.to_string(), *k)).collect()
}

#[test]
fn spectrum_of_cone_over_petersen() {
    let (code, v) = json(&["spectrum", "--kind", "Q", "--graph", "mc(1,petersen)", "--json"]);
    assert_eq!(code, 0);
    for key in ["tool", "version", "command", "input", "result"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["tool"], "spectral-ds");
    assert_eq!(v["command"], "spectrum");
    assert_eq!(entries(&v["result"]["spectrum"]), pairs(&[("12", 1), ("5", 6), ("2", 4)]));
    assert_eq!(v["result"]["spectrum"][1]["value"]["numeric"].as_f64(), Some(5.0));
}

#[test]
fn closed_form_laplacian_at_three() {
    let (code, v) = json(&["closed-form", "--kind", "L", "--w", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["matches_direct"], true);
    assert_eq!(
        entries(&v["result"]["spectrum"]),
        pairs(&[("13", 3), ("8", 4), ("5", 5), ("0", 1)])
    );
}

#[test]
fn star_and_square_plus_vertex_are_cospectral() {
    let (code, v) = json(&["cospectral", "--kind", "A", "--graph", "K1,4", "--graph", "C4+K1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["cospectral"], true);
    assert_eq!(v["result"]["isomorphic"], false);
    let out = run(&["cospectral", "--kind", "Q", "--graph", "K1,4", "--graph", "C4+K1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["cospectral"], false);
}

#[test]
fn usage_errors_exit_one_with_text_on_stderr() {
    for args in [
        &["frobnicate"][..],
        &["spectrum", "--kind", "Z", "--graph", "K3"],
        &["spectrum", "--kind", "A", "--graph", "K3", "--bogus"],
        &["spectrum", "--kind", "A", "--graph", "K3~"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn scope_refusals_exit_three() {
    let out = run(&["ds-verify", "--kind", "A", "--graph", "C9", "--scope", "all-graphs"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["census", "--order", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ds_verify_finds_the_star_mate() {
    let (code, v) = json(&[
        "ds-verify", "--kind", "A", "--graph", "K1,4", "--scope", "all-graphs", "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["determined"], false);
    let mates = v["result"]["mates"].as_array().unwrap();
    assert_eq!(mates.len(), 1);
    let (_, same) = json(&["cospectral", "--kind", "A", "--graph", "K1,4", "--graph", mates[0].as_str().unwrap(), "--json"]);
    assert_eq!(same["result"]["cospectral"], true);
}

#[test]
fn census_counts_and_grouping() {
    let (code, v) = json(&["census", "--order", "5", "--group-by", "A", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 34);
    let classes = v["result"]["cospectral_classes"].as_array().unwrap();
    assert!(classes.iter().any(|c| c.as_array().unwrap().len() == 2));
}

#[test]
fn bounds_and_audit_run() {
    let (code, v) = json(&["bounds", "--graph", "mc(1,petersen)", "--json"]);
    assert_eq!(code, 0);
    assert!(v["result"]["bounds"].as_array().unwrap().iter().all(|b| b["holds"] == true));
    let (code, v) = json(&["audit", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["discrepancies"], 4);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["spectrum", "--kind", "A", "--graph", "mc(2,petersen)", "--json"][..],
        &["charpoly", "--kind", "L", "--graph", "petersen", "--json"],
        &["degree-sequences", "--kind", "Q", "--graph", "mc(1,petersen)", "--json"],
        &["census", "--order", "6", "--group-by", "Q", "--json"],
        &["audit", "--json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

fn verdict_with_cache(dir: &Path) -> Value {
    let (code, mut v) = json(&[
        "--cache-dir",
        dir.to_str().unwrap(),
        "ds-verify",
        "--kind",
        "Q",
        "--graph",
        "mc(1,petersen)",
        "--scope",
        "degree-sequences",
        "--json",
    ]);
    assert_eq!(code, 0);
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn cache_does_not_change_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let cold = verdict_with_cache(dir.path());
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some(), "cache was not written");
    let warm = verdict_with_cache(dir.path());
    assert_eq!(cold, warm);
    assert_eq!(cold["result"]["determined"], true);
}
