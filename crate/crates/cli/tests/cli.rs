//! End-to-end runs of the `qtorus` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtorus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn result(out: &Output) -> Value {
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert!(doc["convention_ledger"].is_object());
    assert_eq!(doc["config"]["seed"], 7);
    doc["result"].clone()
}

#[test]
fn trivial_idempotent_pairs_with_xi0() {
    let out = run(&["pair", "--cocycle", "xi0", "--idempotent", "e1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result(&out)["value"], "-1 * h^-1 * theta^-1");
}

#[test]
fn rieffel_pairs_with_xi3_and_reports_components() {
    let out = run(&["pair", "--cocycle", "xi3", "--idempotent", "e2", "--report"]);
    assert_eq!(out.status.code(), Some(0));
    let r = result(&out);
    assert_eq!(r["value"], "h * theta^-1");
    assert_eq!(r["psi_report"]["components"].as_array().unwrap().len(), 2);
}

#[test]
fn violated_constraint_exits_with_usage_code() {
    let out = run(&["rieffel", "--alpha", "0.35", "--eps", "0.2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha + eps"));
}

#[test]
fn unknown_cocycle_is_a_usage_error() {
    let out = run(&["pair", "--cocycle", "xi7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cohomology_dimensions() {
    let out = run(&["cohomology", "--cutoff", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = result(&out);
    assert_eq!(r["dims"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(r["periodic"], serde_json::json!([4, 4]));
}

#[test]
fn numeric_backend_matches_exact_value() {
    let out = run(&["--backend", "numeric", "--theta", "2", "pair", "--cocycle", "xi0", "--idempotent", "e2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = result(&out);
    let c = &r["value_series"][0]["coeff"];
    assert!((c["re"].as_f64().unwrap() + 0.15).abs() < 1e-12, "{}", r);
}

#[test]
fn rieffel_writes_report_file() {
    let path = std::env::temp_dir().join(format!("qtorus-rieffel-{}.json", std::process::id()));
    let out = run(&["rieffel", "--grid", "200", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("idempotent_exact"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["result"]["integral_f"], "3/10");
    let _ = std::fs::remove_file(path);
}

#[test]
fn star_of_modes() {
    let out = run(&["star", "--f", "1,0", "--g", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result(&out)["method"], "moyal");
}

#[test]
fn idempotent_from_file() {
    let path = std::env::temp_dir().join(format!("qtorus-one-{}.json", std::process::id()));
    let one = r#"{"terms": [{"n": 0, "coeff": [{"k": [0, 0], "series": [{"order": 0, "coeff": "1"}]}]}]}"#;
    std::fs::write(&path, one).unwrap();
    let out = run(&["pair", "--cocycle", "xi0", "--idempotent", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result(&out)["value"], "-1 * h^-1 * theta^-1");
    let _ = std::fs::remove_file(path);
}
