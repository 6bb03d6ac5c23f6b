use std::io::Write;
use std::process::{Command, Output, Stdio};

use crossing_ledger::io::emit;
use crossing_ledger::straight_line::straight_line_drawing;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_crossing-ledger"));
    c.env_remove("CROSSING_LEDGER_MODE");
    c
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn generated(n: usize) -> String {
    let out = bin().args(["generate", "--n", &n.to_string()]).output().unwrap();
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

/// Edge `long` crossed by four disjoint short edges.
fn four_crossings() -> String {
    let mut names = vec!["l".to_string(), "r".to_string()];
    let mut pts = vec![(0.0, 0.0), (10.0, 0.0)];
    let mut edges = vec![("long".to_string(), 0, 1)];
    for i in 0..4 {
        let x = 2.0 + 2.0 * i as f64;
        names.push(format!("t{i}"));
        names.push(format!("b{i}"));
        pts.push((x, 1.0));
        pts.push((x, -1.0));
        edges.push((format!("v{i}"), 2 + 2 * i, 3 + 2 * i));
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let edges: Vec<(&str, usize, usize)> = edges.iter().map(|(e, a, b)| (e.as_str(), *a, *b)).collect();
    emit(&straight_line_drawing(&names, &pts, &edges))
}

#[test]
fn generate_then_audit_is_tight() {
    let out = run_with_stdin(&["audit", "--k", "3"], &generated(6));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("-> Tight"));

    let out = run_with_stdin(&["--format", "json", "audit"], &generated(10));
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["audit"]["verdict"], "tight");
    assert_eq!(doc["audit"]["bound"], "44");
    assert_eq!(doc["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn four_crossings_fail_three_planarity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("four.json");
    std::fs::write(&path, four_crossings()).unwrap();
    let out = bin().args(["validate", "--k", "3", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("long"));
    let out = bin().args(["validate", "--k", "4", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(bin().args(["validate", "--k", "3", "--bogus"]).output().unwrap().status.code(), Some(1));
    assert_eq!(bin().arg("frobnicate").output().unwrap().status.code(), Some(1));
    assert_eq!(bin().args(["audit", "--k", "5"]).output().unwrap().status.code(), Some(1));
    assert_eq!(run_with_stdin(&["validate", "--k", "3"], "").status.code(), Some(1));
    assert_eq!(run_with_stdin(&["validate", "--k", "3"], "{\"vertices\": [").status.code(), Some(1));
    assert_eq!(bin().args(["validate", "--k", "3", "/no/such/file"]).output().unwrap().status.code(), Some(1));
    assert_eq!(bin().arg("--help").output().unwrap().status.code(), Some(0));
}

#[test]
fn strict_mode_from_flag_or_environment() {
    assert_eq!(bin().args(["generate", "--n", "8", "--strict-paper"]).output().unwrap().status.code(), Some(1));
    let out = bin().args(["generate", "--n", "8"]).env("CROSSING_LEDGER_MODE", "strict-paper").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(bin().args(["generate", "--n", "8"]).output().unwrap().status.code(), Some(0));
    assert_eq!(bin().args(["generate", "--n", "10", "--strict-paper"]).output().unwrap().status.code(), Some(0));
}

#[test]
fn generate_writes_file_and_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = bin().args(["generate", "--n", "6", "-o", path.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, generated(6));

    // A report document is itself a valid input.
    let report = run_with_stdin(&["--format", "json", "analyze", "--skeleton"], &text);
    assert_eq!(report.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(doc["skeleton"]["kept"].as_array().unwrap().len(), 12);
    let again = run_with_stdin(&["validate", "--k", "3", "-"], &String::from_utf8(report.stdout).unwrap());
    assert_eq!(again.status.code(), Some(0));
}

#[test]
fn json_output_is_byte_stable() {
    let a = run_with_stdin(&["--format", "json", "audit"], &generated(6));
    let b = run_with_stdin(&["--format", "json", "audit"], &generated(6));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_figures() {
    let svg = run_with_stdin(&["export", "--to", "svg"], &generated(6));
    assert_eq!(svg.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&svg.stdout).matches("<polyline").count(), 22);
    let dot = run_with_stdin(&["export", "--to", "dot"], &generated(6));
    assert_eq!(String::from_utf8_lossy(&dot.stdout).matches("shape=square").count(), 22);
    let bad = run_with_stdin(&["export", "--to", "svg", "--outer-face", "999"], &generated(6));
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn greedy_analysis_runs() {
    let out = run_with_stdin(&["analyze", "--mode", "greedy"], &generated(6));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("sticks"));
}
