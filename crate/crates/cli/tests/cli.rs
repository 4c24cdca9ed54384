//! End-to-end runs of the `freesub` binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run_with_env(args: &[&str], config: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_freesub"));
    cmd.args(args).env_remove("FREESUB_CONFIG");
    if let Some(path) = config {
        cmd.env("FREESUB_CONFIG", path);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with_env(args, None)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn counts() {
    assert_eq!(ok(&["counts", "--family", "modular3", "--m", "1", "--count", "3"]), "5 60 1105\n");
    assert_eq!(ok(&["counts", "--family", "hecke4", "--m", "1", "--count", "3"]), "3 24 297\n");
    assert_eq!(code(&["counts", "--count", "0"]), 2);
    assert_eq!(code(&["counts", "--family", "hecke5", "--count", "3"]), 2);
    assert_eq!(code(&["counts", "--m", "0", "--count", "3"]), 2);
    let v: Value = serde_json::from_str(&ok(&["counts", "--count", "4", "--format", "json"])).unwrap();
    assert_eq!(v["values"].to_string(), "[5,60,1105,27120]");
}

#[test]
fn pade() {
    let out = ok(&["pade", "--family", "modular3", "--m", "1", "--n", "1"]);
    assert!(out.contains("P: 1 - 7z\n") && out.contains("Q: 1 - 12z\n") && out.contains("residual: 385\n"), "{out}");
    let out = ok(&["pade", "--A", "4", "--B", "6", "--C", "1", "--D", "0", "--n", "3", "--verify"]);
    assert!(out.contains("identity: OK") && out.contains("gosper: OK"), "{out}");
    let out = ok(&["pade", "--A", "0", "--B", "1", "--C", "0", "--D", "0", "--n", "2"]);
    assert!(out.contains("route: oracle"), "{out}");
    assert_eq!(code(&["pade", "--A", "0", "--B", "1", "--C", "0", "--D", "0", "--n", "2", "--no-fallback"]), 3);
    assert_eq!(code(&["pade", "--A", "1", "--B", "1", "--C", "1", "--D", "1", "--n", "2"]), 2);
    assert_eq!(code(&["pade", "--A", "4", "--B", "6", "--n", "2"]), 2);
    let v: Value = serde_json::from_str(&ok(&["pade", "--A", "-4", "--B", "6", "--C", "1", "--D", "0", "--E", "-4", "--n", "1", "--format", "json"])).unwrap();
    assert_eq!(v["route"], "closed-form");
    assert_eq!(v["q"][0], "1");
}

#[test]
fn reduce_and_pfrac() {
    let out = ok(&["reduce", "--family", "modular3", "--p", "7", "--alpha", "5", "--format", "latex"]);
    assert!(out.contains("\\frac{2401}{(1+2z)^5}"), "{out}");
    let v: Value = serde_json::from_str(&ok(&["reduce", "--p", "13", "--alpha", "2", "--format", "json"])).unwrap();
    assert_eq!(v["p"], 13);
    assert_eq!(v["alpha"], 2);
    assert!(v["fractions"].as_array().is_some_and(|f| !f.is_empty()));
    let text = ok(&["reduce", "--m", "7", "--p", "7", "--alpha", "2"]);
    assert!(text.contains("polynomial only"), "{text}");
    let fr = ok(&["pfrac", "--p", "7", "--alpha", "2"]);
    assert_eq!(fr.lines().count(), 2, "{fr}");
    assert!(fr.lines().all(|l| l.contains("(1+2z)")), "{fr}");
    assert_eq!(code(&["reduce", "--p", "9"]), 2);
    assert_eq!(code(&["reduce", "--p", "3"]), 2);
}

#[test]
fn degree_bound_names_the_knob() {
    let o = run(&["reduce", "--p", "13", "--alpha", "5", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-len"));
}

#[test]
fn period() {
    assert!(ok(&["period", "--family", "modular3", "--p", "13", "--alpha", "1"]).starts_with("period=12 predicted=12 match=yes\n"));
    assert!(ok(&["period", "--p", "7", "--alpha", "2"]).starts_with("period=42 predicted=42 match=yes\n"));
    let out = ok(&["period", "--family", "hecke4", "--p", "5", "--alpha", "1"]);
    assert!(out.contains("predicted=none match=n/a") && out.contains("divides=yes"), "{out}");
    let v: Value = serde_json::from_str(&ok(&["period", "--p", "11", "--alpha", "2", "--format", "json"])).unwrap();
    assert_eq!(v["period"], 11);
    assert_eq!(v["match"], true);
    let o = run(&["period", "--p", "13", "--alpha", "1", "--horizon", "10"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--horizon"));
    assert_eq!(code(&["period", "--p", "13", "--alpha", "1", "--max-horizon", "20"]), 5);
}

#[test]
fn lemmas() {
    let out = ok(&["lemmas", "--family", "modular3", "--p", "7", "--n-max", "29"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[..9].iter().all(|l| l.ends_with(" OK")), "{out}");
    assert_eq!(lines[9], "9 cases, all OK");
    assert!(lines[10].contains("evidence"));
    let v: Value = serde_json::from_str(&ok(&["lemmas", "--family", "hecke4", "--p", "13", "--format", "json"])).unwrap();
    assert_eq!(v["all_ok"], true);
    assert_eq!(code(&["lemmas", "--p", "2"]), 2);
}

#[test]
fn reproduce() {
    for preset in ["free7^5", "free11^5", "free13^5"] {
        let out = ok(&["reproduce", preset]);
        assert!(out.contains("match:"), "{out}");
    }
    assert_eq!(code(&["reproduce", "free5^5"]), 2);
}

/// The reference value modulo `17^2` is three times the minimal period, so the
/// preset reports a mismatch with a diff.
#[test]
fn reproduce_periods_seventeen_fast() {
    let o = run(&["reproduce", "periods-17", "--tier", "fast"]);
    assert_eq!(o.status.code(), Some(6));
    let out = stdout(&o);
    assert!(out.contains("-17^2 period=4896") && out.contains("+17^2 period=1632"), "{out}");
}

#[test]
fn config_file_supplies_defaults() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "family = \"hecke4\"\nformat = \"json\"").unwrap();
    let o = run_with_env(&["counts", "--count", "3"], Some(f.path()));
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "hecke4");
    assert_eq!(v["values"].to_string(), "[3,24,297]");
    let o = run_with_env(&["counts", "--count", "3", "--format", "text", "--family", "modular3"], Some(f.path()));
    assert_eq!(stdout(&o), "5 60 1105\n");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "colour = 3").unwrap();
    assert_eq!(run_with_env(&["counts", "--count", "3"], Some(bad.path())).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    for args in [
        &["reduce", "--p", "13", "--alpha", "3", "--format", "json", "--seed", "5"][..],
        &["reduce", "--p", "17", "--alpha", "2", "--format", "latex"][..],
        &["lemmas", "--p", "13"][..],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn seed_and_lift_do_not_change_the_function() {
    let a: Value = serde_json::from_str(&ok(&["reduce", "--p", "13", "--alpha", "3", "--format", "json"])).unwrap();
    let b: Value = serde_json::from_str(&ok(&["reduce", "--p", "13", "--alpha", "3", "--format", "json", "--seed", "9"])).unwrap();
    assert_eq!(a, b);
    let h = run(&["reduce", "--p", "13", "--alpha", "3", "--lift", "hensel"]);
    assert!(h.status.success());
}
