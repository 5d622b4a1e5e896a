//! End-to-end checks of the `cjones` binary: exit codes, output determinism
//! and the JSON table formats.

use std::process::{Command, Output};

fn cjones(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cjones"))
        .args(args)
        .env_remove("JONES_BUDGET")
        .output()
        .expect("binary runs")
}

#[test]
fn compute_all_routes_agrees_and_exits_zero() {
    let out = cjones(&[
        "compute", "--strands", "2", "--braid", "1 1 1", "--color", "2", "--route", "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("q^-2"), "got: {text}");
}

#[test]
fn unknot_prints_one() {
    let out = cjones(&[
        "compute", "--strands", "1", "--braid", "", "--color", "4", "--route", "homological",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn non_knot_exits_two() {
    let out = cjones(&[
        "compute", "--strands", "2", "--braid", "", "--color", "5", "--route", "rt",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_guard_exits_four() {
    let out = cjones(&[
        "compute", "--strands", "3", "--braid", "1 2 1 2", "--color", "3", "--route",
        "homological", "--budget", "5",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn identical_requests_are_byte_identical() {
    let args = [
        "compute", "--strands", "3", "--braid", "1 -2 1 -2", "--color", "2", "--route", "all",
        "--output", "json",
    ];
    let a = cjones(&args);
    let b = cjones(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["route"], "all");
    assert!(v["result"].is_array());
}

#[test]
fn verify_suites_pass_with_small_budgets() {
    let out = cjones(&[
        "verify", "routes", "--seed", "7", "--max-strands", "2", "--max-len", "4",
        "--max-color", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = cjones(&["verify", "markov", "--seed", "1", "--max-len", "4", "--max-color", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = cjones(&["verify", "pairing", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = cjones(&["verify", "braid-relations", "--max-color", "2", "--max-strands", "3"]);
    assert_eq!(out.status.code(), Some(0));

    let out = cjones(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tables_are_deterministic_json() {
    let args = ["tables", "lawrence", "--n", "3", "--m", "2", "--color", "2", "--gen", "1"];
    let a = cjones(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, cjones(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);

    let p = cjones(&["tables", "pairing", "--n", "4", "--m", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&p.stdout).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);

    let c = cjones(&["tables", "classes", "--n", "1", "--color", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(v["multifork"][0]["coeff"], "q^-1");
    assert_eq!(v["barcode"][0]["coeff"], "q^-2 + 1");
}

#[test]
fn env_budget_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_cjones"))
        .args([
            "compute", "--strands", "3", "--braid", "1 2 1 2", "--color", "3", "--route",
            "homological",
        ])
        .env("JONES_BUDGET", "5")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(4));
}
