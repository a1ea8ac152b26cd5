//! Behavioral tests of the command-line interface: exact-input policy, exit
//! codes, determinism, and the representation inspector.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_higgs-cgc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn rep_reports_ladder_data() {
    let (code, stdout, _) = run(&["rep", "--j", "1", "--beta2", "1/10"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["psi"], serde_json::json!(["12/5", "12/5"]));
    assert_eq!(v["casimir"], "12/5");
    assert_eq!(v["status"], "ok");
}

#[test]
fn rep_flags_boundary_representation() {
    let (code, stdout, _) = run(&["rep", "--j", "1", "--beta2", "-1/2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["status"], "boundary");
    assert!(v["psi"].as_array().unwrap().iter().any(|p| p == "0"));
}

#[test]
fn rep_spin_half_undeformed() {
    let (code, stdout, _) = run(&["rep", "--j", "1/2", "--beta2", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["psi"], serde_json::json!(["1"]));
    assert_eq!(v["casimir"], "3/4");
}

#[test]
fn decimal_input_is_rejected() {
    let (code, _, stderr) = run(&["table", "--j1", "0.5", "--j2", "1/2", "--beta2", "0"]);
    assert_eq!(code, 2, "stderr: {stderr}");
    let (code, _, _) = run(&["rep", "--j", "1", "--beta2", "0.1"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_and_out_of_range_inputs_exit_2() {
    let (code, _, _) = run(&["table", "--j1", "1/3", "--j2", "1/2", "--beta2", "0"]);
    assert_eq!(code, 2, "non-half-integer spin");
    let (code, _, _) = run(&["table", "--j1", "1/2", "--j2", "1/2", "--beta2", "0", "--j", "2"]);
    assert_eq!(code, 2, "coupled spin outside range");
    let (code, _, _) = run(&["verify", "--suites", "no-such-suite", "--beta2", "0"]);
    assert_eq!(code, 2, "unknown suite");
}

#[test]
fn verify_su2_suite_only() {
    let (code, stdout, _) = run(&["verify", "--suites", "su2-limit", "--beta2", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["passed"], true);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["suite"], "su2-limit");
}

#[test]
fn table_output_is_deterministic() {
    let args = ["table", "--j1", "1", "--j2", "1", "--beta2", "1/10", "--format", "csv"];
    let (c1, first, _) = run(&args);
    let (c2, second, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(first, second);
    // header plus all nine weights of the three coupled spins
    assert_eq!(first.lines().count(), 1 + 19);
}

#[test]
fn table_csv_and_json_carry_the_same_values() {
    let (_, csv, _) =
        run(&["table", "--j1", "1/2", "--j2", "1/2", "--beta2", "1/10", "--format", "csv"]);
    let (_, json, _) =
        run(&["table", "--j1", "1/2", "--j2", "1/2", "--beta2", "1/10", "--format", "json"]);
    let records: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(rec["j"], cols[2]);
        assert_eq!(rec["m1"], cols[3]);
        assert_eq!(rec["sign"].to_string(), cols[6]);
        assert_eq!(rec["square"], cols[7]);
    }
}
