//! End-to-end CLI checks: exit codes, determinism, the published-table
//! reproduction paths, file input, and the label-file override.

use std::process::{Command, Output};

fn densecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_densecode"))
        .args(args)
        .env_remove("DENSECODE_LABELS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn construct_lists_the_published_counts() {
    let out = densecode(&["construct", "--qubits", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("15 subgroups of order 2^3"), "{text}");
    assert!(text.contains("G2^12"));
    assert!(text.contains("[s = 1]") && text.contains("[s = 0]"));

    let out = densecode(&["construct", "--qubits", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 1);
    assert_eq!(rows[0]["order"], 16);
}

#[test]
fn construct_rejects_zero_qubits_as_usage() {
    let out = densecode(&["construct", "--qubits", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_reports_the_census_diff() {
    let out = densecode(&["oracle", "--qubits", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("constructed 15 (15 distinct) / total 15 / missing 0"));

    let out = densecode(&["oracle", "--qubits", "5"]);
    let text = stdout(&out);
    assert!(text.contains("constructed 45 (36 distinct) / total 63 / missing 27"), "{text}");
    assert!(text.contains("Subgroups outside the construction (27)"));

    let out = densecode(&["oracle", "--qubits", "2"]);
    assert!(stdout(&out).contains("constructed 1 (1 distinct) / total 1 / missing 0"));
}

#[test]
fn select_ghz3_lists_eight_sets() {
    let out = densecode(&["select", "--state", "ghz3", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for accepted in report["accepted"].as_object().unwrap().values() {
        assert_eq!(accepted.as_array().unwrap().len(), 8);
    }
}

#[test]
fn select_constraint_failures_use_exit_code_3() {
    let out = densecode(&["select", "--state", "w3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("Constraint 1"), "{}", stderr(&out));

    let out = densecode(&["select", "--state", "w2_4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("Constraint 2"), "{}", stderr(&out));
}

#[test]
fn select_unknown_state_is_usage() {
    let out = densecode(&["select", "--state", "ghz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn select_compare_reproduces_the_summary_rows() {
    let out = densecode(&["select", "--state", "ghz3", "--compare", "--census"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Baseline family: 4 usable of 6"), "{text}");
    assert!(text.contains("Two-line construction: 8 usable of 15"), "{text}");
    assert!(text.contains("Exhaustive census: 8 usable of 15"), "{text}");
}

#[test]
fn table_reproduces_the_ghz3_rows() {
    let out = densecode(&[
        "table", "--state", "ghz3", "--subgroup", "G2^12", "--positions", "1,2", "--ordering",
        "paper",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("U_1 = I⊗Z"));
    assert!(text.contains("1/√2(-\\|110⟩+\\|001⟩)"), "{text}");
}

#[test]
fn table_rejects_positions_that_violate_condition_2() {
    let out = densecode(&[
        "table", "--state", "cluster4", "--subgroup", "G2(16)", "--positions", "1,2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("Condition 2"), "{}", stderr(&out));
}

#[test]
fn table_rejects_non_verifying_triples_unless_unchecked() {
    let checked = densecode(&[
        "table", "--state", "cluster5", "--subgroup", "G3^5", "--positions", "1,2,3",
    ]);
    assert_eq!(checked.status.code(), Some(3));
    assert!(stderr(&checked).contains("expectation"), "{}", stderr(&checked));

    let unchecked = densecode(&[
        "table", "--state", "cluster5", "--subgroup", "G3^5", "--positions", "1,2,3",
        "--ordering", "paper", "--unchecked",
    ]);
    assert!(unchecked.status.success());
    let text = stdout(&unchecked);
    assert_eq!(text.lines().filter(|l| l.starts_with("| U_")).count(), 32);
    assert!(text.contains("U_2 = Y⊗I⊗I"));
}

#[test]
fn multiplication_table_needs_no_state() {
    let out = densecode(&["table", "--subgroup", "G2^12", "--multiplication", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 9);
}

#[test]
fn simulate_round_trips_the_message() {
    let out = densecode(&[
        "simulate", "--state", "ghz3", "--subgroup", "G2^12", "--positions", "1,2", "--bits",
        "101110", "--format", "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let transcript: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(transcript["delivered"], "101110");
    assert_eq!(transcript["qubits_sent"], 4);
    assert_eq!(transcript["bits_delivered"], 6);

    let out = densecode(&[
        "simulate", "--state", "ghz3", "--subgroup", "G2^12", "--bits", "1011",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn state_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.txt");
    std::fs::write(&path, "# 4-qubit cluster\n+0000\n+0011\n+1100\n-1111\n").unwrap();
    let out = densecode(&["select", "--state", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["qubits"], 4);
}

#[test]
fn output_is_deterministic_and_out_writes_files() {
    let a = densecode(&["construct", "--qubits", "5", "--format", "csv"]);
    let b = densecode(&["construct", "--qubits", "5", "--format", "csv"]);
    assert_eq!(stdout(&a), stdout(&b));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("listing.csv");
    let c = densecode(&["construct", "--qubits", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(c.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&a));
}

#[test]
fn labels_env_var_overrides_the_alias_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("labels.json");
    std::fs::write(
        &path,
        r#"{"labels": [{"label": "mygroup", "n": 2,
            "elements": ["II","IZ","XI","XZ","YX","YY","ZX","ZY"]}]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_densecode"))
        .args(["table", "--state", "ghz3", "--subgroup", "mygroup", "--positions", "1,2"])
        .env("DENSECODE_LABELS", path.to_str().unwrap())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("U_0 = I⊗I"));

    // the shipped names disappear under the override
    let out = Command::new(env!("CARGO_BIN_EXE_densecode"))
        .args(["table", "--state", "ghz3", "--subgroup", "G2^12", "--positions", "1,2"])
        .env("DENSECODE_LABELS", path.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subgroup_json_files_are_revalidated() {
    let dir = tempfile::tempdir().unwrap();

    // valid: the canonical JSON schema round-trips
    let good = dir.path().join("sub.json");
    std::fs::write(
        &good,
        r#"{"n": 2, "order": 8,
            "elements": ["II","IZ","XI","XZ","YX","YY","ZX","ZY"],
            "basis": ["XI","ZX","IZ"],
            "provenance": {"tag": "external"}}"#,
    )
    .unwrap();
    let out = densecode(&[
        "simulate", "--state", "ghz3", "--subgroup", good.to_str().unwrap(), "--positions",
        "1,2", "--bits", "010",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    // invalid: a non-closed element set is rejected, not trusted
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"n": 2, "order": 4, "elements": ["II","IX","IY","XX"],
            "basis": [], "provenance": {"tag": "external"}}"#,
    )
    .unwrap();
    let out = densecode(&[
        "simulate", "--state", "ghz3", "--subgroup", bad.to_str().unwrap(), "--positions",
        "1,2", "--bits", "010",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not closed"), "{}", stderr(&out));
}

#[test]
fn subgroup_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub.txt");
    std::fs::write(&path, "n=2 order=8\nII\nIZ\nXI\nXZ\nYX\nYY\nZX\nZY\n").unwrap();
    let out = densecode(&[
        "simulate", "--state", "ghz3", "--subgroup", path.to_str().unwrap(), "--positions",
        "1,2", "--bits", "111",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("delivered 3 bits over 2 transmitted qubits"));
}
