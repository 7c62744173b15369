//! End-to-end tests of the `svcr` binary: exit codes, output documents,
//! warnings, and determinism.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn svcr(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_svcr"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("stdout is json")
}

#[test]
fn elect_students() {
    let (code, out, err) = svcr(&["elect", "--input", &fixture("students.csv"), "-k", "2"]);
    assert_eq!(code, 0, "stderr: {err}");
    let value = json(&out);
    assert_eq!(value["committee"]["members"], serde_json::json!(["c", "b"]));
    assert_eq!(value["scores"]["c"], "11/6");
    assert_eq!(value["decimals"]["c"], "1.8333");
    assert!(err.is_empty());
}

#[test]
fn elect_five_candidates() {
    let (code, out, _) = svcr(&[
        "elect",
        "--input",
        &fixture("five_candidates.json"),
        "-k",
        "3",
    ]);
    assert_eq!(code, 0);
    let value = json(&out);
    assert_eq!(
        value["committee"]["members"],
        serde_json::json!(["a", "c", "e"])
    );
}

#[test]
fn elect_full_committee_has_no_tie_warning() {
    let (code, out, err) = svcr(&["elect", "--input", &fixture("students.csv"), "-k", "3"]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    let value = json(&out);
    assert_eq!(
        value["committee"]["members"],
        serde_json::json!(["c", "b", "a"])
    );
    assert_eq!(value["committee"]["tie_broken"], serde_json::json!(false));
}

#[test]
fn elect_boundary_tie_exit_codes() {
    let rivals = fixture("rival_pair.json");
    let (code, out, err) = svcr(&["elect", "--input", &rivals, "-k", "3"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"), "stderr: {err}");
    let value = json(&out);
    assert_eq!(
        value["committee"]["members"],
        serde_json::json!(["c", "d", "a"])
    );
    assert_eq!(
        value["committee"]["boundary_ties"],
        serde_json::json!(["a", "b"])
    );

    let (code, _, err) = svcr(&["elect", "--input", &rivals, "-k", "3", "--tie-break", "error"]);
    assert_eq!(code, 3);
    assert!(err.contains("tie"));

    let (code, out, _) = svcr(&["elect", "--input", &rivals, "-k", "3", "--tie-break", "report"]);
    assert_eq!(code, 0);
    let value = json(&out);
    assert_eq!(value["committee"]["tie_broken"], serde_json::json!(true));
}

#[test]
fn parse_and_range_errors_exit_2() {
    let (code, _, err) = svcr(&["elect", "--input", &fixture("students.csv"), "-k", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));

    let (code, _, _) = svcr(&["elect", "--input", "/no/such/file.json", "-k", "1"]);
    assert_eq!(code, 2);

    let (code, _, err) = svcr(&[
        "elect",
        "--input",
        &fixture("students.json"),
        "--format",
        "dense",
        "-k",
        "1",
    ]);
    assert_eq!(code, 2, "json parsed as dense must fail: {err}");
}

#[test]
fn rank_does_not_need_k() {
    let (code, out, _) = svcr(&["rank", "--input", &fixture("backpack.csv")]);
    assert_eq!(code, 0);
    let value = json(&out);
    assert_eq!(value["ranking"], serde_json::json!([["w", "s"], ["o"]]));
    assert_eq!(value["scores"]["w"], "3/2");
    assert!(value.get("committee").is_none());
}

#[test]
fn compare_backpack() {
    let (code, out, _) = svcr(&["compare", "--input", &fixture("backpack.csv"), "-k", "2"]);
    assert_eq!(code, 0);
    let value = json(&out);
    assert_eq!(
        value["shapley"]["committee"]["members"],
        serde_json::json!(["w", "s"])
    );
    assert_eq!(
        value["k_approval"]["committee"]["members"],
        serde_json::json!(["w", "o"])
    );
    assert_eq!(
        value["group_score"]["winners"],
        serde_json::json!(["{w,s}", "{o,s}"])
    );
    assert_eq!(
        value["agreement"]["committee_matches_k_approval"],
        serde_json::json!(false)
    );
}

#[test]
fn axioms_students_all_hold() {
    let (code, out, _) = svcr(&["axioms", "--input", &fixture("students.csv")]);
    assert_eq!(code, 0);
    let value = json(&out);
    assert_eq!(value["all_hold"], serde_json::json!(true));
    let efficiency = value["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["axiom"] == "efficiency")
        .unwrap();
    assert_eq!(efficiency["status"], "holds");
    assert!(efficiency["detail"]
        .as_str()
        .unwrap()
        .contains("worth 4"));
}

#[test]
fn axioms_five_candidates_precondition() {
    let (code, out, _) = svcr(&[
        "axioms",
        "--input",
        &fixture("five_candidates.json"),
        "--check",
        "one-person-one-vote",
    ]);
    assert_eq!(code, 0);
    let value = json(&out);
    let report = &value["axioms"][0];
    assert_eq!(report["status"], "precondition-unmet");
    assert!(report["detail"].as_str().unwrap().contains("v1"));
}

#[test]
fn axioms_with_committee_checks() {
    let (code, out, _) = svcr(&[
        "axioms",
        "--input",
        &fixture("students.csv"),
        "-k",
        "2",
        "--check",
        "monotonicity,consistency",
    ]);
    assert_eq!(code, 0);
    let value = json(&out);
    let statuses: Vec<&str> = value["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["status"].as_str().unwrap())
        .collect();
    assert!(statuses.iter().all(|&s| s == "holds"));
    // One monotonicity report per committee member plus consistency.
    assert_eq!(statuses.len(), 3);
}

#[test]
fn unknown_axiom_name_exits_2() {
    let (code, _, err) = svcr(&[
        "axioms",
        "--input",
        &fixture("students.csv"),
        "--check",
        "no-such-axiom",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-axiom"));
}

#[test]
fn gen_is_byte_identical_for_a_seed_and_feeds_elect() {
    let args = [
        "gen",
        "--alternatives",
        "5",
        "--voters",
        "8",
        "--density",
        "0.4",
        "--max-group",
        "2",
        "--seed",
        "99",
    ];
    let (code_a, out_a, _) = svcr(&args);
    let (code_b, out_b, _) = svcr(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(out_a, out_b);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generated.json");
    std::fs::write(&path, &out_a).unwrap();
    let (code, out, _) = svcr(&["elect", "--input", path.to_str().unwrap(), "-k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["alternatives"].as_array().unwrap().len(), 5);
}

#[test]
fn gen_rejects_bad_parameters() {
    let (code, _, err) = svcr(&[
        "gen",
        "--alternatives",
        "0",
        "--voters",
        "3",
        "--density",
        "0.5",
        "--seed",
        "1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("alternatives"));
}

#[test]
fn elect_output_is_deterministic() {
    let args = ["elect", "--input", &fixture("five_candidates.json"), "-k", "3"];
    let (_, out_a, _) = svcr(&args);
    let (_, out_b, _) = svcr(&args);
    assert_eq!(out_a, out_b);
}

#[test]
fn dense_and_sparse_fixtures_elect_identically() {
    let (_, from_dense, _) = svcr(&["elect", "--input", &fixture("students.csv"), "-k", "2"]);
    let (_, from_sparse, _) = svcr(&["elect", "--input", &fixture("students.json"), "-k", "2"]);
    assert_eq!(from_dense, from_sparse);
}
