use std::process::{Command, Output};

use serde_json::Value;

fn loccoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loccoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn hpq_symm3_p1_is_single_d1_term() {
    let v = json_of(&loccoh(&[
        "hpq", "--space", "symm", "--n", "3", "--p", "1", "--format", "json",
    ]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["label"]["name"], "D_1");
    assert_eq!(terms[0]["poly"], serde_json::json!([[3, 1]]));
}

#[test]
fn hpq_routes_print_the_same_terms() {
    let closed = json_of(&loccoh(&["hpq", "--space", "skew", "--n", "5", "--p", "1"]));
    for route in ["enum", "bott"] {
        let other = json_of(&loccoh(&[
            "hpq", "--space", "skew", "--n", "5", "--p", "1", "--route", route,
        ]));
        assert_eq!(closed["terms"], other["terms"], "route {route}");
    }
}

#[test]
fn general_matrices_have_no_ext_route() {
    let out = loccoh(&[
        "hpq", "--space", "general", "--m", "3", "--n", "3", "--p", "1", "--route", "bott",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lcd_general_4x3() {
    let v = json_of(&loccoh(&[
        "lcd", "--space", "general", "--m", "4", "--n", "3", "--p", "1",
    ]));
    assert_eq!(v["lcd"], 9);
    assert_eq!(v["closed_form"], 9);
    assert_eq!(v["tie"], false);
}

#[test]
fn lcd_symm5_top_module_is_d1() {
    let v = json_of(&loccoh(&["lcd", "--space", "symm", "--n", "5", "--p", "1"]));
    assert_eq!(v["top_modules"], serde_json::json!(["D_1"]));
}

#[test]
fn verify_qseries_passes() {
    let v = json_of(&loccoh(&["verify", "--suite", "qseries"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert!(v["checks"][0].get("wall_ms").is_none());
}

#[test]
fn verify_small_sweep_passes() {
    let out = loccoh(&["verify", "--max-n", "4", "--bound", "6"]);
    let v = json_of(&out);
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["hpq", "--space", "symm", "--n", "3", "--p", "3"][..],
        &["hpq", "--space", "skew", "--n", "4"],
        &["lcd", "--space", "torus", "--n", "3", "--p", "0"],
        &["bott", "--n", "3", "--k", "2", "--alpha", "1", "--beta", "0"],
        &["bott", "--n", "3", "--k", "1", "--alpha", "x", "--beta", "0,0"],
        &["ext", "--space", "symm", "--n", "3", "--p", "1"],
        &["verify", "--suite", "nope"],
    ] {
        let out = loccoh(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn invalid_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_loccoh"))
        .args(["verify", "--suite", "qseries"])
        .env("LOCCOH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "ext", "--space", "symm", "--n", "3", "--p", "1", "--x", "2,2", "--bound", "10",
    ];
    let first = loccoh(&args);
    let second = loccoh(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bott_accepts_negative_entries() {
    // Q^* on P^2 is acyclic; O(-2) on P^1 has H^1 only
    let v = json_of(&loccoh(&[
        "bott", "--n", "3", "--k", "2", "--alpha", "0,-1", "--beta", "0",
    ]));
    assert_eq!(v["result"], "zero");
    let v = json_of(&loccoh(&[
        "bott", "--n", "2", "--k", "1", "--alpha", "-2", "--beta", "0",
    ]));
    assert_eq!(v["degree"], 1);
}

#[test]
fn bott_empty_alpha() {
    let v = json_of(&loccoh(&[
        "bott", "--n", "2", "--k", "0", "--alpha", "", "--beta", "1,0",
    ]));
    assert_eq!(v["degree"], 0);
}

#[test]
fn ext_example_weight_in_degree_4() {
    let v = json_of(&loccoh(&[
        "ext", "--space", "symm", "--n", "3", "--p", "1", "--x", "2,2", "--bound", "14",
    ]));
    let text = v["ext"].to_string();
    assert!(text.contains("5,5,4"), "{text}");
}

#[test]
fn ext_witness_via_label() {
    let v = json_of(&loccoh(&[
        "ext", "--space", "symm", "--n", "3", "--p", "1", "--label", "C_2^2",
    ]));
    assert_eq!(v["poly"], serde_json::json!([[3, 1]]));
    let w = json_of(&loccoh(&[
        "ext", "--space", "symm", "--n", "3", "--p", "1", "--label", "D_1", "--route", "bott",
    ]));
    assert_eq!(w["poly"], v["poly"]);
}

#[test]
fn csv_and_table_formats() {
    let out = loccoh(&[
        "character",
        "--space",
        "skew",
        "--n",
        "4",
        "--ring",
        "--bound",
        "4",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("partition,size,multiplicity"));
    assert!(lines.any(|l| l == "\"(1,1,1,1)\",4,1"), "{text}");

    let out = loccoh(&["lcd", "--space", "skew", "--n", "5", "--p", "1", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("space"));
    assert!(text.lines().nth(1).unwrap().contains("  5  "));
}

#[test]
fn character_weight_set_lists_witness() {
    let v = json_of(&loccoh(&[
        "character",
        "--space",
        "symm",
        "--n",
        "3",
        "--s",
        "2",
        "--j",
        "2",
        "--bound",
        "3",
    ]));
    assert_eq!(v["witness"], serde_json::json!([3, 3, 2]));
    assert!(v["weights"].as_array().unwrap().contains(&serde_json::json!([3, 3, 2])));
}

#[test]
fn filtration_check_passes() {
    let v = json_of(&loccoh(&[
        "filtration-check",
        "--space",
        "skew",
        "--n",
        "5",
        "--p",
        "1",
        "--bound",
        "8",
    ]));
    assert_eq!(v["passed"], true);
}
