//! End-to-end tests of the command-line interface: exit codes, JSON shapes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistral"))
        .args(args)
        .output()
        .expect("failed to spawn twistral")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

#[test]
fn unknown_check_name_is_usage_error() {
    let out = run(&["verify", "bogus-name"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_text_summary_prints_one_line_per_check() {
    let out = run(&["verify", "cocycle-axioms", "kulish-mudrov"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS  cocycle-axioms"));
    assert!(text.contains("PASS  kulish-mudrov"));
    assert!(text.trim_end().ends_with("overall: pass"));
}

#[test]
fn verify_single_check_passes_and_is_deterministic() {
    let out1 = run(&["verify", "--json", "cocycle-axioms"]);
    assert_eq!(out1.status.code(), Some(0));
    let v = json_of(&out1);
    assert_eq!(v["overall"], serde_json::json!(true));
    assert_eq!(v["checks"][0]["status"], serde_json::json!("pass"));
    assert!(v["checks"][0]["statement"].as_str().unwrap().contains("2-cocycle"));
    let out2 = run(&["verify", "--json", "cocycle-axioms"]);
    assert_eq!(out1.stdout, out2.stdout, "identical inputs must give identical JSON");
}

#[test]
fn verify_not_isom_reports_failure_exit_code() {
    // the literal min-poly sub-assertion is red by design; the exit code
    // must reflect a check failure, not a usage error
    let out = run(&["verify", "--json", "not-isom"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["overall"], serde_json::json!(false));
    let details = v["checks"][0]["details"].as_str().unwrap();
    assert!(details.contains("gamma central=true"));
    assert!(details.contains("four rank-1 idempotents=true"));
    assert!(details.contains("(T-c^2)(T^2+c^2)"));
}

#[test]
fn characters_b2_with_j1_twist() {
    let out = run(&["characters", "--group", "B2", "--twist", "j1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["twist"]["all_verified"], serde_json::json!(true));
    // the label (0, [2]) maps to (0, [1,1])
    let perm = v["twist"]["permutation"].as_array().unwrap();
    let entry = perm
        .iter()
        .find(|e| e["from"] == serde_json::json!([[], [2]]))
        .unwrap();
    assert_eq!(entry["to"], serde_json::json!([[], [1, 1]]));
    assert_eq!(entry["verified"], serde_json::json!(true));
}

#[test]
fn characters_b1_has_two_characters() {
    let out = run(&["characters", "--group", "B1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["characters"].as_array().unwrap().len(), 2);
}

#[test]
fn characters_d3_bijection() {
    let out = run(&["characters", "--group", "D3", "--twist", "jminusi"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["twist"]["all_verified"], serde_json::json!(true));
    assert_eq!(v["twist"]["bijection"].as_array().unwrap().len(), 10);
}

#[test]
fn coinvariants_mystic_d2() {
    let out = run(&["coinvariants", "--m", "2", "--p", "2", "--n", "2", "--mystic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["graded_dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["total_dim"], serde_json::json!(4));
    assert_eq!(v["affords_regular_representation"], serde_json::json!(true));
    // regular character: 4 at the identity (first element), 0 elsewhere
    let ch = v["character"].as_array().unwrap();
    assert_eq!(ch[0]["coeffs"][0], serde_json::json!("4"));
    for c in &ch[1..] {
        assert_eq!(c["coeffs"][0], serde_json::json!("0"));
    }
}

#[test]
fn center_dims_of_restricted_algebras() {
    let out = run(&["center", "--m", "2", "--p", "2", "--n", "2", "--c", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["center_dim"], serde_json::json!(4));
    let out = run(&["center", "--m", "2", "--p", "2", "--n", "2", "--c", "1", "--braided"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["center_dim"], serde_json::json!(4));
    assert_eq!(v["algebra"]["dim"], serde_json::json!(64));
}

#[test]
fn twist_j1_on_a_reflection() {
    let out = run(&[
        "twist", "--map", "j1", "--m", "2", "--p", "1", "--n", "2", "--element", "s(1,2;0)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let image = v["image"].as_array().unwrap();
    assert_eq!(image.len(), 4);
    // coefficients are +-1/2
    for row in image {
        let c0 = row["coeff"]["coeffs"][0].as_str().unwrap();
        assert!(c0 == "1/2" || c0 == "-1/2");
    }
}

#[test]
fn twist_etaphi_on_braided_generator() {
    let out = run(&[
        "twist", "--map", "etaphi", "--m", "2", "--p", "1", "--n", "2", "--element", "x2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // x_2 maps to x_2 t_1
    assert_eq!(v["image"][0][0], serde_json::json!([0, 1]));
    assert_eq!(v["image"][0][1], serde_json::json!("t(1;1)"));
}

#[test]
fn malformed_element_is_usage_error() {
    let out = run(&[
        "twist", "--map", "j1", "--m", "2", "--p", "1", "--n", "2", "--element", "x9*??",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
