//! End-to-end checks of the command-line surface: flags, exit codes,
//! deterministic output, and the documented JSON schemas.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn slattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slattice"))
        .args(args)
        .env_remove("SLATTICE_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_examples() {
    let out = slattice(&["count", "--s", "0,0,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "weak:4 tamari:3\n");

    let out = slattice(&["count", "--s", "0,2,2"]);
    assert_eq!(stdout(&out), "weak:15 tamari:12\n");

    let out = slattice(&["count", "--s", "0,2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["weak"], 15);
    assert_eq!(v["tamari"], 12);
}

#[test]
fn enumerate_single_element() {
    let out = slattice(&["enumerate", "--s", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn enumerate_is_byte_deterministic() {
    let a = slattice(&["enumerate", "--s", "0,2,2", "--kind", "tamari"]);
    let b = slattice(&["enumerate", "--s", "0,2,2", "--kind", "tamari"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 12);
}

#[test]
fn verify_reports_json_verdicts() {
    let out = slattice(&["verify", "--s", "0,2,2", "--checks", "lattice,polygonal,hh"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"]["lattice"]["ok"], true);
    assert_eq!(v["checks"]["polygonal"]["ok"], true);
    assert!(v["checks"]["polygonal"]["polygons"]["square"].as_u64().unwrap() > 0);
}

#[test]
fn quotient_with_interior_zero_exits_2() {
    let out = slattice(&["verify", "--s", "0,0,1", "--checks", "quotient"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("zero entry after the first position"), "{err}");
    assert!(err.contains("square"), "{err}");
}

#[test]
fn classes_with_interior_zero_exits_2() {
    let out = slattice(&["classes", "--s", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = slattice(&["verify", "--s", "1,1", "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limit_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_slattice"))
        .args(["verify", "--s", "1,1,1,1", "--checks", "lattice"])
        .env("SLATTICE_MAX_ELEMENTS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("limit"), "{err}");
    // the explicit flag takes precedence
    let out = Command::new(env!("CARGO_BIN_EXE_slattice"))
        .args(["verify", "--s", "1,1,1,1", "--checks", "lattice", "--limit", "100"])
        .env("SLATTICE_MAX_ELEMENTS", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn join_accepts_both_tree_encodings_and_stdin() {
    let tree_doc = r#"{"s":[0,2,2],"tree":[3,[[1,[null]],null,[2,[null,null,null]]]]}"#;
    let inv_doc = r#"{"n":3,"inv":[[2,1,1]]}"#;
    let out = slattice(&["join", "--s", "0,2,2", tree_doc, inv_doc]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tree"], serde_json::json!([3, [null, null, [2, [null, [1, [null]], null]]]]));

    // same pair over stdin, one document per line
    let mut child = Command::new(env!("CARGO_BIN_EXE_slattice"))
        .args(["join", "--s", "0,2,2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(format!("{tree_doc}\n{inv_doc}\n").as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let w: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, w);
}

#[test]
fn meet_is_the_dual_bound() {
    let a = r#"{"n":3,"inv":[[3,2,2]]}"#;
    let b = r#"{"n":3,"inv":[[2,1,1]]}"#;
    let out = slattice(&["meet", "--s", "0,2,2", a, b]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // greatest lower bound of the two example trees is the minimum tree
    assert_eq!(v["tree"], serde_json::json!([3, [[2, [[1, [null]], null, null]], null, null]]));
}

#[test]
fn map_outputs() {
    let min = r#"{"n":3,"inv":[]}"#;
    let out = slattice(&["map", "--s", "0,2,2", "--to", "nu-path", min]);
    assert_eq!(stdout(&out), "NEENEEN\n");

    let out = slattice(&["map", "--s", "0,2,2", "--to", "nu-tree", min]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["nu"], "NEENEEN");
    assert_eq!(v["points"].as_array().unwrap().len(), 8);
    assert_eq!(v["points"][0], serde_json::json!([0, 3]));

    // zero signatures have no s-permutation; that is a domain error
    let out = slattice(&["map", "--s", "0,2,2", "--to", "s-perm", min]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn project_down_then_up_brackets_the_tree() {
    let t = r#"{"n":5,"inv":[[3,2,1],[3,1,1],[2,1,1],[5,4,1],[5,2,1],[5,1,1],[4,1,1]]}"#;
    let down = slattice(&["project", "--s", "0,1,1,1,2", "--dir", "down", t]);
    assert!(down.status.success());
    let up = slattice(&["project", "--s", "0,1,1,1,2", "--dir", "up", t]);
    assert!(up.status.success());
    assert_ne!(down.stdout, up.stdout);
}

#[test]
fn hasse_dot_and_json() {
    let dot = slattice(&["hasse", "--s", "0,0,1"]);
    let text = stdout(&dot);
    assert!(text.starts_with("digraph {"));
    assert_eq!(text.matches("->").count(), 4);

    let json_out = slattice(&["hasse", "--s", "0,0,1", "--format", "json", "--kind", "tamari"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn classes_report_shape() {
    let out = slattice(&["classes", "--s", "1,1,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 5);
    let total: usize = classes
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 6);
}

#[test]
fn bad_signature_is_a_usage_error() {
    for bad in ["", "a,b", "1,-2"] {
        let out = slattice(&["count", "--s", bad]);
        assert_eq!(out.status.code(), Some(2), "signature {bad:?}");
    }
}
