use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn depthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(args)
        .env_remove("DEPTHLAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let o = depthlab(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("valid JSON")
}

fn matrix_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn table_s3_text() {
    let out = ok(&["table", "S3"]);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .filter(|l| l.trim_start().starts_with("X."))
        .map(|l| l.split_whitespace().skip(1).collect())
        .collect();
    assert_eq!(
        rows,
        vec![
            vec!["1", "1", "1"],
            vec!["1", "-1", "1"],
            vec!["2", "0", "-1"]
        ]
    );
}

#[test]
fn table_trivial_group() {
    let v = json(&["table", "--json", "C1"]);
    assert_eq!(v["rows"], serde_json::json!([[1]]));
}

#[test]
fn table_s4_json() {
    let v = json(&["table", "--json", "S4"]);
    assert_eq!(v["order"], 24);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let degrees: Vec<i64> = rows.iter().map(|r| r[0].as_i64().unwrap()).collect();
    assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
    let sizes: i64 = v["class_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_i64().unwrap())
        .sum();
    assert_eq!(sizes, 24);
}

#[test]
fn table_with_irrational_values() {
    let v = json(&["table", "--json", "C3"]);
    assert_eq!(v["exponent"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn symmetric_group_depths() {
    for (g, h, d) in [("S3", "S2", 3), ("S4", "S3", 5), ("S5", "S4", 7)] {
        let v = json(&["depth", "--json", g, h]);
        assert_eq!(v["report"]["minimal_depth"], d, "{h} ≤ {g}");
        assert_eq!(v["report"]["exceeds_cap"], false);
    }
}

#[test]
fn depth_text_reports_minimal_depth() {
    let out = ok(&["depth", "S3", "S2"]);
    assert!(out.contains("minimal depth: 3"), "{out}");
    assert!(out.contains("S = M M^t"));
}

#[test]
fn normal_subgroup_has_depth_two() {
    let v = json(&["depth", "--json", "S3", "C3"]);
    assert_eq!(v["report"]["minimal_depth"], 2);
}

#[test]
fn matrix_only_prints_inclusion_matrix() {
    let v = json(&["depth", "--json", "--matrix-only", "S3", "S2"]);
    assert_eq!(v["rows"], 2);
    assert_eq!(v["cols"], 3);
    assert_eq!(v["entries"], serde_json::json!([[1, 0, 1], [0, 1, 1]]));
}

#[test]
fn explicit_generators_match_named_subgroup() {
    let named = json(&["depth", "--json", "S4", "S3"]);
    let gens = json(&["depth", "--json", "S4", "gens=(1 2 3),(1 2)"]);
    assert_eq!(
        named["report"]["minimal_depth"],
        gens["report"]["minimal_depth"]
    );
}

#[test]
fn depth_cap_is_reported() {
    let v = json(&["depth", "--json", "--cap", "4", "S5", "S4"]);
    assert_eq!(v["report"]["minimal_depth"], Value::Null);
    assert_eq!(v["report"]["exceeds_cap"], true);
}

#[test]
fn towers() {
    let out = ok(&["tower", "S4", "V4", "gens=(1 2)(3 4)"]);
    assert!(
        out.contains("by matrices (N M M^t M <= q N M): yes"),
        "{out}"
    );
    assert!(out.contains("agree: yes"));

    let out = ok(&["tower", "S4", "S3", "gens=(1 2)"]);
    assert!(
        out.contains("by matrices (N M M^t M <= q N M): no"),
        "{out}"
    );
    assert!(out.contains("agree: yes"));

    let out = ok(&["tower", "S3", "S3", "S2"]);
    assert!(
        out.contains("by matrices (N M M^t M <= q N M): yes"),
        "{out}"
    );
}

#[test]
fn raw_matrix_depths() {
    for (body, d) in [
        ("[[1,0,1],[0,1,1]]", 3),
        ("[[1,0,0],[0,1,0],[0,0,1]]", 2),
        (r#"{"rows":1,"cols":2,"entries":[[1,1]]}"#, 2),
        ("[[1,0,0,1,0],[0,1,0,0,1],[0,0,1,1,1]]", 5),
    ] {
        let f = matrix_file(body);
        let v = json(&["matrix-depth", "--json", f.path().to_str().unwrap()]);
        assert_eq!(v["report"]["minimal_depth"], d, "{body}");
    }
}

#[test]
fn raw_matrix_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(["matrix-depth", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"[[2]]").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimal depth: 2"));
}

#[test]
fn malformed_matrices_are_input_errors() {
    for body in [
        "[[1,-1]]",
        "[[1,0],[1]]",
        "not json",
        "[[0,0]]",
        "[[1,0],[0,0]]",
        "[[1.5]]",
    ] {
        let f = matrix_file(body);
        let o = depthlab(&["matrix-depth", f.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{body}");
    }
    let o = depthlab(&["matrix-depth", "/nonexistent/matrix.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_frobenius_pair() {
    let out = ok(&["verify", "frobenius", "S3", "S2"]);
    assert!(out.starts_with("pass"), "{out}");
    assert!(
        out.contains("kernel: order 3 generated by (1 2 3)"),
        "{out}"
    );

    let o = depthlab(&["verify", "frobenius", "S4", "S3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("kernel: none"));
}

#[test]
fn verify_depth_two_quasi_bases() {
    assert!(ok(&["verify", "d2qb", "S3", "C3"]).starts_with("pass"));
    let o = depthlab(&["verify", "d2qb", "S3", "S2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail"));
}

#[test]
fn verify_depth_three_quasi_bases() {
    assert!(ok(&["verify", "d3qb", "A4", "V4"]).starts_with("pass"));
    let o = depthlab(&["verify", "d3qb", "S4", "S3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_mackey_and_tower_equivalence() {
    assert!(ok(&["verify", "mackey", "S4", "S3", "V4"]).starts_with("pass"));
    assert!(ok(&["verify", "mackey", "S4", "S3", "gens=(1 2)(3 4)"]).starts_with("pass"));
    assert!(ok(&["verify", "tower-equiv", "S4", "S3", "gens=(1 2)"]).starts_with("pass"));
    assert!(ok(&["verify", "separability", "S4", "S3"]).starts_with("pass"));
}

#[test]
fn verify_json() {
    let v = json(&["verify", "--json", "d2qb", "S4", "V4"]);
    assert!(v.is_object());
}

#[test]
fn bratteli_output() {
    let out = ok(&["bratteli", "S3", "S2"]);
    assert!(out.starts_with("graph bratteli {"));
    assert_eq!(out.matches(" -- ").count(), 4);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["table", "X9"][..],
        &["depth", "S3", "gens=(1 2 3 4)"],
        &["depth", "S4", "gens=(1 2"],
        &["depth", "S3", "A4"],
        &["verify", "unknown", "S3"],
        &["verify", "frobenius", "S3"],
        &["frobnicate"],
    ] {
        let o = depthlab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn order_bound_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(["table", "S4"])
        .env("DEPTHLAB_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let o = Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(["table", "S4"])
        .env("DEPTHLAB_MAX_ORDER", "ten")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--json", "S4"][..],
        &["depth", "--json", "S5", "S4"],
        &["bratteli", "S4", "D4"],
        &["verify", "--json", "frobenius", "A4", "C3"],
    ] {
        assert_eq!(depthlab(args).stdout, depthlab(args).stdout, "{args:?}");
    }
}
