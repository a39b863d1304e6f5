use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lpa_core::Graph;
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("{name}.json"))
}

fn lpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpa")).args(args).output().expect("runs lpa")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eval_examples() {
    let o = lpa(&["eval", path_str(&corpus("LOOP")), "x . x*"]);
    assert_eq!((code(&o), stdout(&o)), (0, "v".to_string()));
    let o = lpa(&["eval", path_str(&corpus("ROSE2")), "y1* . y2"]);
    assert_eq!((code(&o), stdout(&o)), (0, "0".to_string()));
    let o = lpa(&["eval", path_str(&corpus("LINE3")), "(v1 + v2 + v3) . e1"]);
    assert_eq!(stdout(&o), "e1");
    let o = lpa(&["eval", path_str(&corpus("LINE3")), "e1 . e1* + e1* . e1"]);
    assert_eq!(stdout(&o), "v1 + v2");
}

#[test]
fn eval_over_prime_field() {
    let o = lpa(&["--field", "gf:2", "eval", path_str(&corpus("LOOP")), "x + x"]);
    assert_eq!(stdout(&o), "0");
    let o = lpa(&["eval", path_str(&corpus("LOOP")), "x + x", "--field", "gf:3"]);
    assert_eq!(stdout(&o), "2 x");
}

#[test]
fn eval_json_output() {
    let o = lpa(&["eval", path_str(&corpus("LOOP")), "x* . x", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["element"], "v");
    assert_eq!(v["field"], "Q");
}

#[test]
fn eval_errors_have_exit_codes() {
    let loop_graph = corpus("LOOP");
    let g = path_str(&loop_graph);
    for (expr, expected) in [("v*", 3), ("w", 3), ("x +", 2), ("x # x", 2), ("(x", 2), ("x x", 2)] {
        let o = lpa(&["eval", g, expr]);
        assert_eq!(code(&o), expected, "{expr}: {}", stderr(&o));
        assert!(o.stdout.is_empty(), "no partial output for {expr}");
        assert!(stderr(&o).starts_with("error:"));
    }
    let o = lpa(&["eval", g, "v*"]);
    assert!(stderr(&o).contains("ghost marker on vertex"));
}

#[test]
fn analyze_examples() {
    let o = lpa(&["analyze", path_str(&corpus("LINE3"))]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["simple"], true);
    assert_eq!(v["edge_matrix"], serde_json::json!([[0, 1], [0, 0]]));

    let o = lpa(&["analyze", path_str(&corpus("C1"))]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["simple"], false);
    assert_eq!(v["condition_L"]["witness_cycle"], serde_json::json!(["x"]));
    assert_eq!(v["witness_element"], "v + x");

    let o = lpa(&["analyze", path_str(&corpus("FLAG"))]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["simple"], false);
    assert_eq!(v["condition_i"]["witness_subset"], serde_json::json!(["v2"]));
}

#[test]
fn analyze_json_has_exact_keys() {
    let o = lpa(&["analyze", path_str(&corpus("ROSE2"))]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(
        keys,
        [
            "condition_L",
            "condition_i",
            "edge_matrix",
            "graph",
            "row_finite",
            "simple",
            "sinks",
            "sources",
            "witness_element"
        ]
    );
    assert_eq!(v["graph"], "ROSE2");
    assert_eq!(v["row_finite"], true);
    assert_eq!(v["witness_element"], Value::Null);
}

#[test]
fn analyze_is_deterministic_for_a_seed() {
    let flag = corpus("FLAG");
    let run = |seed: &str| stdout(&lpa(&["analyze", path_str(&flag), "--format", "text", "--seed", seed]));
    assert_eq!(run("11"), run("11"));
    assert!(run("11").contains("quotient map: multiplicative"));
}

#[test]
fn analyze_text_lists_closed_simple_paths() {
    let o = lpa(&["analyze", path_str(&corpus("ROSE2")), "--format", "text", "--csp-bound", "1"]);
    let text = stdout(&o);
    assert!(text.contains("closed simple paths (length <= 1):"), "{text}");
    assert!(text.contains("v: y1, y2"), "{text}");
    let o = lpa(&["analyze", path_str(&corpus("ROSE2")), "--csp-bound", "0"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn quotient_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = lpa(&["quotient", path_str(&corpus("FLAG")), "--subset", "v2"]);
    assert_eq!(code(&o), 0);
    let f = Graph::from_json(&stdout(&o)).unwrap();
    assert_eq!((f.vertex_count(), f.edge_count()), (1, 1));
    let e = f.edges().next().unwrap();
    assert_eq!(f.source(e), f.range(e));

    let out = dir.path().join("F.json");
    fs::write(&out, stdout(&o)).unwrap();
    let o = lpa(&["analyze", path_str(&out)]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["simple"], false);
    assert_eq!(v["condition_L"]["holds"], false);
}

#[test]
fn quotient_rejections() {
    let o = lpa(&["quotient", path_str(&corpus("FLAG")), "--subset", "v1"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not hereditary"));
    let o = lpa(&["quotient", path_str(&corpus("LINE3")), "--subset", "v1,v2,v3"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("trivial subset"));
    let o = lpa(&["quotient", path_str(&corpus("LINE3")), "--subset", "v3"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not saturated"));
    let o = lpa(&["quotient", path_str(&corpus("LINE3")), "--subset", "nope"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn matrix_output() {
    let o = lpa(&["matrix", path_str(&corpus("C3"))]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"], serde_json::json!(["e1", "e2", "e3"]));
    assert_eq!(v["matrix"], serde_json::json!([[0, 1, 0], [0, 0, 1], [1, 0, 0]]));
    let o = lpa(&["matrix", path_str(&corpus("LINE1"))]);
    assert_eq!(code(&o), 3);
}

#[test]
fn batch_summarizes_in_file_order() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["LOOP", "LINE3", "FLAG"] {
        fs::copy(corpus(name), dir.path().join(format!("{name}.json"))).unwrap();
    }
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let o = lpa(&["batch", path_str(dir.path())]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let files: Vec<&str> = v["summary"].as_array().unwrap().iter().map(|s| s["file"].as_str().unwrap()).collect();
    assert_eq!(files, ["FLAG.json", "LINE3.json", "LOOP.json"]);
    let simple: Vec<bool> = v["reports"].as_array().unwrap().iter().map(|r| r["simple"].as_bool().unwrap()).collect();
    assert_eq!(simple, [false, true, false]);

    fs::write(dir.path().join("bad.json"), "{ not json").unwrap();
    let o = lpa(&["batch", path_str(dir.path()), "--format", "text"]);
    assert_eq!(code(&o), 2);
    let text = stdout(&o);
    assert!(text.contains("bad.json"), "{text}");
    assert!(text.contains("error: malformed graph file"), "{text}");
}

#[test]
fn graph_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "[1, 2").unwrap();
    assert_eq!(code(&lpa(&["analyze", path_str(&bad)])), 2);
    fs::write(&bad, r#"{"vertices": ["v"], "edges": [{"id": "e", "src": "v", "rng": "w"}]}"#).unwrap();
    assert_eq!(code(&lpa(&["analyze", path_str(&bad)])), 3);
    fs::write(&bad, r#"{"vertices": ["1v"], "edges": []}"#).unwrap();
    assert_eq!(code(&lpa(&["analyze", path_str(&bad)])), 2);
    assert_eq!(code(&lpa(&["analyze", path_str(&dir.path().join("missing.json"))])), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&lpa(&[])), 1);
    assert_eq!(code(&lpa(&["frobnicate"])), 1);
    assert_eq!(code(&lpa(&["--field", "r", "eval", "x", "y"])), 1);
    assert_eq!(code(&lpa(&["quotient", path_str(&corpus("FLAG"))])), 1);
    assert_eq!(code(&lpa(&["--help"])), 0);
}
