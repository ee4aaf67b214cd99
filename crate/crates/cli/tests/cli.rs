use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn closeness(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_closeness"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = closeness(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn ok_text(args: &[&str]) -> String {
    let out = closeness(args, "");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> (i32, String) {
    let out = closeness(args, stdin);
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn report<'a>(bounds: &'a Value, measure: &str, id: &str) -> &'a Value {
    bounds["measures"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["measure"] == measure)
        .and_then(|m| {
            m["reports"]
                .as_array()
                .unwrap()
                .iter()
                .find(|r| r["bound_id"] == id)
        })
        .unwrap()
}

#[test]
fn generate_tnd_edgelist() {
    let text = ok_text(&["generate", "tnd", "--r", "5,0,0,0", "--format", "edgelist"]);
    let edges = text.lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(edges, 9);
    let inv = ok_json(&["compute", "-"], &text);
    assert_eq!(inv["n"], 10);
    assert_eq!(inv["m"], 9);
}

#[test]
fn generate_petersen_is_cubic() {
    let g6 = ok_text(&["generate", "petersen"]);
    assert_eq!(g6.trim(), "IheA@GUAo");
    let inv = ok_json(&["compute", "-"], &g6);
    assert_eq!(inv["n"], 10);
    assert_eq!(inv["m1"], 90);
    assert_eq!(inv["girth"], 5);
    assert_eq!(inv["flags"]["is_moore_diam2"], true);
}

#[test]
fn invalid_parameters_exit_2_and_name_the_parameter() {
    let (c, err) = code(&["generate", "cycle", "--n", "2"], "");
    assert_eq!(c, 2);
    assert!(err.contains("`n`"), "{err}");
    let (c, err) = code(&["generate", "tnd", "--r", "3"], "");
    assert_eq!(c, 2);
    assert!(err.contains("`r`"), "{err}");
    let (c, err) = code(&["generate", "random", "--n", "4", "--extra", "9"], "");
    assert_eq!(c, 2);
    assert!(err.contains("`extra_edges`"), "{err}");
    assert_eq!(code(&["generate", "dodecahedron"], "").0, 2);
    assert_eq!(code(&["generate", "path"], "").0, 2);
}

#[test]
fn compute_triangle() {
    let inv = ok_json(&["compute", "--family", "complete:3"], "");
    assert_eq!(inv["closeness"].to_string(), "3");
    assert_eq!(inv["m1"], 12);
    assert_eq!(inv["m2"], 12);
    assert_eq!(inv["rm2"], 3);
    assert_eq!(inv["wiener_polarity"], 0);
}

#[test]
fn compute_diameter_four_trees() {
    let a = ok_json(&["compute", "--family", "tnd:5,0,0,0"], "");
    let b = ok_json(&["compute", "--family", "tnd:4,1,0,0"], "");
    assert_eq!(a["closeness"].to_string(), "23.25");
    assert_eq!(b["closeness"].to_string(), "21.75");
}

#[test]
fn compute_alpha_list() {
    let inv = ok_json(
        &["compute", "--family", "cycle:4", "--alpha", "0.5,0.25"],
        "",
    );
    let gc = inv["gc_alpha"].as_object().unwrap();
    assert_eq!(gc.keys().collect::<Vec<_>>(), ["0.5", "0.25"]);
    assert_eq!(gc["0.5"].to_string(), "5");
}

#[test]
fn compute_rejects_bad_alpha_and_bad_input() {
    assert_eq!(
        code(&["compute", "--family", "petersen", "--alpha", "1.5"], "").0,
        2
    );
    assert_eq!(
        code(&["compute", "--family", "petersen", "--alpha", "0"], "").0,
        2
    );
    let (c, err) = code(&["compute", "-"], "a b\nc d e\n");
    assert_eq!(c, 2);
    assert!(err.contains("line 2"), "{err}");
    let (c, _) = code(&["compute", "-", "--format", "graph6"], "!!!\n");
    assert_eq!(c, 2);
}

#[test]
fn edge_list_labels_are_echoed() {
    let inv = ok_json(&["compute", "-"], "# a path\nx y\n\ny z\n");
    assert_eq!(inv["vertex_labels"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(inv["closeness"].to_string(), "2.5");
}

#[test]
fn disconnected_input() {
    let inv = ok_json(&["compute", "-"], "a b\nc d\n");
    assert_eq!(inv["connected"], false);
    assert_eq!(inv["convention"], "alpha_inf_zero");
    assert_eq!(inv["diameter"], Value::Null);
    let (c, err) = code(&["bounds", "-"], "a b\nc d\n");
    assert_eq!(c, 3);
    assert!(err.contains("disconnected"), "{err}");
}

#[test]
fn bounds_petersen() {
    let b = ok_json(&["bounds", "--family", "petersen", "--alpha", "0.5"], "");
    let r = report(&b, "generalized_closeness", "T3_2");
    assert_eq!(r["lower"].to_string(), "30");
    assert_eq!(r["upper"].to_string(), "30");
    assert_eq!(r["equality_expected"], true);
    assert_eq!(r["attained"], true);
}

#[test]
fn bounds_hexagon() {
    let b = ok_json(&["bounds", "--family", "cycle:6", "--alpha", "0.5"], "");
    let r = report(&b, "closeness", "C3_4");
    assert_eq!(r["upper"].to_string(), "9.75");
    assert_eq!(r["equality_expected"], true);
}

#[test]
fn bounds_path() {
    let b = ok_json(&["bounds", "--family", "path:10", "--alpha", "0.5"], "");
    let r = report(&b, "generalized_closeness", "T3_1");
    assert_eq!(r["lower"].to_string(), "16.00390625");
    assert_eq!(r["attained"], true);
    let truth = &b["measures"][0]["truth"];
    assert_eq!(truth.to_string(), "16.00390625");
}

#[test]
fn verify_check_filter() {
    let v = ok_json(
        &[
            "verify",
            "--checks",
            "thm2_6",
            "--max-n",
            "4",
            "--trees-max-n",
            "5",
            "--random-count",
            "5",
        ],
        "",
    );
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["check_id"], "thm2_6");
    assert_eq!(v["total_failures"], 0);
}

#[test]
fn verify_failures_exit_1() {
    let out = closeness(
        &[
            "verify",
            "--checks",
            "thm3_2",
            "--max-n",
            "4",
            "--trees-max-n",
            "4",
            "--tolerance=-1e-6",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["total_failures"].as_u64().unwrap() > 0);
    assert!(!v["checks"][0]["counterexamples"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn verify_config_errors_exit_2() {
    assert_eq!(code(&["verify", "--max-n", "9"], "").0, 2);
    assert_eq!(code(&["verify", "--checks", "thm9_9"], "").0, 2);
    assert_eq!(code(&["verify", "--families", "hypercubes"], "").0, 2);
}

#[test]
fn bench_tnd() {
    let b = ok_json(
        &[
            "bench",
            "--family",
            "tnd",
            "--sizes",
            "100,1000",
            "--repetitions",
            "1",
        ],
        "",
    );
    let rows = b["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["values_equal"] == true));
}

#[test]
fn bench_long_path_has_no_formula() {
    let (c, err) = code(&["bench", "--family", "path", "--sizes", "50"], "");
    assert_eq!(c, 2);
    assert!(err.contains("no exact formula"), "{err}");
}

#[test]
fn graph6_and_edgelist_round_trip_through_the_cli() {
    let g6 = ok_text(&[
        "generate", "random", "--n", "30", "--extra", "20", "--seed", "9",
    ]);
    let el = ok_text(&[
        "generate", "random", "--n", "30", "--extra", "20", "--seed", "9", "--format", "edgelist",
    ]);
    let a = ok_json(&["compute", "-"], &g6);
    let b = ok_json(&["compute", "-"], &el);
    for key in ["n", "m", "closeness", "m1", "m2", "gc_alpha", "girth"] {
        assert_eq!(a[key], b[key], "{key}");
    }
}
