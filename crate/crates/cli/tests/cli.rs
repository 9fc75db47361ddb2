use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn linecomp(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linecomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const X_AXIS: &str = r#"{"dimension":2,"lines":[{"point":["0","0"],"direction":["1","0"]}]}"#;
const HORIZONTAL_3D: &str = r#"{"dimension":3,"lines":[{"point":["0","0","1"],"direction":["1","2","0"]}]}"#;

#[test]
fn gen_then_analyze_is_reproducible() {
    let gen = linecomp(&["gen", "--dim", "3", "--count", "6", "--profile", "mixed", "--seed", "11"], "");
    assert!(gen.status.success());
    let file = String::from_utf8(gen.stdout).unwrap();
    let first = linecomp(&["analyze"], &file);
    let second = linecomp(&["analyze"], &file);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["self_check"]["consistent"], true);
}

#[test]
fn verify_one_spatial_line() {
    let o = linecomp(&["verify", "--grid", "16"], HORIZONTAL_3D);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verification"]["measured"], serde_json::json!([1, 1, 0, 0]));
}

#[test]
fn horizontal_line_rejects_vertical_height() {
    let o = linecomp(&["sweep", "--direction", "0,0,1"], HORIZONTAL_3D);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "non_generic_direction");
    assert_eq!(v["error"]["details"]["violation"]["kind"], "perpendicular_edge");
    assert!(!o.stderr.is_empty());
}

#[test]
fn poset_of_one_line() {
    let o = linecomp(&["poset", "-"], X_AXIS);
    assert!(o.status.success());
    assert_eq!(json(&o)["poset"]["hasse_edges"], serde_json::json!([["l0", "T"]]));
}

#[test]
fn missing_file_and_usage_errors() {
    let o = linecomp(&["analyze", "/nonexistent/arrangement.json"], "");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "io");
    let o = linecomp(&["frobnicate"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn four_dimensional_verify_needs_the_flag() {
    let line4 = r#"{"dimension":4,"lines":[{"point":["0","0","0","0"],"direction":["1","0","0","0"]}]}"#;
    let o = linecomp(&["verify", "--grid", "4"], line4);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "wrong_dimension");
    let o = linecomp(&["verify", "--grid", "6", "--allow-4d"], line4);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(json(&o)["verification"]["measured"], serde_json::json!([1, 0, 1, 0, 0]));
}
