use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_str().unwrap().to_string()
}

fn rzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rzero")).args(args).env_remove("RZERO_SEED").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp(name: &str, contents: &[u8]) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn edge_barcode_over_f2() {
    let v = json_of(&rzero(&["barcode", &data("edge.json")]));
    assert_eq!(v["mode"], "signs");
    assert_eq!(v["field"], "f2");
    assert_eq!(v["criticals"], json!([{"rat": "1"}]));
    assert_eq!(v["robust_radius"], json!({"rat": "1"}));
    let distinguished: Vec<&Value> = v["bars"].as_array().unwrap().iter().filter(|b| b["distinguished"] == true).collect();
    assert_eq!(distinguished.len(), 1);
    assert_eq!(distinguished[0]["death"], json!({"rat": "1"}));
}

#[test]
fn grid_degree_class() {
    let v = json_of(&rzero(&["robust-radius", &data("grid_id.json")]));
    assert_eq!(v, json!({"robust_radius": {"rat": "1"}}));
    let m = json_of(&rzero(&["module", &data("grid_id.json")]));
    assert_eq!(m["mode"], "hopf");
    assert_eq!(m["coefficients"], "z");
}

#[test]
fn octagon_winding() {
    let c = json_of(&rzero(&["criticals", &data("octagon.json")]));
    assert_eq!(c["criticals"], json!([{"rat": "1/2"}, {"rat": "1"}]));
    let b = json_of(&rzero(&["barcode", &data("octagon.json"), "--mode", "circle"]));
    assert_eq!(b["mode"], "circle");
    assert_eq!(b["robust_radius"], json!({"rat": "0"}));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let file = data("rectangle.json");
    let serial = rzero(&["--threads", "1", "barcode", &file]);
    let parallel = rzero(&["--threads", "2", "barcode", &file]);
    assert_eq!(json_of(&serial), json_of(&parallel));
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn seed_from_environment() {
    let file = data("edge.json");
    let explicit = rzero(&["perturb", &file, "--delta", "1/10", "--seed", "7"]);
    let env = Command::new(env!("CARGO_BIN_EXE_rzero"))
        .args(["perturb", &file, "--delta", "1/10"])
        .env("RZERO_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(json_of(&explicit), json_of(&env));
    let other = rzero(&["perturb", &file, "--delta", "1/10", "--seed", "8"]);
    assert_ne!(json_of(&explicit), json_of(&other));
}

#[test]
fn perturbation_round_trips_through_barcode() {
    let out = rzero(&["perturb", &data("grid_id.json"), "--delta", "1/10", "--seed", "1"]);
    let path = temp("grid_perturbed.json", &out.stdout);
    let v = json_of(&rzero(&["barcode", &path]));
    assert_eq!(v["mode"], "hopf");
    let d = json_of(&rzero(&["bottleneck", &path, &data("grid_id.json")]));
    let rat = d["distance"]["rat"].as_str().expect("rational distance");
    let (num, den) = rat.split_once('/').unwrap_or((rat, "1"));
    let (num, den): (i64, i64) = (num.parse().unwrap(), den.parse().unwrap());
    assert!(10 * num <= den, "distance {rat} exceeds 1/10");
}

#[test]
fn bottleneck_of_a_barcode_with_itself_is_zero() {
    let out = rzero(&["barcode", &data("edge.json")]);
    let path = temp("edge_barcode.json", &out.stdout);
    assert_eq!(json_of(&rzero(&["bottleneck", &path, &path])), json!({"distance": {"rat": "0"}}));
}

#[test]
fn check_and_fuzz_pass() {
    let check = json_of(&rzero(&["check", &data("rectangle.json")]));
    assert!(check["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let fuzz = json_of(&rzero(&["fuzz", &data("edge.json"), "--delta", "1/10", "--trials", "5", "--seed", "2"]));
    assert_eq!(fuzz["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(rzero(&["criticals", "/nonexistent/input.json"]).status.code(), Some(1));
    assert_eq!(rzero(&["criticals", &temp("broken.json", b"{")]).status.code(), Some(1));
    assert_eq!(rzero(&["barcode"]).status.code(), Some(1));
    assert_eq!(rzero(&["perturb", &data("edge.json"), "--delta", "x"]).status.code(), Some(1));
    let inapplicable = rzero(&["barcode", &data("edge.json"), "--mode", "circle"]);
    assert_eq!(inapplicable.status.code(), Some(2));
    assert!(!inapplicable.stderr.is_empty());
    assert_eq!(rzero(&["module", &data("edge.json"), "--field", "z"]).status.code(), Some(2));
}

#[test]
fn undeclared_vertex_is_named() {
    let doc = br#"{"n": 1, "norm": "linf", "vertices": ["a"], "simplices": [["a", "b"]], "values": {"a": ["1"]}}"#;
    let out = rzero(&["criticals", &temp("undeclared.json", doc)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains('b'));
}
