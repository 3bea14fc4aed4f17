use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shuffle-skew")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn expand_passes_on_small_cases() {
    for (n, k) in [("3", "2"), ("3", "3"), ("2", "1")] {
        let (code, v) = json(&["expand", "--n", n, "--k", k, "--format", "json"]);
        assert_eq!(code, 0, "n={n} k={k}");
        assert_eq!(v["verdict"], "PASS");
        assert_eq!(v["skewed_shuffle"], v["stacked"]);
        assert_eq!(v["stacked"], v["delta_prime"]);
    }
}

#[test]
fn expand_pretty_shows_the_worked_example() {
    let out = run(&["expand", "--n", "3", "--k", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1 + q + t)*s(2,1) + (q + t + q^2 + q*t + t^2)*s(1,1,1)"));
    assert!(text.contains("verdict         PASS"));
}

#[test]
fn verify_perp_all_passes() {
    let (code, v) = json(&["verify-perp", "--n", "5", "--k", "3", "--all", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["K"], 9);
    let (code, v) = json(&["verify-perp", "--K", "8", "--k", "4", "--all", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 5);
}

#[test]
fn corrupted_c_is_caught() {
    let (code, v) = json(&["verify-perp", "--K", "6", "--k", "2", "--all", "--corrupt-c", "1", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "FAIL");
    assert!(v["counterexample"]["split"].is_object());
}

#[test]
fn single_case_mode() {
    let (code, v) = json(&["verify-perp", "--runs", "9,0,0", "--b", "4,0,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"], 1);
    assert_eq!(v["case"]["admissible"], false);
    assert_eq!(v["case"]["pairing"], Value::Array(vec![]));
    let (code, v) = json(&["verify-perp", "--runs", "6,3,0", "--b", "2,2,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["case"]["admissible"], true);
    assert_eq!(v["case"]["c_stat"], v["case"]["tdinv_fixed_point"]);
}

#[test]
fn guards_and_usage_errors_exit_two() {
    assert_eq!(run(&["expand", "--n", "7", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--n", "7", "--k", "3", "--cap", "20"]).status.code(), Some(2));
    assert_eq!(run(&["verify-perp", "--runs", "9,0,0", "--b", "2,2,0"]).status.code(), Some(2));
    assert_eq!(run(&["verify-perp", "--n", "5", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["involution-table", "--m", "9"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn involution_table_shapes() {
    let (code, v) = json(&["involution-table", "--m", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["fixed"], serde_json::json!(["1"]));
    assert_eq!(v["pairs"].as_array().unwrap().len(), 0);
    let (_, v) = json(&["involution-table", "--m", "4", "--format", "json"]);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 37);
    assert_eq!(v["fixed"], serde_json::json!(["1234"]));
    let (_, v) = json(&["involution-table", "--m", "5", "--format", "json"]);
    assert_eq!(v["contents"].as_array().unwrap().len(), 16);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-perp", "--n", "4", "--k", "3", "--all", "--format", "csv", "--jobs", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["involution-table", "--m", "5", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
