use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superyang"))
        .args(args)
        .env_remove("SUPERYANG_FUSION_BOUND")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn ybe_commands() {
    assert_eq!(code(&run(&["ybe", "--kind", "gl", "--m", "1", "--n", "1"])), 0);
    let out = run(&["ybe", "--kind", "osp", "--n", "1", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["residual_zero"], Value::Bool(true));
    assert_eq!(code(&run(&["ybe", "--kind", "nope"])), 2);
    assert_eq!(code(&run(&["ybe", "--kind", "gl", "--m", "1"])), 2);
}

#[test]
fn idempotent_commands() {
    let out = run(&["idempotent", "--shape", "2", "--tableau", "1,2", "--method", "both", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["equal"], Value::Bool(true));
    assert_eq!(v["murphy"]["2,1"], "1/2");
    let out = run(&["idempotent", "--shape", "1,1", "--json"]);
    assert_eq!(json(&out)["fusion"]["2,1"], "-1/2");
    assert_eq!(code(&run(&["idempotent", "--shape", "2,1", "--tableau", "2,1,3"])), 2);
    assert_eq!(code(&run(&["idempotent", "--shape", "3,2", "--method", "fusion"])), 3);
    assert_eq!(code(&run(&["idempotent", "--shape", "3", "--fusion-bound", "2"])), 3);
    let env = Command::new(env!("CARGO_BIN_EXE_superyang"))
        .args(["idempotent", "--shape", "2,1", "--method", "fusion"])
        .env("SUPERYANG_FUSION_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);
}

#[test]
fn gl_module_commands() {
    let out = run(&["module", "--kind", "gl", "--m", "1", "--n", "1", "--shape", "2,1", "--variant", "rprime", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["highest_weight"], v["expected"]);
    let out = run(&["module", "--kind", "gl", "--m", "1", "--n", "1", "--shape", "2,2"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda_2 = 2 > n = 1"));
}

#[test]
fn osp_module_command() {
    let out = run(&["module", "--kind", "osp", "--n", "2", "--d", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["drinfeld"], v["expected"]);
    assert_eq!(v["drinfeld"]["P"][0], serde_json::json!(["-1", "1"]));
    assert_eq!(code(&run(&["module", "--kind", "osp", "--n", "1", "--d", "2"])), 2);
}

#[test]
fn suite_json_lines() {
    let out = run(&["suite", "--level", "quick", "--json"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 100);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["failed"], 0);
    assert!(lines[..lines.len() - 1].iter().all(|c| c["passed"] == Value::Bool(true)));
    assert_eq!(code(&run(&["suite", "--level", "huge"])), 2);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("superyang-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ybe.json");
    let out = run(&["ybe", "--kind", "osp-sub", "--n", "2", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kappa"], "-3");
    std::fs::remove_dir_all(dir).unwrap();
}
