use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_primgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gen_then_classify() {
    let g = run(&["gen", "h", "3"], None);
    assert!(g.status.success());
    let text = stdout(&g);
    assert!(text.starts_with("7\n"));
    let c = run(&["classify", "-"], Some(&text));
    assert!(c.status.success());
    let v: Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(v["verdict"]["verdict"], "minus_one_critical");
    assert_eq!(v["verdict"]["family"], "H");
    assert_eq!(v["criticality"]["noncritical"], serde_json::json!([0]));
}

#[test]
fn gen_class_as_json_and_dot() {
    let o = run(&["gen", "f", "2", "2", "--format", "json"], None);
    let ms = json_lines(&o);
    assert!(!ms.is_empty());
    assert!(ms.iter().all(|m| m["family"] == "F" && m["claims"]["noncritical"] == 2));
    let o = run(&["gen", "q5", "--format", "dot"], None);
    assert!(stdout(&o).contains("fillcolor"));
    let o = run(&["gen", "hstar-even", "2", "2", "2", "--gamma"], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("8\n"));
}

#[test]
fn check_and_ig() {
    let chain = "3\n011\n001\n000\n";
    let o = run(&["check", "-"], Some(chain));
    assert!(stdout(&o).contains("indecomposable false"));
    let o = run(&["check", "--json", "-"], Some(chain));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["intervals"], serde_json::json!([[0, 1], [1, 2]]));

    let r7 = stdout(&run(&["gen", "r", "3"], None));
    let o = run(&["ig", "-"], Some(&r7));
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("path(5 edges)"), "{out}");
    assert!(out.contains("6 [style=filled"));
}

#[test]
fn bad_input_is_an_error() {
    let o = run(&["classify", "-"], Some("2\n0x\n00\n"));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["survey", "--order", "6", "--exhaustive"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["ig", "-"], Some("3\n011\n001\n000\n"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exhaustive_survey_summary() {
    let o = run(&["survey", "--order", "4", "--exhaustive"], None);
    assert!(o.status.success());
    let lines = json_lines(&o);
    let s = lines.last().unwrap();
    assert_eq!(s["record"], "summary");
    assert_eq!(s["visited"], 4096);
    assert_eq!(s["passed"], true);
    let total: u64 = s["verdicts"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(total, 4096);
    assert!(lines[..lines.len() - 1].iter().all(|l| l["record"] == "find"));
}

#[test]
fn random_survey_is_deterministic_across_workers() {
    let strip = |o: &Output| {
        let mut v = json_lines(o);
        v.last_mut().unwrap().as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = run(
        &[
            "survey",
            "--order",
            "7",
            "--samples",
            "1500",
            "--seed",
            "9",
            "--workers",
            "1",
        ],
        None,
    );
    let b = run(
        &[
            "survey",
            "--order",
            "7",
            "--samples",
            "1500",
            "--seed",
            "9",
            "--workers",
            "2",
        ],
        None,
    );
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip(&a), strip(&b));
    let s = strip(&a).pop().unwrap();
    assert_eq!(s["mutants"], 340);
    assert_eq!(s["visited"], 1500 + 340);
}

#[test]
fn roundtrip_and_selftest() {
    let o = run(&["roundtrip", "--orders", "7..7"], None);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines[0]["members"], 340);
    assert_eq!(lines[1]["passed"], true);
    let o = run(&["roundtrip", "--orders", "5..7"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["selftest"], None);
    assert!(o.status.success());
    assert!(stdout(&o).lines().all(|l| !l.starts_with("FAIL")));
}
