use std::io::Write;
use std::process::{Command, Output, Stdio};

use gencliff::rep::GeneratorSet;
use gencliff::{AlgebraContext, AlgebraElement};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencliff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn table_matches_golden_file() {
    let out = run(&["table", "--m", "3", "--d", "2"]);
    assert!(out.status.success());
    let golden = include_str!("golden/table_m3_d2.txt");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn eval_determinant_agrees_with_matrix() {
    let out = run(&["--format", "json", "eval", "--m", "3", "--d", "2", "det(2 + e1 - 3i*e1^2*e2)"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let got = v["scalar"].as_array().unwrap();
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let u = gencliff::expr::eval_str("2 + e1 - 3i*e1^2*e2", &ctx).unwrap();
    let gencliff::expr::Value::Element(u) = u else { panic!("element expected") };
    let det = GeneratorSet::new(&ctx).unwrap().represent(&u).unwrap().det().unwrap();
    assert!((got[0].as_f64().unwrap() - det.re).abs() < 1e-9 * det.norm());
    assert!((got[1].as_f64().unwrap() - det.im).abs() < 1e-9 * det.norm());
}

#[test]
fn eval_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gencliff"))
        .args(["--format", "json", "eval", "--m", "3", "--d", "2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"e2*e1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let back = AlgebraElement::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let e1 = AlgebraElement::generator(&ctx, 1).unwrap();
    let e2 = AlgebraElement::generator(&ctx, 2).unwrap();
    assert!(back.approx_eq(&e2.multiply(&e1).unwrap(), 1e-15));
}

#[test]
fn parse_errors_are_reported_as_json() {
    let out = run(&["--format", "json", "eval", "--m", "3", "--d", "2", "e1 + "]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "parse");
    assert!(err["error"]["position"].as_u64().is_some());
}

#[test]
fn generator_out_of_range_is_an_error() {
    let out = run(&["eval", "--m", "3", "--d", "2", "e3"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("error"), "{msg}");
}

#[test]
fn bad_parameters_exit_with_one() {
    assert_eq!(run(&["eval", "--m", "1", "--d", "2", "e1"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--m", "3", "e1"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn verify_passes_at_default_tolerance() {
    let out = run(&["verify", "--m", "3", "--d", "2", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_fails_at_impossible_tolerance() {
    let out = run(&["--format", "json", "verify", "--m", "3", "--d", "2", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(2));
    let reports = stdout_json(&out);
    let checks = reports[0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["passed"] == false));
}

#[test]
fn charpoly_json_shape() {
    let out = run(&["--format", "json", "charpoly", "--m", "3", "--d", "2", "e1 + e2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["N"], 3);
    assert_eq!(v["C"].as_array().unwrap().len(), 3);
    assert_eq!(v["det"][0].as_f64(), Some(2.0));
}

#[test]
fn basis_sizes() {
    for (kind, m, d, len) in [("u", 3, 2, 9), ("su", 3, 2, 8), ("u", 2, 2, 4), ("su", 4, 2, 15)] {
        let (m, d) = (m.to_string(), d.to_string());
        let out = run(&["--format", "json", "basis", kind, "--m", &m, "--d", &d]);
        assert!(out.status.success());
        assert_eq!(stdout_json(&out).as_array().unwrap().len(), len, "{kind} {m} {d}");
    }
}

#[test]
fn su3_tables_are_available() {
    let out = run(&["--format", "json", "su3-tables"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["tau"].as_array().unwrap().len(), 8);
    assert_eq!(v["gell_mann"].as_array().unwrap().len(), 8);
}
