use std::process::{Command, Output};

use cliffdet::json::multivector_from_json;
use cliffdet::{parse_and_evaluate, Signature};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn eval_text_and_json() {
    let out = run(&["--sig", "2,0", "eval", "e1*e2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1*e12");
    let out = run(&["--sig", "2,0", "--json", "eval", "e1*e2"]);
    assert_eq!(stdout(&out), r#"{"p":2,"q":0,"coeffs":{"1,2":[1,0]}}"#);
}

#[test]
fn json_output_parses_back() {
    let expr = "(0.25-1.5i)*e13 - 3*e2 + 0.1 + herm(e123)";
    let out = run(&["--sig", "1,2", "--json", "eval", expr]);
    let back = multivector_from_json(&stdout(&out)).unwrap();
    let direct = parse_and_evaluate(expr, Signature::new(1, 2).unwrap()).unwrap();
    assert!(back.approx_eq(&direct, 1e-12).unwrap());
}

#[test]
fn leading_minus_is_an_expression() {
    let out = run(&["--sig", "2,0", "eval", "-e1^2"]);
    assert_eq!(stdout(&out), "-1");
}

#[test]
fn parse_errors_exit_2() {
    let out = run(&["--sig", "2,0", "eval", "e3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("out of range"), "{err}");
    assert_eq!(run(&["--sig", "2,0", "eval", "1 +"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "e1"]).status.code(), Some(2));
}

#[test]
fn det_inv_trace() {
    assert_eq!(stdout(&run(&["--sig", "1,0", "det", "1 + 2*e1"])), "-3");
    assert_eq!(
        stdout(&run(&["--sig", "0,1", "inv", "1 + e1"])),
        "0.5 - 0.5*e1"
    );
    assert_eq!(
        stdout(&run(&["--sig", "2,0", "trace", "3 + e1*e1 + e12"])),
        "4"
    );
    assert_eq!(
        stdout(&run(&["--sig", "2,0", "--json", "trace", "2i"])),
        r#"{"trace":[0,2]}"#
    );
}

#[test]
fn det_check_prints_oracle() {
    let out = run(&["--sig", "2,2", "det", "--check", "1 + e12 + 0.5*e3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.lines().nth(1).unwrap().starts_with("oracle "),
        "{text}"
    );
    let out = run(&["--sig", "1,2", "--json", "det", "--check", "e1 + 2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["det"], v["oracle"]);
}

#[test]
fn domain_exit_codes() {
    assert_eq!(
        run(&["--sig", "1,0", "inv", "1 + e1"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["--sig", "3,3", "det", "e1"]).status.code(), Some(5));
    assert_eq!(run(&["--sig", "3,3", "inv", "e1"]).status.code(), Some(5));
    assert_eq!(
        run(&["--sig", "1,0", "eval", "(2+e1)^4000000000"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn matrix_dumps() {
    assert_eq!(
        stdout(&run(&["--sig", "1,0", "matrix", "e1"])),
        r#"{"dim":2,"entries":[[1,0],[0,0],[0,0],[-1,0]]}"#
    );
    assert_eq!(
        stdout(&run(&["--sig", "3,0", "matrix", "e3"])),
        r#"{"dim":4,"entries":[[0,0],[0,1],[0,0],[0,0],[0,-1],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,-1],[0,0],[0,0],[0,1],[0,0]]}"#
    );
    assert_eq!(
        stdout(&run(&["--sig", "2,0", "matrix", "1"])),
        r#"{"dim":2,"entries":[[1,0],[0,0],[0,0],[1,0]]}"#
    );
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--trials", "10", "--seed", "7"]);
    let b = run(&["verify", "--trials", "10", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text
        .lines()
        .all(|l| l.starts_with("SUITE sig=(") || l.starts_with("TOTAL")));
    assert!(text.contains("SUITE sig=(2,2) name=parity-n4 trials=10 failures=0"));
}

#[test]
fn verify_single_suite() {
    let out = run(&["verify", "--only", "det-oracle", "--sig", "2,3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "SUITE sig=(2,3) name=det-oracle trials=100 failures=0\nTOTAL suites=1 failures=0"
    );
    assert_eq!(run(&["verify", "--only", "bogus"]).status.code(), Some(2));
}
