use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pitelescope")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("stdout is json")
}

#[test]
fn list_filters_by_family() {
    let all = stdout(&["list"]);
    assert!(all.lines().count() >= 76);
    let t1 = stdout(&["list", "--family", "T1"]);
    assert!(t1.lines().any(|l| l.starts_with("t1.ex9 ")));
    assert!(t1.lines().all(|l| l.starts_with("t1.")));
    assert_eq!(code(&["list", "--family", "T9"]), 2);
    let rows = json(&["--output", "json", "list", "--family", "T12"]);
    assert!(rows.as_array().unwrap().iter().all(|r| r["family"] == "T12"));
}

#[test]
fn show_entry() {
    assert!(stdout(&["show", "t1.ex9"]).contains("\\frac{2}{\\pi^2}"));
    let e = json(&["--output", "json", "show", "t12.ex29"]);
    assert_eq!(e["rho"], "32/9");
    assert_eq!(code(&["show", "nosuch"]), 2);
}

#[test]
fn verify_rows_and_exit_codes() {
    let rows = json(&["--output", "json", "verify", "t1.ex9", "t12.ex29", "--digits", "10"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        let keys: Vec<_> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["id", "pass", "approx", "target", "abs_error", "method", "work", "millis"]);
        assert_eq!(r["pass"], true);
        assert!(r["abs_error"].as_str().unwrap().parse::<f64>().unwrap() < 1e-10);
    }
    assert_eq!(rows[0]["id"], "t1.ex9");
    assert_eq!(code(&["verify", "nosuch"]), 2);
    assert_eq!(code(&["verify"]), 2);
    let rows = json(&["--output", "json", "verify", "t12.cor15.m1", "--digits", "10", "--tolerance-exp", "30"]);
    assert_eq!(rows[0]["pass"], true);
    assert!(rows[0]["abs_error"].as_str().unwrap().parse::<f64>().unwrap() < 1e-30);
}

#[test]
fn thread_variable_is_validated() {
    let run_with = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_pitelescope"))
            .args(["verify", "t1.ex9"])
            .env("PI_TELESCOPE_THREADS", v)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(run_with("1"), 0);
    assert_eq!(run_with("0"), 2);
    assert_eq!(run_with("many"), 2);
}

#[test]
fn eval_instances() {
    let r = json(&[
        "--output", "json", "eval", "--family", "T1", "--m", "1", "--x", "1/2", "--p", "0", "--q", "0", "--r", "0",
        "--digits", "12",
    ]);
    assert_eq!(r["pass"], true);
    assert!(r["approx"].as_str().unwrap().starts_with("0.318309886183"));

    let r = json(&["--output", "json", "eval", "--family", "T12", "--m", "2", "--x", "1/2", "--x", "1/2", "--digits", "10"]);
    assert!(r["approx"].as_str().unwrap().starts_with("5.8696044010"));

    let out = run(&["eval", "--family", "T1", "--m", "1", "--x", "1/2", "--p", "0", "--q", "0", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p_i+q_i-r_i+1"));
    let out = run(&["eval", "--family", "T12", "--x", "1/3", "--q", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("min{p_i, q_i}"));

    assert_eq!(code(&["eval", "--family", "T1", "--m", "3", "--x", "1/2", "--x", "1/3"]), 2);
    assert_eq!(code(&["eval", "--family", "T1", "--x", "1/0"]), 2);
    assert_eq!(code(&["eval", "--family", "T1", "--x", "1/2", "--levels", "1"]), 2);
    // 1000 direct terms cannot reach 12 digits
    assert_eq!(code(&["eval", "--family", "T1", "--x", "1/2", "--method", "direct", "--terms", "1000"]), 1);
}

#[test]
fn pi_through_identities() {
    let lines = stdout(&["pi", "--via", "t1.cor4.m1", "--digits", "15"]);
    assert_eq!(lines.lines().next(), Some("3.14159265358979"));
    let r = json(&["--output", "json", "pi", "--via", "t1.ex9", "--digits", "12"]);
    assert_eq!(r["pi"], "3.14159265358");
    assert_eq!(r["diff"], 0);
    let r = json(&["--output", "json", "pi", "--via", "t12.cor20.m3", "--digits", "20"]);
    assert_eq!(r["pi"], "3.1415926535897932384");
    assert_eq!(code(&["pi", "--via", "nosuch"]), 2);
}

#[test]
fn emit_formats() {
    let e = json(&["emit", "t1.ex9", "--format", "json"]);
    let keys: Vec<_> = e.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(&keys[..9], ["id", "family", "m", "x", "p", "q", "r", "rho", "printed_lhs"]);
    assert_eq!(e["printed_lhs"][0]["pi_exp"], -2);
    assert_eq!(json(&["emit", "--all", "--format", "json"]).as_array().unwrap().len(), 140);
    assert_eq!(code(&["emit", "t1.ex9", "--format", "xml"]), 2);
    assert_eq!(code(&["emit", "nosuch", "--format", "latex"]), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("identities.tex");
    assert_eq!(code(&["emit", "--all", "--format", "latex", "--out", path.to_str().unwrap()]), 0);
    let tex = std::fs::read_to_string(&path).unwrap();
    assert_eq!(tex.matches("\\[").count(), 140);
    assert_eq!(tex.matches("\\left(").count(), tex.matches("\\right)").count());
    assert_eq!(tex.matches('{').count(), tex.matches('}').count());

    let missing = dir.path().join("no/such/dir/x.tex");
    assert_eq!(code(&["emit", "t1.ex9", "--format", "latex", "--out", missing.to_str().unwrap()]), 3);
}
