use std::process::{Command, Output};

use dpb_core::LambdaPoly;
use serde_json::Value;

fn dpb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = dpb(&all);
    assert_eq!(out.status.code(), Some(0), "{args:?}");
    serde_json::from_slice(&out.stdout).unwrap()
}

fn column(v: &Value, key: &str) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn table_text_is_aligned() {
    let out = dpb(&["table", "dpb", "--k", "2", "--n", "12"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], " n  value");
    assert_eq!(lines[1], " 0  1");
    assert_eq!(lines[2], " 1  -3/4");
    assert_eq!(lines[3], " 2  3/4*lambda + 17/36");
    assert!(lines[11].starts_with("10  "));
}

#[test]
fn csv_has_header() {
    let out = dpb(&["table", "carlitz", "--n", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "n,value\n0,1\n1,1/2*lambda - 1/2\n2,-1/6*lambda^2 + 1/6\n"
    );
    let out = dpb(&["eval", "exp(t)", "--order", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,value,sequence\n0,1,1\n1,1,1\n2,1/2,1\n");
}

#[test]
fn json_rows_are_lambda_polys_and_reserialize() {
    let v = json(&["table", "dpb-higher", "--k", "-1", "--r", "2", "--n", "6"]);
    assert_eq!(v["descriptor"], "dpb-higher");
    assert_eq!(v["k"], -1);
    assert_eq!(v["r"], 2);
    assert_eq!(v["lambda"], "symbolic");
    for value in column(&v, "value") {
        let p: LambdaPoly = value.parse().unwrap();
        assert_eq!(p.to_string(), value);
    }
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    let daehee = json(&["table", "daehee", "--n", "2"]);
    assert_eq!(daehee["k"], Value::Null);
}

#[test]
fn tables_agree_with_eval() {
    let cases = [
        ("bernoulli", "t/(exp(t)-1)"),
        ("daehee", "log(1+t)/t"),
        ("carlitz", "t/(elam(1)-1)"),
        ("poly-bernoulli", "li(-2, 1-exp(-t))/(exp(t)-1)"),
        ("dpb", "li(-2, 1-elam(-1))/(elam(1)-1)"),
        ("dpb-higher", "(li(-2, 1-elam(-1))/(elam(1)-1))^2"),
    ];
    for (family, expr) in cases {
        let table = json(&["table", family, "--k", "-2", "--r", "2", "--n", "13"]);
        let eval = json(&["eval", expr, "--order", "13"]);
        assert_eq!(
            column(&table, "value"),
            column(&eval, "sequence"),
            "{family}"
        );
    }
}

#[test]
fn numeric_lambda_specializes() {
    let v = json(&["table", "dpb", "--k", "2", "--n", "3", "--lambda", "1/3"]);
    assert_eq!(column(&v, "value"), ["1", "-3/4", "13/18"]);
    let out = dpb(&["poly", "carlitz", "--n", "2", "--lambda", "0"]);
    assert_eq!(stdout(&out), "x^2 - x + 1/6\n");
}

#[test]
fn exit_codes() {
    assert_eq!(dpb(&["verify", "k0", "--n", "20"]).status.code(), Some(0));
    assert_eq!(
        dpb(&["verify", "t == t + 1", "--order", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(dpb(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(dpb(&["verify", "t == (t"]).status.code(), Some(2));
    assert_eq!(dpb(&["eval", "1/(t)"]).status.code(), Some(2));
    assert_eq!(dpb(&["table", "catalan"]).status.code(), Some(2));
    assert_eq!(dpb(&["table", "dpb", "--n", "40"]).status.code(), Some(2));
    assert_eq!(dpb(&["poly", "dpb", "--n", "32"]).status.code(), Some(2));
    assert_eq!(
        dpb(&["verify", "remark", "--r", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(dpb(&["verify", "eq5", "--n", "40"]).status.code(), Some(2));
    assert_eq!(
        dpb(&["table", "dpb", "--lambda", "pi"]).status.code(),
        Some(2)
    );
}

#[test]
fn errors_point_at_the_source() {
    let out = dpb(&["eval", "log(t) + 1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("log(t) + 1\n  ^^^^^^"), "{err}");
}

#[test]
fn verify_json_report() {
    let out = dpb(&["verify", "t == t + 1", "--order", "4", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(
        v["witness"],
        serde_json::json!({"n": 0, "lhs": "0", "rhs": "1"})
    );

    let out = dpb(&[
        "verify", "all", "--k", "-1", "--r", "2", "--n", "6", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        ids,
        [
            "eq5",
            "eq17",
            "eq18",
            "thm1",
            "thm2",
            "thm3",
            "thm4",
            "remark",
            "sheffer16",
            "sheffer23",
            "k0",
            "lambda0"
        ]
    );
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass" && r["params"]["k"] == -1));
}

#[test]
fn seed_is_reported_and_reproducible() {
    let a = stdout(&dpb(&["verify", "eq18", "--n", "4", "--seed", "5"]));
    let b = stdout(&dpb(&["verify", "eq18", "--n", "4", "--seed", "5"]));
    assert_eq!(a, b);
    assert!(a.contains("seed = 5"));
}
