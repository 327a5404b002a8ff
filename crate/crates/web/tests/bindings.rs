use dpb_web::{catalog, evaluate, table, verify};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

fn values(v: &Value, key: &str) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn table_rows() {
    let v = parse(table("daehee", 1, 1, 4, "symbolic"));
    assert_eq!(values(&v, "value"), ["1", "-1/2", "2/3", "-3/2"]);
    let v = parse(table("carlitz", 1, 1, 3, "0"));
    assert_eq!(values(&v, "value"), ["1", "-1/2", "1/6"]);
    let v = parse(table("dpb", 2, 1, 3, ""));
    assert_eq!(values(&v, "value"), ["1", "-3/4", "3/4*lambda + 17/36"]);
}

#[test]
fn evaluate_lists_both_views() {
    let v = parse(evaluate("t/(elam(1)-1)", 3, "symbolic"));
    assert_eq!(
        values(&v, "sequence"),
        ["1", "1/2*lambda - 1/2", "-1/6*lambda^2 + 1/6"]
    );
    assert_eq!(values(&v, "value")[2], "-1/12*lambda^2 + 1/12");
}

#[test]
fn verify_reports() {
    let v = parse(verify("remark", 2, 3, 10, 32, 0));
    assert_eq!(v[0]["status"], "pass");
    let v = parse(verify("t == t + 1", 1, 1, 4, 4, 0));
    assert_eq!(v[0]["status"], "fail");
    assert_eq!(v[0]["witness"]["n"], 0);
    let v = parse(verify("all", -1, 2, 6, 32, 0));
    assert_eq!(v.as_array().unwrap().len(), 12);
}

#[test]
fn errors_are_json() {
    assert!(parse(table("catalan", 1, 1, 4, "")).get("error").is_some());
    assert!(parse(table("dpb", 1, 1, 99, "")).get("error").is_some());
    assert!(parse(verify("thm9", 1, 1, 4, 8, 0)).get("error").is_some());
    let err = parse(evaluate("log(t)", 4, ""));
    let inner: Value = serde_json::from_str(err["error"].as_str().unwrap()).unwrap();
    assert_eq!(inner["span"], serde_json::json!([0, 6]));
}

#[test]
fn catalog_lists_ids() {
    let v = parse(catalog());
    assert_eq!(v["families"].as_array().unwrap().len(), 6);
    assert_eq!(v["identities"][0], "eq5");
}
