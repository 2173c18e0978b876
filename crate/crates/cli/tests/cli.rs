//! End-to-end runs of the `romanus` binary: exit codes, text and JSON output.

use std::process::{Command, Output};

use num_bigint::BigUint;
use serde_json::Value;

fn romanus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_romanus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn succeeds(args: &[&str]) -> String {
    let o = romanus(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn fails(args: &[&str], code: i32) {
    let o = romanus(args);
    assert_eq!(o.status.code(), Some(code), "{args:?}");
    assert!(o.stdout.is_empty(), "{args:?} wrote a result");
    assert!(!o.stderr.is_empty(), "{args:?} gave no diagnostic");
}

/// Runs with `--json`; the output must be one document with the fixed keys.
fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let text = succeeds(&all);
    let doc: Value = serde_json::from_str(&text).expect("one JSON document");
    for key in ["command", "inputs", "result", "certified_digits"] {
        assert!(doc.get(key).is_some(), "{args:?}: missing {key}");
    }
    assert_eq!(doc["command"], args[0]);
    // re-serialising changes nothing, so numeric strings survive verbatim
    let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    doc
}

/// `floor(sqrt(2 + sqrt(2)) · 10^d)` with integer square roots only.
fn sqrt_2_plus_sqrt_2(d: u32) -> BigUint {
    let k = 2 * d + 10;
    let scale = BigUint::from(10u32).pow(k);
    let s = (BigUint::from(2u32) * &scale * &scale).sqrt();
    let inner = (BigUint::from(2u32) * &scale + s) * &scale;
    inner.sqrt() / BigUint::from(10u32).pow(k - d)
}

#[test]
fn gen() {
    let text = succeeds(&["gen", "45", "--monic", "--dialect", "stevin"]);
    assert!(text.starts_with("45(1) - 3795(3) + 95634(5)"));
    assert!(text.contains("- 232676280(15)") && text.trim_end().ends_with("+ 1(45)"));
    assert_eq!(succeeds(&["gen", "5", "--monic", "--dialect", "viete"]).trim(), "5N - 5C + 1QC");
    assert_eq!(succeeds(&["gen", "3"]).trim(), "-3x + 4x^3");
    let doc = json(&["gen", "5", "--monic"]);
    assert_eq!(doc["result"]["coefficients"], serde_json::json!(["0", "5", "0", "-5", "0", "1"]));
    assert_eq!(doc["certified_digits"], Value::Null);
    fails(&["gen", "4", "--monic", "--dialect", "viete"], 1);
    fails(&["gen", "4", "--dialect", "klingon"], 2);
    fails(&["gen", "-1"], 2);
}

#[test]
fn eval() {
    let text = succeeds(&["eval", "sqrt(2+sqrt(2))", "--digits", "20"]);
    // 1.847759065022573512256…, rounded at the 20th place
    let floor = sqrt_2_plus_sqrt_2(21);
    let rounded = (floor + BigUint::from(5u32)) / BigUint::from(10u32);
    assert_eq!(rounded.to_string(), "184775906502257351226");
    assert_eq!(text.trim(), "1.84775906502257351226");
    let doc = json(&["eval", "sqrt(2+sqrt(2))", "--digits", "20"]);
    assert_eq!(doc["result"]["value"], text.trim());
    assert_eq!(doc["certified_digits"], 20);
    fails(&["eval", "sqrt(2+", "--digits", "5"], 2);
    fails(&["eval", "sqrt(1 - 2)"], 1);
    fails(&["eval", "1/(1 - 1)"], 1);
    fails(&["eval", "2", "--digits", "0"], 2);
}

#[test]
fn solve() {
    let text = succeeds(&["solve", "45", "--rhs", "sqrt(2+sqrt(2+sqrt(2+sqrt(2))))", "--quiet"]);
    assert_eq!(text.lines().count(), 45);
    let doc = json(&["solve", "45", "--rhs", "sqrt(2+sqrt(2+sqrt(2+sqrt(2))))"]);
    let r = &doc["result"];
    assert_eq!(r["b_angle"], "15/32");
    assert_eq!((r["positive_count"].as_u64(), r["negative_count"].as_u64()), (Some(23), Some(22)));
    let smallest = &r["solutions"][r["smallest_positive"].as_u64().unwrap() as usize];
    assert_eq!(smallest["angle"], "1/96");
    assert_eq!(smallest["radical"], "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))");
    assert_eq!(smallest["multiplicity"], 1);
    for s in r["solutions"].as_array().unwrap() {
        assert!(text.contains(s["value"].as_str().unwrap()));
        assert_eq!(s.as_object().unwrap().len(), 4);
    }
    fails(&["solve", "3", "--rhs", "5/2"], 1);
    fails(&["solve", "3", "--rhs", "sqrt(3)/3"], 1);
    fails(&["solve", "3", "--rhs", "sqrt(2"], 2);
    fails(&["solve", "0", "--rhs", "1"], 2);
}

#[test]
fn solve_numeric() {
    let doc = json(&["solve-numeric", "3", "--rhs-decimal", "1", "--digits", "20"]);
    let sols = doc["result"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 3);
    assert!(sols.iter().all(|s| s["angle"].is_null() && s["radical"].is_null()));
    let text = succeeds(&["solve-numeric", "2", "--rhs-decimal", "-2", "--quiet"]);
    assert_eq!(text.trim(), "0.000000000000000000000000000000  numeric  (multiplicity 2)");
    fails(&["solve-numeric", "3", "--rhs-decimal", "2.5"], 1);
    fails(&["solve-numeric", "3", "--rhs-decimal", "1.2.3"], 2);
}

#[test]
fn tower() {
    let text = succeeds(&["tower", "--angle", "1/96", "--func", "sin", "--quiet"]);
    assert_eq!(text.trim(), "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))");
    // 2 sin(π/15) in the form Romanus wrote it
    let doc = json(&["tower", "--angle", "1/15", "--func", "sin", "--digits", "40"]);
    let published = succeeds(&["eval", "sqrt(7/4 - sqrt(5/16) - sqrt(15/8 - sqrt(45/64)))", "--digits", "40"]);
    assert_eq!(doc["result"]["value"], published.trim());
    fails(&["tower", "--angle", "1/7", "--func", "cos"], 1);
    fails(&["tower", "--angle", "3/4", "--func", "cos"], 1);
    fails(&["tower", "--angle", "1/0", "--func", "cos"], 2);
    fails(&["tower", "--angle", "1/8", "--func", "tan"], 2);
}

#[test]
fn classify() {
    assert_eq!(succeeds(&["classify", "--angle", "1/675"]).trim(), "NeedsCubicAndQuintic");
    assert_eq!(succeeds(&["classify", "--angle", "-1/96"]).trim(), "SquareRootsOnly");
    let doc = json(&["classify", "--angle", "2/9"]);
    assert_eq!(doc["result"]["class"], "NeedsCubic");
    assert_eq!(doc["result"]["square_root_tower"], false);
    fails(&["classify", "--angle", "x/3"], 2);
}

#[test]
fn chain() {
    assert_eq!(succeeds(&["chain", "675", "--quiet"]).trim(), "3 3 3 5 5");
    assert_eq!(json(&["chain", "45"])["result"]["chain"], serde_json::json!([3, 3, 5]));
    fails(&["chain", "0"], 2);
}

#[test]
fn pi() {
    let doc = json(&["pi", "--sides", "96", "--digits", "20"]);
    assert_eq!(doc["result"]["perimeter"], "6.28206390178101927622");
    let estimate = succeeds(&["pi", "--sides", "393216", "--digits", "20", "--quiet"]);
    assert!(estimate.starts_with("3.1415926535"));
    fails(&["pi", "--sides", "7"], 1);
    fails(&["pi", "--sides", "2"], 1);
    fails(&["pi", "--sides", "many"], 2);
}

#[test]
fn verify_romanus() {
    let doc = json(&["verify-romanus", "--example", "2"]);
    let text = serde_json::to_string(&doc).unwrap();
    assert!(text.contains("1.3431179096940368013"));
    let r = &doc["result"];
    assert_eq!(r["status"], "MISMATCH");
    assert_eq!(r["published_precision"]["b_value"], "1.7401739822174228373");
    assert_eq!(r["published_precision"]["alternative_b_value"], "1.3790810894741338492");
    assert_eq!(r["corrected"]["b_angle"], "15/64");
    assert_eq!(r["corrected"]["status"], "PASS");

    assert_eq!(succeeds(&["verify-romanus", "--example", "1", "--quiet"]).trim(), "example 1: PASS");
    let main = json(&["verify-romanus", "--example", "main"]);
    assert_eq!(main["result"]["b_angle"], "1/15");
    assert_eq!(main["result"]["solution"]["angle"], "1/675");
    assert_eq!(main["result"]["solution"]["radical"], Value::Null);
    assert_eq!(main["result"]["classification"], "NeedsCubicAndQuintic");
    fails(&["verify-romanus", "--example", "4"], 2);
}

#[test]
fn gift() {
    let doc = json(&["gift", "--digits", "21"]);
    assert_eq!(doc["result"]["E"]["value"], "0.010471927662839160188");
    assert_eq!(doc["result"]["E"]["angle"], "1/600");
    assert_eq!(doc["result"]["C"]["radical"], "sqrt(2 - sqrt(2))");
    assert_eq!(doc["result"]["residual_bounds"].as_array().unwrap().len(), 5);
    fails(&["gift", "--digits", "5"], 2);
}

#[test]
fn convert() {
    let out = succeeds(&["convert", "--from", "stevin", "--to", "viete", "9(1) - 30(3) + 27(5) - 9(7) + 1(9)"]);
    assert_eq!(out.trim(), "9N - 30C + 27QC - 9QQC + 1CCC");
    let doc = json(&["convert", "--from", "viete", "--to", "modern", "1QC - 5C + 5N"]);
    assert_eq!(doc["result"]["text"], "5x - 5x^3 + x^5");
    fails(&["convert", "--from", "modern", "--to", "viete", "x^2 + 1"], 1);
    fails(&["convert", "--from", "viete", "--to", "modern", "5X"], 2);
}

#[test]
fn usage_errors() {
    fails(&[], 2);
    fails(&["frobnicate"], 2);
    fails(&["solve", "3"], 2);
    assert_eq!(romanus(&["--help"]).status.code(), Some(0));
}
