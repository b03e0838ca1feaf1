mod common;

use common::{assert_valid, load_schema, run, stdout, validate};
use serde_json::json;

#[test]
fn transform_family_oeis() {
    let out = run(&["transform", "--family", "fibonacci", "-r", "1", "-n", "9", "--format", "oeis"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0, 1, 3, 8, 21, 55, 144, 377, 987, 2584\n");
}

#[test]
fn transform_inline_identity() {
    let out = run(&["transform", "--inline", "5", "-r", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn transform_pell_r2_plain() {
    let out = run(&["transform", "--family", "pell", "-r", "2", "-n", "9"]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, ["0", "1", "6", "29", "132", "589", "2610", "11537", "50952", "224953"]);
}

#[test]
fn negative_and_rational_shifts() {
    // T_(-1) undoes the binomial transform of Fibonacci
    let out = run(&["transform", "--inline", "0,1,3,8,21,55", "-r=-1", "--format", "oeis"]);
    assert_eq!(stdout(&out), "0, 1, 1, 2, 3, 5\n");
    let out = run(&["transform", "--inline", "0,1,3,8,21,55", "--r", "-1", "--format", "oeis"]);
    assert_eq!(stdout(&out), "0, 1, 1, 2, 3, 5\n");
    // (T_(1/2) (1,1,1))_2 = 1/4 + 2*(1/2) + 1
    let out = run(&["transform", "--inline", "1,1,1", "-r", "1/2"]);
    assert_eq!(stdout(&out), "1\n3/2\n9/4\n");
    let out = run(&["transform", "--inline", "1/3,2", "--shift", "1"]);
    assert_eq!(stdout(&out), "1/3\n7/3\n");
}

#[test]
fn transform_csv_and_json() {
    let out = run(&["transform", "--family", "lucas", "-r", "2", "-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,value\n0,2\n1,5\n2,15\n3,50\n");
    let out = run(&["transform", "--family", "jacobsthal", "-n", "4", "--format", "json"]);
    let v = assert_valid("transform.schema.json", &stdout(&out));
    assert_eq!(v["values"], json!(["0", "1", "3", "9", "27"]));
    assert_eq!(v["n_max"], json!(4));
}

#[test]
fn transform_usage_errors() {
    for args in [
        &["transform", "--family", "tribonacci"][..],
        &["transform", "--inline", "1,x,3"],
        &["transform", "--inline", "1,2", "-n", "5"],
        &["transform", "--inline", "1,,2"],
        &["transform", "--inline", "1,2", "-r", "1/0"],
        &["transform", "--inline", "1,2", "-r", "1/2", "--format", "oeis"],
        &["transform", "--family", "pell", "--inline", "1"],
        &["transform"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn shift_poly_examples() {
    assert_eq!(stdout(&run(&["shift-poly", "1,-1,-1", "-r", "1"])), "X^2 - 3*X + 1\n");
    assert_eq!(stdout(&run(&["shift-poly", "1,0", "-r", "0"])), "X\n");
    assert_eq!(stdout(&run(&["shift-poly", "1,-3,2", "-r", "1"])), "X^2 - 5*X + 6\n");
    assert_eq!(stdout(&run(&["shift-poly", "1,0,0", "-r", "1/2"])), "X^2 - X + 1/4\n");
    let out = run(&["shift-poly", "1,-2,-1", "-r", "-1", "--format", "json"]);
    let v = assert_valid("shift-poly.schema.json", &stdout(&out));
    // (X+1)^2 - 2(X+1) - 1 = X^2 - 2
    assert_eq!(v["coefficients"], json!(["1", "0", "-2"]));
}

#[test]
fn shift_poly_rejects_non_monic() {
    let out = run(&["shift-poly", "2,1", "-r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(run(&["shift-poly", "0,1"]).status.code(), Some(2));
}

#[test]
fn table_recurrences_contains_templates() {
    let out = run(&["table", "recurrences"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let fib = text.lines().find(|l| l.starts_with("fibonacci")).unwrap();
    assert!(fib.contains("(2r+1)"), "{fib}");
    assert!(text.contains("(r^2+3r+2)"));
    let v = assert_valid("table-recurrences.schema.json", &stdout(&run(&["table", "recurrences", "--format", "json"])));
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["matches_golden"] == json!(true)));
    assert_eq!(run(&["table", "recurrences", "--format", "oeis"]).status.code(), Some(2));
}

#[test]
fn table_segments_csv_golden() {
    let out = run(&["table", "segments", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, include_bytes!("fixtures/table_segments.csv"));
}

#[test]
fn table_segments_json_roundtrip() {
    let text = stdout(&run(&["table", "segments", "--format", "json"]));
    let v = assert_valid("table-segments.schema.json", &text);
    let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    // rows agree with the csv fixture
    let csv = include_str!("fixtures/table_segments.csv");
    for (row, line) in v["rows"].as_array().unwrap().iter().zip(csv.lines().skip(1)) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(row["family"], json!(cells[0]));
        assert_eq!(row["r"].to_string(), cells[1]);
        let values: Vec<&str> = row["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        assert_eq!(values, &cells[2..]);
    }
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "identities", "-n", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("(BF)_n = F_2n"));
    let out = run(&["verify", "semigroup", "--cases", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(100 checks, 0 failures)"));
}

#[test]
fn verify_json_and_csv() {
    let out = run(&["verify", "rootshift", "--cases", "5", "--format", "json"]);
    let v = assert_valid("verify.schema.json", &stdout(&out));
    assert_eq!(v["suites"][0]["suite"], json!("rootshift"));
    let out = run(&["verify", "models", "--cases", "3", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("suite,property,checks,failures\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("models,") && l.ends_with(",0")));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(run(&["verify", "semigroup", "--cases", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "semigroup", "--format", "oeis"]).status.code(), Some(2));
}

#[test]
fn family_listing() {
    let text = stdout(&run(&["family"]));
    for name in ["fibonacci", "lucas", "pell", "jacobsthal", "mersenne", "generalized-mersenne"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
    let v = assert_valid("family.schema.json", &stdout(&run(&["family", "--format", "json"])));
    assert_eq!(v[0]["oeis"], json!("A000045"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "all", "--seed", "11", "--cases", "4"][..],
        &["verify", "semigroup", "--seed", "3", "--cases", "20", "--format", "json"],
        &["table", "segments", "--format", "json"],
        &["transform", "--family", "mersenne", "-r", "3/2", "-n", "12"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn validator_rejects_bad_documents() {
    let schema = load_schema("transform.schema.json");
    let ok = json!({"source": "inline", "r": "1", "n_max": 0, "values": ["5"]});
    assert!(validate(&schema, &ok, "$").is_ok());
    for bad in [
        json!({"source": "inline", "r": "1", "n_max": 0}),
        json!({"source": "inline", "r": 1, "n_max": 0, "values": ["5"]}),
        json!({"source": "inline", "r": "1", "n_max": -1, "values": ["5"]}),
        json!({"source": "inline", "r": "1", "n_max": 0, "values": []}),
        json!({"source": "inline", "r": "1", "n_max": 0, "values": ["5"], "extra": true}),
    ] {
        assert!(validate(&schema, &bad, "$").is_err(), "{bad}");
    }
}
