use std::fs;

use abel_geometry::cli::main_with_args;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("abel").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, value)
}

const QUADRATIC_X: &str = r#"{"order":4,
  "c0":["0","0","0","0","0"],
  "c1":["0","0","0","0","0"],
  "c2":["0","1","0","0","0"],
  "c3":["1","0","0","0","0"]}"#;

#[test]
fn invariants_of_x_y_squared() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eq.json");
    fs::write(&path, QUADRATIC_X).unwrap();
    let (code, v) = report(&["invariants", "--eq", path.to_str().unwrap(), "--max-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["s3"]["display"], "1 + 2x³");
    assert_eq!(v["outputs"]["s5"]["coeffs"][2], "15");
    assert_eq!(v["passed"], true);
}

#[test]
fn parse_errors_exit_two_with_field() {
    let bad = QUADRATIC_X.replace(r#""c3":["1""#, r#""c3":["0""#);
    let (code, out, err) = run(&["invariants", "--eq", &bad]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("c3[0]"), "{err}");

    let bad = QUADRATIC_X.replace(r#""c2":["0","1""#, r#""c2":["0","3/0""#);
    let (code, _, err) = run(&["invariants", "--eq", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("c2[1]"), "{err}");

    let (code, _, _) = run(&["invariants", "--eq", "/nonexistent/eq.json"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn equiv_of_x_and_32w() {
    let (code, v) = report(&["equiv", "--j1", r#"["0","1"]"#, "--j2", r#"["0","32"]"#, "--K", "2", "--h", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["pass"], true);

    let (code, v) = report(&["equiv", "--j1", r#"["0","1"]"#, "--j2", r#"["0","32"]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["K"], "2");

    let (code, _) = report(&["equiv", "--j1", r#"["0","1"]"#, "--j2", r#"["0","32"]"#, "--K", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--trials", "25", "--seed", "7", "--order", "6"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["outputs"]["failed_trials"], Value::Array(vec![]));
}

#[test]
fn verify_on_a_fixed_equation() {
    let (code, v) = report(&["verify", "--eq", QUADRATIC_X, "--trials", "3", "--max-n", "1"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn solve_pure_cubic() {
    let eq = r#"{"order":3,"c0":["0","0","0","0"],"c1":["0","0","0","0"],"c2":["0","0","0","0"],"c3":["1","0","0","0"]}"#;
    let (code, v) = report(&["solve", "--eq", eq, "--y0", "1", "--order", "3"]);
    assert_eq!(code, 0);
    // (1 - 2x)^(-1/2)
    assert_eq!(v["outputs"]["y"]["coeffs"], serde_json::json!(["1", "1", "3/2", "5/2"]));
}

#[test]
fn transform_by_identity_is_identity() {
    let map = r#"{"u":["1","0","0","0","0"],"nu":["0","0","0","0","0"],"mu":["1","0","0","0","0"]}"#;
    let (code, v) = report(&["transform", "--eq", QUADRATIC_X, "--map", map]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["c2"]["display"], "x");
    let (code, _, err) = run(&["transform", "--eq", QUADRATIC_X, "--map", &map.replace(r#""mu":["1""#, r#""mu":["0""#)]);
    assert_eq!(code, 2);
    assert!(err.contains("mu[0]"));
}

#[test]
fn reduce_second_kind() {
    let one = r#"["1","0","0"]"#;
    let num = r#"{"order":2,"c0":["0","0","0"],"c1":["0","0","0"],"c2":["0","0","0"],"c3":["1","0","0"]}"#;
    let (code, v) = report(&["reduce2", "--b0", one, "--b1", one, "--num", num, "--y0", "1"]);
    assert_eq!(code, 0, "{v}");
    for (name, c) in [("c0", "-1"), ("c1", "1"), ("c2", "-1"), ("c3", "1")] {
        assert_eq!(v["outputs"][name]["coeffs"][0], c);
    }
}

#[test]
fn canonical_of_pure_cubic_plus_x() {
    let eq = r#"{"order":4,"c0":["0","1","0","0","0"],"c1":["0","0","0","0","0"],"c2":["0","0","0","0","0"],"c3":["1","0","0","0","0"]}"#;
    let (code, v) = report(&["canonical", "--eq", eq]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["J_of_X"]["display"], "x");
}

#[test]
fn cartan_reports_coframe_curvature() {
    let eq = r#"{"order":1,"c0":["1","0"],"c1":["0","0"],"c2":["0","0"],"c3":["1","0"]}"#;
    let points = r#"[{"x":"0","y":"1","u":"2"}]"#;
    let (code, v) = report(&["cartan", "--eq", eq, "--points", points]);
    let p = &v["outputs"]["points"][0];
    // f = 1 + y³, f_yy = 6y: I = 2·6/4, dϖ coefficient f·I
    assert_eq!(p["I"], "3");
    assert_eq!(p["varpi_curvature"], "6");
    let by_name = |n: &str| v["checks"].as_array().unwrap().iter().find(|c| c["name"] == n).unwrap()["pass"].clone();
    assert_eq!(by_name("structure_theta1_p0"), true);
    assert_eq!(by_name("structure_theta2_p0"), true);
    assert_eq!(by_name("duality_p0"), true);
    assert_eq!(by_name("structure_varpi_p0"), false);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
