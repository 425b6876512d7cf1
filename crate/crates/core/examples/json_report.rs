//! Driving the command surface in-process and reading its JSON report.

use abel_geometry::cli::main_with_args;

fn main() {
    let eq = r#"{"order":4,"c0":["0","0","0","0","0"],"c1":["0","0","0","0","0"],
                 "c2":["0","1","0","0","0"],"c3":["1","0","0","0","0"]}"#;
    let mut out = Vec::new();
    let code = main_with_args(["abel", "invariants", "--eq", eq, "--max-n", "2"], &mut out, &mut std::io::stderr());
    let report: serde_json::Value = serde_json::from_slice(&out).expect("report is JSON");
    println!("exit {code}, s3 = {}", report["outputs"]["s3"]["display"]);
    println!("inputs digest {}", report["inputs_digest"]);
}
