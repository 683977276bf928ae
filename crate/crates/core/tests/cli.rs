use std::path::{Path, PathBuf};
use std::process::Command;

use infcc::formats::{ProtocolFile, RelationFile, ShiftSpec};
use infcc::finite::RelationMatrix;
use infcc::infinite::relation_shift;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = infcc::cli::run(std::iter::once("infcc").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    assert_eq!(r.code, 0, "{}", r.err);
    serde_json::from_str(&r.out).unwrap()
}

/// A fresh directory for one test's input files.
fn dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("infcc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const GOLDEN: &str = r#"{"alphabet": ["0", "1"], "forbidden": ["11"]}"#;
const FULL: &str = r#"{"alphabet": ["0", "1"], "forbidden": []}"#;

#[test]
fn entropy_and_words() {
    let d = dir("entropy");
    let g = write(&d, "golden.json", GOLDEN);
    let v = json(&run(&["entropy", &g, "--tol", "1e-12"]));
    assert!((v["bits"].as_f64().unwrap() - 0.694_241_913_630_617_3).abs() < 1e-9);
    let v = json(&run(&["words", &g, "--length", "3"]));
    assert_eq!(v["count"], "5");
    assert_eq!(v["words"][4], serde_json::json!(["1", "0", "1"]));
}

#[test]
fn sofic_eq_reports_witness() {
    let d = dir("soficeq");
    let (g, f) = (write(&d, "g.json", GOLDEN), write(&d, "f.json", FULL));
    let v = json(&run(&["sofic-eq", &g, &f]));
    assert_eq!(v["equal"], false);
    assert_eq!(v["witness"], serde_json::json!(["1", "1"]));
    let v = json(&run(&["sofic-eq", &g, &g]));
    assert_eq!(v["equal"], true);
}

#[test]
fn cover_subcommands() {
    let d = dir("covers");
    let eq2 = serde_json::to_string(&RelationFile::from_relation(&RelationMatrix::eq_bits(2))).unwrap();
    let r = write(&d, "eq2.json", &eq2);
    let v = json(&run(&["cc-exact", &r]));
    assert_eq!((v["cover"].as_u64(), v["bits"].as_f64()), (Some(4), Some(2.0)));
    assert!(json(&run(&["cc-greedy", &r]))["cover"].as_u64().unwrap() >= 4);
    let v = json(&run(&["cc-frac", &r, "--eps", "1e-4"]));
    assert!((v["value"].as_f64().unwrap() - 4.0).abs() < 1e-6);
    let v = json(&run(&["cc-frac", &r, "--method", "mwu", "--eps", "1e-2"]));
    assert!(v["value"].as_f64().unwrap() <= 4.0 + 1e-9);
    let csv = run(&["amortized", &r, "--n-max", "2", "--format", "csv"]);
    assert_eq!(csv.code, 0);
    assert!(csv.out.starts_with("n,upper_bits,lower_bits\n1,2"));
}

#[test]
fn lift_validate_extract_round_trip() {
    let d = dir("lift");
    let rel = RelationMatrix::neq_bits(1);
    let r = write(&d, "neq.json", &serde_json::to_string(&RelationFile::from_relation(&rel)).unwrap());
    let lifted = run(&["lift", &r, "--n", "2"]);
    assert_eq!(lifted.code, 0, "{}", lifted.err);
    let protocol: ProtocolFile = serde_json::from_str(&lifted.out).unwrap();
    protocol.build().unwrap();
    let p = write(&d, "protocol.json", &lifted.out);
    let shift = ShiftSpec::from_subshift(&relation_shift(&rel).unwrap().into());
    let s = write(&d, "shift.json", &serde_json::to_string(&shift).unwrap());
    let v = json(&run(&["validate-protocol", &s, &p]));
    assert_eq!(v["valid"], true);
    let v = json(&run(&["extract", &p, "--n", "2"]));
    assert_eq!(v["n"], 2);
    assert_eq!(v["r"], 2);

    // the EQ relation is not computed by the NEQ protocol
    let eq = ShiftSpec::from_subshift(&relation_shift(&RelationMatrix::identity(2)).unwrap().into());
    let wrong = write(&d, "eq-shift.json", &serde_json::to_string(&eq).unwrap());
    let bad = run(&["validate-protocol", &wrong, &p]);
    assert_eq!(bad.code, 1);
    let v: Value = serde_json::from_str(&bad.out).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["witness"].is_array());
}

#[test]
fn lower_bound_subcommands() {
    let d = dir("bounds");
    let leq = r#"{"factors": [["0","1"],["0","1"]], "window": 1, "blocks": ["(0,0)", "(0,1)", "(1,1)"]}"#;
    let s = write(&d, "leq.json", leq);
    let v = json(&run(&["cond-entropy", &s, "--max-period", "3", "--tol", "1e-12"]));
    assert!((v["estimate"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(v["label"], "estimate");

    let full = write(&d, "full.json", r#"{"factors": [["0","1"],["0","1"]], "forbidden": []}"#);
    let eq = write(&d, "eq.json", r#"{"factors": [["0","1"],["0","1"]], "window": 1, "blocks": ["(0,0)", "(1,1)"]}"#);
    let v = json(&run(&["fooling", &eq, &eq]));
    assert_eq!(v["certified"], true);
    let weak = run(&["fooling", &full, &eq]);
    assert_eq!(weak.code, 1);
}

#[test]
fn wang_subcommands() {
    let v = json(&run(&["wang-enum", "--width", "1", "--height", "1"]));
    assert_eq!(v, serde_json::json!([[["0"]], [["1"]]]));
    let v = json(&run(&["wang-enum", "--width", "2", "--height", "2", "--extend-radius", "1"]));
    assert!(v.as_array().unwrap().iter().all(|p| p.to_string().matches("\"1\"").count() <= 1));
    let v = json(&run(&["wang-strip", "--rows", "1"]));
    let spec: ShiftSpec = serde_json::from_value(v["presentation"].clone()).unwrap();
    assert!(spec.build().unwrap().accepts(&[0, 1, 0]));
    let v = json(&run(&["wang-border", "--n", "1", "--m", "2", "--tol", "1e-12"]));
    assert_eq!(v["valid"], true);
    assert!((v["entropy_Z"].as_f64().unwrap() - 3f64.log2()).abs() < 1e-9);

    let d = dir("wang");
    let t = write(&d, "tiles.json", r#"{"tiles": [{"n": "a", "s": "a", "e": "b", "w": "b", "sym": "x"}]}"#);
    let v = json(&run(&["wang-enum", &t, "--width", "2", "--height", "1"]));
    assert_eq!(v, serde_json::json!([[["x", "x"]]]));
}

#[test]
fn residual_subcommand() {
    let v = json(&run(&["residuals", "--oracle", "counterexample", "--k", "4", "--depth", "6"]));
    let counts: Vec<u64> = v.as_array().unwrap().iter().map(|c| c["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 2, 4, 6, 8]);
    let csv = run(&["residuals", "--oracle", "golden", "--k", "2", "--depth", "3", "--format", "csv"]);
    assert_eq!(csv.out, "length,count\n0,1\n1,2\n2,2\n");
    let d = dir("residuals");
    let g = write(&d, "g.json", GOLDEN);
    let v = json(&run(&["residuals", "--shift", &g, "--k", "2", "--depth", "3"]));
    assert_eq!(v[2]["count"], 2);
}

#[test]
fn exit_codes() {
    let d = dir("exit");
    let g = write(&d, "g.json", GOLDEN);
    assert_eq!(run(&["bogus"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
    let missing = run(&["entropy", "/nonexistent/shift.json"]);
    assert_eq!(missing.code, 2);
    assert!(missing.err.contains("/nonexistent/shift.json"));
    assert_eq!(run(&["entropy", &write(&d, "bad.json", "{not json")]).code, 2);
    assert_eq!(run(&["entropy", &write(&d, "extra.json", r#"{"alphabet":["0"],"forbidden":[],"x":1}"#)]).code, 2);
    assert_eq!(run(&["entropy", &g, "--guard-states", "1"]).code, 2);
    assert_eq!(run(&["entropy", &g, "--format", "csv"]).code, 2);
    assert_eq!(run(&["entropy", &g, "--tol", "0"]).code, 2);
    let flip = write(&d, "r.json", r#"{"x_labels": ["0"], "y_labels": ["0"], "ones": [[0, 3]]}"#);
    assert_eq!(run(&["cc-exact", &flip]).code, 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let d = dir("repeat");
    let r = write(&d, "r.json", &serde_json::to_string(&RelationFile::from_relation(&RelationMatrix::neq_bits(2))).unwrap());
    let g = write(&d, "g.json", GOLDEN);
    let cases: Vec<Vec<&str>> = vec![
        vec!["cc-exact", &r],
        vec!["cc-frac", &r],
        vec!["lift", &r, "--n", "1"],
        vec!["words", &g, "--length", "6"],
        vec!["wang-border", "--n", "2", "--m", "1"],
        vec!["residuals", "--k", "6", "--format", "csv"],
    ];
    for args in cases {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.code, 0, "{args:?}: {}", a.err);
        assert_eq!(a.out, b.out, "{args:?}");
    }
}

#[test]
fn binary_reproduces_reference_checks() {
    let out = Command::new(env!("CARGO_BIN_EXE_infcc")).arg("reproduce-paper").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.lines().last().unwrap().ends_with("checks passed"));
    assert!(!text.contains("FAIL"));
}
