use std::fs;
use std::process::Command;

use crsphere::suite::{analyze_text, run_suite, AnalyzeOptions, SuiteConfig};
use crsphere::Error;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crsphere"))
}

#[test]
fn verify_writes_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.toml");
    fs::write(&cfg, "n = 1\ndegree = 3\nsuites = [\"all\"]\n").unwrap();
    let mut outputs = Vec::new();
    for name in ["a.json", "b.json"] {
        let out = dir.path().join(name);
        let st = bin().args(["verify", "--config"]).arg(&cfg).arg("--output").arg(&out).status().unwrap();
        assert!(st.success());
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        outputs.push(v);
    }
    for v in &mut outputs {
        v["config"]["output"] = serde_json::Value::Null;
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0]["pass"], true);
    assert_eq!(outputs[0]["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.toml");
    fs::write(&cfg, "n = 1\ndegree = 2\nsuites = [\"ring\"]\n").unwrap();
    let out = dir.path().join("r.json");
    let st = bin().args(["verify", "--config"]).arg(&cfg).args(["--n", "2", "--suites", "ring,frames", "-o"]).arg(&out).status().unwrap();
    assert!(st.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["suites"][1]["name"], "frames");
}

#[test]
fn invalid_configs_are_rejected() {
    let bad = |text: &str| SuiteConfig::from_toml(text).and_then(|c| run_suite(&c));
    assert!(matches!(bad("degree = 0"), Err(Error::Config(_))));
    assert!(matches!(bad("n = 4"), Err(Error::UnsupportedDimension { n: 4, .. })));
    assert!(matches!(bad("suites = [\"nope\"]"), Err(Error::Config(_))));
    assert!(matches!(bad("unknown = 1"), Err(Error::Config(_))));
    let st = bin().args(["verify", "--n", "5"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

#[test]
fn analyze_reports_modes_and_sign() {
    let rep = analyze_text("dimension 1\nE: (1/1,0/1) w2^5\n", &AnalyzeOptions { oracle: true }).unwrap();
    assert!(!rep.embeddable);
    assert_eq!(rep.hessian.total.to_string(), "-1/6+0/1*i");
    assert_eq!(rep.hessian.modes.len(), 1);
    assert_eq!(rep.hessian.modes[0].m, -5);
    assert!(rep.two_route_pass && rep.pass);
    let o = rep.oracle.unwrap();
    assert!(o.mode_formula.pass && o.torsion_variation.pass);
    assert_eq!(o.second_order_integral.to_string(), "-1/6+0/1*i");
}

#[test]
fn analyze_errors_carry_location() {
    match analyze_text("dimension 1\nE: (1/1,0/1) z1^2 q\n", &AnalyzeOptions::default()) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 19)),
        other => panic!("expected parse error, got {other:?}"),
    }
    match analyze_text("dimension 2\nB 1 2: (1/1,0/1) z1\n", &AnalyzeOptions::default()) {
        Err(Error::SymmetryViolation(a, b)) => assert_eq!((a.as_str(), b.as_str()), ("Z12", "Z23")),
        other => panic!("expected symmetry violation, got {other:?}"),
    }
}

#[test]
fn analyze_subcommand_on_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("e.def");
    fs::write(&f, "# mode 4 plus mode -2\ndimension 1\nE: (1/1,0/1) z2^4 + (1/2,0/1) w1^2\n").unwrap();
    let out = bin().arg("analyze").arg(&f).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["hessian"]["total"], "53/30+0/1*i");
    assert_eq!(v["embeddable"], true);
}

#[test]
fn spectrum_and_conventions_subcommands() {
    let out = bin().args(["spectrum", "--n", "2", "--degree", "2"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("  1   1 3/1+0/1*i"), "{text}");
    assert!(text.contains("kernel: [(1, 0), (0, 1)]"));
    let out = bin().args(["conventions", "--n", "3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["webster_w0"], "12/1+0/1*i");
    assert_eq!(v["hessian_constant_c"], "1/1+0/1*i");
}
