use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use solvlie::catalog::standard_algebras;
use solvlie::{Rational, F3};
use solvlie_cli::document::{AlgebraDocument, RepresentationDocument};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn solvlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvlie")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    solvlie(args).status.code().unwrap_or(-1)
}

fn report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = solvlie(&all);
    (out.status.code().unwrap_or(-1), serde_json::from_slice(&out.stdout).expect("JSON report"))
}

#[test]
fn documents_round_trip() {
    for (name, l) in standard_algebras::<Rational>() {
        let doc = AlgebraDocument::from_algebra(&l, Some(name.to_string()), None);
        let again = AlgebraDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.build::<Rational>().unwrap(), l);
    }
    let text = std::fs::read_to_string(fixture("ex4_7.json")).unwrap();
    let doc = AlgebraDocument::parse(&text).unwrap();
    assert_eq!(AlgebraDocument::parse(&doc.to_json()).unwrap(), doc);
    let text = std::fs::read_to_string(fixture("rotation_f3.json")).unwrap();
    let rep = RepresentationDocument::parse(&text).unwrap();
    let rho = rep.build::<F3>().unwrap();
    let back = RepresentationDocument::from_representation(&rho);
    assert_eq!(back.build::<F3>().unwrap(), rho);
}

#[test]
fn exit_codes() {
    let ex = fixture("ex4_7.json");
    assert_eq!(code(&["validate", &ex]), 0);
    assert_eq!(code(&["analyze", &ex]), 0);
    assert_eq!(code(&["decompose", &ex]), 0);
    assert_eq!(code(&["check", &ex, "--theorems", "all"]), 0);
    assert_eq!(code(&["frattini", "--field", "fp:3", &ex]), 0);
    assert_eq!(code(&["validate", &fixture("jacobi.json")]), 2);
    assert_eq!(code(&["analyze", &fixture("sl2.json")]), 2);
    assert_eq!(code(&["frattini", &ex]), 2);
    assert_eq!(code(&["check", &ex, "--theorems", "T9.9"]), 2);
    assert_eq!(code(&["validate", &fixture("missing.json")]), 2);
    assert_eq!(code(&["frattini", "--field", "fp:3", "--budget", "3", &ex]), 3);
    let (b, rot, diag) = (fixture("line_f3.json"), fixture("rotation_f3.json"), fixture("diagonal_f3.json"));
    assert_eq!(code(&["construct", "--b", &b, "--rep", &rot]), 0);
    assert_eq!(code(&["construct", "--b", &b, "--rep", &diag]), 2);
    assert_eq!(code(&["construct", "--b", &ex, "--rep", &rot]), 2);
}

#[test]
fn antisymmetry_diagnostic() {
    let out = solvlie(&["validate", &fixture("antisymmetry.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("brackets[0]") && err.contains("antisymmetry"), "{err}");
}

#[test]
fn classify_example_report() {
    let (c, r) = report(&["classify", &fixture("ex4_7.json")]);
    assert_eq!(c, 0);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["field"], "Q");
    assert_eq!(r["command"][0], "classify");
    assert_eq!(r["results"]["s_infinity"]["status"], "CertifiedTrue");
    let qa = &r["results"]["qa"];
    assert_eq!(qa["status"], "CertifiedFalse");
    assert_eq!(qa["evidence"]["spaces"]["ideal"]["dim"], 0);
    assert_eq!(r["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn check_marks_unmet_hypotheses_skipped() {
    let (c, r) = report(&["check", &fixture("ex4_7.json"), "--theorems", "T3.5,T4.6"]);
    assert_eq!(c, 0);
    let t = r["results"]["theorems"].as_array().unwrap();
    assert_eq!(t[0]["id"], "T3.5");
    assert_eq!(t[0]["status"], "skipped");
    assert!(t[0]["reason"].as_str().unwrap().contains("qA"));
    assert_eq!(t[1]["status"], "passed");
}

#[test]
fn reports_are_deterministic() {
    let ex = fixture("ex4_7.json");
    let prof = fixture("profile_f2.json");
    for args in [
        vec!["analyze", &ex, "--json", "-"],
        vec!["classify", "--seed", "9", &ex, "--json", "-"],
        vec!["fuzz", "--profile", &prof, "--count", "24", "--theorems", "all", "--json", "-"],
    ] {
        let a = solvlie(&args);
        let b = solvlie(&args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = solvlie(&["validate", &fixture("ex4_7.json"), "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid Lie algebra"));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["results"]["valid"], true);
    assert!(r["command"].as_array().unwrap().iter().all(|a| a != "--json"));
}

#[test]
fn fuzz_summary() {
    let (c, r) = report(&["fuzz", "--profile", &fixture("profile_f2.json"), "--count", "12", "--theorems", "L3.3,T2.4"]);
    assert_eq!(c, 0);
    assert_eq!(r["results"]["instances"].as_array().unwrap().len(), 12);
    assert_eq!(r["results"]["instances_failed"], 0);
    assert_eq!(r["results"]["summary"]["T2.4"]["failed"], 0);
}
