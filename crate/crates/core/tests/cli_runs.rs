use std::path::PathBuf;
use std::process::Command;

use qthpower::cli::ProblemFile;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn qthpower(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qthpower")).args(args).output().unwrap();
    (
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn fixtures_round_trip() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let once = ProblemFile::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let twice = ProblemFile::parse(&once.to_text()).unwrap();
        assert_eq!(once, twice, "{}", path.display());
        assert_eq!(once.to_text(), twice.to_text());
        count += 1;
    }
    assert!(count >= 7);
}

#[test]
fn cusp_text_output() {
    let cusp = fixture("cusp.problem");
    let (code, out, _) = qthpower(&[cusp.to_str().unwrap(), "--primes", "5,11,13"]);
    assert_eq!(code, Some(0));
    for line in ["delta: x - 8/7", "relation: ybar^2 - 3/2*x", "psi(y): ybar*(x - 8/7)", "accepted: true"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn cusp_rejected_with_two_primes() {
    let cusp = fixture("cusp.problem");
    let log = tempfile::NamedTempFile::new().unwrap();
    let (code, out, err) = qthpower(&[
        cusp.to_str().unwrap(),
        "--primes",
        "5,11",
        "--format",
        "structured",
        "--log",
        log.path().to_str().unwrap(),
    ]);
    assert_eq!(code, Some(1));
    assert!(err.contains("no candidate accepted"));
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["accepted"], false);
    assert_eq!(doc["modulus"], "55");
    assert_eq!(doc["closure"]["delta"], "x + 1/6");
    assert_eq!(doc["certificate"]["containment_check"], false);
    let top: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("  \""))
        .filter_map(|l| l.split('"').next())
        .collect();
    assert_eq!(
        top,
        ["mode", "characteristic", "conductor", "primes", "modulus", "closure", "certificate", "accepted", "message"]
    );
    let audit = std::fs::read_to_string(log.path()).unwrap();
    assert!(audit.contains("N = 55"));
}

#[test]
fn sextic_weights() {
    let sextic = fixture("sextic.problem");
    let (code, out, _) = qthpower(&[sextic.to_str().unwrap(), "--primes", "7,11,13,19,23,29"]);
    assert_eq!(code, Some(0), "{out}");
    assert!(out.lines().any(|l| l == "induced_weights: 25,21,20,11,10,6"));
    assert_eq!(out.lines().filter(|l| l.starts_with("relation: ")).count(), 15);
}

#[test]
fn degree_one_has_no_relations() {
    let (code, out, _) = qthpower(&[fixture("linear.problem").to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert!(out.lines().any(|l| l == "relations: (none)"));
}

#[test]
fn characteristic_q_mode() {
    let octic = fixture("octic.problem");
    let (code, out, _) = qthpower(&[octic.to_str().unwrap(), "--mode", "charq"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("characteristic: 7\n"));
    assert!(out.contains("delta: x^13\n"));
    let (code, _, err) = qthpower(&[fixture("cusp.problem").to_str().unwrap(), "--mode", "charq"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("--prime"));
}

#[test]
fn bad_input_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.problem");
    std::fs::write(&path, "indvars: x\ndepvar: y\nweights: [[3,2]]\nrelation: 2*y^2 - x^3\n").unwrap();
    let (code, out, err) = qthpower(&[path.to_str().unwrap()]);
    assert_eq!(code, Some(2));
    assert!(out.is_empty());
    assert!(err.contains("bad.problem"));
}
