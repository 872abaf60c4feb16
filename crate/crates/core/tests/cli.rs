//! End-to-end runs of the `pauli-gap` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pauli-gap"));
    cmd.env_remove("PAULI_GAP_DENSE_LIMIT").env_remove("PAULI_GAP_TERM_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn result(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["result"].clone()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn norms_of_hadamard_power() {
    let dir = TempDir::new().unwrap();
    let ham = dir.path().join("had3.json");
    let built = run(&["build", "--model", "hadamard-power", "--n", "3", "--out", p(&ham)]);
    assert!(built.status.success());
    let r = result(&run(&["norms", "--ham", p(&ham)]));
    assert!((r["pauli_1_norm"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-12);
    assert!((r["operator_norm"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn amplify_then_norms() {
    let dir = TempDir::new().unwrap();
    let z = write(&dir, "z.json", r#"{"n":1,"terms":[{"pauli":"Z","coeff":1.0}]}"#);
    let amp = dir.path().join("amp.json");
    assert!(run(&["amplify", "--ham", p(&z), "--k", "3", "--out", p(&amp)]).status.success());
    // Seven strings in {I,Z}^3 at 1/4, plus the identity at 1/4 - 1.
    let r = result(&run(&["norms", "--ham", p(&amp)]));
    assert!((r["pauli_1_norm"].as_f64().unwrap() - 2.5).abs() < 1e-12);
    assert!((r["operator_norm"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(r["n"], 3);
}

#[test]
fn verify_lemma_no_instance() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", r#"{"n":1,"terms":[{"pauli":"Z","coeff":0.8}]}"#);
    let out = run(&["verify-lemma", "--ham", p(&h), "--p", "inf", "--q", "5", "--k", "10"]);
    let r = result(&out);
    assert_eq!(r["promise_case"], "no");
    assert_eq!(r["all_bounds_hold"], true);
    assert!((r["lambda_out_exact"].as_f64().unwrap() + 0.3026431198).abs() < 1e-9);
    assert_eq!(r["p"], "inf");
}

#[test]
fn game_and_sparsify_outputs() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", r#"{"n":2,"terms":[{"pauli":"XX","coeff":1.0},{"pauli":"ZZ","coeff":1.0}]}"#);
    let g = result(&run(&["game", "--ham", p(&h), "--state", "top-eig", "--shots", "2000", "--seed", "3"]));
    assert_eq!(g["exact_probability"], 1.0);
    assert_eq!(g["accepted"], 2000);
    let csv = run(&["game", "--ham", p(&h), "--state", "top-eig", "--shots", "5", "--seed", "3", "--format", "csv"]);
    assert!(csv.status.success());
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 6);
    let s = result(&run(&["sparsify", "--ham", p(&h), "--m", "64", "--delta", "0.5", "--trials", "20"]));
    assert_eq!(s["deviations"].as_array().unwrap().len(), 20);
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"n":2,"terms":[{"pauli":"XQ","coeff":1.0}]}"#);
    let out = run(&["norms", "--ham", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));

    let h = write(&dir, "h.json", r#"{"n":1,"terms":[{"pauli":"X","coeff":0.5},{"pauli":"Z","coeff":0.5}]}"#);
    let capped = bin()
        .args(["amplify", "--ham", p(&h), "--k", "10"])
        .env("PAULI_GAP_TERM_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));

    // 0.9 lies between the NO threshold 0.8 and the YES threshold 1.
    let between = write(&dir, "between.json", r#"{"n":1,"terms":[{"pauli":"Z","coeff":0.9}]}"#);
    let violated = run(&["verify-lemma", "--ham", p(&between), "--p", "inf", "--q", "5", "--k", "4"]);
    assert_eq!(violated.status.code(), Some(4));

    assert_eq!(run(&["norms"]).status.code(), Some(1));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", r#"{"n":2,"terms":[{"pauli":"XY","coeff":0.3},{"pauli":"ZI","coeff":-0.7}]}"#);
    let args = ["game", "--ham", p(&h), "--state", "top-eig", "--shots", "3000", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn build_output_loads_back() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("chain.json");
    assert!(run(&["build", "--model", "xxzz-chain", "--n", "4", "--out", p(&path)]).status.success());
    let h = pauli_gap::io::load_hamiltonian(&path).unwrap();
    assert_eq!(h, pauli_gap::models::xxzz_chain(4).unwrap());
    let copy = dir.path().join("copy.json");
    pauli_gap::io::save_hamiltonian(&h, &copy).unwrap();
    assert_eq!(pauli_gap::io::load_hamiltonian(&copy).unwrap(), h);
}
