//! The `gain-inertia` binary: output formats and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use gain_inertia::format::parse;
use gain_inertia::theorems::{check_spectral, check_structural};
use gain_inertia::OptimalityKind;
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gain-inertia")).args(args).env("GAIN_INERTIA_THREADS", "2").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn generate_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let file = file.to_str().unwrap();
    for kind in ["plower", "pupper", "nlower", "nupper"] {
        let cycles = if kind.ends_with("lower") { "4,6" } else { "3,5" };
        let out = bin(&["generate", "--kind", kind, "--cycles", cycles, "--trees", "3,2", "--seed", "5", "--out", file]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let text = std::fs::read_to_string(file).unwrap();
        let g = parse(&text).unwrap();
        let k: OptimalityKind = kind.parse().unwrap();
        assert!(check_structural(&g, k).unwrap() && check_spectral(&g, k).unwrap());

        let out = bin(&["analyze", "--strict", file]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        assert_eq!(r["vertex_count"], g.order());
        let entry = r["optimality"].as_array().unwrap().iter().find(|e| e["kind"] == k.name()).unwrap();
        assert_eq!((entry["structural"].as_bool(), entry["spectral"].as_bool()), (Some(true), Some(true)));
        let i = &r["inertia"];
        let sum = i["positive"].as_u64().unwrap() + i["negative"].as_u64().unwrap() + i["zero"].as_u64().unwrap();
        assert_eq!(sum as usize, g.order());
        assert_eq!(r["rank"], i["positive"].as_u64().unwrap() + i["negative"].as_u64().unwrap());
    }
}

#[test]
fn generate_to_stdout_is_deterministic() {
    let args = ["generate", "--kind", "pupper", "--cycles", "3", "--trees", "4", "--seed", "9", "--shuffle"];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    parse(std::str::from_utf8(&a.stdout).unwrap()).unwrap();
}

#[test]
fn analyze_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "gaingraph v1\nn 3\ne 0 1 +1\ne 1 7 +1\n");
    let out = bin(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let missing = dir.path().join("absent.txt");
    assert_eq!(bin(&["analyze", missing.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(bin(&["analyze"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn generate_errors() {
    // Odd cycle for a lower kind.
    assert_eq!(bin(&["generate", "--kind", "plower", "--cycles", "3"]).status.code(), Some(2));
    // Two cycles and no trees cannot be joined through tree vertices.
    assert_eq!(bin(&["generate", "--kind", "pupper", "--cycles", "3,3"]).status.code(), Some(4));
}

#[test]
fn fuzz_report() {
    let out = bin(&["fuzz", "--trials", "300", "--n-max", "9", "--mode", "uniform_angle", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["trials"], 300);
    assert_eq!(r["violations"], 0);
    assert_eq!(r["by_subject"]["inertia-bounds"]["fails"], 0);
    assert_eq!(bin(&["fuzz", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn enumerate_report() {
    let out = bin(&["enumerate", "--n-max", "4", "--gain-set", "{+1,-1,+i}", "--kind", "plower", "--kind", "nupper"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["mismatches"], 0);
    assert_eq!(r["kinds"].as_object().unwrap().len(), 2);
    assert_eq!(r["orders"].as_array().unwrap().len(), 4);
    assert_eq!(bin(&["enumerate", "--n-max", "8"]).status.code(), Some(2));
}
