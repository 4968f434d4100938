use std::process::{Command, Output};

use serde_json::Value;

fn params(name: &str) -> String {
    format!("{}/../../params/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn symgroth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symgroth")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fmu_oracles_agree() {
    let out = symgroth(&["fmu", "--mu", "1,1", "--cap", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["agree"], Value::Bool(true));
    let r = &v["results"][0];
    assert_eq!(r["mu"], "1,1");
    assert_eq!(r["determinant"], r["delegant"]);
    assert!(!r["delegant"].as_array().unwrap().is_empty());
}

#[test]
fn plancherel_hecke_table_sums_to_one() {
    let out = symgroth(&["measure", "plancherel-hecke", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["total"], "1");
}

#[test]
fn psi_half_scan_reports_violation() {
    let file = params("psi_half.json");
    let out = symgroth(&["scan", "schur", "--params", &file, "--max-size", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let found = v["violations"].as_array().unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0]["partition"], "1,1");
    assert_eq!(found[0]["value"], "-1/4");
}

#[test]
fn model_flag_overrides_file() {
    let file = params("psi_half.json");
    let out = symgroth(&["scan", "schur", "--params", &file, "--max-size", "4", "--model", "edrei-thoma"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn pieri_product_tsv() {
    let out = symgroth(&["product", "--mu", "1", "--nu", "1", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "partition\tcoefficient\n2\t1\n1,1\t1\n2,1\t1\n");
    let out = symgroth(&["pieri", "--k", "1", "--shape", "1", "--format", "tsv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "partition\tcoefficient\n2\t1\n1,1\t1\n2,1\t1\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(symgroth(&["product", "--mu", "2,x", "--nu", "1"]).status.code(), Some(2));
    assert_eq!(symgroth(&["product", "--mu", "1,2", "--nu", "1"]).status.code(), Some(2));
    assert_eq!(symgroth(&["measure", "hecke", "--n", "2"]).status.code(), Some(2));
    assert_eq!(symgroth(&["scan", "schur", "--params", "/nonexistent.json"]).status.code(), Some(2));
    let out = symgroth(&["expand", "--family", "gtilde", "--shape", "2", "--nvars", "2", "--degree", "4", "--basis", "schur"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("at least 4 variables"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let file = params("half_third.json");
    let args = ["measure", "hecke", "--params", &file, "--n", "3"];
    let a = symgroth(&args);
    let b = symgroth(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn harmonic_and_toeplitz_pass() {
    for name in ["half_third.json", "phi_one.json"] {
        let file = params(name);
        assert_eq!(symgroth(&["harmonic", "--params", &file, "--rank", "5"]).status.code(), Some(0));
    }
    let file = params("mixed.json");
    let out = symgroth(&["toeplitz", "--params", &file, "--size", "5", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"]["verdict"], "pass");
}

#[test]
fn pi_hat_interval_contains_e_minus_one() {
    let file = params("pi_one.json");
    let out = symgroth(&["specialize", "gtilde", "--params", &file, "--max-size", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let g1 = &v["values"][1]["value"];
    let lo: f64 = ratio(g1["lo"].as_str().unwrap());
    let hi: f64 = ratio(g1["hi"].as_str().unwrap());
    let e1 = std::f64::consts::E - 1.0;
    assert!(lo <= e1 + 1e-12 && e1 - 1e-12 <= hi);
}

fn ratio(s: &str) -> f64 {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: num::BigInt = n.parse().unwrap();
    let d: num::BigInt = d.parse().unwrap();
    num::ToPrimitive::to_f64(&num::BigRational::new(n, d)).unwrap()
}

#[test]
fn counts() {
    let out = symgroth(&["count", "syt", "--shape", "2,1"]);
    assert_eq!(json_of(&out)["count"], "2");
    let out = symgroth(&["count", "set-valued-standard", "--shape", "1", "--entries", "2"]);
    assert_eq!(json_of(&out)["count"], "1");
    let out = symgroth(&["count", "elegant", "--shape", "2,1", "--inner", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["count"], "1");
}
