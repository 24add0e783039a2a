use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn admeans() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_admeans"));
    cmd.env_remove("AD_MEANS_TOL");
    cmd
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn scalar(dir: &Path, name: &str, re: f64, im: f64) -> PathBuf {
    write(dir, name, &format!(r#"{{"rows":1,"cols":1,"data":[[{re},{im}]]}}"#))
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn entry(v: &serde_json::Value, i: usize) -> (f64, f64) {
    let d = &v["data"][i];
    (d[0].as_f64().unwrap(), d[1].as_f64().unwrap())
}

#[test]
fn sqrt_of_scalar_example() {
    let dir = TempDir::new().unwrap();
    let t = scalar(dir.path(), "t.json", 7.0, 24.0);
    let out = admeans().args(["--json", "sqrt"]).arg(&t).output().unwrap();
    assert!(out.status.success());
    let (re, im) = entry(&json(&out), 0);
    assert!((re - 4.0).abs() < 1e-9 && (im - 3.0).abs() < 1e-9);
}

#[test]
fn compare_reports_relation() {
    let dir = TempDir::new().unwrap();
    let t = scalar(dir.path(), "t.json", 32.0, 24.0);
    let s = scalar(dir.path(), "s.json", 7.0, 24.0);
    let out = admeans().arg("compare").arg(&t).arg(&s).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("GreaterEq"), "{}", stdout(&out));
}

#[test]
fn decompose_csv_input() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "m.csv", "1,2\n3,0\n-3,0\n0,4\n");
    let out = admeans().args(["--json", "decompose"]).arg(&m).output().unwrap();
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(entry(&v["real"], 0), (1.0, 0.0));
    assert_eq!(entry(&v["real"], 3), (0.0, 0.0));
    assert_eq!(entry(&v["imag"], 1), (0.0, -3.0));
    assert_eq!(entry(&v["imag"], 2), (0.0, 3.0));
}

#[test]
fn mean_writes_output_file() {
    let dir = TempDir::new().unwrap();
    let t = scalar(dir.path(), "t.json", 1.0, 1.0);
    let s = scalar(dir.path(), "s.json", 1.0, 2.0);
    let out_path = dir.path().join("h.json");
    let out = admeans().args(["mean", "--kind", "harm"]).arg(&t).arg(&s).arg("--out").arg(&out_path).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let (re, im) = entry(&v, 0);
    assert!((re - 1.0).abs() < 1e-12 && (im - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn parallel_sum_and_schur() {
    let dir = TempDir::new().unwrap();
    let t = scalar(dir.path(), "t.json", 1.0, 1.0);
    let s = scalar(dir.path(), "s.json", 1.0, 2.0);
    let out = admeans().args(["--json", "parallel-sum"]).arg(&t).arg(&s).output().unwrap();
    let (re, im) = entry(&json(&out), 0);
    assert!((re - 7.0 / 13.0).abs() < 1e-12 && (im - 9.0 / 13.0).abs() < 1e-12);

    let m = write(dir.path(), "m.json", r#"{"rows":2,"cols":2,"data":[[3,0],[1,0],[1,0],[2,0]]}"#);
    let out = admeans().args(["--json", "schur", "--split", "1"]).arg(&m).output().unwrap();
    assert!(out.status.success());
    assert_eq!(entry(&json(&out), 0), (2.5, 0.0));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"rows":2,"cols":2,"data":[[1,0]]}"#);
    let out = admeans().arg("decompose").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let not_ad = scalar(dir.path(), "n.json", -1.0, 1.0);
    let out = admeans().arg("sqrt").arg(&not_ad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let m = write(dir.path(), "m.json", r#"{"rows":2,"cols":2,"data":[[3,0],[1,0],[1,0],[2,0]]}"#);
    let out = admeans().args(["schur", "--split", "2"]).arg(&m).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = admeans().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = admeans().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passing_suite_exits_0_and_writes_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let out = admeans()
        .args(["verify", "--suite", "thm34", "--dim", "3", "--count", "40", "--seed", "5", "--report"])
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["suite"], "thm34");
    assert_eq!(v["trials"], 40);
    assert_eq!(v["violations"], 0);
}

#[test]
fn verify_with_violation_exits_1() {
    // The registry contains one worked example whose printed value is not reproduced.
    let out = admeans().args(["verify", "--suite", "paper-examples"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("4.3-harmonic"));
}

#[test]
fn fuzz_inverted_polarity() {
    let out = admeans()
        .args(["--json", "fuzz", "--suite", "question42-survey", "--dim", "2", "--count", "100", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["inverted_polarity"], true);
    assert!(v["violations"].as_u64().unwrap() > 0);

    let out = admeans().args(["fuzz", "--suite", "thm34"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_flag_overrides_env() {
    let base = ["--json", "verify", "--suite", "smw", "--dim", "2", "--count", "3"];
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = admeans();
        if let Some(e) = env {
            cmd.env("AD_MEANS_TOL", e);
        }
        cmd.args(base);
        if let Some(f) = flag {
            cmd.args(["--tol", f]);
        }
        let out = cmd.output().unwrap();
        json(&out)["tolerance"]["eq_tol"].as_f64().unwrap()
    };
    assert_eq!(run(None, None), 1e-9);
    assert_eq!(run(Some("1e-7"), None), 1e-7);
    assert_eq!(run(Some("1e-7"), Some("1e-11")), 1e-11);

    let out = admeans().env("AD_MEANS_TOL", "-1").args(base).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
