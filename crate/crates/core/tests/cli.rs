//! End-to-end runs of the `kaonbell` binary.

use std::process::{Command, Output};

use kaonbell::report::ReproductionReport;

fn kaonbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaonbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_config(dir: &tempfile::TempDir, body: &str) -> String {
    let path = dir.path().join("inputs.json");
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn reproduce_passes_with_defaults() {
    let o = kaonbell(&["reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("zeta_bound_ks_kl"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = kaonbell(&["--format", "json", "reproduce"]);
    let b = kaonbell(&["--format", "json", "reproduce"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let report = ReproductionReport::from_json(&text).unwrap();
    assert_eq!(report.claims.len(), 25);
    assert!(report.all_pass());
    assert_eq!(report.to_json(), text);
}

#[test]
fn csv_round_trips() {
    let json = stdout(&kaonbell(&["--format", "json", "reproduce"]));
    let report = ReproductionReport::from_json(&json).unwrap();
    let csv = stdout(&kaonbell(&["--format", "csv", "reproduce"]));
    assert_eq!(
        ReproductionReport::claims_from_csv(&csv).unwrap(),
        report.claims
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = kaonbell(&[
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
        "reproduce",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(ReproductionReport::from_json(&text).unwrap().all_pass());
}

#[test]
fn unwritable_output_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let o = kaonbell(&["--output", path.to_str().unwrap(), "reproduce"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn failing_claims_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, r#"{"delta_l": 0.0}"#);
    let o = kaonbell(&["--config", &cfg, "reproduce"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn bad_config_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, "{\n  \"delta_l\": 3.27e-3,\n  \"bogus\": 1\n}");
    let o = kaonbell(&["--config", &cfg, "reproduce"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bogus") && err.contains("line 3"), "{err}");

    let o = kaonbell(&["--config", "/nonexistent/inputs.json", "reproduce"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn partial_config_keeps_other_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, r#"{"zeta_k0_measured": 0.5}"#);
    let o = kaonbell(&["--config", &cfg, "--format", "json", "reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    let report = ReproductionReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.inputs.zeta_k0_measured, 0.5);
    assert_eq!(report.inputs.delta_l, 3.27e-3);
}

#[test]
fn bi_subcommand() {
    let o = kaonbell(&[
        "--format",
        "json",
        "bi",
        "--epsilon-mag",
        "2.28e-3",
        "--epsilon-phase-deg",
        "45",
        "--alpha-deg",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violated"], true);

    let o = kaonbell(&[
        "--format",
        "json",
        "bi",
        "--epsilon-mag",
        "2.28e-3",
        "--epsilon-phase-deg",
        "90",
        "--alpha-deg",
        "0",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violated"], false);
}

#[test]
fn zeta_bound_subcommand() {
    let o = kaonbell(&[
        "zeta-bound",
        "--delta",
        "3.27e-3",
        "--sigma",
        "0.12e-3",
        "--basis",
        "KS_KL",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.9951 ± 0.0002"), "{}", stdout(&o));

    let o = kaonbell(&[
        "--format",
        "csv",
        "zeta-bound",
        "--delta",
        "3.27e-3",
        "--basis",
        "k0_k0bar",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("delta_in,exact_bound"));

    let o = kaonbell(&["zeta-bound", "--delta", "0", "--basis", "KS_KL"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kaonbell(&["zeta-bound", "--delta", "0.1", "--basis", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mc_delta_subcommand() {
    let args = [
        "--format", "json", "mc-delta", "--delta", "3.27e-3", "--n", "1000000", "--seed", "42",
    ];
    let a = kaonbell(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, kaonbell(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let hat = v["delta_hat"].as_f64().unwrap();
    let se = v["std_error"].as_f64().unwrap();
    assert!((hat - 3.27e-3).abs() <= 5.0 * se);
    assert!(v["generator"].as_str().unwrap().contains("ChaCha8"));

    let o = kaonbell(&["mc-delta", "--delta", "3.27e-3", "--n", "0", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
