//! End-to-end CLI behavior: exit codes, formats, and input handling.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nilcortex"))
}

fn tmp_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nilcortex-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_gd(d: usize) -> PathBuf {
    let path = tmp_dir().join(format!("g{d}.json"));
    let out = bin()
        .args(["gd", &d.to_string(), "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    path
}

fn write_h3() -> PathBuf {
    let path = tmp_dir().join("h3.json");
    fs::write(
        &path,
        nilcortex::liealg::LieAlgebra::heisenberg().to_json_string(),
    )
    .unwrap();
    path
}

#[test]
fn validate_family_file_passes() {
    let path = write_gd(3);
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("jacobi: pass"));
    assert!(text.contains("nilpotency class: 2"));
    assert!(text.contains("center dim: 3"));
    assert!(text.contains("verdict: ok"));
}

#[test]
fn validate_broken_jacobi_exits_one_with_witness() {
    let path = tmp_dir().join("broken.json");
    fs::write(
        &path,
        r#"{"dim":3,"basis":["U1","U2","U3"],"brackets":[
            {"i":1,"j":2,"coeffs":{"3":"1"}},
            {"i":1,"j":3,"coeffs":{"1":"1"}}]}"#,
    )
    .unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL at basis triple (1, 2, 3)"));
}

#[test]
fn validate_class_three_is_rejected_but_reported() {
    let path = tmp_dir().join("filiform.json");
    fs::write(
        &path,
        r#"{"dim":4,"basis":["U1","U2","U3","U4"],"brackets":[
            {"i":1,"j":2,"coeffs":{"3":"1"}},
            {"i":1,"j":3,"coeffs":{"4":"1"}}]}"#,
    )
    .unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("jacobi: pass"));
    assert!(text.contains("nilpotency class: 3"));
    assert!(text.contains("two-step: no"));
}

#[test]
fn validate_malformed_file_exits_two_with_location() {
    let path = tmp_dir().join("garbage.json");
    fs::write(&path, "{\n  \"dim\": 3,\n").unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"));
}

#[test]
fn gd_rejects_small_d() {
    let out = bin().args(["gd", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn orbit_and_jump_worked_values() {
    let g2 = write_gd(2);
    let out = bin()
        .args(["orbit", g2.to_str().unwrap(), "1,0,0,0,0,0,0,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("orbit dimension: 4"));

    let out = bin()
        .args(["jump", g2.to_str().unwrap(), "1,0,0,0,0,0,0,0"])
        .output()
        .unwrap();
    assert!(stdout(&out).contains("jump indices: {3, 5, 7, 8}"));

    let h3 = write_h3();
    let out = bin()
        .args(["orbit", h3.to_str().unwrap(), "0,0,1"])
        .output()
        .unwrap();
    assert!(stdout(&out).contains("orbit dimension: 2"));
}

#[test]
fn cortex_test_member_and_non_member() {
    let out = bin()
        .args(["cortex-test", "2", "0,0, 1,2,3,6, 0,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("MEMBER: z=0 \u{2713}, Q_2 = 0 \u{2713}"));

    let out = bin()
        .args(["cortex-test", "2", "0,0,1,0,0,1,0,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NON-MEMBER"));
    assert!(stdout(&out).contains("Q_2 value: -1"));
}

#[test]
fn covector_can_come_from_a_file() {
    let path = tmp_dir().join("ell.txt");
    fs::write(&path, "0,0,1,2,3,6,0,0\n").unwrap();
    let arg = format!("@{}", path.display());
    let out = bin().args(["cortex-test", "2", &arg]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    // JSON-array form is accepted too
    let path2 = tmp_dir().join("ell.json");
    fs::write(&path2, r#"["0","0","1","2","3","6","0","0"]"#).unwrap();
    let arg2 = format!("@{}", path2.display());
    let out2 = bin().args(["cortex-test", "2", &arg2]).output().unwrap();
    assert_eq!(out2.status.code(), Some(0));
}

#[test]
fn witness_rejects_degenerate_without_perturb() {
    let out = bin()
        .args(["witness", "2", "0,0,0,5,0,7,0,0", "1/10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("degenerate stratum"));
}

#[test]
fn witness_perturb_mode_reports_numeric_table() {
    let out = bin()
        .args([
            "witness",
            "2",
            "0,0,0,5,0,7,0,0",
            "1/10,1/100",
            "--perturb",
            "1/10,1/100",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("numeric perturbation limit"));
    assert!(text.contains("(floating)"));
    // 2 etas x 2 epsilons = 4 data rows
    assert_eq!(text.lines().filter(|l| l.contains(" | ")).count(), 5);
}

#[test]
fn witness_rejects_off_variety_and_nonpositive_eps() {
    let out = bin()
        .args(["witness", "2", "0,0,1,0,0,1,0,0", "1/10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not in the cortex variety"));

    let out = bin()
        .args(["witness", "2", "0,0,1,2,3,6,0,0", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cross_section_layer_check() {
    let out = bin()
        .args(["cross-section", "2", "1,2,1,1,1,1,5,7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,0,-1,0,-1,0,0\n");

    let out = bin()
        .args(["cross-section", "2", "0,2,1,1,1,1,5,7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("z1 = 0"));
}

#[test]
fn record_format_is_valid_json() {
    let out = bin()
        .args(["--format", "record", "invariants", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["derivations_vanish"], serde_json::json!(true));
    assert_eq!(v["generators"][2], serde_json::json!("z1*y2 - z2*y1"));

    let g2 = write_gd(2);
    let out = bin()
        .args([
            "--format",
            "record",
            "classify",
            g2.to_str().unwrap(),
            "--trials",
            "10",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classifier"]["codim"], serde_json::json!(2));
}

#[test]
fn csv_format_is_cloud_only() {
    let out = bin()
        .args(["--format", "csv", "invariants", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cloud_runs_on_any_two_step_file_and_rejects_deeper_ones() {
    let h3 = write_h3();
    let out = bin()
        .args(["cloud", h3.to_str().unwrap(), "--samples", "100", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert!(!rows.is_empty());
    assert!(rows[0].split(',').count() == 3);
    assert!(stderr(&out).contains("of 100 samples"));

    let filiform = tmp_dir().join("filiform2.json");
    fs::write(
        &filiform,
        r#"{"dim":4,"basis":["U1","U2","U3","U4"],"brackets":[
            {"i":1,"j":2,"coeffs":{"3":"1"}},
            {"i":1,"j":3,"coeffs":{"4":"1"}}]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["cloud", filiform.to_str().unwrap(), "--samples", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("two-step"));
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["cortex-test", "2", "1,oops,3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
