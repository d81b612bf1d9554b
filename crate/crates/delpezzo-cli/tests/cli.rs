//! End-to-end tests of the command-line surface: deterministic reports,
//! classification output, and the validation gates.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_delpezzo"))
}

#[test]
fn paper_suite_reports_are_byte_identical() {
    let run = || {
        let out = bin()
            .args(["run", "--select", "paper-suite", "--seed", "0"])
            .output()
            .expect("run");
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("\"overall\": \"pass\""));
    assert!(!text.contains("wall_ms"));
}

#[test]
fn classify_beta_pair() {
    let out = bin()
        .args(["classify", "--beta1", "2", "--beta2", "4"])
        .output()
        .expect("classify");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "isomorphic");
    assert!(v["certificate"]["matrix"].is_array());

    let out = bin()
        .args(["classify", "--beta1", "2", "--beta2", "3"])
        .output()
        .expect("classify");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "inequivalent");
}

#[test]
fn classify_cubics_by_text() {
    let out = bin()
        .args(["classify", "--f", "x^3 - 2", "--g", "x^3 - 4"])
        .output()
        .expect("classify");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "isomorphic");
}

#[test]
fn singular_locus_rejects_zero_beta() {
    let out = bin()
        .args(["singular-locus", "--beta", "0"])
        .output()
        .expect("run");
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonzero"));
}

#[test]
fn empty_selector_is_usage_error() {
    let out = bin()
        .args(["run", "--select", ""])
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_scenario_name_is_an_error() {
    let out = bin()
        .args(["run", "--select", "nope"])
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown scenario"));
}

#[test]
fn scenario_validation_rejects_zero_beta_before_execution() {
    let dir = std::env::temp_dir().join("delpezzo-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"[{"name": "bad", "kind": "singular-locus", "beta": "0"}]"#,
    )
    .unwrap();
    let out = bin()
        .args(["run", "--scenarios", path.to_str().unwrap(), "--select", "all"])
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonzero"));
}

#[test]
fn list_checks_table() {
    let out = bin().args(["list-checks", "--format", "json"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() >= 40);
    for r in rows {
        assert!(r["check"].is_string());
        assert!(r["module"].is_string());
        assert!(r["operation"].is_string());
    }
}

#[test]
fn project_check_trinodal_level() {
    let out = bin()
        .args(["project-check", "--level", "trinodal"])
        .output()
        .expect("run");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], "pass");
}
