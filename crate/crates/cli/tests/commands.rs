//! Command-level checks beyond the acceptance matrix: structured output
//! and the weak-hom subcommand.

use std::process::Command;

fn prelie_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_prelie"))
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn structured_output_is_valid_json() {
    let out = prelie_bin()
        .args([
            "verify",
            "--algebra",
            &fixture("a2.json"),
            "--r",
            &fixture("r_c.json"),
            "--format",
            "structured",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["pass"], false);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports[1]["failures"][0]["lhs"]
        .as_str()
        .unwrap()
        .contains("(e1∧e2)⊗e2"));
}

#[test]
fn cohomology_structured_table() {
    let out = prelie_bin()
        .args([
            "cohomology",
            "--algebra",
            &fixture("a2.json"),
            "--r",
            &fixture("r_b.json"),
            "--max-degree",
            "3",
            "--complex",
            "subcomplex",
            "--format",
            "structured",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["data"]["H~1"], 1);
    assert_eq!(doc["data"]["H~2"], 2);
    assert_eq!(doc["data"]["H~3"], 1);
}

#[test]
fn weak_hom_command() {
    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.json");
    std::fs::write(&id, r#"{"dim": 2, "entries": [["1", "0"], ["0", "1"]]}"#).unwrap();
    // identity pair between r_b and itself passes
    let code = prelie_bin()
        .args([
            "weak-hom",
            "--algebra",
            &fixture("a2.json"),
            "--r",
            &fixture("r_b.json"),
            "--r2",
            &fixture("r_b.json"),
            "--phi",
            id.to_str().unwrap(),
            "--varphi",
            id.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(code.code(), Some(0));
    // between r_b and r_c it fails the tensor condition
    let code = prelie_bin()
        .args([
            "weak-hom",
            "--algebra",
            &fixture("a2.json"),
            "--r",
            &fixture("r_b.json"),
            "--r2",
            &fixture("r_c.json"),
            "--phi",
            id.to_str().unwrap(),
            "--varphi",
            id.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(code.code(), Some(1));
}

#[test]
fn nijenhuis_scan_lists_elements() {
    let out = prelie_bin()
        .args([
            "nijenhuis",
            "--algebra",
            &fixture("a2.json"),
            "--r",
            &fixture("r_b.json"),
            "--format",
            "structured",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let found: Vec<&str> = doc["data"]["nijenhuis_elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(found.contains(&"1,0"));
    assert!(!found
        .iter()
        .any(|s| s.ends_with(",1") || s.ends_with(",-1")));
}
