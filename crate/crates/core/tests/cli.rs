//! Runs the `wfano` binary: golden outputs, exit codes, `--out`, `--jobs`
//! and the `WFANO_CATALOG` default.

use std::path::Path;
use std::process::{Command, Output};

use wfano::catalog::catalog_from_str;
use wfano::wspace::enumerate_monomials;
use wfano::WeightSystem;

fn wfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wfano")).args(args).env_remove("WFANO_CATALOG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn golden_outputs_are_byte_identical() {
    let cases: [(&[&str], &str); 6] = [
        (&["monomials", "--weights", "1,2,3,3,4", "--degree", "12"], "monomials_1_2_3_3_4_d12.json"),
        (&["verdict", "--septuple", "1,7,8,9,12,36"], "verdict_84.json"),
        (&["stabilizer", "--points", "0,1,-1,inf"], "stabilizer_harmonic.json"),
        (&["normalize", "--septuple", "1,3,4,5,6,18", "--seed", "0"], "normalize_39_seed0.json"),
        (&["autgroup", "--septuple", "1,3,3,4,5,15", "--seed", "0"], "autgroup_28_seed0.json"),
        (&["basket", "--septuple", "1,5,6,22,33,66", "--format", "markdown"], "basket_1_5_6_22_33_66.md"),
    ];
    for (args, file) in cases {
        let o = wfano(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn classify_index_one_gives_95_loadable_records() {
    let o = wfano(&["classify", "--index", "1", "--format", "json"]);
    assert!(o.status.success());
    let records = catalog_from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 95);
    assert!(records.iter().all(|r| r.index() == 1));
}

#[test]
fn monomials_match_enumeration() {
    let o = wfano(&["monomials", "--weights", "1,2,3,3,4", "--degree", "12"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ws = WeightSystem::new([1, 2, 3, 3, 4], 12).unwrap();
    let want: Vec<String> = enumerate_monomials(&ws, 12).iter().map(ToString::to_string).collect();
    let got: Vec<String> = v["monomials"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn verdict_for_family_84_is_three() {
    let o = wfano(&["verdict", "--septuple", "1,7,8,9,12,36"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["values"], serde_json::json!(["3"]));
    let rules: Vec<&str> = v["justification"].as_array().unwrap().iter().map(|j| j["rule"].as_str().unwrap()).collect();
    assert_eq!(rules, ["irrational-cited", "super-rigid-bir-eq-aut", "aut-trivial-certificate"]);
}

#[test]
fn job_count_does_not_change_output() {
    let a = wfano(&["classify", "--index", "2", "--jobs", "1"]);
    let b = wfano(&["classify", "--index", "2", "--jobs", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes_and_structured_errors() {
    let o = wfano(&["monomials", "--weights", "1,1,1,1,1", "--degree", "2", "--nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(wfano(&["basket", "--weights", "1,1,1,1,1"]).status.code(), Some(2));

    let o = wfano(&["normalize", "--septuple", "1,1,1,1,2,5"]);
    assert_eq!(o.status.code(), Some(1));
    let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "unsupported");
    assert!(e["message"].as_str().unwrap().contains("(1,1,1,1,2,5,1)"));

    let o = wfano(&["stabilizer", "--points", "0,1"]);
    assert_eq!(o.status.code(), Some(1));
    let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "precondition");
}

#[test]
fn out_flag_and_catalog_variable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i3.json");
    let p = path.to_str().unwrap();
    let o = wfano(&["classify", "--index", "3", "--out", p]);
    assert!(o.status.success() && o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let records = catalog_from_str(&written).unwrap();
    assert_eq!(records.len(), 7);

    // With the variable set, `report` reads the file instead of searching.
    let o = Command::new(env!("CARGO_BIN_EXE_wfano"))
        .args(["report", "--format", "json"])
        .env("WFANO_CATALOG", &path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), written);
    let o = Command::new(env!("CARGO_BIN_EXE_wfano")).args(["report"]).env("WFANO_CATALOG", &path).output().unwrap();
    let md = stdout(&o);
    assert!(md.starts_with("| № | a1 | a2 | a3 | a4 | a5 | d | I | d(X) |"));
    assert_eq!(md.lines().count(), 2 + 7);

    let o = Command::new(env!("CARGO_BIN_EXE_wfano")).args(["verdict"]).env("WFANO_CATALOG", &path).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 7);
}

#[test]
fn every_subcommand_speaks_json() {
    for args in [
        &["check", "--septuple", "1,1,1,1,1,4"][..],
        &["basket", "--septuple", "1,1,1,1,1,4"],
        &["autgroup", "--septuple", "1,1,1,1,1,4"],
        &["classify", "--index", "5"],
        &["report", "--index", "5", "--format", "json"],
        &["verdict", "--index", "5"],
    ] {
        let o = wfano(args);
        assert!(o.status.success(), "{args:?}");
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
    // `check` output is a one-record catalog.
    let o = wfano(&["check", "--septuple", "1,2,3,3,4,12"]);
    let r = catalog_from_str(&stdout(&o)).unwrap();
    assert_eq!(r[0].paper_number, Some(19));
}
