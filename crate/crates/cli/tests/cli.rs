use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noetherlab"))
        .args(args)
        .env_remove("NOETHERLAB_SKIP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn determinants_json() {
    let o = run(&["verify", "--scenario", "sec5.4-determinants", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    let witnesses: Vec<&str> = v["scenarios"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["witness"].as_str().unwrap())
        .collect();
    assert_eq!(witnesses, ["8", "16", "64"]);
    assert_eq!(v["totals"]["pass"], 3);
    assert_eq!(v["totals"]["fail"], 0);
}

#[test]
fn json_report_round_trips() {
    let o = run(&[
        "verify",
        "--scenario",
        "thm1.7-relations-p7",
        "--scenario",
        "sec5.4-determinants",
        "--json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let report: noetherlab::SuiteReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
    let names: Vec<&str> = report.scenarios.iter().map(|s| s.name.as_str()).collect();
    assert_eq!(names, ["sec5.4-determinants", "thm1.7-relations-p7"]);
    assert_eq!(report.totals.pass, 13);
}

#[test]
fn text_report_ends_with_totals() {
    let o = run(&["verify", "--scenario", "sec5.4-determinants", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().last(), Some("totals: pass 3 fail 0 skipped 0"));
}

#[test]
fn unknown_scenario_suggests_names() {
    let o = run(&["verify", "--scenario", "nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("nearest:"), "{err}");
    let o = run(&["verify", "--scenario", "sec5.4-determinats"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("sec5.4-determinants"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify"][..],
        &["verify", "--all", "--scenario", "sec5.4-determinants"],
        &["verify", "--all", "--jobs", "0"],
        &["list", "--bogus"],
        &[],
        &["perm", "parse", "(1,2"],
        &["perm", "parse", "(1,15)", "--degree", "14"],
        &["construct", "nope"],
        &["construct", "hajja", "--params", "k=1"],
        &["construct", "hajja", "--params", "n"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failures_exit_1() {
    let text: String = noetherlab::Catalog::standard_definitions()
        .lines()
        .map(|l| {
            if l.starts_with("sigma1 ") {
                "sigma1 = (1,5,3,7,9,11,13)\n".to_string()
            } else {
                format!("{l}\n")
            }
        })
        .collect();
    assert!(text.contains("(1,5,3,7"));
    let dir = std::env::temp_dir().join(format!("noetherlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corrupt.txt");
    std::fs::write(&path, text).unwrap();
    let o = run(&[
        "verify",
        "--scenario",
        "convention",
        "--definitions",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.contains("FAIL")), "{out}");
    assert!(!out.lines().last().unwrap().contains("fail 0"));
    let o = run(&["construct", "affine-fixed", "--params", "c=2,m=6,char=7"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn skip_list_is_honored() {
    let o = Command::new(env!("CARGO_BIN_EXE_noetherlab"))
        .args(["verify", "--scenario", "sec5.4-determinants", "--json"])
        .env("NOETHERLAB_SKIP", "sec5.4-determinants")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["totals"]["skipped"], 1);
    assert_eq!(v["totals"]["pass"], 0);
}

#[test]
fn perm_parse_prints_images() {
    let o = run(&["perm", "parse", "(1,3,5,7,9,11,13)", "--degree", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "[3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 1, 14]"
    );
    let o = run(&["perm", "parse", "(1,2)(3,4,5)", "--degree", "5", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 6);
}

#[test]
fn list_and_catalog() {
    let o = run(&["list", "sec5.4"]);
    let names: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(
        names,
        [
            "sec5.4-class4",
            "sec5.4-class5",
            "sec5.4-class6and9",
            "sec5.4-determinants"
        ]
    );
    assert!(run(&["list", "zzz"]).stdout.is_empty());
    let o = run(&["catalog", "dump", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 63);
    assert_eq!(rows[9]["order"], "168");
    assert_eq!(rows[62]["order"], "87178291200");
}

#[test]
fn construct_exposes_outputs() {
    let o = run(&["construct", "sec5.5", "--params", "p=7,d=3,a=3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["elements"].is_object() || v["elements"].is_array());
    assert!(v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|o| o["holds"] == true));
    let o = run(&["construct", "question1.4", "--params", "char=7"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (v["a"].as_i64(), v["b"].as_i64(), v["m"].as_i64()),
        (Some(1), Some(-3), Some(2))
    );
}
