use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su2branch"))
        .args(args)
        .output()
        .expect("spawn su2branch")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("strict JSON")
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--type", "A4"][..],
        &["verify"],
        &["series", "--type", "E9", "--node", "1"],
        &["series", "--type", "D6", "--node", "1,4"],
        &["series", "--type", "E8", "--node", "12"],
        &["zpoly", "--type", "E8", "--node", "x"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn series_json_schema() {
    let v = json(&["series", "--type", "E8", "--node", "2,1", "--order", "40", "--json"]);
    assert_eq!(v["type"], "E8");
    assert_eq!(v["convention"], "bourbaki-ext/1");
    assert_eq!(v["node"], 8);
    assert_eq!((v["mark"].as_i64(), v["distance"].as_u64()), (Some(2), Some(1)));
    let c: Vec<i64> = serde_json::from_value(v["coeffs"].clone()).unwrap();
    assert_eq!(c.len(), 41);
    // γ_8 is the defining representation
    assert_eq!(&c[..3], &[0, 1, 0]);
}

#[test]
fn zpoly_all_and_node0() {
    let v = json(&["zpoly", "--type", "E8", "--all", "--json"]);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 9);
    let z0: Vec<i64> = serde_json::from_value(recs[0]["coeffs"].clone()).unwrap();
    assert_eq!(z0.len(), 31);
    assert_eq!((z0[0], z0[30], z0.iter().sum::<i64>()), (1, 1, 2));
    assert!(recs.iter().all(|r| r["type"] == "E8" && r["convention"] == "bourbaki-ext/1"));
}

#[test]
fn orbits_json_records() {
    let v = json(&["orbits", "--type", "E6", "--json"]);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 36);
    for r in roots {
        let n = r["n"].as_u64().unwrap();
        let k = r["k"].as_u64().unwrap();
        assert!((1..=12).contains(&n));
        assert_eq!(n % 2, k % 2);
        assert!(r["root"].is_array() && r["orbit"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn three_oracles_agree() {
    let pick = |o: &str| json(&["branch", "--type", "E7", "--n", "17", "--oracle", o, "--json"])["multiplicities"].clone();
    let cox = pick("coxeter");
    assert_eq!(cox, pick("recursion"));
    assert_eq!(cox, pick("characters"));
}

#[test]
fn table_and_verify_succeed() {
    let t = run(&["table"]);
    assert!(t.status.success());
    let text = String::from_utf8(t.stdout).unwrap();
    assert_eq!(text.lines().count(), 19);
    assert!(!text.contains("MISMATCH"));

    let v = json(&["verify", "--type", "D7", "--json"]);
    assert_eq!(v["convention"], "bourbaki-ext/1");
    assert!(v["types"][0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("su2branch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mckay.json");
    let out = run(&["mckay", "--type", "D4", "--json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["marks"], serde_json::json!([1, 1, 2, 1, 1]));
    std::fs::remove_dir_all(dir).ok();
}
