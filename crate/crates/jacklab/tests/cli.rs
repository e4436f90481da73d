use std::process::{Command, Output};

use serde_json::Value;

fn jacklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacklab"))
        .args(args)
        .env_remove("JACKLAB_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = jacklab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

#[test]
fn coeffs_json_golden() {
    let v: Value = serde_json::from_str(&stdout(&["coeffs", "--kind", "a", "--n", "3", "--nu", "3"])).unwrap();
    assert_eq!(v["kind"], "a");
    assert_eq!(v["n"], 3);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["lambda"], "3");
    assert_eq!(rows[0]["alpha"], "2*a^2-3*a+2");
    assert_eq!(rows[0]["beta"]["symbolic"], "2*b^2+b+1");
    assert_eq!(rows[0]["beta"]["coeffs"], serde_json::json!(["1", "1", "2"]));
}

#[test]
fn coeffs_csv_golden() {
    let csv = stdout(&["--format", "csv", "coeffs", "--kind", "h", "--n", "2", "--nu", "2"]);
    assert_eq!(csv, "kind,n,nu,lambda,alpha,beta_poly\nh,2,2,2,a-1,b\nh,2,2,\"1,1\",1,1\n");
}

#[test]
fn hypermap_census_csv() {
    let csv = stdout(&["--format", "csv", "census", "hypermaps", "--k", "2", "--m", "2"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,m,lambda,beta_poly,orientable,total"));
    let total: u64 = lines.map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 24);
}

#[test]
fn witnesses_are_json_arrays() {
    let v: Value = serde_json::from_str(&stdout(&["census", "hypermaps", "--k", "1", "--m", "3", "--witness"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    let v: Value =
        serde_json::from_str(&stdout(&["census", "matchings", "--n", "3", "--nu", "3", "--lambda", "3", "--witness"])).unwrap();
    let wts: Vec<u64> = v.as_array().unwrap().iter().map(|w| w["wt"].as_u64().unwrap()).collect();
    assert_eq!(wts.len(), 4);
    assert_eq!(wts.iter().sum::<u64>(), 5);
}

#[test]
fn oracle_agrees_with_engine() {
    let engine = stdout(&["coeffs", "--kind", "a", "--n", "4", "--nu", "2,2"]);
    let oracle = stdout(&["oracle", "--n", "4", "--nu", "2,2"]);
    assert_eq!(engine, oracle);
}

#[test]
fn verify_exit_codes() {
    let out = jacklab(&["verify", "omega", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(jacklab(&["coeffs", "--n", "3", "--nu", "2,2"]).status.code(), Some(2));
    assert_eq!(jacklab(&["coeffs", "--n", "3", "--nu", "x"]).status.code(), Some(2));
}

#[test]
fn out_file_and_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let cache = dir.path().join("cache");
    let args = ["--cache-dir", cache.to_str().unwrap(), "--out", out.to_str().unwrap(), "coeffs", "--n", "4", "--nu", "4"];
    assert!(stdout(&args).is_empty());
    let first = std::fs::read_to_string(&out).unwrap();
    assert!(cache.join("coeff-table").join("a-n4-nu4.json").exists());
    stdout(&args);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), first);
    assert_eq!(first, stdout(&["coeffs", "--n", "4", "--nu", "4"]));
}

#[test]
fn only_the_row_survives_at_one_column() {
    let csv = stdout(&["--format", "csv", "coeffs", "--kind", "a", "--n", "5", "--nu", "1,1,1,1,1"]);
    let nonzero: Vec<&str> = csv.lines().skip(1).filter(|l| !l.ends_with(",0,0")).collect();
    assert_eq!(nonzero, ["a,5,\"1,1,1,1,1\",5,1,1"]);
}

#[test]
fn env_var_overrides_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let (flag, env) = (dir.path().join("flag"), dir.path().join("env"));
    let out = Command::new(env!("CARGO_BIN_EXE_jacklab"))
        .args(["--cache-dir", flag.to_str().unwrap(), "oracle", "--n", "3"])
        .env("JACKLAB_CACHE", &env)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env.join("jack-theta").join("n3.json").exists());
    assert!(!flag.exists());
}

#[test]
fn matching_census_csv_golden() {
    let csv = stdout(&["--format", "csv", "census", "matchings", "--n", "3", "--nu", "3"]);
    assert_eq!(
        csv,
        "nu,lambda,beta_poly,bipartite,total\n3,3,2*b^2+b+1,1,4\n3,\"2,1\",2*b^2+2*b,0,4\n3,\"1,1,1\",2*b^2+4*b+2,2,8\n"
    );
}
