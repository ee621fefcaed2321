//! End-to-end runs of the `geoflow` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn geoflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geoflow"))
        .args(args)
        .env_remove("GEOFLOW_THREADS")
        .output()
        .unwrap()
}

fn config(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_config(dir: &Path, body: &str) -> String {
    let p = dir.join("cfg.json");
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn out(dir: &Path, sub: &str) -> PathBuf {
    dir.join(sub)
}

#[test]
fn list_json_matches_catalog_feature() {
    let o = geoflow(&["list", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    if cfg!(feature = "builtin-catalog") {
        assert_eq!(names, ["eschenburg", "gromoll_meyer", "flag"]);
    } else {
        assert!(names.is_empty());
    }
}

#[test]
fn verify_passing_config_exits_zero() {
    let tmp = tempfile::tempdir().unwrap();
    let o_dir = out(tmp.path(), "run");
    let o = geoflow(&["verify", "--config", &config("eschenburg.json"), "--out", o_dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(o_dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["tool"], "geoflow");
    assert!(o_dir.join("timing.json").exists());
    assert!(report.get("wall_clock_seconds").is_none());
}

#[test]
fn loose_tolerance_exits_two() {
    let tmp = tempfile::tempdir().unwrap();
    let o_dir = out(tmp.path(), "run");
    let o = geoflow(&["verify", "--config", &config("loose_tolerance.json"), "--out", o_dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(o_dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["pass"], false);
}

#[test]
fn errors_exit_one() {
    let tmp = tempfile::tempdir().unwrap();
    let o_dir = out(tmp.path(), "run");
    let o_dir = o_dir.to_str().unwrap();

    let missing = tmp.path().join("nope.json");
    assert_eq!(geoflow(&["verify", "--config", missing.to_str().unwrap(), "--out", o_dir]).status.code(), Some(1));

    let unknown = write_config(tmp.path(), r#"{"scenario": {"name": "gromoll_meyer"}, "colour": 3}"#);
    assert_eq!(geoflow(&["verify", "--config", &unknown, "--out", o_dir]).status.code(), Some(1));

    let bad_scenario = write_config(tmp.path(), r#"{"scenario": {"name": "eschenburg", "k": 0, "l": 0, "p": 0, "q": 0}}"#);
    assert_eq!(geoflow(&["verify", "--config", &bad_scenario, "--out", o_dir]).status.code(), Some(1));

    assert_eq!(geoflow(&["frobnicate"]).status.code(), Some(1));

    let o = Command::new(env!("CARGO_BIN_EXE_geoflow"))
        .args(["list"])
        .env("GEOFLOW_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn simulate_writes_every_step() {
    let tmp = tempfile::tempdir().unwrap();
    let o_dir = out(tmp.path(), "sim");
    let o = geoflow(&["simulate", "--config", &config("flag_sum_metric.json"), "--out", o_dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(o_dir.join("trajectory.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("time,"));
    assert!(header.contains("H"));
    // horizon 10, h 1e-3
    assert_eq!(lines.count(), 10_001);
}

#[test]
fn seed_override_and_json_stdout() {
    let tmp = tempfile::tempdir().unwrap();
    let a = out(tmp.path(), "a");
    let b = out(tmp.path(), "b");
    let cfg = config("gromoll_meyer.json");
    let oa = geoflow(&["verify", "--config", &cfg, "--seed", "7", "--json", "--out", a.to_str().unwrap()]);
    let ob = geoflow(&["verify", "--config", &cfg, "--seed", "8", "--json", "--out", b.to_str().unwrap()]);
    assert_eq!(oa.status.code(), Some(0));
    let ra: serde_json::Value = serde_json::from_slice(&oa.stdout).unwrap();
    let rb: serde_json::Value = serde_json::from_slice(&ob.stdout).unwrap();
    assert_eq!(ra["seed"], 7);
    assert_eq!(rb["seed"], 8);
    assert_eq!(oa.stdout, std::fs::read(a.join("report.json")).unwrap());
    assert_ne!(oa.stdout, ob.stdout);
}

#[test]
fn reruns_are_byte_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = config("gromoll_meyer.json");
    let mut reports = Vec::new();
    for (sub, threads) in [("x", "1"), ("y", "3")] {
        let d = out(tmp.path(), sub);
        let o = Command::new(env!("CARGO_BIN_EXE_geoflow"))
            .args(["verify", "--config", &cfg, "--out", d.to_str().unwrap()])
            .env("GEOFLOW_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        reports.push(std::fs::read(d.join("report.json")).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}
