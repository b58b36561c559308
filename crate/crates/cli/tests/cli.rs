//! End-to-end checks of the command line: generator/count round trips,
//! report determinism, worker invariance, limits, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multiplicity"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_double_chain_writes_pointset_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dc.json");
    let out = run(&["gen", "double-chain", "--n", "10", "--k", "0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["mode"], "exact");
    assert_eq!(parsed["points"].as_array().unwrap().len(), 10);
    assert_eq!(parsed["provenance"]["kind"], "double-chain");
}

#[test]
fn count_triangulations_of_convex_12() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("convex.json");
    std::fs::write(&path, r#"{"mode":"convex","n":12}"#).unwrap();
    let out = run(&["count", path.to_str().unwrap(), "--class", "triangulation"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["count"], "16796");
}

#[test]
fn count_is_identical_for_any_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("convex.json");
    std::fs::write(&path, r#"{"mode":"convex","n":9}"#).unwrap();
    let single = run(&["count", path.to_str().unwrap(), "--class", "spanning-tree"]);
    let multi = run(&["count", path.to_str().unwrap(), "--class", "spanning-tree", "--workers", "4"]);
    let worker_field = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["config"]["workers"] = serde_json::Value::Null;
        v
    };
    assert_eq!(worker_field(&stdout(&single)), worker_field(&stdout(&multi)));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poly.json");
    let gen = run(&["gen", "convex-polygon", "--n", "7", "--out", path.to_str().unwrap()]);
    assert!(gen.status.success());
    let a = run(&["tour", path.to_str().unwrap(), "--objective", "longest"]);
    let b = run(&["tour", path.to_str().unwrap(), "--objective", "longest"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["bound", "st", "--order", "2", "--restarts", "3", "--seed", "5"]);
    let b = run(&["bound", "st", "--order", "2", "--restarts", "3", "--seed", "5"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_streams_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let ps = dir.path().join("convex.json");
    let out_path = dir.path().join("graphs.jsonl");
    std::fs::write(&ps, r#"{"mode":"convex","n":5}"#).unwrap();
    let out = run(&[
        "enumerate",
        ps.to_str().unwrap(),
        "--class",
        "triangulation",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = std::fs::read_to_string(&out_path)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 5); // C_3
    for line in lines {
        let edges: Vec<[usize; 2]> = serde_json::from_str(&line).unwrap();
        assert_eq!(edges.len(), 7); // 2n - 3 edges
    }
}

#[test]
fn extremal_longest_matchings_on_gadget() {
    let dir = tempfile::tempdir().unwrap();
    let ps = dir.path().join("s4.json");
    let gen = run(&["gen", "s4-matching", "--n", "8", "--out", ps.to_str().unwrap()]);
    assert!(gen.status.success());
    let out = run(&[
        "extremal",
        ps.to_str().unwrap(),
        "--class",
        "perfect-matching",
        "--objective",
        "max",
        "--crossings",
        "forbidden",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["multiplicity"], 4);
    assert_eq!(report["near_tie_warnings"], 0);
}

#[test]
fn tour_longest_on_regular_10gon_returns_five() {
    let dir = tempfile::tempdir().unwrap();
    let ps = dir.path().join("c10.json");
    std::fs::write(&ps, r#"{"mode":"convex","n":10}"#).unwrap();
    let out = run(&["tour", ps.to_str().unwrap(), "--objective", "longest"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["tours"].as_array().unwrap().len(), 5);
    assert_eq!(report["candidates"].as_array().unwrap().len(), 5);
}

#[test]
fn bound_sc_and_dc() {
    let out = run(&["bound", "sc"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["base"].as_f64().unwrap() <= 68.62);
    let out = run(&["bound", "dc"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((report["base"].as_f64().unwrap() - 24.675).abs() < 1e-9);
}

#[test]
fn reproduce_tables_emits_csv() {
    let out = run(&["bound", "--reproduce-tables", "--restarts", "1", "--seed", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut lines = text.trim_end().lines();
    assert_eq!(lines.next().unwrap(), "objective,order,reference_base,optimized_base");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4 + 8 + 9);
    assert!(rows.iter().any(|r| r.starts_with("st,8,12.00255")));
    assert!(rows.iter().any(|r| r.starts_with("cf,9,12.26163")));
}

#[test]
fn exit_code_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let ps = dir.path().join("bad.json");
    std::fs::write(&ps, r#"{"mode":"exact","points":[{"x":"1/0","y":"2"}]}"#).unwrap();
    let out = run(&["count", ps.to_str().unwrap(), "--class", "forest"]);
    assert_eq!(out.status.code(), Some(2));

    let missing = Path::new("/nonexistent/nowhere.json");
    let out = run(&["count", missing.to_str().unwrap(), "--class", "forest"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_limit_exceeded_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let ps = dir.path().join("c15.json");
    std::fs::write(&ps, r#"{"mode":"convex","n":15}"#).unwrap();
    let out = run(&["count", ps.to_str().unwrap(), "--class", "spanning-cycle"]);
    assert_eq!(out.status.code(), Some(3));
    // The env var lifts the cap (the hull cycle is the only one, so this
    // stays fast despite the size).
    let out = bin()
        .args(["count", ps.to_str().unwrap(), "--class", "spanning-cycle"])
        .env("MULTIPLICITY_LIMIT_N", "15")
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["count"], "1");
}

#[test]
fn verify_selected_suite_passes() {
    let out = run(&["verify", "--suite", "counts"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all checks passed"));
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
