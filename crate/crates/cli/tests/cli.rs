use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const TRIANGLE: &str = r#"{"dimension": 2, "vertices": [[0, 0], [1, 0], [0, 1]]}"#;
const FIG: &str = r#"{"dimension": 2, "vertices": [["-1/2", "-1/4"], ["7/2", "3/4"], ["3/2", "11/4"]]}"#;
const SQUARE: &str = r#"{"dimension": 2, "vertices": [[-1, -1], [1, -1], [-1, 1], [1, 1]], "edges": [[0, 1], [0, 2], [1, 3], [2, 3]]}"#;
const OCTAHEDRON: &str =
    r#"{"dimension": 3, "vertices": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]}"#;

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }
}

fn ehrhart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrhart")).args(args).env_remove("EHRHART_SEED").output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn error_json(o: &Output) -> Value {
    let text = String::from_utf8_lossy(&o.stderr);
    assert_eq!(text.trim_end().lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn count_triangle() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let o = ehrhart(&["count", "--input", s(&tri), "--t", "1", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["count"], "3");
    assert_eq!(v["t"], "1");
    assert_eq!(v["z"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic_and_seed_comes_from_environment() {
    let d = Dir::new();
    let fig = d.file("fig.json", FIG);
    let a = ehrhart(&["count", "--input", s(&fig), "--t", "7/4", "--seed", "5"]);
    let b = ehrhart(&["count", "--input", s(&fig), "--t", "7/4", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(["count", "--input", s(&fig), "--t", "7/4"])
        .env("EHRHART_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    let threaded = ehrhart(&["count", "--input", s(&fig), "--t", "7/4", "--seed", "5", "--threads", "3"]);
    assert_eq!(threaded.stdout, a.stdout);
}

#[test]
fn explicit_z_overrides_seed() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let v = json(&ehrhart(&["count", "--input", s(&tri), "--t", "2", "--z", "-3,5"]));
    assert_eq!(v["z"], serde_json::json!(["-3", "5"]));
    assert_eq!(v["count"], "6");
    assert!(v["seed"].is_null());
}

#[test]
fn ehrhart_quasi_and_poly() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let v = json(&ehrhart(&["ehrhart", "--input", s(&tri), "--poly"]));
    assert_eq!(v["coefficients"], serde_json::json!(["1", "3/2", "1/2"]));
    let half = d.file("half.json", r#"{"dimension": 2, "vertices": [[0,0],["1/2",0],[0,"1/2"],["1/2","1/2"]]}"#);
    let v = json(&ehrhart(&["ehrhart", "--input", s(&half), "--quasi"]));
    assert_eq!(v["period"], 2);
    assert_eq!(v["pieces"], serde_json::json!([["1", "1", "1/4"], ["1/4", "1/2", "1/4"]]));
    let o = ehrhart(&["ehrhart", "--input", s(&half), "--poly"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "input");
}

#[test]
fn moments_output() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let v = json(&ehrhart(&["moments", "--input", s(&tri), "--m", "1", "--t", "1", "--z", "1,1"]));
    assert_eq!(v["moment"], "2");
    assert!(v["coefficients"].is_null());
    let v = json(&ehrhart(&["moments", "--input", s(&tri), "--m", "2", "--t", "3", "--z", "1,2"]));
    let oracle = json(&ehrhart(&["oracle", "--input", s(&tri), "--t", "3", "--m", "2", "--z", "1,2"]));
    assert_eq!(v["moment"], oracle["moment"]);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_passes_on_examples() {
    let d = Dir::new();
    for (name, body) in [("tri.json", TRIANGLE), ("fig.json", FIG), ("square.json", SQUARE)] {
        let p = d.file(name, body);
        let o = ehrhart(&["verify", "--input", s(&p), "--seeds", "1,2,3"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let reports = json(&o);
        let reports = reports.as_array().unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r["pass"] == true));
    }
}

#[test]
fn verify_rejects_bad_seed_list() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let o = ehrhart(&["verify", "--input", s(&tri), "--seeds", "1,x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let d = Dir::new();
    let oct = d.file("oct.json", OCTAHEDRON);
    let o = ehrhart(&["count", "--input", s(&oct), "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "not_simple");
    assert!(o.stdout.is_empty());

    let bad = d.file("bad.json", "{\"dimension\": 2, \"vertices\": ");
    assert_eq!(ehrhart(&["count", "--input", s(&bad), "--t", "1"]).status.code(), Some(2));

    let tri = d.file("tri.json", TRIANGLE);
    let o = ehrhart(&["count", "--input", s(&tri), "--t", "1", "--z", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "genericity");
    assert_eq!(ehrhart(&["count", "--input", s(&tri), "--t", "-1"]).status.code(), Some(2));
    assert_eq!(ehrhart(&["count", "--input", s(&tri), "--t", "1", "--z", "1,2,3"]).status.code(), Some(2));
    assert_eq!(ehrhart(&["count", "--input", "/nonexistent.json", "--t", "1"]).status.code(), Some(2));
    assert_eq!(ehrhart(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ehrhart(&["orbits", "--input", s(&tri), "--vertex", "3"]).status.code(), Some(2));
}

#[test]
fn resource_guard_exits_three() {
    let d = Dir::new();
    let sq = d.file("square.json", SQUARE);
    let o = ehrhart(&["oracle", "--input", s(&sq), "--t", "100000"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(error_json(&o)["error"], "resource");
}

#[test]
fn oracle_counts() {
    let d = Dir::new();
    let tri = d.file("tri.json", TRIANGLE);
    let v = json(&ehrhart(&["oracle", "--input", s(&tri), "--t", "3", "--open"]));
    assert_eq!(v["count"], "1");
    assert_eq!(v["mode"], "open");
    let v = json(&ehrhart(&["oracle", "--input", s(&tri), "--t", "2"]));
    assert_eq!(v["count"], "6");
}

#[test]
fn barnes_polynomial_output() {
    let v = json(&ehrhart(&["barnes", "--k", "2", "--a", "1"]));
    assert_eq!(v["coefficients"], serde_json::json!(["1/6", "-1", "1"]));
    let v = json(&ehrhart(&["barnes", "--k", "1", "--a", "-1/2,3"]));
    assert_eq!(v["number"], "5/6");
    assert_eq!(ehrhart(&["barnes", "--k", "1", "--a", "0,3"]).status.code(), Some(2));
}

#[test]
fn decimal_goes_to_stderr_only() {
    let d = Dir::new();
    let fig = d.file("fig.json", FIG);
    let plain = ehrhart(&["count", "--input", s(&fig), "--t", "3"]);
    let dec = ehrhart(&["count", "--input", s(&fig), "--t", "3", "--decimal", "4"]);
    assert_eq!(plain.stdout, dec.stdout);
    assert!(String::from_utf8_lossy(&dec.stderr).contains("count ~"));
}

#[test]
fn orbits_of_the_rational_triangle() {
    let d = Dir::new();
    let fig = d.file("fig.json", FIG);
    let v = json(&ehrhart(&["orbits", "--input", s(&fig), "--vertex", "0"]));
    assert_eq!(v["orbits"], 2);
    assert_eq!(v["lengths"], serde_json::json!([5, 5]));
    assert_eq!(v["periods"], serde_json::json!([20, 20]));
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn flow_csv_rows() {
    let d = Dir::new();
    let fig = d.file("fig.json", FIG);
    let out = d.0.path().join("flow.csv");
    let o = ehrhart(&[
        "flow", "--input", s(&fig), "--vertex", "0", "--t-start", "0", "--t-end", "1/4", "--steps", "25", "--out", s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("t,point_index,x1,x2"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 26 * 10);
    assert_eq!(rows[0][0], "0");
    assert_eq!(rows.last().unwrap()[0], "1/4");
    assert_eq!(rows[10][0], "1/100");

    let o = ehrhart(&["flow", "--input", s(&fig), "--vertex", "1", "--t-start", "1/3", "--t-end", "2", "--steps", "0"]);
    let rows = csv_rows(&String::from_utf8_lossy(&o.stdout));
    assert!(rows.iter().all(|r| r[0] == "1/3"));
    assert_eq!(ehrhart(&["flow", "--input", s(&fig), "--vertex", "7"]).status.code(), Some(2));
}

#[test]
fn integer_vertex_flow_returns_at_integer_times() {
    let d = Dir::new();
    let skew = d.file("skew.json", r#"{"dimension": 2, "vertices": [[0,0],[1,0],[1,2]]}"#);
    for vertex in ["0", "1", "2"] {
        let o = ehrhart(&["flow", "--input", s(&skew), "--vertex", vertex, "--t-start", "0", "--t-end", "3", "--steps", "3"]);
        let rows = csv_rows(&String::from_utf8_lossy(&o.stdout));
        let mut by_t: std::collections::BTreeMap<String, Vec<Vec<String>>> = Default::default();
        for r in rows {
            by_t.entry(r[0].clone()).or_default().push(r[2..].to_vec());
        }
        assert_eq!(by_t.len(), 4);
        let mut sets: Vec<Vec<Vec<String>>> = by_t
            .into_values()
            .map(|mut v| {
                v.sort();
                v
            })
            .collect();
        sets.dedup();
        assert_eq!(sets.len(), 1, "vertex {vertex}");
    }
}

#[test]
fn integer_vertex_flow_moves_between_integer_times() {
    let d = Dir::new();
    let skew = d.file("skew.json", r#"{"dimension": 2, "vertices": [[0,0],[1,0],[1,2]]}"#);
    let o = ehrhart(&["flow", "--input", s(&skew), "--vertex", "1", "--t-start", "0", "--t-end", "1/4", "--steps", "1"]);
    let rows = csv_rows(&String::from_utf8_lossy(&o.stdout));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][2..], ["0".to_string(), "0".to_string()]);
    assert_eq!(rows[1][2..], ["-1/4".to_string(), "0".to_string()]);
}
