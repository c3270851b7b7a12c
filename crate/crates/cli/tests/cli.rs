use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn sriso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sriso")).args(args).output().expect("spawn sriso")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn put(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, v.to_string()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn hollow_triangle() -> Value {
    json!({"vertices": ["x1", "x2", "x3"], "facets": [["x1", "x2"], ["x2", "x3"], ["x1", "x3"]]})
}

fn edge_map(fwd: [&str; 2], bwd: [&str; 2]) -> Value {
    json!({
        "field": "rational",
        "source": {"variables": ["x1", "x2"], "generators": ["x1*x2"]},
        "target": {"variables": ["y1", "y2"], "generators": ["y1*y2"]},
        "images": {"x1": fwd[0], "x2": fwd[1]},
        "inverse_images": {"y1": bwd[0], "y2": bwd[1]},
    })
}

#[test]
fn ideal_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "hollow.json", &hollow_triangle());
    let o = sriso(&["ideal", s(&f), "--kind", "sr", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generators"], json!(["x1*x2*x3"]));

    let o = sriso(&["ideal", s(&f), "--kind", "facet"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("3 generators"));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    assert_eq!(code(&sriso(&["ideal", s(&bad), "--kind", "sr"])), 2);
    assert_eq!(code(&sriso(&["ideal", s(&f), "--kind", "cubical"])), 2);
}

#[test]
fn ideal_isolated_vertex_policy() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "p3.json", &json!({"vertices": ["x1", "x2", "x3", "x4"], "edges": [["x1", "x2"], ["x2", "x3"]]}));
    let o = sriso(&["ideal", s(&g), "--kind", "edge"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("isolated"));
    assert_eq!(code(&sriso(&["ideal", s(&g), "--kind", "facet"])), 2);
}

#[test]
fn reconstruct_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "i.json", &json!({"variables": ["x1", "x2", "x3"], "generators": ["x1*x2", "x2*x3"]}));
    let out = dir.path().join("c.json");
    let o = sriso(&["reconstruct", s(&f), "--kind", "sr", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let c: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(c["facets"], json!([["x1", "x3"], ["x2"]]));

    let sq = put(&dir, "sq.json", &json!({"variables": ["x1"], "generators": ["x1^2"]}));
    assert_eq!(code(&sriso(&["reconstruct", s(&sq), "--kind", "sr"])), 2);
}

#[test]
fn check_map_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = put(&dir, "good.json", &edge_map(["y2", "3*y1"], ["1/3*x2", "x1"]));
    let o = sriso(&["check-map", s(&good)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(code(&sriso(&["check-map", s(&good), "--field", "101"])), 0);

    let not_inverse = put(&dir, "ni.json", &edge_map(["y2", "3*y1"], ["x2", "x1"]));
    let o = sriso(&["check-map", s(&not_inverse), "--json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], json!(false));

    assert_eq!(code(&sriso(&["check-map", s(&good), "--field", "100"])), 2);
}

#[test]
fn extract_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bundle = dir.path().join("b.json");
    let map = dir.path().join("m.json");
    let o = sriso(&[
        "gen",
        "--n",
        "6",
        "--kind",
        "sr",
        "--ops",
        "4",
        "--seed",
        "3",
        "--out",
        s(&bundle),
        "--map-out",
        s(&map),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = sriso(&["extract", s(&map), "--kind", "sr", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], json!(true));

    let constant = put(&dir, "c.json", &edge_map(["1 + y1", "y2"], ["x1 - 1", "x2"]));
    let o = sriso(&["extract", s(&constant), "--kind", "edge"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("lemma1"), "{}", stderr(&o));

    let unknown = put(&dir, "u.json", &edge_map(["y1 + z9", "y2"], ["x1", "x2"]));
    assert_eq!(code(&sriso(&["extract", s(&unknown), "--kind", "edge"])), 2);
    assert_eq!(code(&sriso(&["extract", s(&map)])), 2);
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = sriso(&["gen", "--n", "6", "--kind", "edge", "--ops", "4", "--seed", "7", "--out", s(out)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v: Value = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(v["seed"], json!(7));
    assert_eq!(v["trace"].as_array().unwrap().len(), 4);

    assert_eq!(code(&sriso(&["gen", "--n", "0", "--kind", "edge", "--out", s(&a)])), 2);
    assert_eq!(code(&sriso(&["gen", "--n", "4", "--kind", "edge"])), 2);
}

#[test]
fn oracle_exit_codes() {
    let dir = TempDir::new().unwrap();
    let v4 = ["x1", "x2", "x3", "x4"];
    let p4 = put(&dir, "p4.json", &json!({"vertices": v4, "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"]]}));
    let star = put(&dir, "star.json", &json!({"vertices": v4, "edges": [["x1", "x2"], ["x1", "x3"], ["x1", "x4"]]}));
    let o = sriso(&["oracle", s(&p4), s(&star)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "none");

    let rev = put(&dir, "rev.json", &json!({"vertices": v4, "edges": [["x4", "x3"], ["x3", "x2"], ["x2", "x1"]]}));
    let o = sriso(&["oracle", s(&p4), s(&rev), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isomorphic"], json!(true));

    let missing = dir.path().join("nope.json");
    assert_eq!(code(&sriso(&["oracle", s(&p4), s(&missing)])), 2);
}
