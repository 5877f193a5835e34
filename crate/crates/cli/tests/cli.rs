use std::process::{Command, Output};

use serde_json::Value;

fn corona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = corona(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn k5_vertex_corona_theorem_spectrum() {
    let v = json(&[
        "spectrum",
        "--g1",
        "complete:5",
        "--g2",
        "empty:1",
        "--kind",
        "vertex",
        "--matrix",
        "A",
        "--method",
        "theorem",
    ]);
    let groups: Vec<(f64, u64)> = v["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| (g[0].as_f64().unwrap(), g[1].as_u64().unwrap()))
        .collect();
    let want = [(-3.0, 1), (-2.0, 4), (0.0, 10), (2.0, 4), (3.0, 1)];
    assert_eq!(groups.len(), want.len());
    for ((v, k), (wv, wk)) in groups.iter().zip(want) {
        assert!((v - wv).abs() < 1e-8);
        assert_eq!(*k, wk);
    }
    assert_eq!(v["values"].as_array().unwrap().len(), 20);
}

#[test]
fn verify_all_six_cases() {
    let o = corona(&[
        "verify",
        "--matrix",
        "all",
        "--kind",
        "both",
        "--g1",
        "complete:3",
        "--g2",
        "path:3",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 6);
    let order: Vec<&str> = reports.iter().map(|r| r["matrix"].as_str().unwrap()).collect();
    assert_eq!(order, ["A", "A", "L", "L", "Q", "Q"]);
    for r in &reports {
        assert_eq!(r["exact_match"], Value::Bool(true));
        assert!(r["residual"].as_f64().unwrap() <= 1e-8);
        assert_eq!(r["theorem"], r["oracle"]);
    }
}

#[test]
fn irregular_base_is_a_precondition_failure() {
    let o = corona(&[
        "charpoly", "--matrix", "A", "--method", "theorem", "--g1", "path:4", "--g2", "empty:1", "--kind", "vertex",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("REG_REQUIRED"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(corona(&["family", "wheel", "4"]).status.code(), Some(2));
    assert_eq!(corona(&["family", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(corona(&["spectrum", "--g1", "complete:3"]).status.code(), Some(2));
    assert_eq!(corona(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn theorem_report_shape() {
    let v = json(&[
        "charpoly",
        "--g1",
        "complete:5",
        "--g2",
        "empty:1",
        "--kind",
        "edge",
        "--matrix",
        "A",
        "--method",
        "theorem",
    ]);
    assert_eq!(v["oracle_match"], Value::Bool(true));
    let expanded = v["expanded"].as_array().unwrap();
    assert_eq!(expanded.len(), 26);
    assert_eq!(expanded[25], Value::String("1".into()));
    let total: u64 = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| (f[0].as_array().unwrap().len() as u64 - 1) * f[1].as_u64().unwrap())
        .sum();
    assert_eq!(total, 25);
    assert_eq!(v["spectrum"]["values"].as_array().unwrap().len(), 25);
}

#[test]
fn direct_and_theorem_charpoly_agree() {
    let args = |m: &'static str| {
        [
            "charpoly",
            "--g1",
            "cycle:4",
            "--g2",
            "complete:2",
            "--kind",
            "vertex",
            "--matrix",
            "L",
            "--method",
            m,
        ]
    };
    let d = json(&args("direct"));
    let t = json(&args("theorem"));
    assert_eq!(d["coeffs"], t["expanded"]);
}

#[test]
fn edge_list_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("corona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = corona(&["family", "complete_bipartite", "2", "3"]);
    let text = stdout(&o);
    let path = dir.join("k23.txt");
    std::fs::write(&path, &text).unwrap();
    let again = corona(&["family", "complement_of", "complement_of:complete_bipartite:2,3"]);
    assert_eq!(stdout(&again), text);

    let a = json(&[
        "spectrum",
        "--g1",
        path.to_str().unwrap(),
        "--g2",
        "empty:1",
        "--kind",
        "edge",
    ]);
    let b = json(&[
        "spectrum",
        "--g1",
        "complete_bipartite:2,3",
        "--g2",
        "empty:1",
        "--kind",
        "edge",
    ]);
    assert_eq!(a, b);

    let corona_text = stdout(&corona(&[
        "corona",
        "--g1",
        path.to_str().unwrap(),
        "--g2",
        "path:2",
        "--kind",
        "vertex",
    ]));
    let cpath = dir.join("corona.txt");
    std::fs::write(&cpath, &corona_text).unwrap();
    let first = corona_text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(first, "21 27");
    let o = corona(&[
        "spectrum",
        "--g1",
        cpath.to_str().unwrap(),
        "--g2",
        "empty:1",
        "--kind",
        "vertex",
        "--json",
    ]);
    assert!(o.status.success());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corona_json_has_labeling() {
    let v = json(&["corona", "--g1", "cycle:3", "--g2", "complete:2", "--kind", "edge"]);
    assert_eq!(v["graph"]["n"], 3 + 3 * 3);
    assert_eq!(v["labeling"]["original"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["labeling"]["inserted"], serde_json::json!([3, 4, 5]));
    assert_eq!(v["labeling"]["copies"][1], serde_json::json!([8, 9]));
}

#[test]
fn invariants_report() {
    let v = json(&["invariants", "--g1", "cycle:4", "--g2", "empty:1", "--kind", "vertex"]);
    assert_eq!(v["spanning_trees"]["formula"], "8");
    assert_eq!(v["spanning_trees"]["oracle"], "8");
    assert_eq!(v["match"], Value::Bool(true));
}

#[test]
fn integral_family_report() {
    let v = json(&["integral-family", "edge_complete", "1"]);
    assert_eq!((v["n1"].as_u64(), v["n2"].as_u64()), (Some(5), Some(1)));
    assert_eq!(v["integral"], Value::Bool(true));
    assert_eq!(
        corona(&["integral-family", "vertex_complete", "2", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn cospectral_commands() {
    let v = json(&["cospectral-search", "--n", "5", "--matrix", "A"]);
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!(pairs[0]["charpoly"], serde_json::json!(["0", "0", "0", "-4", "0", "1"]));
    let v = json(&["cospectral-search", "--n", "4", "--matrix", "A"]);
    assert!(v["pairs"].as_array().unwrap().is_empty());

    let o = corona(&[
        "cospectral-verify",
        "--first",
        "complete_bipartite:1,4",
        "--second",
        "complement_of:complete_bipartite:1,4",
        "--h",
        "complete:2",
        "--kind",
        "vertex",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("HYPOTHESIS_NOT_MET"));
    let o = corona(&[
        "cospectral-verify",
        "--first",
        "cycle:5",
        "--second",
        "cycle:5",
        "--h",
        "path:3",
        "--kind",
        "edge",
    ]);
    assert_eq!(o.status.code(), Some(0));
}
