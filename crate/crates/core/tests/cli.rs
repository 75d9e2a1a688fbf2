mod common;

use std::fs;

use common::{path_str, radiolab, stdout_json};
use serde_json::Value;
use tempfile::TempDir;

fn write_family(dir: &TempDir, family: &str, m: &str, n: &str) -> (String, String) {
    let graph = dir.path().join(format!("{family}-{m}-{n}.txt"));
    let labels = dir.path().join(format!("{family}-{m}-{n}.json"));
    let g = radiolab(&["gen", "--family", family, "-m", m, "-n", n, "--out", path_str(&graph)]);
    assert_eq!(g.status.code(), Some(0));
    let l = radiolab(&["label", "--family", family, "-m", m, "-n", n, "--out", path_str(&labels)]);
    assert_eq!(l.status.code(), Some(0), "{}", String::from_utf8_lossy(&l.stderr));
    (path_str(&graph).to_owned(), path_str(&labels).to_owned())
}

fn vertex_count(edge_list: &[u8]) -> usize {
    let text = String::from_utf8_lossy(edge_list);
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn gen_orders() {
    let out = radiolab(&["gen", "--family", "path-wheel", "-m", "7", "-n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(vertex_count(&out.stdout), 56);
    let out = radiolab(&["gen", "--family", "path-star", "-m", "3", "-n", "7"]);
    assert_eq!(vertex_count(&out.stdout), 24);
}

#[test]
fn gen_below_hypothesis_is_input_error() {
    let out = radiolab(&["gen", "--family", "path-wheel", "-m", "2", "-n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m below theorem hypothesis"));
    let out = radiolab(&["gen", "--family", "path-wheel", "-m", "2", "-n", "7", "--experimental"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn label_outputs() {
    let out = radiolab(&["label", "--family", "path-friendship", "-m", "8", "-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["span"], 295);
    assert_eq!(v["certificate"]["certified"], true);
    assert_eq!(v["certificate"]["bound"], 295);

    let out = radiolab(&["label", "--family", "path-wheel", "-m", "7", "-n", "7"]);
    let v = stdout_json(&out);
    assert_eq!(v["span"], 206);
    assert_eq!(v["labels"]["24"], 0);
    assert_eq!(v["labels"].as_object().unwrap().len(), 56);
    assert_eq!(v["ordering"].as_array().unwrap().len(), 56);
}

#[test]
fn label_path_complete_has_no_construction() {
    let out = radiolab(&["label", "--family", "path-complete", "-m", "4", "-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn label_outside_hypothesis_reports_without_failing_early() {
    // P_3 x W_5 sits below the wheel range; the construction may or may not certify.
    let out = radiolab(&["label", "--family", "path-wheel", "-m", "3", "-n", "5", "--experimental"]);
    let code = out.status.code().unwrap();
    assert!(code == 0 || code == 3, "exit {code}");
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["within_hypothesis"], false);
    assert_eq!(code == 0, v["certificate"]["certified"] == true);
}

#[test]
fn verify_round_trip_and_corruption() {
    let dir = TempDir::new().unwrap();
    let (graph, labels) = write_family(&dir, "path-wheel", "7", "7");
    let out = radiolab(&["verify", "--graph", &graph, "--labeling", &labels]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["valid"], true);

    // x_1 = (u_7, v_1) has label 5; dropping it to 4 clashes with x_0 = (u_4, v_0).
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&labels).unwrap()).unwrap();
    v["labels"]["49"] = Value::from(4);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, v.to_string()).unwrap();
    let out = radiolab(&["verify", "--graph", &graph, "--labeling", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], false);
    let first = &report["violations"][0];
    assert_eq!((first["u"].as_u64(), first["v"].as_u64()), (Some(24), Some(49)));

    v["labels"].as_object_mut().unwrap().remove("10");
    fs::write(&bad, v.to_string()).unwrap();
    let out = radiolab(&["verify", "--graph", &graph, "--labeling", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_parse_error_is_input_error() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.txt");
    fs::write(&graph, "3\n0 1\n1 banana\n").unwrap();
    let labels = dir.path().join("l.json");
    fs::write(&labels, r#"{"labels":{"0":0,"1":1,"2":2},"span":2}"#).unwrap();
    let out = radiolab(&["verify", "--graph", path_str(&graph), "--labeling", path_str(&labels)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_explicit_and_auto() {
    let dir = TempDir::new().unwrap();
    let (graph, _) = write_family(&dir, "path-wheel", "8", "7");
    // (u_4, v_0) and (u_5, v_0).
    let out = radiolab(&["bound", "--graph", &graph, "--center", "24,32"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["bound"], 263);
    assert_eq!((v["p"].as_u64(), v["d"].as_u64(), v["k"].as_u64()), (Some(64), Some(9), Some(1)));

    let (graph7, _) = write_family(&dir, "path-wheel", "7", "7");
    let out = radiolab(&["bound", "--graph", &graph7, "--auto", "--max-center-size", "2"]);
    let v = stdout_json(&out);
    assert!(v["bound"].as_i64().unwrap() >= 206);

    let edge = dir.path().join("edge.txt");
    fs::write(&edge, "2\n0 1\n").unwrap();
    let out = radiolab(&["bound", "--graph", path_str(&edge), "--center", "0,1"]);
    assert_eq!(stdout_json(&out)["bound"], 1);
    let out = radiolab(&["bound", "--graph", path_str(&edge), "--center", "0,7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_small_and_budget() {
    let dir = TempDir::new().unwrap();
    let p3 = dir.path().join("p3.txt");
    fs::write(&p3, "3\n0 1\n1 2\n").unwrap();
    let out = radiolab(&["exact", "--graph", path_str(&p3)]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["rn"], 3);
    assert_eq!(v["status"]["kind"], "proved-optimal");

    // The witness round-trips through verify.
    let witness = dir.path().join("w.json");
    fs::write(&witness, &out.stdout).unwrap();
    let out = radiolab(&["verify", "--graph", path_str(&p3), "--labeling", path_str(&witness)]);
    assert_eq!(out.status.code(), Some(0));

    let (big, _) = write_family(&dir, "path-wheel", "7", "7");
    let out = radiolab(&["exact", "--graph", &big]);
    assert_eq!(out.status.code(), Some(2));
    let out = radiolab(&["exact", "--graph", &big, "--budget", "0.3"]);
    assert_eq!(out.status.code(), Some(4));
    let v = stdout_json(&out);
    let (lo, hi) = (v["status"]["lower"].as_u64().unwrap(), v["status"]["upper"].as_u64().unwrap());
    assert!(lo <= 206 && 206 <= hi, "[{lo}, {hi}]");
}

#[test]
fn mdst_report() {
    let dir = TempDir::new().unwrap();
    let (graph, _) = write_family(&dir, "path-wheel", "7", "7");
    let out = radiolab(&["mdst", "--graph", &graph, "--center", "24"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["kept_edges"].as_array().unwrap().len(), 55);
    assert_eq!(v["observation"]["levels_preserved"], true);
    assert_eq!(v["observation"]["total_preserved"], true);

    let out = radiolab(&["mdst", "--graph", &graph, "--center", "0,55"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_keeps_span() {
    let dir = TempDir::new().unwrap();
    let (graph, labels) = write_family(&dir, "path-wheel", "7", "7");
    let out = radiolab(&["reduce", "--graph", &graph, "--center", "24", "--labeling", &labels]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    let steps = v["steps"].as_array().unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s["span"] == 206 && s["certified"] == true));

    let out = radiolab(&["reduce", "--family", "path-wheel", "-m", "4", "-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["constant_span"], true);
}

#[test]
fn grid_all_certified() {
    let out = radiolab(&["grid", "path-wheel", "3..8", "7..10"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 24);
    for r in rows {
        assert_eq!(r["certified"], true);
        assert_eq!(r["span"], r["closed_form"]);
        assert_eq!(r["bound"], r["closed_form"]);
    }
    let out = radiolab(&["grid", "path-wheel", "8..3", "7..10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn threads_env_is_respected() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_radiolab"))
        .args(["grid", "path-star", "3..4", "7..8"])
        .env("RADIOLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(radiolab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(radiolab(&["bound", "--graph", "x", "--center", "0", "--auto"]).status.code(), Some(2));
    assert_eq!(radiolab(&["--help"]).status.code(), Some(0));
}
