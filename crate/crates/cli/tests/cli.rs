use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gzeta"))
        .args(args)
        .output()
        .expect("gzeta runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn generate(dir: &TempDir, name: &str, spec: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(spec);
    args.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = gzeta(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_writes_edge_list() {
    let o = gzeta(&["gen", "cycle", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4 4\n0 1\n0 3\n1 2\n2 3\n");

    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "p.g", &["petersen"]);
    let text = fs::read_to_string(path).unwrap();
    assert!(text.starts_with("10 15\n"));
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn gen_random_regular_is_seeded() {
    let a = gzeta(&[
        "gen",
        "random-regular",
        "20",
        "3",
        "--min-girth",
        "5",
        "--seed",
        "9",
    ]);
    let b = gzeta(&[
        "gen",
        "random-regular",
        "20",
        "3",
        "--min-girth",
        "5",
        "--seed",
        "9",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(gzeta(&["gen", "random-regular", "5", "3"]).status.code(), Some(2));
}

#[test]
fn info_reports_stats() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "h.g", &["heawood"]);
    let v = json(&gzeta(&["--json", "info", p(&path)]));
    assert_eq!(v["vertex_count"], 14);
    assert_eq!(v["edge_count"], 21);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["regular_degree"], 3);
    assert_eq!(v["connected"], true);
}

#[test]
fn matrix_export() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "c3.g", &["cycle", "3"]);
    let o = gzeta(&["matrix", p(&path), "--which", "A"]);
    assert_eq!(stdout(&o), "0 1 1\n1 0 1\n1 1 0\n");

    let v = json(&gzeta(&["matrix", p(&path), "--which", "U", "--format", "json"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    // every vertex of C3 has degree 2, so U is a 0/1 permutation matrix
    for row in rows {
        let ones = row.as_array().unwrap().iter().filter(|x| *x == "1").count();
        assert_eq!(ones, 1);
    }
    assert_eq!(
        gzeta(&["matrix", p(&path), "--which", "X"]).status.code(),
        Some(2)
    );
}

#[test]
fn ihara_of_triangle() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "c3.g", &["cycle", "3"]);
    for kind in ["ihara-edge", "ihara-bass"] {
        let o = gzeta(&["zeta", p(&path), "--kind", kind]);
        assert_eq!(stdout(&o).trim(), "1 0 0 -2 0 0 1");
    }
    let v = json(&gzeta(&["--json", "zeta", p(&path), "--kind", "ihara-bass"]));
    assert_eq!(v["poly"][3], "-2");
}

#[test]
fn z3_matches_closed_form() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "p.g", &["petersen"]);
    let direct = gzeta(&["zeta", p(&path), "--kind", "z3"]);
    let closed = gzeta(&["zeta", p(&path), "--kind", "z3-closed"]);
    assert!(direct.status.success());
    assert_eq!(direct.stdout, closed.stdout);
    assert!(stdout(&direct).starts_with("1 "));

    let k4 = generate(&dir, "k4.g", &["complete", "4"]);
    assert_eq!(
        gzeta(&["zeta", p(&k4), "--kind", "z3-closed"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let pet = generate(&dir, "p.g", &["petersen"]);
    let k4 = generate(&dir, "k4.g", &["complete", "4"]);

    let o = gzeta(&["--json", "verify", p(&pet), "--suite", "all", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_hold"], true);
    let labels: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["theorem"].as_str().unwrap())
        .collect();
    for suite in [
        "ren",
        "godsil-guo",
        "cube",
        "prop32",
        "bass",
        "thm51",
        "thm52",
        "cor53",
        "thm21",
        "thm22",
    ] {
        assert!(labels.contains(&suite), "{suite} missing from {labels:?}");
    }

    let o = gzeta(&["--json", "verify", p(&k4), "--suite", "cube"]);
    assert_eq!(o.status.code(), Some(1));
    let r = &json(&o)["reports"][0];
    assert_eq!(r["preconditions_met"], false);
    assert_eq!(r["identity_holds"], false);

    // K4 has girth 3, so the cube check is listed as skipped under `all`
    let o = gzeta(&["--json", "verify", p(&k4), "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let skipped = json(&o)["skipped"].to_string();
    assert!(skipped.contains("\"cube\""), "{skipped}");
}

#[test]
fn verify_named_regular_suite_on_irregular_graph_is_an_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("star.g");
    fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    assert_eq!(
        gzeta(&["verify", p(&path), "--suite", "cor53"]).status.code(),
        Some(2)
    );
}

#[test]
fn spectra_and_poles() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "p.g", &["petersen"]);
    let v = json(&gzeta(&["--json", "spectra", p(&path)]));
    assert_eq!(v["regular_degree"], 3);
    assert_eq!(v["spectral_radius_exact"], "10");
    assert_eq!(v["radius_of_convergence_exact"], "1/10");
    assert_eq!(v["paper_radius_claim_exact"], "1/29");
    let pairs = v["derived_pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 10);
    assert!(pairs
        .iter()
        .any(|d| d["exact_roots"] == serde_json::json!(["10", "2"])));

    let text = stdout(&gzeta(&["poles", p(&path)]));
    assert!(text.contains("1/10"));
    assert!(text.contains("-1/2"));

    let k4 = generate(&dir, "k4.g", &["complete", "4"]);
    assert_eq!(gzeta(&["spectra", p(&k4)]).status.code(), Some(2));
}

#[test]
fn cycles_counts_and_listing() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "c3.g", &["cycle", "3"]);
    let v = json(&gzeta(&[
        "--json",
        "cycles",
        p(&path),
        "--matrix",
        "edge",
        "--max-len",
        "6",
        "--list",
    ]));
    assert_eq!(v["N"], serde_json::json!([0, 0, 6, 0, 0, 6]));
    assert_eq!(v["prime_class_counts"], serde_json::json!([0, 0, 2, 0, 0, 0]));
    assert_eq!(v["prime_classes"].as_array().unwrap().len(), 2);
}

#[test]
fn json_output_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let path = generate(&dir, "p.g", &["petersen"]);
    for args in [
        vec!["--json", "spectra", p(&path)],
        vec!["--json", "zeta", p(&path), "--kind", "z3"],
        vec!["--json", "verify", p(&path), "--suite", "cube"],
    ] {
        assert_eq!(gzeta(&args).stdout, gzeta(&args).stdout, "{args:?}");
    }
}

#[test]
fn bad_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.g");
    fs::write(&bad, "3 2\n0 1\n").unwrap();
    let o = gzeta(&["info", p(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edges"));
    assert_eq!(gzeta(&["info", "/nonexistent/graph.g"]).status.code(), Some(2));
    assert_eq!(gzeta(&["frobnicate"]).status.code(), Some(2));
}
