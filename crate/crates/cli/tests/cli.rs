use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use expander_ledger::codes::alist::write_alist;
use expander_ledger::codes::library;
use expander_ledger::codes::ParityCheckMatrix;
use expander_ledger::generators;
use expander_ledger::graph::io::write_edge_list;
use expander_ledger::Graph;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_expander-ledger"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write_code(dir: &Path, name: &str, h: &ParityCheckMatrix) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, write_alist(h)).unwrap();
    p
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, write_edge_list(g)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn params_of_hamming_and_repetition() {
    let dir = tempfile::tempdir().unwrap();
    let ham = write_code(dir.path(), "ham.alist", &library::hamming74());
    let v = json(&run(&["params", s(&ham)]));
    assert_eq!(v["schema"], "expander-ledger/1");
    assert_eq!(v["type"], "code-params");
    assert_eq!(
        (
            v["result"]["n"].as_u64(),
            v["result"]["k"].as_u64(),
            v["result"]["d"].as_u64()
        ),
        (Some(7), Some(4), Some(3))
    );

    let rep = write_code(dir.path(), "rep5.alist", &library::repetition(5));
    let v = json(&run(&["params", s(&rep)]));
    assert_eq!(
        (
            v["result"]["n"].as_u64(),
            v["result"]["k"].as_u64(),
            v["result"]["d"].as_u64()
        ),
        (Some(5), Some(1), Some(5))
    );
    assert_eq!(v["result"]["d_mode"], "exact");
}

#[test]
fn css_params_from_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let steane = library::steane();
    let hx = write_code(dir.path(), "hx.alist", &steane.hx);
    let hz = write_code(dir.path(), "hz.alist", &steane.hz);
    let v = json(&run(&["params", s(&hx), "--hz", s(&hz)]));
    assert_eq!(
        (v["result"]["k"].as_u64(), v["result"]["d"].as_u64()),
        (Some(1), Some(3))
    );
    let v = json(&run(&["params", s(&hx), "--quantum"]));
    assert_eq!(v["result"]["d"].as_u64(), Some(3));
}

#[test]
fn truncated_file_exits_two_and_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_alist(&library::hamming74());
    let cut: String = text.lines().take(6).map(|l| format!("{l}\n")).collect();
    let p = dir.path().join("trunc.alist");
    std::fs::write(&p, cut).unwrap();
    let out = run(&["params", s(&p)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 7"), "{err}");
}

#[test]
fn missing_file_and_bad_rational_exit_two() {
    assert_eq!(run(&["params", "/nonexistent/x.alist"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "p.txt", &generators::path(6));
    assert_eq!(
        run(&["partition", s(&g), "--m", "2", "--eps", "0.5"]).status.code(),
        Some(2)
    );
}

#[test]
fn bpt_on_rep4() {
    let dir = tempfile::tempdir().unwrap();
    let rep = write_code(dir.path(), "rep4.alist", &library::repetition(4));
    let out_dir = dir.path().join("out");
    let v = json(&run(&["construct-bpt", s(&rep), "--dim", "2", "--out", s(&out_dir)]));
    let r = &v["result"];
    let delta = r["delta"].as_u64().unwrap();
    assert_eq!(r["verification"]["lifted"]["k"].as_u64(), Some(1));
    assert!(r["verification"]["lifted"]["d"].as_u64().unwrap() >= 4 * delta);
    assert_eq!(r["verification"]["locality"]["ok"], true);
    assert_eq!(r["verification"]["ok"], true);
    let csv = std::fs::read_to_string(out_dir.join("coords.csv")).unwrap();
    assert!(csv.starts_with("bit_id,x0,x1\n"));
    assert_eq!(csv.lines().count() as u64, r["n_prime"].as_u64().unwrap() + 1);
    assert!(out_dir.join("lifted.alist").exists());
}

#[test]
fn partition_of_disjoint_cliques_cuts_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let g = generators::disjoint_union(&vec![generators::complete(5); 4]);
    let p = write_graph(dir.path(), "cliques.txt", &g);
    let v = json(&run(&["partition", s(&p), "--m", "5", "--eps", "1/10"]));
    assert_eq!(v["type"], "partition-certificate");
    assert_eq!(v["result"]["crossing_edges"].as_array().unwrap().len(), 0);
    assert_eq!(v["result"]["blocks"].as_array().unwrap().len(), 4);
}

#[test]
fn partition_reports_verified_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_graph(dir.path(), "k12.txt", &generators::complete(12));
    let v = json(&run(&["partition", s(&p), "--m", "3", "--eps", "1/2", "--theorem"]));
    assert_eq!(v["type"], "expander-obstruction");
    assert_eq!(v["result"]["verified"], true);
}

#[test]
fn extract_on_repetition_code_covers_half_of_k() {
    let dir = tempfile::tempdir().unwrap();
    for n in [4, 9] {
        let rep = write_code(dir.path(), "rep.alist", &library::repetition(n));
        let v = json(&run(&["extract", s(&rep)]));
        let r = &v["result"];
        let k = r["params"]["k"].as_u64().unwrap();
        assert!(r["total"].as_u64().unwrap() >= k.div_ceil(2));
        let sum: usize = r["expanders"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["vertices"].as_array().unwrap().len())
            .sum();
        assert_eq!(sum as u64, r["total"].as_u64().unwrap());
    }
}

#[test]
fn dichotomy_concentrate_separator_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let code = write_code(
        dir.path(),
        "ham.alist",
        &library::direct_sum(&library::hamming74(), &library::hamming74()),
    );
    let v = json(&run(&["dichotomy", s(&code), "--m", "2", "--eps", "1/8"]));
    assert_ne!(v["result"]["verdict"], "violation");

    let g = write_graph(dir.path(), "tail.txt", &generators::clique_with_tail(8, 8));
    let v = json(&run(&["concentrate", s(&g), "--m", "6", "--eps", "1/2"]));
    assert_eq!(v["result"]["outcome"], "extracted");

    let v = json(&run(&["separator", s(&g), "--eps", "1/2"]));
    assert_eq!(v["result"]["outcome"], "separator");
}

#[test]
fn immersion_writes_its_files() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.txt");
    let out = run(&["gen-graph", "--seed", "3", "--out", s(&host), "regular", "200", "3"]);
    assert!(out.status.success());
    let code = write_code(dir.path(), "ham.alist", &library::hamming74());
    let out_dir = dir.path().join("imm");
    let v = json(&run(&["construct-immersion", s(&code), s(&host), "--out", s(&out_dir)]));
    assert_eq!(v["result"]["verification"]["ok"], true);
    assert_eq!(v["result"]["verification"]["lifted"]["k"].as_u64(), Some(4));
    let imm: Value = serde_json::from_str(&std::fs::read_to_string(out_dir.join("immersion.json")).unwrap()).unwrap();
    assert_eq!(imm["result"]["X"].as_object().unwrap().len(), 10);
    assert!(std::fs::read_to_string(out_dir.join("host_map.csv"))
        .unwrap()
        .starts_with("bit_id,host_vertex\n"));
}

#[test]
fn generators_are_seeded() {
    let a = run(&["gen-ldpc", "--n", "12", "--seed", "5"]);
    let b = run(&["gen-ldpc", "--n", "12", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen-graph", "--seed", "1", "gnp", "10", "0.5"]);
    let d = run(&["gen-graph", "--seed", "2", "gnp", "10", "0.5"]);
    assert_ne!(c.stdout, d.stdout);
}
