//! End-to-end tests of the binary: exit-code contract, canonical instance
//! files, reproducible reports and the scan artifacts.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU64, Ordering};

static COUNTER: AtomicU64 = AtomicU64::new(0);

fn scratch(name: &str) -> PathBuf {
    let id = COUNTER.fetch_add(1, Ordering::SeqCst);
    std::env::temp_dir().join(format!(
        "hypercover-test-{}-{id}-{name}",
        std::process::id()
    ))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_instance_a() -> PathBuf {
    let path = scratch("a.json");
    fs::write(
        &path,
        r#"{"n":4,"k":2,"r":"2/1","edges":[[0,1],[1,2],[2,3],[0,3]]}"#,
    )
    .unwrap();
    path
}

fn build_instance_b() -> PathBuf {
    let path = scratch("b.json");
    let out = run(&[
        "instance",
        "--clique",
        "5",
        "3",
        "2",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    path
}

#[test]
fn instance_clique_builds_the_expected_file() {
    let path = build_instance_b();
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["v"], "v1");
    assert_eq!(value["n"], 10);
    assert_eq!(value["k"], 3);
    assert_eq!(value["r"], "2/1");
    assert_eq!(value["edges"].as_array().unwrap().len(), 10);
    assert_eq!(value["edges"][0], serde_json::json!([0, 1, 2]));
}

#[test]
fn instance_canonicalization_is_idempotent() {
    // Scrambled edge and index order in, canonical bytes out.
    let messy = scratch("messy.json");
    fs::write(
        &messy,
        r#"{"k":2,"edges":[[3,2],[1,0],[2,1],[3,0]],"n":4,"r":"4/2"}"#,
    )
    .unwrap();
    let once = run(&["instance", "--edges", messy.to_str().unwrap()]);
    assert!(once.status.success());
    let canon = scratch("canon.json");
    fs::write(&canon, &once.stdout).unwrap();
    let twice = run(&["instance", "--edges", canon.to_str().unwrap()]);
    assert_eq!(
        once.stdout, twice.stdout,
        "canonicalization must be idempotent"
    );
    let text = String::from_utf8(once.stdout).unwrap();
    assert!(text.contains("\"2/1\""), "r must be reduced: {text}");
}

#[test]
fn instance_rejects_malformed_json() {
    let path = scratch("bad.json");
    fs::write(&path, "{\"n\": 4, ").unwrap();
    let out = run(&["instance", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error"), "stderr should explain: {err}");
    assert!(err.contains("line"), "parse errors carry line info: {err}");
}

#[test]
fn cover_flags_analytic_mode_for_huge_t() {
    let path = write_instance_a();
    let out = run(&[
        "cover",
        "--instance",
        path.to_str().unwrap(),
        "--s",
        "1",
        "--t",
        "100000000",
        "--L",
        "2*e",
        "--trials",
        "100",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["weight"]["analytic_only"], true);
    assert!(report["coverage"].is_null());
    assert!(report["weight"]["conditional"].is_null());
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let path = build_instance_b();
    let path = path.to_str().unwrap();
    // Pairwise condition: lhs at y = 1 is ~4.104, so L = 2 passes (8 >= 4.104)
    // and L = 1.5 fails (3.375 < 4.104).
    let pass = run(&["check", "--instance", path, "--thm", "two", "--L", "2.0"]);
    assert_eq!(pass.status.code(), Some(0));
    let report = stdout_json(&pass);
    assert_eq!(report["report"]["overall"], "Pass");
    assert_eq!(report["v"], "v1");

    let fail = run(&["check", "--instance", path, "--thm", "two", "--L", "1.5"]);
    assert_eq!(fail.status.code(), Some(1));

    // Near the threshold with a tiny empirical sample the widened verdict
    // is inconclusive.
    let inconclusive = run(&[
        "check",
        "--instance",
        path,
        "--thm",
        "two",
        "--L",
        "1.6014",
        "--mode",
        "empirical",
        "--trials",
        "50",
        "--seed",
        "5",
    ]);
    assert_eq!(
        inconclusive.status.code(),
        Some(2),
        "stdout: {}",
        String::from_utf8_lossy(&inconclusive.stdout)
    );
}

#[test]
fn check_thm_one_vacuous_for_single_draws() {
    let path = build_instance_b();
    let out = run(&[
        "check",
        "--instance",
        path.to_str().unwrap(),
        "--thm",
        "one",
        "--s",
        "1",
        "--L",
        "2*e",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cover_reports_are_byte_identical_for_a_seed() {
    let path = write_instance_a();
    let args = [
        "cover",
        "--instance",
        path.to_str().unwrap(),
        "--s",
        "1",
        "--t",
        "5",
        "--L",
        "2*e",
        "--trials",
        "2000",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report = stdout_json(&a);
    assert!(report["coverage"]["coverage"].as_f64().unwrap() >= 0.5);
    assert!(report["weight"]["closed_form"].as_bool().unwrap());
    let c = run(&[
        "cover",
        "--instance",
        path.to_str().unwrap(),
        "--s",
        "1",
        "--t",
        "5",
        "--L",
        "2*e",
        "--trials",
        "2000",
        "--seed",
        "8",
    ]);
    assert_ne!(a.stdout, c.stdout, "different seeds must differ");
}

#[test]
fn cover_streams_traces_as_json_lines() {
    let path = write_instance_a();
    let traces = scratch("traces.jsonl");
    let out = run(&[
        "cover",
        "--instance",
        path.to_str().unwrap(),
        "--s",
        "2",
        "--t",
        "3",
        "--L",
        "6.0",
        "--trials",
        "25",
        "--seed",
        "3",
        "--traces",
        traces.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = fs::read_to_string(&traces)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 25);
    let first: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(first["trial"], 0);
    assert_eq!(first["sizes"].as_array().unwrap().len(), 3);
    assert!(first["covered"].is_boolean());
}

#[test]
fn s1_report_matches_the_construction() {
    let path = write_instance_a();
    let out = run(&["s1", "--instance", path.to_str().unwrap(), "--L", "2*e"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["report"]["t"], 5);
    assert_eq!(report["report"]["report"]["overall"], "Pass");
    assert_eq!(report["report"]["hypothesis_ok"], true);
}

#[test]
fn pairs_closed_form_and_enumeration_agree() {
    let by_clique = run(&["pairs", "--clique", "5", "3", "2"]);
    let path = build_instance_b();
    let by_instance = run(&["pairs", "--instance", path.to_str().unwrap()]);
    let a = stdout_json(&by_clique);
    let b = stdout_json(&by_instance);
    assert_eq!(a["law"]["entries"], b["law"]["entries"]);
    assert_eq!(a["law"]["entries"][0]["exact"], "3/10");
}

#[test]
fn chain_emits_exact_states() {
    let out = run(&["chain", "--clique", "5", "3", "2", "--s", "2"]);
    let report = stdout_json(&out);
    assert_eq!(report["states"][0]["pmf"][0]["size"], 3);
    assert_eq!(report["states"][0]["pmf"][0]["mass"], "1/1");
    assert_eq!(report["ytilde_laws"][1]["entries"][1]["exact"], "3/5");
}

#[test]
fn regimes_emits_csv_json_and_plot_data() {
    let csv = scratch("scan.csv");
    let json = scratch("scan.json");
    let plot = scratch("plot.csv");
    let out = run(&[
        "regimes",
        "--n-grid",
        "1e3:1e6:3",
        "--kt",
        "3",
        "--l",
        "2",
        "--L",
        "1.01",
        "--r-points",
        "16",
        "--csv",
        csv.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
        "--emit-plot-data",
        plot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv_text = fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("n_tilde,r,lemma52_case1,lemma52_case2,lemma53,covered\n"));
    assert!(csv_text.lines().count() > 3 * 15);
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(summary["vacuous"], false);
    assert!(summary["rows"][0]["gap"].as_bool().unwrap());
    let plot_text = fs::read_to_string(&plot).unwrap();
    assert!(plot_text.starts_with("n_tilde,r,margin\n"));
}

#[test]
fn regimes_vacuous_interval_is_flagged() {
    let json = scratch("vacuous.json");
    let out = run(&[
        "regimes",
        "--n-grid",
        "1e3:1e6:3",
        "--kt",
        "3",
        "--l",
        "2",
        "--L",
        "2^12*e^16",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(summary["vacuous"], true);
    assert!(summary["first_meet_n"].is_u64());
    assert!(summary["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["gap"] == false));
}
