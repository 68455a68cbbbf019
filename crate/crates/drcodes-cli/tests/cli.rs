//! End-to-end tests of the drcodes binary: exit statuses, report content,
//! and the JSON round-trip guarantee.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("valid json report")
}

/// Writes a temp file with a name unique to the calling test.
fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("drcodes-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file");
    path
}

fn hamming74_file() -> PathBuf {
    // Codewords of the [7,4] Hamming code: supports whose parity-check
    // syndrome (XOR of 1-based positions) vanishes.
    let mut lines = String::from("hamming 7 2\n");
    for x in 0u32..128 {
        let syndrome = (0..7).filter(|i| x >> i & 1 == 1).fold(0, |s, i| s ^ (i + 1));
        if syndrome == 0 {
            for i in 0..7 {
                lines.push(if x >> i & 1 == 1 { '1' } else { '0' });
            }
            lines.push('\n');
        }
    }
    temp_file("hamming74.code", &lines)
}

#[test]
fn classify_hamming74_json_aggregate() {
    let code = hamming74_file();
    let out = run(&["classify", "--code", code.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cr"], true);
    assert_eq!(v["rho"], 1);
    assert_eq!(v["spectrum"], serde_json::json!(["7", "-1"]));
    assert_eq!(v["quotient_matrix"], serde_json::json!([[0, 0, 7], [1, 6, 0]]));
    assert_eq!(v["sstar"], serde_json::json!([4]));
    assert_eq!(v["strength"], 3);
    assert_eq!(v["qpoly"]["flag"], true);
    assert_eq!(v["leonard"]["flag"], true);
    assert_eq!(v["harmonic_t"], 4);
    assert_eq!(v["arithmetic_t"], "8");
    assert_eq!(v["filters"], serde_json::json!({"lloyd": true, "gap": true, "parity": true}));
    assert_eq!(v["expansions"]["lambda"], serde_json::json!(["1/7", "6/7"]));
}

#[test]
fn classify_json_round_trips() {
    let code = hamming74_file();
    let out = run(&["classify", "--code", code.to_str().unwrap(), "--format", "json"]);
    let text = stdout_of(&out);
    let v: Value = serde_json::from_str(&text).unwrap();
    // Key order is stable, so re-serializing reproduces the document.
    let mut reprinted = serde_json::to_string_pretty(&v).unwrap();
    reprinted.push('\n');
    assert_eq!(text, reprinted);
}

#[test]
fn feasibility_gap_violation_exits_1() {
    let out = run(&["feasibility", "--graph", "hamming 7 2", "--sstar", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("gap"), "stderr names the violated filter: {err}");
}

#[test]
fn feasibility_quotient_of_perfect_code_passes() {
    let out = run(&[
        "feasibility",
        "--graph",
        "hamming 7 2",
        "--quotient",
        "0,0,7;1,6,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["feasible"], true);
    assert_eq!(v["sstar"], serde_json::json!([4]));
    assert_eq!(v["spectrum"], serde_json::json!(["7", "-1"]));
}

#[test]
fn feasibility_lloyd_violation_exits_1() {
    // Row sums give valency 6, but {6,0,-2} with these off-diagonals does
    // not embed: eigenvalues are 6, 2-ish values off the H(6,2) spectrum.
    let out = run(&[
        "feasibility",
        "--graph",
        "hamming 6 2",
        "--quotient",
        "0,1,5;1,4,1;5,1,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["feasible"], false);
    assert_eq!(v["filters"]["lloyd"], false);
}

#[test]
fn generate_rifa_zinoviev_4_2() {
    let out = run(&["generate", "rifa-zinoviev", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.len() == 6));
    assert!(rows.iter().all(|r| r.chars().all(|c| c == '0' || c == '1')));
}

#[test]
fn coset_of_rifa_zinoviev_matches_halved_cube() {
    let gens = run(&["generate", "rifa-zinoviev", "4", "2"]);
    let gen_file = temp_file("rz42.gen", &stdout_of(&gens));
    let out = run(&[
        "coset",
        "--graph",
        "hamming 6 2",
        "--code",
        gen_file.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cosets"], 8);
    assert_eq!(v["cr"], true);
    assert_eq!(v["relation"], true);
    assert_eq!(v["quotient_spectrum"], serde_json::json!(["6", "0", "-2"]));
    let graph_text = v["coset_graph"].as_str().unwrap();
    assert!(graph_text.starts_with("8 24\n"));
    // The emitted text is itself valid explicit-format input.
    let g = drcodes::graph::Graph::parse(graph_text).unwrap();
    let ia = g.is_distance_regular().unwrap().unwrap();
    let expected = drcodes::graph::Family::HalvedCube { m: 4 }
        .intersection_array()
        .unwrap();
    assert_eq!(ia, expected);
}

#[test]
fn analyze_reports_witness_and_exits_1() {
    let code = temp_file("notcr.code", "johnson 5 2\n1,2\n1,3\n4,5\n");
    let out = run(&["analyze", "--code", code.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["cr"], false);
    assert!(v["witness"].as_str().unwrap().contains("not equitable"));
    assert_eq!(v["cell_sizes"], serde_json::json!([3, 7]));
}

#[test]
fn generated_graph_file_round_trips_through_file_spec() {
    let graph = run(&["generate", "graph", "cycle", "6"]);
    assert_eq!(graph.status.code(), Some(0));
    let graph_file = temp_file("c6.graph", &stdout_of(&graph));
    let code = temp_file(
        "c6.code",
        &format!("file {}\n0\n3\n", graph_file.display()),
    );
    let out = run(&["analyze", "--code", code.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // Antipodal pair in the hexagon: one coset of the even subgroup.
    assert_eq!(v["rho"], 1);
    assert_eq!(v["spectrum"], serde_json::json!(["2", "-1"]));
}

#[test]
fn graph_flag_overrides_code_header() {
    let code = temp_file("rep4.code", "hamming 9 9\n0000\n1111\n");
    let out = run(&[
        "analyze",
        "--code",
        code.to_str().unwrap(),
        "--graph",
        "hamming 4 2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["graph"], "hamming 4 2");
    assert_eq!(v["rho"], 2);
}

#[test]
fn natural_ordering_view_filters_reports() {
    let code = temp_file("rep6.code", "hamming 6 2\n000000\n111111\n");
    let all = run(&["classify", "--code", code.to_str().unwrap(), "--format", "json"]);
    let v = json_of(&all);
    assert_eq!(
        v["qpoly"]["orderings"],
        serde_json::json!([["2", "-2", "-6"], ["-2", "2", "-6"]])
    );
    assert_eq!(v["leonard"]["thetas"], serde_json::json!(["2", "-2"]));
    let natural = run(&[
        "classify",
        "--code",
        code.to_str().unwrap(),
        "--format",
        "json",
        "--ordering",
        "natural",
    ]);
    let v = json_of(&natural);
    assert_eq!(v["qpoly"]["orderings"], serde_json::json!([["2", "-2", "-6"]]));
    assert_eq!(v["leonard"]["thetas"], serde_json::json!(["2"]));
    assert_eq!(v["harmonic_t"], 2);
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["classify", "--code", "/nonexistent/path.code"]);
    assert_eq!(out.status.code(), Some(2));

    let bad_graph = temp_file("bad.code", "petersen 5\n0\n");
    let out = run(&["analyze", "--code", bad_graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let bad_label = temp_file("badlabel.code", "hamming 4 2\n0000\n2222\n");
    let out = run(&["analyze", "--code", bad_label.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["coset", "--graph", "johnson 5 2", "--code", "/dev/null"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["feasibility", "--graph", "hamming 7 2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["generate", "rifa-zinoviev", "4", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_report() {
    let code = hamming74_file();
    let out_path = std::env::temp_dir().join(format!("drcodes-cli-{}-report.json", std::process::id()));
    let out = run(&[
        "classify",
        "--code",
        code.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let text = std::fs::read_to_string(&out_path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["cr"], true);
}
