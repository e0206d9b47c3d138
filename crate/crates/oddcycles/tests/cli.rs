//! End-to-end tests of the command-line interface: exit codes, stream
//! composability, and JSON stability.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddcycles"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn oddcycles");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for oddcycles")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

// graph6 for the balanced C7 blow-up on 14 vertices, written by the library
fn blowup_g6() -> String {
    let g = oddcycles::BlowupSpec::balanced(oddcycles::Graph::cycle(7).unwrap(), 14)
        .unwrap()
        .build()
        .unwrap();
    oddcycles::write_graph6(&g).unwrap()
}

#[test]
fn count_blowup_prints_128() {
    let out = run_with_stdin(&["count", "--k", "7"], &format!("{}\n", blowup_g6()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "128");
}

#[test]
fn count_handles_multiple_records_and_induced() {
    let input = format!("{}\nC~\n", blowup_g6());
    let out = run_with_stdin(&["count", "--k", "3"], &input);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).lines().collect::<Vec<_>>(), vec!["0", "4"]);

    let out = run_with_stdin(&["count", "--k", "4", "--induced"], "C~\n");
    assert_eq!(stdout_of(&out).trim(), "0");
}

#[test]
fn odd_girth_reports_inf_for_bipartite() {
    // K33 and C5
    let input = "Dhc\n";
    let out = run_with_stdin(&["odd-girth"], input);
    assert_eq!(stdout_of(&out).trim(), "5");
    let k33 = oddcycles::write_graph6(&oddcycles::Graph::complete_bipartite(3, 3).unwrap()).unwrap();
    let out = run_with_stdin(&["odd-girth"], &format!("{k33}\n"));
    assert_eq!(stdout_of(&out).trim(), "inf");
}

#[test]
fn blowup_composes_with_count() {
    let out = bin()
        .args(["blowup", "--cycle", "7", "--balanced", "14"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let record = stdout_of(&out).trim().to_string();
    assert_eq!(record, blowup_g6());

    let counted = run_with_stdin(&["count", "--k", "7"], &format!("{record}\n"));
    assert_eq!(stdout_of(&counted).trim(), "128");

    let explicit = bin()
        .args(["blowup", "--cycle", "5", "--blobs", "2,2,2,1,1"])
        .output()
        .unwrap();
    assert_eq!(explicit.status.code(), Some(0));
    let g = oddcycles::parse_graph6(stdout_of(&explicit).trim()).unwrap();
    assert_eq!(g.n(), 8);
}

#[test]
fn verify_c7_passes_with_unit_total() {
    let c7 = oddcycles::write_graph6(&oddcycles::Graph::cycle(7).unwrap()).unwrap();
    let out = run_with_stdin(&["--json", "verify", "--k", "7"], &format!("{c7}\n"));
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("well-formed JSON");
    assert_eq!(doc["tool"], "oddcycles");
    assert_eq!(doc["subcommand"], "verify");
    assert!(doc["inputs_digest"].as_str().unwrap().starts_with("sha256:"));
    let report = &doc["results"][0];
    assert_eq!(report["claim1"]["total"], "1/1");
    assert_eq!(report["verdict"], true);
    assert_eq!(report["bound_equality"], true);
    assert!(report["per_cycle"].is_null(), "summary mode keeps no detail");

    let out = run_with_stdin(
        &["--json", "verify", "--k", "7", "--per-cycle"],
        &format!("{c7}\n"),
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let detail = &doc["results"][0]["per_cycle"];
    assert_eq!(detail.as_array().unwrap().len(), 1);
    assert_eq!(detail[0]["claim2"]["equality"], true);
    assert_eq!(detail[0]["bound"]["chain_ok"], true);
    assert_eq!(detail[0]["bound"]["expr1"], "1/1");
}

#[test]
fn verify_rejects_short_odd_girth_with_exit_1() {
    // C5 plus two isolated vertices: odd girth 5 < 7
    let mut g = oddcycles::Graph::cycle(5).unwrap();
    for _ in 0..2 {
        g = g.with_vertex_appended(&oddcycles::VertexSet::empty()).unwrap();
    }
    let rec = oddcycles::write_graph6(&g).unwrap();
    let out = run_with_stdin(&["verify", "--k", "7"], &format!("{rec}\n"));
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("precondition failed"), "got: {text}");
    assert!(text.contains("verdict: fail"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run_with_stdin(&["count", "--k", "7", "--bogus-flag"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run_with_stdin(&["count"], ""); // missing --k
    assert_eq!(out.status.code(), Some(2));

    let out = run_with_stdin(&["count", "--k", "7"], "not-a-graph6-record!!!\n");
    assert_eq!(out.status.code(), Some(2));

    let out = run_with_stdin(&["--workers", "0", "count", "--k", "7"], "C~\n");
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn edge_list_format_is_accepted() {
    let out = run_with_stdin(
        &["--format", "edges", "count", "--k", "3"],
        "3 3\n0 1\n1 2\n2 0\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "1");
}

#[test]
fn json_is_byte_identical_across_runs_and_workers() {
    let input = format!("{}\n", blowup_g6());
    let a = run_with_stdin(&["--json", "count", "--k", "7"], &input);
    let b = run_with_stdin(&["--json", "count", "--k", "7"], &input);
    assert_eq!(stdout_of(&a), stdout_of(&b), "same run twice differs");

    // counting is an order-independent sum: results agree across workers
    let w4 = run_with_stdin(&["--json", "--workers", "4", "count", "--k", "7"], &input);
    let a_doc: serde_json::Value = serde_json::from_str(&stdout_of(&a)).unwrap();
    let w4_doc: serde_json::Value = serde_json::from_str(&stdout_of(&w4)).unwrap();
    assert_eq!(a_doc["results"], w4_doc["results"]);
    assert_eq!(w4_doc["workers"], 4);
}

#[test]
fn search_exhaustive_builtin_and_filter_mode() {
    let out = bin()
        .args([
            "--json", "search", "exhaustive", "--n", "7", "--k", "7", "--constraint", "odd-girth",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["results"]["best_count"], "1");
    assert_eq!(doc["results"]["bound_attained"], true);

    // filter mode: pipe a stream that mixes orders and constraint violators
    let c7 = oddcycles::write_graph6(&oddcycles::Graph::cycle(7).unwrap()).unwrap();
    let k4 = "C~";
    let stream = format!("{c7}\n{k4}\n{c7}\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stream.g6");
    std::fs::write(&path, stream).unwrap();
    let out = bin()
        .args([
            "--json",
            "--input",
            path.to_str().unwrap(),
            "search",
            "exhaustive",
            "--n",
            "7",
            "--k",
            "7",
            "--constraint",
            "odd-girth",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["results"]["graphs_examined"], 1, "dedup and filter");
    assert_eq!(doc["results"]["best_count"], "1");

    // --input - takes the stream from stdin
    let out = run_with_stdin(
        &[
            "--json", "--input", "-", "search", "exhaustive", "--n", "7", "--k", "7",
            "--constraint", "odd-girth",
        ],
        &format!("{c7}\n{k4}\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["results"]["graphs_examined"], 1);
}

#[test]
fn search_hillclimb_is_reproducible() {
    let args = [
        "--json", "search", "hillclimb", "--n", "10", "--k", "7", "--constraint", "odd-girth",
        "--seed", "11", "--budget", "300",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout_of(&a), stdout_of(&b));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&a)).unwrap();
    assert_eq!(doc["results"]["seed"], 11);
    assert_eq!(doc["results"]["budget"], 300);
}

#[test]
fn conjecture_probes_and_strict_mode() {
    let out = bin()
        .args(["--json", "conjecture", "2", "--k", "7", "--l", "3", "--t-max", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["results"]["kind"], "conjecture2");
    assert_eq!(doc["results"]["coefficient"]["binomial_sum"], "7");
    assert_eq!(doc["results"]["coefficient"]["walk_reference"], "5/1");

    // no findings expected, so --strict still exits 0
    let out = bin()
        .args(["--strict", "conjecture", "1", "--n", "6", "--k", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["conjecture", "observation", "--n", "8", "--k", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rationals_and_counts_are_strings_in_json() {
    let c7 = oddcycles::write_graph6(&oddcycles::Graph::cycle(7).unwrap()).unwrap();
    let out = run_with_stdin(&["--json", "verify", "--k", "7"], &format!("{c7}\n"));
    let text = stdout_of(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    fn no_numbers_in_rationals(v: &serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                for (key, val) in map {
                    if key == "total" || key == "weight_sum" || key.contains("bound") && val.is_string() {
                        assert!(val.is_string() || val.is_boolean() || val.is_null());
                    }
                    no_numbers_in_rationals(val);
                }
            }
            serde_json::Value::Array(items) => items.iter().for_each(no_numbers_in_rationals),
            _ => {}
        }
    }
    no_numbers_in_rationals(&doc);
    // the one rational in this report is the claim1 total
    assert_eq!(doc["results"][0]["claim1"]["total"], "1/1");
    assert_eq!(doc["results"][0]["cycle_count"], "1");
    assert!(!text.contains("e-") && !text.contains("E-"), "float leaked into JSON");
}
