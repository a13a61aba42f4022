use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn eqminors(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqminors")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqminors"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn save(dir: &Path, name: &str, out: &Output) -> String {
    assert_eq!(code(out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let p = dir.join(name);
    std::fs::write(&p, &out.stdout).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn count_eulerian_prints_value() {
    let out = eqminors(&["count", "eulerian", "--n", "4", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"value":"11"}"#);
}

#[test]
fn check_sorted_pair() {
    let out = eqminors(&["check", "sorted", "{1,3,5}", "{2,4,6}"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"sorted":true}"#);
    let out = eqminors(&["check", "sorted", "{1,2,3}", "{4,5,6}"]);
    assert_eq!(json(&out)["sorted"], false);
    let out = eqminors(&["check", "ws", "{1,2,3,6}", "{4,5,7,8}"]);
    assert_eq!(json(&out)["weakly_separated"], false);
}

#[test]
fn reproduce_examples() {
    let out = eqminors(&["reproduce", "k4-matrix"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["equal_min"], serde_json::json!(["{1,2,3,6}", "{4,5,7,8}"]));

    let v = json(&eqminors(&["reproduce", "honeycomb-6-over-T"]));
    assert_eq!(v["observed"], "6*T^-1");
    let v = json(&eqminors(&["reproduce", "distance-2x2"]));
    assert_eq!(v["observed"], 4);
    let v = json(&eqminors(&["reproduce", "thrackle-count", "--n", "6"]));
    assert_eq!(v["observed"], 26);
}

#[test]
fn reproduce_list_names_every_claim() {
    let out = eqminors(&["reproduce", "list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for (id, _) in eqminors_cli::claims::CLAIMS {
        assert!(text.contains(id), "{id}");
    }
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&eqminors(&["bogus"])), 64);
    assert_eq!(code(&eqminors(&["count", "eulerian", "--n", "4"])), 64);
    let out = eqminors(&["reproduce", "no-such-claim"]);
    assert_eq!(code(&out), 64);
    assert_eq!(json(&out)["exit"], 64);
    assert_eq!(code(&eqminors(&["--help"])), 0);
}

#[test]
fn malformed_input_exits_65() {
    assert_eq!(code(&eqminors(&["check", "sorted", "{1,3,x}", "{2,4,6}"])), 65);
    assert_eq!(code(&eqminors(&["check", "ws", "{1,2", "{3,4}"])), 65);
    assert_eq!(code(&with_stdin(&["verify", "-"], b"{\"entries\": 3}")), 65);
    assert_eq!(code(&with_stdin(&["plabic", "trace", "-"], b"not json")), 65);
}

#[test]
fn verify_expect_mismatch_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let m = save(dir.path(), "k4.json", &eqminors(&["construct", "paper-matrix", "--name", "k4_n8"]));
    let out = eqminors(&["verify", &m, "--mode", "smallest", "--expect", "{1,2,3,4}"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["matches"], false);

    let class = json(&eqminors(&["verify", &m, "--mode", "smallest"]))["arrangement"]["classes"][0].clone();
    let class: Vec<&str> = class.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert_eq!(class.len(), 15);
    let out = eqminors(&["verify", &m, "--mode", "smallest", "--expect", &class.join(" ")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["matches"], true);
}

#[test]
fn fixed_low_precision_is_undecided() {
    let args = ["construct", "thrackle", "--n", "5", "--edges", "1-3,1-4,2-4,2-5,3-5"];
    let out = eqminors(&args);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["largest"].as_array().unwrap().len(), 5);
    let low = [&["--precision-bits", "8"][..], &args[..]].concat();
    let out = eqminors(&low);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["exit"], 3);
}

#[test]
fn seeded_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = save(dir.path(), "hc.json", &eqminors(&["plabic", "honeycomb"]));
    let a = eqminors(&["--seed", "11", "plabic", "move", &g, "--random", "30"]);
    let b = eqminors(&["--seed", "11", "plabic", "move", &g, "--random", "30"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = eqminors(&["--seed", "4", "--trials", "200", "reproduce", "sort-pair"]);
    let b = eqminors(&["--seed", "4", "--trials", "200", "reproduce", "sort-pair"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["trials"], 200);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_eqminors"))
            .args(["--cache", "enumerate", "sorted", "--n", "6", "--k", "3"])
            .env(eqminors_cli::cache::CACHE_ENV, dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(code(&first), 0);
    assert!(!dir.path().join("hits.log").exists());
    let second = run();
    assert_eq!(code(&second), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    let log = std::fs::read_to_string(dir.path().join("hits.log")).unwrap();
    assert_eq!(log.lines().count(), 1);
    assert!(log.contains("n: 6, k: 3"));
    assert_eq!(json(&second)["count"], 66);
}

#[test]
fn honeycomb_feeds_plabic_commands() {
    let hc = eqminors(&["plabic", "honeycomb"]);
    assert_eq!(code(&hc), 0);
    let trace = json(&with_stdin(&["plabic", "trace", "-"], &hc.stdout));
    assert_eq!(trace["pi"], serde_json::json!([5, 6, 7, 8, 1, 2, 3, 4]));
    let faces = json(&with_stdin(&["plabic", "faces", "-"], &hc.stdout));
    assert_eq!(faces["labels"], json(&hc)["collection"]);
    let reduced = json(&with_stdin(&["plabic", "reduced", "-"], &hc.stdout));
    assert_eq!(reduced["reduced"], true);
    let dot = json(&with_stdin(&["plabic", "export-dot", "-"], &hc.stdout));
    assert!(dot["dot"].as_str().unwrap().starts_with("graph plabic {"));
}

#[test]
fn distance_and_projection() {
    let v = json(&eqminors(&["cluster", "distance", "{1,2,3,6}", "{4,5,7,8}"]));
    assert_eq!(v["distance"]["exact"], 4);
    let v = json(&eqminors(&["plabic", "project", "--split", "3,4,6", "--n", "8", "{1,2,3,6}"]));
    assert_eq!(v["projection"], serde_json::json!([3, 0, 1, 0]));
    assert_eq!(code(&eqminors(&["plabic", "project", "--split", "3,1,2", "{1,2,3,6}"])), 65);
}
