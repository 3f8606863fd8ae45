//! End-to-end tests of the `cones` binary: exit codes, report
//! determinism, and the file formats.

use std::path::PathBuf;
use std::process::{Command, Output};

const DEMO: &str = "\
# the workbench demo file
monoid threechain finite
  elements 0 1 inf
  add 0 0 0
  add 0 1 1
  add 0 inf inf
  add 1 1 inf
  add 1 inf inf
  add inf inf inf
end

monoid tt presented
  generators g
  relation 2*g = 3*g
end

monoid twosevens qcone 1
  generator 2
  generator 7
end
";

struct Workspace {
    _dir: tempfile::TempDir,
    demo: PathBuf,
}

fn workspace() -> Workspace {
    let dir = tempfile::tempdir().unwrap();
    let demo = dir.path().join("demo.mon");
    std::fs::write(&demo, DEMO).unwrap();
    Workspace { _dir: dir, demo }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cones"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_exit_codes_track_verdicts() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();

    let out = run(&["check", demo, "threechain", "conical"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("conical(threechain) = True"));

    // 2*1 = 1 + inf = 2*inf with 1 != inf
    let out = run(&["check", demo, "threechain", "separative"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("= False"));
    assert!(stdout(&out).contains("witness"));

    // the chain misses refinement: (1,1) against (inf,inf) has no matrix
    let out = run(&["check", demo, "threechain", "refinement"]);
    assert_eq!(out.status.code(), Some(1));

    // bounded check on an infinite backend stays honest
    let out = run(&["check", demo, "tt", "quasi-divisible", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("Unknown"));

    // perforation witness in the cone on two generators
    let out = run(&["check", demo, "twosevens", "p-unperforated", "--pset", "2", "--bound", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();

    let out = run(&["check", demo, "threechain", "nonsense-predicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check", demo, "missing", "conical"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check", "/nonexistent/file.mon", "x", "conical"]);
    assert_eq!(out.status.code(), Some(2));

    // torsion predicates require a multiplicative set
    let out = run(&["check", demo, "threechain", "p-torsion-free"]);
    assert_eq!(out.status.code(), Some(2));

    // parse errors carry line numbers
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mon");
    std::fs::write(&bad, "monoid m finite\n  elements 0 a\n  bogus\nend\n").unwrap();
    let out = run(&["check", bad.to_str().unwrap(), "m", "conical"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();
    for args in [
        vec!["check", demo, "threechain", "refinement"],
        vec!["refine", demo, "threechain", "1", "inf", "inf", "1"],
        vec!["quotient", demo, "threechain", "separative"],
        vec!["corpus"],
        vec!["lambda-wsd"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "unstable output for {args:?}");
    }
}

#[test]
fn refine_finds_a_valid_matrix() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();
    let out = run(&["refine", demo, "threechain", "1", "inf", "inf", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rows"));

    // mismatched sums are a usage error
    let out = run(&["refine", demo, "threechain", "1", "0", "inf", "inf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_reads_system_files() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("sys.eqs");
    std::fs::write(&sys, "system 1\n  eq 2*x0 = inf\nend\n").unwrap();
    let out = run(&["solve", demo, "threechain", sys.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("x0 = 1"));

    // an unsolvable system over a complete backend fails outright
    std::fs::write(&sys, "system 1\n  eq 2*x0 = 1\nend\n").unwrap();
    let out = run(&["solve", demo, "threechain", sys.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn quotient_tables_reparse() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();
    let out = run(&["quotient", demo, "threechain", "cancellative"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let start = text.find("monoid").unwrap();
    let end = text.rfind("end").unwrap() + 3;
    let table = &text[start..end];
    assert!(cones::format::parse(table).is_ok(), "table block: {table}");
}

#[test]
fn step_commands_verify_their_constructions() {
    let ws = workspace();
    let demo = ws.demo.to_str().unwrap();

    let out = run(&["step", demo, "threechain", "refinement", "1", "inf", "inf", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["step", demo, "tt", "refinement", "1*g", "1*g", "1*g", "1*g"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["step", demo, "threechain", "division", "inf", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["step", demo, "threechain", "wsd", "1", "1", "1", "inf"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // degenerate instances are answered without an extension
    let out = run(&["step", demo, "threechain", "wsd", "0", "1", "1", "inf"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degenerate"));

    // dividing zero is rejected
    let out = run(&["step", demo, "threechain", "division", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn example_and_counterexample_commands_pass() {
    let out = run(&["example314", "--max-m", "5", "--max-k", "4", "--max-n", "2", "--claim1-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("outside the cone"));
    assert!(!text.contains("[FAIL]"));

    let out = run(&["lambda-wsd"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sqrt2"));

    let out = run(&["corpus"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("[FAIL]"));
}
