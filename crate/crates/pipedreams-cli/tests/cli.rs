//! End-to-end checks of the command-line surface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pipedreams"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poly_examples() {
    let out = run(&["poly", "grothendieck", "1,3,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1 + x2 \u{2212} x1*x2\n");

    let out = run(&["poly", "schubert", "3,2,1"]);
    assert_eq!(stdout(&out), "x1^2*x2\n");

    let out = run(&["poly", "schubert", "1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn poly_rejects_bad_input() {
    let out = run(&["poly", "schubert", "2,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["poly", "schubert", "3,2,1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["poly", "fourier", "1,3,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dreams_listing() {
    let out = run(&["dreams", "1,3,2", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        concat!(
            "{\"n\":3,\"crosses\":[[1,2]]}\n",
            "{\"n\":3,\"crosses\":[[1,2],[2,1]]}\n",
            "{\"n\":3,\"crosses\":[[2,1]]}\n",
            "count: 3\n"
        )
    );

    let out = run(&["dreams", "1,3,2", "--n", "3", "--reduced"]);
    assert!(stdout(&out).ends_with("count: 2\n"));

    let out = run(&["dreams", "1", "--n", "2"]);
    let text = stdout(&out);
    assert_eq!(text, "{\"n\":2,\"crosses\":[]}\ncount: 1\n");

    let out = run(&["dreams", "1,3,2", "--n", "3", "--format", "ascii"]);
    let text = stdout(&out);
    assert!(text.contains(".+.\n...\n...\n"));
    assert!(text.ends_with("count: 3\n"));
}

#[test]
fn dreams_output_is_byte_deterministic() {
    let a = run(&["dreams", "2,1,4,3", "--n", "4"]);
    let b = run(&["dreams", "2,1,4,3", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dreams_respects_ceiling() {
    let out = run(&["dreams", "2,1", "--n", "8"]);
    assert_eq!(out.status.code(), Some(3));
    // a lowered ceiling rejects, the default one accepts
    let out = run(&["dreams", "2,1", "--n", "5", "--ceiling", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["dreams", "2,1", "--n", "5"]);
    assert!(out.status.success());
}

/// The eight-grid showcase dream: start_3 = 5, candidates {1, 2, 4}.
const SHOWCASE: &str = r#"{"n":8,"crosses":[[1,2],[1,4],[1,5],[2,2],[2,6],[3,1],[3,2],[3,3],[3,4],[4,3],[5,1],[6,1],[6,2],[7,1]]}"#;
const SHOWCASE_PERM: &str = "1,8,2,7,5,4,6,3";

#[test]
fn mitosis_offspring_counts() {
    let out = run_with_stdin(&["mitosis", SHOWCASE_PERM, "--i", "3"], SHOWCASE);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("count: 3\n"));

    let out = run_with_stdin(&["mitosis", SHOWCASE_PERM, "--i", "3", "--prime"], SHOWCASE);
    assert!(stdout(&out).ends_with("count: 5\n"));
}

#[test]
fn mitosis_reads_dream_files() {
    let dir = std::env::temp_dir();
    let path = dir.join("pipedreams-cli-showcase.json");
    std::fs::write(&path, SHOWCASE).unwrap();
    let out = run(&[
        "mitosis",
        SHOWCASE_PERM,
        "--i",
        "3",
        "--dream",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("count: 3\n"));
}

#[test]
fn mitosis_classifies_barren_dreams() {
    let out = run_with_stdin(
        &["mitosis", "1,3,2", "--i", "2", "--classify"],
        r#"{"n":3,"crosses":[[1,2]]}"#,
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "count: 0\nclass: Barren\n");
}

#[test]
fn mitosis_validates_inputs() {
    // dream outside P(w)
    let out = run_with_stdin(
        &["mitosis", "1,3,2", "--i", "2"],
        r#"{"n":3,"crosses":[[1,1]]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    // not a descent
    let out = run_with_stdin(
        &["mitosis", "1,3,2", "--i", "1"],
        r#"{"n":3,"crosses":[[1,2]]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    // malformed dream
    let out = run_with_stdin(&["mitosis", "1,3,2", "--i", "2"], "nonsense");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tau_mutates_dreams() {
    let out = run_with_stdin(&["tau", "1,3,2", "--i", "1"], r#"{"n":3,"crosses":[[1,2]]}"#);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"n\":3,\"crosses\":[[2,1]]}\n");
}

#[test]
fn verify_small_sweeps() {
    let out = run(&["verify", "all", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "t41", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // one report per (w, left descent) pair over S_4
    assert_eq!(text.lines().count(), 36);
    assert!(text.lines().all(|l| l.starts_with("PASS t41 n=4 ")));
}

#[test]
fn verify_json_reports() {
    let out = run(&["verify", "t11", "t12", "--n", "3", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = parsed.as_array().unwrap();
    assert_eq!(reports.len(), 12);
    assert!(reports.iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_output_is_byte_deterministic() {
    let a = run(&["verify", "t41", "t31", "--n", "3"]);
    let b = run(&["verify", "t41", "t31", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify", "all", "--n", "3", "--json"]);
    let b = run(&["verify", "all", "--n", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_guards() {
    let out = run(&["verify", "t99", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "t11", "--n", "7"]);
    assert_eq!(out.status.code(), Some(3));
}
