//! End-to-end tests for the satogr binary.
//!
//! Each test invokes the compiled binary as a subprocess and asserts on exit
//! status, stdout, and stderr. JSON outputs are additionally round-tripped
//! through the typed deserializers of the core crate, so the wire format and
//! the in-memory canonical form are pinned to each other byte for byte.

use std::process::Command;

use satogr::gkm::GkmClass;
use satogr::poly::GradedPoly;
use satogr::schubert::SchubertClass;

/// Runs the binary with the given arguments and returns (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_satogr"))
        .args(args)
        .output()
        .expect("failed to spawn satogr");
    (
        out.status.code().expect("no exit code"),
        String::from_utf8(out.stdout).expect("stdout not utf-8"),
        String::from_utf8(out.stderr).expect("stderr not utf-8"),
    )
}

#[test]
fn pullback_generator_human() {
    let (code, stdout, _) = run(&[
        "pullback",
        "--map",
        "kq",
        "--q",
        "2",
        "--g",
        "2",
        "--r",
        "1",
        "--equivariant",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "-L1 + 9*psi");
}

#[test]
fn pullback_vanishes_above_rank() {
    let (code, stdout, _) = run(&[
        "pullback",
        "--map",
        "k1",
        "--g",
        "3",
        "--r",
        "4",
        "--equivariant",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "0");
}

#[test]
fn pullback_json_roundtrip() {
    let (code, stdout, _) = run(&[
        "pullback",
        "--map",
        "kq",
        "--q",
        "2",
        "--g",
        "2",
        "--r",
        "2",
        "--json",
    ]);
    assert_eq!(code, 0);
    let line = stdout.trim();
    let poly: GradedPoly = serde_json::from_str(line).expect("stdout is a GradedPoly");
    assert_eq!(serde_json::to_string(&poly).unwrap(), line);
}

#[test]
fn pullback_class_ordinary() {
    let (code, stdout, _) = run(&[
        "pullback-class",
        "--map",
        "kq",
        "--q",
        "2",
        "--g",
        "2",
        "--partition",
        "2",
    ]);
    assert_eq!(code, 0);
    let poly: GradedPoly = {
        let (c, js, _) = run(&[
            "pullback-class",
            "--map",
            "kq",
            "--q",
            "2",
            "--g",
            "2",
            "--partition",
            "2",
            "--json",
        ]);
        assert_eq!(c, 0);
        serde_json::from_str(js.trim()).unwrap()
    };
    assert!(!stdout.trim().is_empty());
    assert!(!poly.is_zero());
}

#[test]
fn pullback_map_flag_validation() {
    let (code, _, stderr) = run(&["pullback", "--map", "kq", "--g", "2", "--r", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("requires --q"), "stderr: {stderr}");

    let (code, _, stderr) = run(&["pullback", "--map", "k1", "--q", "2", "--g", "2", "--r", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("neither"), "stderr: {stderr}");

    let (code, _, stderr) = run(&["pullback", "--map", "line", "--g", "2", "--r", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("requires --h"), "stderr: {stderr}");
}

#[test]
fn schur_mult_human_and_json() {
    let (code, stdout, _) = run(&["schur-mult", "--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "s(2) + s(1,1)");

    let (code, stdout, _) = run(&["schur-mult", "--a", "2,1", "--b", "2,1", "--json"]);
    assert_eq!(code, 0);
    let line = stdout.trim();
    let class: SchubertClass = serde_json::from_str(line).expect("stdout is a SchubertClass");
    assert_eq!(serde_json::to_string(&class).unwrap(), line);
    assert_eq!(class.num_terms(), 7);
}

#[test]
fn schur_mult_rejects_bad_partition() {
    let (code, _, stderr) = run(&["schur-mult", "--a", "1,2", "--b", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("weakly decreasing"), "stderr: {stderr}");
}

#[test]
fn gkm_table_human_and_json() {
    let (code, stdout, _) = run(&["gkm", "--n", "2", "--l", "1", "--lambda", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, vec!["(): 0", "(1): u2 - u1"]);

    let (code, stdout, _) = run(&["gkm", "--n", "3", "--l", "2", "--lambda", "1,1", "--json"]);
    assert_eq!(code, 0);
    let line = stdout.trim();
    let class: GkmClass = serde_json::from_str(line).expect("stdout is a GkmClass");
    assert_eq!(serde_json::to_string(&class).unwrap(), line);
}

#[test]
fn gkm_rotation_specialization() {
    let (code, stdout, _) = run(&["gkm", "--n", "2", "--l", "1", "--lambda", "1", "--rotation"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().collect::<Vec<_>>(), vec!["(): 0", "(1): u"]);
}

#[test]
fn ch_hodge_value() {
    let (code, stdout, _) = run(&["ch-hodge", "--r", "1", "--q", "1", "--g", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "(1/12)*k1");
}

#[test]
fn ch_p_compare_reports_delta() {
    let (code, stdout, _) = run(&["ch-p", "--k", "3", "--compare"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("mechanical:"), "stdout: {stdout}");
    assert!(stdout.contains("stated:"), "stdout: {stdout}");
    assert!(stdout.contains("delta:"), "stdout: {stdout}");
    assert!(stdout.contains("-1/24"), "stdout: {stdout}");

    let (code, stdout, _) = run(&["ch-p", "--k", "2", "--compare"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exact agreement"), "stdout: {stdout}");
}

#[test]
fn bernoulli_number_and_polynomial() {
    let (code, stdout, _) = run(&["bernoulli", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1/6");

    let (code, stdout, _) = run(&["bernoulli", "--n", "1", "--poly"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "x - 1/2");

    let (code, stdout, _) = run(&["bernoulli", "--n", "12", "--json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("-691/2730"), "stdout: {stdout}");
}

#[test]
fn verify_suite_passes() {
    let (code, stdout, _) = run(&["verify", "--suite", "cauchy"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.starts_with("PASS cauchy/")));
    assert!(stdout.contains("all passed"), "stdout: {stdout}");
}

#[test]
fn verify_rejects_unknown_suite() {
    let (code, _, stderr) = run(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown suite"), "stderr: {stderr}");
}

#[test]
fn unknown_flag_fails() {
    let (code, _, stderr) = run(&["pullback", "--bogus"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--bogus"), "stderr: {stderr}");
}

#[test]
fn help_and_version_exit_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Usage:"));

    let (code, stdout, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("satogr"));
}
