//! End-to-end CLI tests driving the compiled binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn testdata(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../testdata").join(name)
}

fn fbsolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbsolve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn solve_mid_figmid_yes_with_witness() {
    let out = fbsolve(&["solve", "mid", testdata("figmid.gr").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "YES witness=2 4");
}

#[test]
fn solve_mid_oracle_backend_agrees() {
    let path = testdata("figmid.gr");
    let search = fbsolve(&["solve", "mid", path.to_str().unwrap()]);
    let oracle = fbsolve(&["solve", "mid", path.to_str().unwrap(), "--backend", "oracle"]);
    assert_eq!(search.status.code(), oracle.status.code());
}

#[test]
fn feedback_fes_figu_prints_two_edges() {
    let out = fbsolve(&["feedback", "fes", testdata("figu.gr").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("FES size=2"), "got: {text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 2);
}

#[test]
fn feedback_fvs_figu_and_figd() {
    let out = fbsolve(&["feedback", "fvs", testdata("figu.gr").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.starts_with("FVS size=1"), "got: {text}");
    assert!(text.contains("v 2"));

    let out = fbsolve(&["feedback", "fvs", testdata("figd.gr").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.starts_with("FVS size=2"), "got: {text}");
}

#[test]
fn mdd_backends_agree_on_generated_instance() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen.gr");
    let gen = fbsolve(&[
        "gen", "budget", "--n", "12", "--se", "3", "--seed", "9", "--wc", "1", "--k", "2",
    ]);
    assert_eq!(gen.status.code(), Some(0));
    std::fs::write(&path, stdout(&gen)).unwrap();
    let p = path.to_str().unwrap();
    let codes: Vec<Option<i32>> = ["search", "dp", "ilp", "oracle"]
        .iter()
        .map(|b| fbsolve(&["solve", "mdd", p, "--backend", b]).status.code())
        .collect();
    assert!(codes.iter().all(|c| *c == codes[0]), "backend exit codes differ: {codes:?}");
}

#[test]
fn explicit_feedback_set_files() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let inst = dir.join("c5.gr");
    // C5 with a chord; wc=1 k=1.
    std::fs::write(&inst, "p ud 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 2 5\na wc 1\na k 1\n")
        .unwrap();
    let p = inst.to_str().unwrap();
    let auto = fbsolve(&["solve", "mdd", p]).status.code();

    // A valid non-minimum feedback edge set.
    let fes = dir.join("fes.txt");
    std::fs::write(&fes, "1 2\n3 4\n2 5\n").unwrap();
    let with_file =
        fbsolve(&["solve", "mdd", p, "--fes", fes.to_str().unwrap()]).status.code();
    assert_eq!(auto, with_file);

    // A non-minimum feedback vertex set avoiding wc.
    let fvs = dir.join("fvs.txt");
    std::fs::write(&fvs, "2 4\n").unwrap();
    let dp = fbsolve(&["solve", "mdd", p, "--backend", "dp", "--fvs", fvs.to_str().unwrap()]);
    assert_eq!(dp.status.code(), auto);

    // A file that is not a feedback edge set errors out.
    let bad = dir.join("bad-fes.txt");
    std::fs::write(&bad, "1 2\n").unwrap();
    let out = fbsolve(&["solve", "mdd", p, "--fes", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_one_for_no_instances() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("no.gr");
    // K4 with d = 1, k = 1 is a no-instance.
    std::fs::write(&path, "p ud 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\na d 1\na k 1\n")
        .unwrap();
    let out = fbsolve(&["solve", "bdd", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "NO");
}

#[test]
fn exit_code_two_for_errors() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("selfloop.gr");
    std::fs::write(&path, "p ud 3 1\ne 3 3\n").unwrap();
    let out = fbsolve(&["solve", "mdd", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    // Unknown flag.
    let out = fbsolve(&["solve", "mdd", path.to_str().unwrap(), "--bogus", "x"]);
    assert_eq!(out.status.code(), Some(2));

    // Missing annotation.
    let plain = dir.join("plain.gr");
    std::fs::write(&plain, "p ud 2 1\ne 1 2\n").unwrap();
    let out = fbsolve(&["solve", "mdd", plain.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("a wc"));
}

#[test]
fn kernelize_reports_reduction() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kern.gr");
    // A tree fully collapses.
    std::fs::write(&path, "p ud 4 3\ne 1 2\ne 2 3\ne 3 4\na wc 1\na k 3\n").unwrap();
    let out = fbsolve(&["kernelize", "mdd", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# resolved"), "got: {}", stdout(&out));
}

#[test]
fn reduce_emits_legend_comments() {
    let out = fbsolve(&["reduce", "ds-mid", testdata("figu.gr").to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# legend V "));
    assert!(text.contains("p dir "));
    // The emitted instance parses back.
    let body: String =
        text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    fbsolve::io::parse_instance(&body).unwrap();
}

#[test]
fn bench_writes_csv() {
    let dir = std::env::temp_dir().join("fbsolve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv_path = dir.join("bench.csv");
    let out = fbsolve(&[
        "bench",
        "--suite",
        testdata("demo.suite").to_str().unwrap(),
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let records = fbsolve::bench::parse_csv(&csv).unwrap();
    assert_eq!(records.len(), 9);
}

#[test]
fn verify_witnesses() {
    let path = testdata("figmid.gr");
    let out = fbsolve(&["verify", path.to_str().unwrap(), "--witness", "2", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "VALID");

    let out = fbsolve(&["verify", path.to_str().unwrap(), "--witness", "2", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "INVALID");
}

#[test]
fn fixture_files_round_trip_byte_identical_modulo_comments() {
    for name in ["figu.gr", "figd.gr", "figmid.gr"] {
        let text = std::fs::read_to_string(testdata(name)).unwrap();
        let inst = fbsolve::io::parse_instance(&text).unwrap();
        let written = fbsolve::io::write_instance(&inst);
        let stripped: String = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(written, stripped, "fixture {name} is not canonical");
    }
}
