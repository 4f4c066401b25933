//! End-to-end checks of the `mccp` binary: argument handling, output
//! shape, exit codes, and report reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::tempdir;

const TRIANGLE: &str = "3 3 3\n0 1 0\n1 2 1\n0 2 2\n";

fn mccp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mccp"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no exit code (killed by signal?)")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_reports_the_triangle_optimum() {
    let dir = tempdir().unwrap();
    let path = write_file(dir.path(), "triangle.mcc", TRIANGLE);
    let output = mccp(&[
        "solve", &path, "--mode", "greedy", "--seed", "7", "--max-iters", "100", "--emit-cut",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("value=2\n"), "stdout: {text}");
    assert!(text.contains("cut_colors="), "stdout: {text}");
    assert!(text.contains("kept_colors="), "stdout: {text}");
    // Any optimal answer keeps one color and cuts the other two edges.
    assert!(text.contains("minimal_cut=2\n"), "stdout: {text}");
    let edge_lines: Vec<&str> = text
        .lines()
        .skip_while(|line| !line.starts_with("minimal_cut="))
        .skip(1)
        .collect();
    assert_eq!(edge_lines.len(), 2);
    for line in edge_lines {
        let fields: Vec<usize> = line
            .split_whitespace()
            .map(|field| field.parse().unwrap())
            .collect();
        assert_eq!(fields.len(), 3);
        assert!(fields[0] < 3 && fields[1] < 3 && fields[2] < 3);
    }
}

#[test]
fn solve_is_reproducible_for_a_fixed_seed() {
    let dir = tempdir().unwrap();
    let path = write_file(dir.path(), "triangle.mcc", TRIANGLE);
    let args = ["solve", &path, "--mode", "prob", "--seed", "11", "--max-iters", "500"];
    let a = mccp(&args);
    let b = mccp(&args);
    assert_eq!(exit_code(&a), 0);
    // Everything except the wall-clock line must repeat exactly.
    let strip = |s: &Output| -> Vec<String> {
        stdout(s)
            .lines()
            .filter(|line| !line.starts_with("elapsed_s="))
            .map(str::to_owned)
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn solve_honors_a_small_time_budget() {
    let dir = tempdir().unwrap();
    let path = write_file(dir.path(), "triangle.mcc", TRIANGLE);
    let output = mccp(&["solve", &path, "--time-limit", "0.05"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let elapsed: f64 = text
        .lines()
        .find_map(|line| line.strip_prefix("elapsed_s="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(elapsed >= 0.05, "stopped before the budget: {elapsed}");
    assert!(elapsed < 1.0, "overshot the budget: {elapsed}");
}

#[test]
fn solve_rejects_missing_and_malformed_files() {
    let dir = tempdir().unwrap();
    let missing = dir.path().join("nosuch.mcc");
    let output = mccp(&["solve", missing.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("error:"));

    let self_loop = write_file(dir.path(), "bad.mcc", "2 1 1\n0 0 0\n");
    let output = mccp(&["solve", &self_loop]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("line 2"), "stderr: {}", stderr(&output));

    let unknown_flag = mccp(&["solve", "--definitely-not-a-flag"]);
    assert_eq!(exit_code(&unknown_flag), 2);
}

#[test]
fn generate_writes_the_forced_single_edge_instance() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("ds");
    let output = mccp(&[
        "generate", "--nodes", "2", "--colors", "1", "--density", "1", "--seed", "0",
        "--count", "1", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let file = out.join("n2_c1_d1_s0_i000.mcc");
    assert!(stdout(&output).contains("n2_c1_d1_s0_i000.mcc"));
    assert_eq!(fs::read_to_string(file).unwrap(), "2 1 1\n0 1 0\n");
}

#[test]
fn generate_is_deterministic_and_output_parses_back() {
    let dir = tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let output = mccp(&[
            "generate", "--nodes", "15", "--colors", "7", "--density", "0.4", "--seed", "21",
            "--count", "3", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    }
    let names: Vec<String> = {
        let mut names: Vec<String> = fs::read_dir(&a)
            .unwrap()
            .map(|entry| entry.unwrap().file_name().to_string_lossy().into_owned())
            .collect();
        names.sort();
        names
    };
    assert_eq!(names.len(), 3);
    for name in &names {
        let text_a = fs::read_to_string(a.join(name)).unwrap();
        let text_b = fs::read_to_string(b.join(name)).unwrap();
        assert_eq!(text_a, text_b, "{name} differed between runs");
        mccp_core::parse_instance(&text_a).expect("generated file must parse");
    }
}

#[test]
fn generate_refuses_infeasible_parameters() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("x");
    for args in [
        vec!["--nodes", "10", "--colors", "3", "--density", "0"],
        vec!["--nodes", "10", "--colors", "3", "--density", "1.5"],
        vec!["--nodes", "1", "--colors", "1", "--density", "1"],
        // 3 nodes at full density give 3 edges; 5 colors cannot all be used.
        vec!["--nodes", "3", "--colors", "5", "--density", "1"],
        // Expected edges below the spanning-tree minimum.
        vec!["--nodes", "30", "--colors", "3", "--density", "0.01"],
    ] {
        let mut full = vec!["generate"];
        full.extend(args.iter());
        full.extend(["--out", out.to_str().unwrap()]);
        let output = mccp(&full);
        assert_eq!(exit_code(&output), 2, "args {args:?}: {}", stderr(&output));
    }
}

#[test]
fn verify_agrees_with_both_oracles_on_the_triangle() {
    let dir = tempdir().unwrap();
    let path = write_file(dir.path(), "triangle.mcc", TRIANGLE);
    // The triangle's three edges carry three distinct colors, so both
    // oracles apply and agree on optimum 2.
    for oracle in ["brute", "mincut"] {
        let output = mccp(&["verify", &path, "--oracle", oracle, "--max-iters", "200"]);
        assert_eq!(exit_code(&output), 0, "oracle {oracle}: {}", stderr(&output));
        let text = stdout(&output);
        assert!(text.contains("value=2\n"), "stdout: {text}");
        assert!(text.contains("optimum=2\n"), "stdout: {text}");
        assert!(text.contains("verified=true"), "stdout: {text}");
    }
}

#[test]
fn verify_rejects_unusable_oracle_requests() {
    let dir = tempdir().unwrap();
    // Two edges sharing one color: the min-cut oracle does not apply.
    let shared = write_file(dir.path(), "shared.mcc", "3 2 1\n0 1 0\n1 2 0\n");
    let output = mccp(&["verify", &shared, "--oracle", "mincut"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("distinct color"), "stderr: {}", stderr(&output));

    // Color count above the enumeration cap.
    let triangle = write_file(dir.path(), "triangle.mcc", TRIANGLE);
    let output = mccp(&["verify", &triangle, "--max-colors", "2"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn bench_reports_are_byte_identical_under_an_iteration_budget() {
    let dir = tempdir().unwrap();
    let ds = dir.path().join("ds");
    let output = mccp(&[
        "generate", "--nodes", "14", "--colors", "8", "--density", "0.5", "--seed", "5",
        "--count", "4", "--out", ds.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);

    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    for csv in [&csv_a, &csv_b] {
        let output = mccp(&[
            "bench", "--dir", ds.to_str().unwrap(), "--mode", "both", "--seed", "3",
            "--max-iters", "300", "--csv", csv.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    }
    let bytes_a = fs::read(&csv_a).unwrap();
    assert_eq!(bytes_a, fs::read(&csv_b).unwrap(), "reports differed");

    let text = String::from_utf8(bytes_a).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "nodes,colors,density,instance,mode,seed,value,elapsed_s"
    );
    // 4 instances + 1 AVG row per mode.
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows.iter().filter(|row| row.contains(",AVG,")).count(), 2);
    for row in rows {
        assert!(row.ends_with(','), "elapsed must be blank: {row}");
    }
}

#[test]
fn bench_requires_a_nonempty_instance_directory() {
    let dir = tempdir().unwrap();
    let output = mccp(&["bench", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("no .mcc instances"));
}

#[test]
fn bench_writes_csv_to_stdout_without_a_path() {
    let dir = tempdir().unwrap();
    let ds = dir.path().join("ds");
    mccp(&[
        "generate", "--nodes", "8", "--colors", "4", "--density", "0.6", "--seed", "1",
        "--count", "2", "--out", ds.to_str().unwrap(),
    ]);
    let output = mccp(&[
        "bench", "--dir", ds.to_str().unwrap(), "--mode", "greedy", "--max-iters", "50",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("nodes,colors,density,instance,mode,seed,value,elapsed_s\n"));
    assert_eq!(text.lines().count(), 4);
}
