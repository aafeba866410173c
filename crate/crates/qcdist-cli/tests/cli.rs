//! End-to-end tests of the qcdist binary: outputs, formats, exit codes,
//! and byte determinism.

use std::process::{Command, Output};

fn qcdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qcdist_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcdist"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_mu_at_symmetric_point() {
    let out = qcdist(&["eval", "mu", "0.70710678118654752"]);
    assert!(out.status.success());
    assert!(
        stdout_of(&out).starts_with("1.57079632679"),
        "got {}",
        stdout_of(&out)
    );
}

#[test]
fn eval_eta_lands_in_window() {
    let out = qcdist(&["eval", "eta", "2", "2", "1"]);
    assert!(out.status.success());
    let v: f64 = stdout_of(&out).trim().parse().unwrap();
    assert!(v > 23.1407 && v < 79.66, "eta_2,2(1) = {v}");
}

#[test]
fn eval_enclosure_rendering() {
    let out = qcdist(&["eval", "main_bound", "2", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[bound-only]"), "got {text}");
    assert!(text.starts_with("0.."), "lower end is 0: {text}");
}

#[test]
fn eval_unknown_function_exits_2_with_registry() {
    let out = qcdist(&["eval", "frobnicate", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("registry"), "stderr: {err}");
}

#[test]
fn eval_domain_error_exits_2_naming_the_precondition() {
    let out = qcdist(&["eval", "mu", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("0 < r < 1"), "stderr: {err}");
}

#[test]
fn verify_single_suite_passes() {
    let out = qcdist(&["verify", "--suite", "elliptic", "--scale", "0.2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[PASS]"));
    assert!(text.contains("0 failures"));
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = qcdist(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_lines_parse() {
    let out = qcdist(&[
        "verify", "--suite", "mn-lemma", "--scale", "0.3", "--format", "json",
    ]);
    assert!(out.status.success());
    for line in stdout_of(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert!(v.get("check_id").is_some());
        assert!(v.get("margin").is_some());
    }
}

#[test]
fn table_c1_is_deterministic_and_monotone() {
    let a = qcdist(&["table", "c1", "--k", "1.01:5:50", "--grid", "log"]);
    let b = qcdist(&["table", "c1", "--k", "1.01:5:50", "--grid", "log"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical invocations must match bytes");

    let text = stdout_of(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "K,c1,c1_lower,c1_upper");
    let mut prev = -1.0;
    let mut rows = 0;
    for line in lines {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cols[1] > prev, "c1 column not monotone");
        assert!(
            cols[2] < cols[1] && cols[1] < cols[3],
            "sandwich violated in table"
        );
        prev = cols[1];
        rows += 1;
    }
    assert_eq!(rows, 50);
}

#[test]
fn table_parallel_matches_serial() {
    let serial = qcdist(&["table", "bounds", "--k", "1:17:33"]);
    let parallel = qcdist_with_env(
        &["table", "bounds", "--k", "1:17:33"],
        "QCDIST_THREADS",
        "4",
    );
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn table_bounds_planar_column_is_sharper() {
    let out = qcdist(&["table", "bounds", "--k", "1:17:33", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i12 = header
        .iter()
        .position(|c| *c == "eq12_nine_halves")
        .unwrap();
    let i13 = header.iter().position(|c| *c == "eq13_planar_b").unwrap();
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let eq12: f64 = cols[i12].parse().unwrap();
        let eq13: f64 = cols[i13].parse().unwrap();
        assert!(eq13 <= eq12, "planar bound must be the sharper one");
    }
}

#[test]
fn table_mn_lemma_reaches_17_at_step_36() {
    let out = qcdist(&["table", "mn-lemma", "--m", "3", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 38, "header plus rows k = 0..=36");
    let last: Vec<f64> = lines[37].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(last[0], 36.0);
    assert!(last[1] > 17.0);
    let before: Vec<f64> = lines[36].split(',').map(|c| c.parse().unwrap()).collect();
    assert!(before[1] < 17.0);
}

#[test]
fn table_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c1.csv");
    let out = qcdist(&[
        "table",
        "c1",
        "--k",
        "1.1:2:4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("K,c1,"));
    assert_eq!(written.lines().count(), 5);
}

#[test]
fn table_json_rows() {
    let out = qcdist(&["table", "c1", "--k", "1.1:2:3", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["K"].is_number());
        assert!(v["c1"].is_number());
    }
}

#[test]
fn mn_lemma_summary() {
    let out = qcdist(&["mn-lemma"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("a_36"));
    assert!(text.contains("> 17: true"));
    assert!(text.contains("converged       = true"));
}

#[test]
fn scan_conjecture_asserts_proven_slice() {
    let out = qcdist(&[
        "scan-conjecture",
        "--k",
        "1:2.5:4",
        "--t",
        "0.2:0.8:3",
        "--r",
        "0.2:0.8:3",
    ]);
    assert!(out.status.success(), "proven slice must pass");
    let text = stdout_of(&out);
    assert!(text.contains("# min_margin="));
    assert!(text.lines().next().unwrap().starts_with("check,K,t,r,"));
}

#[test]
fn scan_conjecture_rejects_bad_grid() {
    let out = qcdist(&["scan-conjecture", "--r", "0.5:1.5:3"]);
    assert_eq!(out.status.code(), Some(2));
}
