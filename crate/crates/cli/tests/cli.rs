//! End-to-end tests of the command-line interface and its exit-code
//! contract (0 = success, 1 = operational error, 2 = claim violation).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treematch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_family_path() {
    let out = run(&["compute", "--family", "path", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("2.8284271"), "{text}");
    assert!(text.contains("x^3 - 2x"));
}

#[test]
fn compute_graph6_p4_json() {
    let out = run(&["compute", "--graph6", "Ch", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["matching_counts"], serde_json::json!(["1", "3", "1"]));
    assert_eq!(v["hosoya_index"], "5");
    assert!((v["matching_energy"].as_f64().unwrap() - 2.0 * 5f64.sqrt()).abs() < 1e-9);
}

#[test]
fn compute_star_complement() {
    let out = run(&[
        "compute",
        "--family",
        "star",
        "--n",
        "4",
        "--complement",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["matching_counts"], serde_json::json!(["1", "3", "0"]));
}

#[test]
fn compute_from_stdin_edge_list() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treematch"))
        .args(["compute", "--stdin", "--format", "tsv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"4\n0 1\n1 2\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("1 3 1"));
}

#[test]
fn compute_requires_one_source() {
    let out = run(&["compute", "--graph6", "Ch", "--stdin"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_rejects_too_fine_precision() {
    let out = run(&[
        "compute",
        "--family",
        "path",
        "--n",
        "4",
        "--precision",
        "1e-16",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_counts_and_annotations() {
    let out = run(&["enumerate", "--n", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 11);

    let out = run(&["enumerate", "--n", "6", "--perfect-matching", "--annotate"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[1], "3"); // nu = n/2
    }

    let out = run(&[
        "enumerate",
        "--n",
        "6",
        "--nu-equals",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn family_output_matches_enumeration_member() {
    let out = run(&["family", "t_n_p", "--n", "9", "--p", "3", "--annotate"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let cols: Vec<&str> = text.trim_end().split('\t').collect();
    assert_eq!(cols[1], "3");
    assert_eq!(cols[2], "6");

    let out = run(&["family", "t_n_p", "--n", "10", "--p", "7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn transform_round_trip() {
    let out = run(&[
        "transform",
        "--spec-json",
        r#"{"kind":"f1","base":"A_","u":0,"m":1,"n":1}"#,
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["dominance"]["matches_theorem"], true);
    assert_eq!(v["identity"]["holds"], true);
    assert!(v["before_graph6"].is_string() && v["after_graph6"].is_string());

    let out = run(&["transform", "--spec-json", r#"{"kind":"f3","m":1,"n":5}"#]);
    assert_eq!(out.status.code(), Some(1)); // violated bound named on stderr
    assert!(String::from_utf8_lossy(&out.stderr).contains("m >= n >= 2"));
}

#[test]
fn verify_exit_codes_and_report_shape() {
    let out = run(&["verify", "thm1", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["population"], 11);
    assert!(v["witnesses"]["maximum"]["graph6"].is_string());
    assert!(v["comparisons"].as_array().unwrap().len() == 10);

    let out = run(&["verify", "thm2", "--n", "10", "--p", "7"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "nonsense", "--n", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_report_written_to_file() {
    let dir = std::env::temp_dir().join("treematch-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("remark2.json");
    let out = run(&[
        "verify",
        "remark2",
        "--n",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["theorem"], "remark2");
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_transforms_seed_echoed() {
    let out = run(&["verify", "transforms", "--samples", "3", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["samples"], 3);
    assert_eq!(v["population"], 18);
}

#[test]
fn jobs_env_var_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_treematch"))
        .args(["verify", "remark2", "--n", "6"])
        .env("TREEMATCH_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn jobs_flag_does_not_change_output() {
    let a = run(&["verify", "thm1", "--n", "9", "--jobs", "1"]);
    let b = run(&["verify", "thm1", "--n", "9", "--jobs", "4"]);
    let strip = |out: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout_of(out)).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}
