//! End-to-end checks of the binary: output shapes, exit codes, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-crystal"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn minor_example() {
    assert_eq!(
        stdout(&["minor", "C", "2", "--fund", "1", "--w", "1"]),
        "a^{L1}*(Y[1,1] + Y[2,2]*Y[2,1]^-1)\n"
    );
}

#[test]
fn demazure_example() {
    let out = stdout(&["demazure", "C", "2", "--highest", "Y[1,2]", "--word", "1,2"]);
    assert!(out.starts_with("4 monomials:\n"), "{out}");
    assert!(out.contains("Y[2,2]*Y[2,1]^-2\n"), "{out}");
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = stdout(&["verify", "B", "2"]);
    let b = stdout(&["verify", "B", "2"]);
    assert_eq!(a, b);
    assert!(a.ends_with("coverage: 6/6 distinct variables, exact\nPASS\n"), "{a}");
}

#[test]
fn seed_dot_shape() {
    let out = stdout(&["seed", "B", "2", "--dot"]);
    assert!(out.starts_with("digraph seed {\n"));
    assert!(out.contains("\"x[2]\" -> \"x[3]\" [label=\"2\"];"), "{out}");
}

#[test]
fn json_round_trips() {
    let out = stdout(&["seed", "C", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["columns"].as_array().unwrap().len(), 3);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["seed", "Z", "2"]).status.code(), Some(2));
    assert_eq!(run(&["seed", "A", "2"]).status.code(), Some(2));
    assert_eq!(run(&["seed", "D", "2"]).status.code(), Some(2));
    assert_eq!(run(&["minor", "C", "2", "--fund", "5"]).status.code(), Some(2));
    assert_eq!(
        run(&["demazure", "C", "2", "--highest", "Y[3,1]^-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("cluster-crystal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("minor.txt");
    let args = ["minor", "C", "2", "--fund", "1", "--w", "1", "--out"];
    let out = run(&[&args[..], &[path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "a^{L1}*(Y[1,1] + Y[2,2]*Y[2,1]^-1)\n"
    );
}
