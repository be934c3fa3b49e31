use std::process::{Command, Output};

use skeinlab::formats::{parse_partition, parse_permutation};

fn skeinlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(args)
        .env_remove("SKEINLAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = skeinlab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn chord_resolution() {
    assert_eq!(stdout_of(&["resolve", "1 3 / 2 4"]), "-1\t1 2 / 3 4\n-1\t1 4 / 2 3\n");
    assert_eq!(stdout_of(&["--format", "human", "resolve", "1 3 / 2 4"]), "-{1 2 / 3 4} - {1 4 / 2 3}\n");
}

#[test]
fn rotation_acts_with_sign() {
    let out = stdout_of(&["act", "1 2 3 4 5 6 -> 2 3 4 5 6 1", "1 5 6 / 2 4 / 3"]);
    assert_eq!(out, "-1\t1 2 6 / 3 5 / 4\n");
    assert_eq!(out, stdout_of(&["act", "2 3 4 5 6 1", "1 5 6 / 2 4 / 3"]));
}

#[test]
fn narayana_count() {
    assert_eq!(stdout_of(&["enumerate", "4", "--k", "2", "--noncrossing", "--count"]), "6\n");
    assert_eq!(stdout_of(&["--format", "json-lines", "enumerate", "3", "--count"]), "{\"count\":5}\n");
}

#[test]
fn printed_partitions_parse_back() {
    for line in stdout_of(&["enumerate", "5"]).lines() {
        assert_eq!(parse_partition(line).unwrap().to_string(), line);
    }
    for line in stdout_of(&["resolve", "1 4 7 / 2 5 8 / 3 6"]).lines() {
        let (_, p) = line.split_once('\t').unwrap();
        assert!(parse_partition(p).unwrap().is_noncrossing());
    }
    let w = parse_permutation("1 2 3 -> 3 1 2").unwrap();
    assert_eq!(parse_permutation(&w.images().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")).unwrap(), w);
}

#[test]
fn frobenius_of_a_stratum() {
    assert_eq!(stdout_of(&["frobenius", "9", "5", "--m", "1"]), "1\t(5,4)\n1\t(4,4,1)\n");
    assert_eq!(stdout_of(&["--format", "human", "frobenius", "6", "3", "--m", "0"]), "s(3,3)\n");
    let json = stdout_of(&["--format", "json-lines", "frobenius", "4", "2", "--m", "0"]);
    assert_eq!(json, "{\"coefficient\":1,\"shape\":[2,2]}\n");
}

#[test]
fn domain_errors_exit_one() {
    let out = skeinlab(&["resolve", "1 3 / 2 x"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("column 9") && err.contains("expected an integer"), "{err}");

    assert_eq!(skeinlab(&["sigma", "1 2 / 3 4"]).status.code(), Some(1));
    assert_eq!(skeinlab(&["act", "2 1 3", "1 2 / 3 4"]).status.code(), Some(1));
    assert_eq!(skeinlab(&["frobenius", "10", "2"]).status.code(), Some(1));
    assert_eq!(skeinlab(&["verify", "--nmax", "8"]).status.code(), Some(1));
    assert_eq!(skeinlab(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_threads() {
    let one = stdout_of(&["verify", "--nmax", "4", "--threads", "1"]);
    let many = stdout_of(&["verify", "--nmax", "4", "--threads", "8"]);
    assert_eq!(one, many);
    let env = Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(["verify", "--nmax", "4"])
        .env("SKEINLAB_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), one);
    assert!(one.lines().all(|l| l.ends_with("\tPASS")));
}

#[test]
fn degenerate_verify() {
    let out = stdout_of(&["verify", "--nmax", "2"]);
    assert!(out.lines().count() >= 20);
    assert!(!out.contains("FAIL"));
}

#[test]
fn fermion_printing() {
    assert_eq!(stdout_of(&["fermion", "1 3 / 2"]), "-1\tt1 x1 x2\n-1\tt3 x2 x3\n");
    assert_eq!(stdout_of(&["fermion", "--kind", "f", "1 3 / 2"]), "-1\tt1 x1\n1\tt1 x2\n-1\tt3 x2\n1\tt3 x3\n");
    let g = stdout_of(&["--format", "human", "fermion", "--kind", "G", "2 1 | 3"]);
    assert!(!g.trim().is_empty());
    assert_eq!(stdout_of(&["fermion", "1 / 2"]), "1\tx1 x2\n");
}
