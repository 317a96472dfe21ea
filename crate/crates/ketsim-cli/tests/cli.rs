use std::path::PathBuf;
use std::process::{Command, Output};

const HEADER: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

fn ketsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ketsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, format!("{HEADER}{body}")).expect("write fixture");
    path
}

fn run_file(name: &str, body: &str, extra: &[&str]) -> Output {
    let path = fixture(name, body);
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    ketsim(&args)
}

#[test]
fn statevector_of_a_hadamard() {
    let out = run_file("h.qasm", "qreg q[1];\nh q[0];\n", &["--statevector"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0.70711 |0>  0.70711 |1>\n");

    let out = run_file("h_default.qasm", "qreg q[1];\nh q[0];\n", &["--precision", "2"]);
    assert_eq!(stdout(&out), "0.71 |0>  0.71 |1>\n");
}

#[test]
fn seeded_counts_repeat() {
    let body = "qreg q[2];\ncreg c[2];\nh q[0];\nh q[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n";
    let a = run_file("hh_a.qasm", body, &["--shots", "500", "--seed", "9"]);
    let b = run_file("hh_b.qasm", body, &["--shots", "500", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let total: u64 = stdout(&a)
        .split_whitespace()
        .map(|term| term.split('|').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 500);
}

#[test]
fn counts_key_reverses_the_register() {
    let body = "qreg q[2];\ncreg c[2];\nx q[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n";
    let out = run_file("x1.qasm", body, &["--shots", "10", "--seed", "1"]);
    assert_eq!(stdout(&out), "10|01>\n");
}

#[test]
fn unseeded_counts_report_the_seed() {
    let body = "qreg q[1];\ncreg c[1];\nh q[0];\nmeasure q[0] -> c[0];\n";
    let out = run_file("seedless.qasm", body, &[]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    let seed = err.trim().strip_prefix("seed: ").expect("seed line");
    let again = run_file("seeded.qasm", body, &["--seed", seed]);
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn parse_failures_exit_2() {
    let unknown = run_file("unknown.qasm", "qreg q[1];\nfoo q[0];\n", &[]);
    assert_eq!(unknown.status.code(), Some(2));
    let malformed = run_file("malformed.qasm", "qreg q[1;\n", &[]);
    assert_eq!(malformed.status.code(), Some(2));
    let range = run_file("range.qasm", "qreg q[1];\nh q[3];\n", &[]);
    assert_eq!(range.status.code(), Some(2));
}

#[test]
fn usage_failures_exit_3() {
    assert_eq!(ketsim(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(ketsim(&["run"]).status.code(), Some(3));
    assert_eq!(ketsim(&["run", "/nonexistent/file.qasm"]).status.code(), Some(3));
    let measured = run_file("measured.qasm", "qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n", &["--statevector"]);
    assert_eq!(measured.status.code(), Some(3));
    let zero = run_file("zero_shots.qasm", "qreg q[1];\n", &["--shots", "0"]);
    assert_eq!(zero.status.code(), Some(3));
    assert_eq!(ketsim(&["--help"]).status.code(), Some(0));
    assert_eq!(ketsim(&["--version"]).status.code(), Some(0));
}

#[test]
fn demo_flag_combinations_are_checked() {
    for args in [
        ["demo", "coin", "--paper-compat"].as_slice(),
        &["demo", "grover", "--balance-odds"],
        &["demo", "dj", "--flips", "10"],
        &["demo", "bv", "--marked", "01"],
        &["demo", "deutsch", "--qubits", "3"],
        &["demo", "qft", "--reveal"],
        &["demo", "grover", "--marked", "011", "--qubits", "4"],
        &["demo", "grover", "--marked", "01x"],
        &["demo", "qft", "--marked", "011"],
        &["demo", "dj", "--qubits", "1"],
    ] {
        assert_eq!(ketsim(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn emit_is_a_fixpoint() {
    let body = "qreg q[2];\nqreg r[1];\ncreg c[3];\niden q[0];\ncx q[0],r[0];\ncu1(0.7853981633974483) q[1],q[0]; // quarter turn\nmeasure q[1] -> c[2];\n";
    let first = ketsim(&["emit", fixture("emit.qasm", body).to_str().unwrap()]);
    assert!(first.status.success());
    let listing = stdout(&first);
    assert!(listing.contains("id q[0];"));
    assert!(!listing.contains("iden"));
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("emit_again.qasm");
    std::fs::write(&path, &listing).unwrap();
    let second = ketsim(&["emit", path.to_str().unwrap()]);
    assert_eq!(stdout(&second), listing);
}

#[test]
fn grover_demo_finds_the_marked_state() {
    let out = ketsim(&["demo", "grover", "--marked", "0110", "--seed", "2019", "--shots", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Grover iterations: 3"));
    assert!(text.contains("-0.98047 |0110>"));
    let results = text.split("Measurement Results ___\n").nth(1).unwrap();
    let (count, ket) = results.split_whitespace().next().unwrap().split_once('|').unwrap();
    assert_eq!(ket, "0110>");
    assert!(count.parse::<u64>().unwrap() >= 90);
}

#[test]
fn qft_demo_in_control_position_mode() {
    let out = ketsim(&["demo", "qft", "--qubits", "3", "--paper-compat"]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    let text = stdout(&out);
    let after = text.split("After QFT ___\n").nth(1).unwrap().lines().next().unwrap();
    assert_eq!(
        after,
        "0.35355 |000>  0.25+0.25j |100>  0.25+0.25j |010>  0.35355j |110>  \
         -0.35355 |001>  -0.25-0.25j |101>  -0.25-0.25j |011>  -0.35355j |111>"
    );
    assert!(text.ends_with("Inverse QFT ___\n1.0 |001>\n"));
}

#[test]
fn qft_search_demo_marks_the_pattern() {
    for (pattern, ket) in [("00", "|00>"), ("10", "|10>"), ("01", "|01>"), ("11", "|11>")] {
        let out = ketsim(&["demo", "qft", "--marked", pattern]);
        let text = stdout(&out);
        let state = text.lines().last().unwrap();
        assert_eq!(state.split_whitespace().nth(1), Some(ket), "{text}");
    }
}

#[test]
fn coin_demo_scores_every_flip() {
    for flips in ["100", "7"] {
        let out = ketsim(&["demo", "coin", "--flips", flips, "--seed", "5"]);
        let text = stdout(&out);
        let score = text.lines().find(|l| l.starts_with("Final Score")).unwrap();
        let numbers: Vec<u64> = score
            .split_whitespace()
            .filter_map(|w| w.parse().ok())
            .collect();
        assert_eq!(numbers.iter().sum::<u64>(), flips.parse::<u64>().unwrap());
    }
}

#[test]
fn demos_repeat_under_a_seed() {
    for args in [
        ["deutsch", "--reveal"],
        ["dj", "--reveal"],
        ["bv", "--reveal"],
        ["simon", "--reveal"],
        ["grover", "--reveal"],
        ["coin", "--column"],
    ] {
        let name = args[0];
        let a = ketsim(&["demo", name, args[1], "--seed", "31"]);
        let b = ketsim(&["demo", name, args[1], "--seed", "31"]);
        assert!(a.status.success(), "{name}");
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
}

#[test]
fn oracle_demos_reach_the_hidden_answer() {
    for seed in 0..10u64 {
        let seed = seed.to_string();
        let out = stdout(&ketsim(&["demo", "bv", "--qubits", "4", "--seed", &seed, "--reveal"]));
        let found = out.lines().find_map(|l| l.strip_prefix("Conclusion: a = ")).unwrap();
        let hidden = out.lines().find_map(|l| l.strip_prefix("sneak peek: hidden a: ")).unwrap();
        assert_eq!(found, hidden);

        let out = stdout(&ketsim(&["demo", "dj", "--seed", &seed, "--reveal", "--balance-odds"]));
        let constant = out.contains("sneak peek: f: constant");
        assert_eq!(out.contains("Conclusion: f is a constant function"), constant);

        let out = stdout(&ketsim(&["demo", "deutsch", "--seed", &seed, "--reveal"]));
        assert!(out.contains("Conclusion: f is a"));
    }
}
