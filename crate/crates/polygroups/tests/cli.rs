//! Golden output and exit-code tests for the command-line interface.

use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let code = polygroups::cli::run_with_output(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn fixture(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("polygroups-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

const F1: &str = "arity 3\norder 3\ntable\n0 1 2\n1 2 0\n2 0 1\nphi 0 1 2\nb 1\n";
const F2: &str = "arity 3\norder 3\ntable\n0 1 2\n1 2 0\n2 0 1\nphi 0 1 2\nb 2\n";

#[test]
fn enumerate_k2_golden() {
    let (code, out) = run(&["enumerate", "--k", "2", "--n", "3", "--table-check"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "class 0 group=Z2 phi=0,1 b=0 commutative=1 medial=1 idempotent=1\n\
         class 1 group=Z2 phi=0,1 b=1 commutative=1 medial=1 idempotent=0\n\
         counts all=2 commutative=2 commutative_idempotent=1 \
         noncommutative_medial_idempotent=0 noncommutative_medial_nonidempotent=0 non_medial=0\n"
    );
}

#[test]
fn enumerate_is_thread_count_invariant() {
    let (c1, single) = run(&["enumerate", "--k", "4", "--n", "5", "--threads", "1"]);
    let (c4, multi) = run(&["enumerate", "--k", "4", "--n", "5", "--threads", "4"]);
    assert_eq!(c1, 0);
    assert_eq!(c4, 0);
    assert_eq!(single, multi);
}

#[test]
fn iso_witness_golden() {
    let f1 = fixture("iso_f1.hg", F1);
    let f2 = fixture("iso_f2.hg", F2);
    let (code, out) = run(&["iso", f1.to_str().unwrap(), f2.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "h: 0->0 1->2 2->1\n");
}

#[test]
fn iso_negative_prints_none() {
    // x + 2y + z is idempotent, the shifted sum is not
    let f1 = fixture("neg_twist.hg", &F1.replace("phi 0 1 2", "phi 0 2 1").replace("b 1", "b 0"));
    let f2 = fixture("neg_f1.hg", F1);
    let (code, out) = run(&["iso", f1.to_str().unwrap(), f2.to_str().unwrap(), "--oracle"]);
    assert_eq!(code, 1);
    assert_eq!(out, "none\n");
}

#[test]
fn verify_golden() {
    let nop = fixture(
        "sum3.nop",
        "arity 3\norder 3\nvalues\n0 1 2\n1 2 0\n2 0 1\n1 2 0\n2 0 1\n0 1 2\n2 0 1\n0 1 2\n1 2 0\n",
    );
    let (code, out) = run(&["verify", nop.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "verdict: holds\ncommutative=1 medial=1 idempotent=0\n");
}

#[test]
fn verify_failure_prints_witness() {
    // constant operation: no solvability anywhere
    let nop = fixture("const.nop", &format!("arity 3\norder 2\nvalues\n{}", "0 0\n".repeat(4)));
    let (code, out) = run(&["verify", nop.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("verdict: fails"), "{out}");
}

#[test]
fn skew_golden() {
    let f1 = fixture("skew_f1.hg", F1);
    let (code, out) = run(&["skew", f1.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "skew: 0->2 1->1 2->0");
    assert_eq!(out.lines().nth(1).unwrap(), "hat: 0->1 1->1 2->1");
}

#[test]
fn decompose_reemits_parseable_spec() {
    let f1 = fixture("dec_f1.hg", F1);
    let (code, out) = run(&["decompose", f1.to_str().unwrap(), "--at", "0"]);
    assert_eq!(code, 0);
    polygroups::io::parse_hg(&out).unwrap();
}

#[test]
fn independence_golden() {
    let hg = fixture("ind.hg", "arity 3\norder 5\ntable\n0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\nphi 0 1 2 3 4\nb 0\n");
    let (code, out) = run(&["independence", "--hg", hg.to_str().unwrap(), "--set", "1", "--family", "m"]);
    assert_eq!(code, 0);
    assert_eq!(out, "independent\n");
    let (code, out) = run(&["independence", "--hg", hg.to_str().unwrap(), "--set", "1,2", "--family", "g"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().next().unwrap(), "dependent");
}

#[test]
fn characterize_golden() {
    let nop = fixture(
        "char_sum3.nop",
        "arity 3\norder 3\nvalues\n0 1 2\n1 2 0\n2 0 1\n1 2 0\n2 0 1\n0 1 2\n2 0 1\n0 1 2\n1 2 0\n",
    );
    let (code, out) = run(&["characterize", nop.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "semigroup=1\ngroup=1\nsokolov=1\nneutral_sequences=1\ntranslations=1,1\ntyutin=1\nform19=0\nexponential t=1 anchor=0\n"
    );
}

#[test]
fn parse_errors_exit_2() {
    let (code, _) = run(&["verify", "/nonexistent/path.nop"]);
    assert_eq!(code, 2);
    let bad = fixture("bad.nop", "arity 3\norder 2\nvalues\n0 1\n");
    let (code, _) = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _) = run(&["enumerate", "--k", "9", "--n", "3"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["enumerate", "--k", "2", "--n", "3", "--frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn budget_errors_exit_2() {
    let f1 = fixture("budget_f1.hg", F1);
    let (code, _) = run(&["--dense-budget", "4", "construct", "--hg", f1.to_str().unwrap(), "--dense-out", "/tmp/never.nop"]);
    assert_eq!(code, 2);
}

#[test]
fn seed_is_accepted_globally() {
    let f1 = fixture("seed_f1.hg", F1);
    let (a_code, a) = run(&["--seed", "7", "skew", f1.to_str().unwrap()]);
    let (b_code, b) = run(&["--seed", "8", "skew", f1.to_str().unwrap()]);
    assert_eq!(a_code, 0);
    assert_eq!(b_code, 0);
    assert_eq!(a, b);
}

#[test]
fn retract_emits_group_table() {
    let f5 = fixture("ret5.hg", &F1.replace("arity 3", "arity 5"));
    let (code, out) = run(&["retract", f5.to_str().unwrap(), "--at", "0", "--arity", "3"]);
    assert_eq!(code, 0);
    let cfg = polygroups::Config::default();
    let op = polygroups::io::parse_nop(&out, &cfg).unwrap();
    assert_eq!(op.arity(), 3);
}
