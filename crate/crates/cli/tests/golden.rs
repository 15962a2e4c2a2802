//! Byte-for-byte report snapshots. Regenerate with `UPDATE_GOLDEN=1`.

use std::path::{Path, PathBuf};
use std::process::Command;

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn check(name: &str, args: &[&str], expected_exit: i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_rsverify"))
        .args(args)
        .current_dir(dir("data"))
        .env_remove("LCALC_THREADS")
        .output()
        .expect("binary runs");
    assert_eq!(
        out.status.code(),
        Some(expected_exit),
        "{name}: stderr {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let got = String::from_utf8(out.stdout).expect("utf-8 report");
    let path = dir("golden").join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).expect("write golden");
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(got, want, "{name} drifted from {}", path.display());
}

#[test]
fn verify_sos() {
    check("verify_sos", &["verify", "sos"], 0);
}

#[test]
fn verify_sos_json() {
    check("verify_sos_json", &["--json", "verify", "sos"], 0);
}

#[test]
fn verify_case_4_1() {
    check("verify_case_4.1", &["verify", "case", "4.1"], 0);
}

#[test]
fn verify_case_4_4_3() {
    check("verify_case_4.4.3", &["verify", "case", "4.4.3"], 1);
}

#[test]
fn verify_case_5_3_3() {
    check("verify_case_5.3.3", &["verify", "case", "5.3.3"], 0);
}

#[test]
fn verify_case_perturbed() {
    check("verify_case_4.2_perturbed", &["verify", "case", "4.2", "--perturb"], 1);
}

#[test]
fn verify_all() {
    check("verify_all", &["--sequential", "verify", "all"], 1);
}

#[test]
fn verify_bridge() {
    check("verify_bridge", &["verify", "bridge"], 0);
}

#[test]
fn expand_twist_equivalent() {
    check(
        "expand_twist_equivalent",
        &["expand", "Ad(pi) (x) Ad(pi') tw chi", "--hyp", "twist_equivalent.hyp"],
        0,
    );
}

#[test]
fn expand_bare() {
    check("expand_bare", &["expand", "Sym^2(pi) (x) Sym^3(pi)", "--l", "2"], 0);
}

#[test]
fn poles_twist_equivalent() {
    check(
        "poles_twist_equivalent",
        &["poles", "Ad(pi) (x) Ad(pi') tw chi", "--hyp", "twist_equivalent.hyp"],
        1,
    );
}

#[test]
fn scan_builtin() {
    check(
        "scan_builtin",
        &["--sequential", "scan", "--form1", "delta", "--form2", "x0_11", "--char", "kron:-4", "--xmax", "300", "--lmax", "3"],
        0,
    );
}

#[test]
fn scan_table_character() {
    check(
        "scan_table_character",
        &[
            "--sequential", "scan", "--form1", "delta_small.tsv", "--form2", "x0_11", "--char",
            "file:mod5_quartic.tsv", "--xmax", "13", "--lmax", "3",
        ],
        0,
    );
}

#[test]
fn scan_deligne_violation() {
    check(
        "scan_deligne_violation",
        &["scan", "--form1", "deligne_violation.tsv", "--form2", "x0_11", "--xmax", "7"],
        1,
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "case", "9.9"][..],
        &["expand", "Ad("],
        &["scan", "--form1", "missing.tsv", "--form2", "delta"],
        &["frobnicate"],
    ] {
        let out = Command::new(env!("CARGO_BIN_EXE_rsverify"))
            .args(args)
            .current_dir(dir("data"))
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn thread_cap_does_not_change_reports() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_rsverify"))
            .args(["scan", "--form1", "delta", "--form2", "x0_11", "--char", "kron:-4", "--xmax", "200"])
            .env("LCALC_THREADS", threads)
            .output()
            .expect("binary runs")
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
