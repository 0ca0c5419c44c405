//! End-to-end tests of the command-line interface: exit statuses, the
//! structured report stream, determinism, and the eval/show surfaces.

use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polycontact"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_single_check_text_format() {
    let (code, stdout, _) = run(&["verify", "reeb"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("[PASS] reeb"));
    assert_eq!(stdout.lines().count(), 1);
}

#[test]
fn verify_subset_emits_in_catalogue_order() {
    let (code, stdout, _) = run(&[
        "verify",
        "cone",
        "nondegeneracy",
        "algebra-table",
        "--format",
        "structured",
    ]);
    assert_eq!(code, Some(0));
    let ids: Vec<String> = stdout
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["check_id"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(ids, ["nondegeneracy", "algebra-table", "cone"]);
}

#[test]
fn structured_reports_are_deterministic_modulo_elapsed() {
    let strip = |s: &str| {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                serde_json::to_string(&v).unwrap()
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    let (_, first, _) = run(&["verify", "calculus-laws", "decomposition", "--format", "structured"]);
    let (_, second, _) = run(&["verify", "calculus-laws", "decomposition", "--format", "structured"]);
    assert_eq!(strip(&first), strip(&second));
}

#[test]
fn unknown_check_id_is_a_usage_error() {
    let (code, _, stderr) = run(&["verify", "reeb", "bogus"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("bogus"));
}

#[test]
fn xdeg_flag_reaches_the_kernel_solve() {
    let (code, stdout, _) = run(&["verify", "kernel-theorem", "--xdeg", "1"]);
    assert_eq!(code, Some(0), "{stdout}");
    assert!(stdout.contains("[PASS] kernel-theorem"));
}

#[test]
fn eval_prints_canonical_forms() {
    let (code, stdout, _) = run(&["eval", "2*I*dth1"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "2*I*dth1");

    let (code, stdout, _) = run(&["eval", "i_(D1, alpha)"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "0");

    let (code, stdout, _) = run(&["eval", "[Q1, Qb1]"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "2*I*@x0 + 2*I*@x3");
}

#[test]
fn eval_reports_errors_with_positions() {
    let (code, _, stderr) = run(&["eval", "alpha + nope"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("nope"));
    assert!(stderr.contains("1:9"));
}

#[test]
fn show_plain_and_latex() {
    let (code, stdout, _) = run(&["show", "alpha"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("dx0"));
    assert!(stdout.contains("@x0"));

    let (code, stdout, _) = run(&["show", "alpha", "--latex"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains(r"dx^{\mu}"));
    assert!(stdout.contains(r"\sigma^{\mu}"));

    let (code, _, stderr) = run(&["show", "nonsense"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown object"));
}

#[test]
fn show_alpha_round_trips_through_eval() {
    let (_, shown, _) = run(&["show", "alpha"]);
    let (code, evaluated, _) = run(&["eval", shown.trim()]);
    assert_eq!(code, Some(0));
    assert_eq!(evaluated.trim(), shown.trim());
}
