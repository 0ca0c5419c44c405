//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Everything is exact; a criterion passes only if every identity it
//! covers holds as an equality of canonical forms.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use polycontact::catalogue::{run_checks, RunOptions, Selection};
use polycontact::laws::run_calculus_laws;
use polycontact::parse::{eval_str, Workspace};
use polycontact::report::CheckReport;
use polycontact::susy::verify::{
    verify_algebra_table, verify_decomposition, verify_invariance, verify_kernel_theorem,
    verify_maurer_cartan, verify_nondegeneracy, verify_reeb, verify_strict_contact,
    InvarianceKind,
};
use polycontact::susy::SusyFrame;
use polycontact::symplectization::{
    verify_block_decomposition, verify_cone, verify_symplectize, Cone, Symplectization,
};
use std::process::Command;

fn conclude(criterion: &str, report: &CheckReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {status} - {}", report.statement);
    assert!(
        report.passed(),
        "criterion {criterion} failed; witness: {:?}",
        report.witness
    );
}

#[test]
fn criterion_01_kernel_theorem() {
    // i_{D_a} alpha = i_{Db^a} alpha = 0 exactly, and the x-degree <= 2
    // general solution of i_X alpha = 0 is exactly span{D, Db}.
    let frame = SusyFrame::new();
    let report = verify_kernel_theorem(&frame, 2);
    conclude("01 (kernel theorem)", &report);
}

#[test]
fn criterion_02_nondegeneracy() {
    // d(alpha) and both covariant contractions reproduced exactly; full
    // body rank on span{D, Db}.
    let frame = SusyFrame::new();
    let report = verify_nondegeneracy(&frame);
    conclude("02 (non-degeneracy)", &report);
}

#[test]
fn criterion_03_maurer_cartan() {
    // Terminating adjoint series (double adjoint vanishes); the
    // translation block equals alpha byte-exactly after canonical
    // rendering.
    let frame = SusyFrame::new();
    let report = verify_maurer_cartan(&frame);
    conclude("03 (Maurer-Cartan)", &report);
}

#[test]
fn criterion_04_invariance() {
    // alpha preserved exactly under the SUSY shift, translations, the
    // phase rotation, and the rational z-boost (cosh 17/8, sinh 15/8,
    // spinor diag(2, 1/2)) after the intertwining precheck.
    let frame = SusyFrame::new();
    for kind in [
        InvarianceKind::Susy,
        InvarianceKind::Translation,
        InvarianceKind::Lorentz,
        InvarianceKind::RPhase,
    ] {
        let report = verify_invariance(&frame, kind);
        conclude(&format!("04 (invariance, {kind:?})"), &report);
    }
}

#[test]
fn criterion_05_strict_contact_fields() {
    // L_Q alpha = L_Qb alpha = L_P alpha = L_R alpha = 0 exactly, with the
    // th1 d/dth1 negative control nonzero.
    let frame = SusyFrame::new();
    let report = verify_strict_contact(&frame);
    conclude("05 (strict contact fields)", &report);
}

#[test]
fn criterion_06_reeb() {
    // Unique bounded-ansatz solution P_mu = d/dx^mu; homogeneous solution
    // space of dimension exactly one per direction.
    let frame = SusyFrame::new();
    let report = verify_reeb(&frame);
    conclude("06 (Reeb fields)", &report);
}

#[test]
fn criterion_07_algebra_table() {
    // The full bracket table: [Q,Qb] = 2i sigma P, [D,Db] = -2i sigma P,
    // all Q-D cross brackets zero, the R table - far more than twenty
    // exact identities.
    let frame = SusyFrame::new();
    let report = verify_algebra_table(&frame);
    conclude("07 (algebra table)", &report);
}

#[test]
fn criterion_08_decomposition() {
    // Q, Qb, R decompose into their exact closed forms; the split is
    // linear and idempotent on 50 randomized fields.
    let frame = SusyFrame::new();
    let report = verify_decomposition(&frame);
    conclude("08 (decomposition)", &report);
}

#[test]
fn criterion_09_polysymplectization() {
    // omega is even, closed, matches the coordinate display exactly, and
    // is non-degenerate by body rank; the block checks of the proof pass.
    let s = Symplectization::new();
    let report = verify_symplectize(&s);
    conclude("09 (polysymplectization)", &report);
    let report = verify_block_decomposition(&s);
    conclude("09 (block decomposition)", &report);
}

#[test]
fn criterion_10_cone() {
    // Dilation acts by the exact factor t^2; the cone form is closed.
    let c = Cone::new();
    let report = verify_cone(&c);
    conclude("10 (cone)", &report);
}

#[test]
fn criterion_11_calculus_laws() {
    // The randomized law suite at >= 200 cases per law, plus the
    // exhaustive product-oracle enumeration.
    let report = run_calculus_laws(200);
    conclude("11 (calculus laws)", &report);
}

#[test]
fn criterion_12_cli_contract() {
    // `verify all` exits 0 with 15 passing reports; the structured stream
    // keeps its schema; the display corpus round-trips through the plain
    // renderer; unknown ids exit 2.
    let exe = env!("CARGO_BIN_EXE_polycontact");

    let out = Command::new(exe)
        .args(["verify", "all", "--format", "structured"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "verify all must exit 0");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 15, "one structured record per catalogue entry");
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON record");
        let obj = v.as_object().unwrap();
        assert_eq!(obj.len(), 5, "exactly the five schema fields");
        assert_eq!(obj["status"], "pass");
        // Field order in the emitted stream is frozen.
        let positions: Vec<usize> = ["check_id", "statement", "status", "witness", "elapsed_ms"]
            .iter()
            .map(|k| line.find(&format!("\"{k}\":")).expect("field present"))
            .collect();
        assert!(
            positions.windows(2).all(|w| w[0] < w[1]),
            "schema field order is frozen"
        );
    }

    let out = Command::new(exe)
        .args(["verify", "bogus"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "unknown ids are usage errors");

    // Round-trip: every shipped display re-evaluates to itself from its
    // plain rendering.
    let ws = Workspace::new();
    for (label, value) in ws.display_corpus() {
        let rendered = value.to_string();
        let back = eval_str(&ws, &rendered)
            .unwrap_or_else(|e| panic!("corpus `{label}` failed to reparse `{rendered}`: {e}"));
        assert!(
            back == value,
            "corpus `{label}` changed under round-trip: `{rendered}`"
        );
    }
    println!("criterion 12 (CLI contract): PASS - structured stream, exit codes, and display corpus round-trip");
}

#[test]
fn full_catalogue_is_green() {
    let reports = run_checks(&Selection::All, &RunOptions::default()).unwrap();
    assert_eq!(reports.len(), 15);
    for r in &reports {
        assert!(r.passed(), "{} failed: {:?}", r.check_id, r.witness);
    }
}
