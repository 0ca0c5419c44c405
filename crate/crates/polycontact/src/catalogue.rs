//! The named check catalogue behind `verify`.

use crate::laws::{run_calculus_laws, CASES_PER_LAW};
use crate::report::CheckReport;
use crate::susy::verify::{
    verify_algebra_table, verify_decomposition, verify_invariance, verify_kernel_theorem,
    verify_maurer_cartan, verify_nondegeneracy, verify_reeb, verify_strict_contact,
    InvarianceKind,
};
use crate::susy::SusyFrame;
use crate::symplectization::{verify_block_decomposition, verify_cone, verify_symplectize, Cone, Symplectization};
use thiserror::Error;

/// Catalogue order is the emission order of every report stream.
pub const CHECK_IDS: [&str; 15] = [
    "kernel-theorem",
    "nondegeneracy",
    "invariance-susy",
    "invariance-translation",
    "invariance-lorentz",
    "invariance-rphase",
    "strict-contact",
    "reeb",
    "algebra-table",
    "decomposition",
    "maurer-cartan",
    "symplectize",
    "cone",
    "block-decomposition",
    "calculus-laws",
];

#[derive(Debug, Error)]
#[error("unknown check id `{0}`; known ids: {ids}", ids = CHECK_IDS.join(", "))]
pub struct UnknownCheck(pub String);

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// x-degree bound for the ansatz solves.
    pub x_degree: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { x_degree: 2 }
    }
}

#[derive(Debug, Clone)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    pub fn from_args(args: &[String]) -> Selection {
        if args.len() == 1 && args[0] == "all" {
            Selection::All
        } else {
            Selection::Ids(args.to_vec())
        }
    }
}

pub fn run_check(id: &str, opts: &RunOptions) -> Result<CheckReport, UnknownCheck> {
    let report = match id {
        "kernel-theorem" => verify_kernel_theorem(&SusyFrame::new(), opts.x_degree),
        "nondegeneracy" => verify_nondegeneracy(&SusyFrame::new()),
        "invariance-susy" => verify_invariance(&SusyFrame::new(), InvarianceKind::Susy),
        "invariance-translation" => {
            verify_invariance(&SusyFrame::new(), InvarianceKind::Translation)
        }
        "invariance-lorentz" => verify_invariance(&SusyFrame::new(), InvarianceKind::Lorentz),
        "invariance-rphase" => verify_invariance(&SusyFrame::new(), InvarianceKind::RPhase),
        "strict-contact" => verify_strict_contact(&SusyFrame::new()),
        "reeb" => verify_reeb(&SusyFrame::new()),
        "algebra-table" => verify_algebra_table(&SusyFrame::new()),
        "decomposition" => verify_decomposition(&SusyFrame::new()),
        "maurer-cartan" => verify_maurer_cartan(&SusyFrame::new()),
        "symplectize" => verify_symplectize(&Symplectization::new()),
        "cone" => verify_cone(&Cone::new()),
        "block-decomposition" => verify_block_decomposition(&Symplectization::new()),
        "calculus-laws" => run_calculus_laws(CASES_PER_LAW),
        other => return Err(UnknownCheck(other.to_string())),
    };
    Ok(report)
}

/// Run the selected checks in catalogue order. Unknown ids fail up front,
/// before any check executes.
pub fn run_checks(selection: &Selection, opts: &RunOptions) -> Result<Vec<CheckReport>, UnknownCheck> {
    let ids: Vec<&str> = match selection {
        Selection::All => CHECK_IDS.to_vec(),
        Selection::Ids(list) => {
            for id in list {
                if !CHECK_IDS.contains(&id.as_str()) {
                    return Err(UnknownCheck(id.clone()));
                }
            }
            CHECK_IDS
                .iter()
                .copied()
                .filter(|id| list.iter().any(|want| want == id))
                .collect()
        }
    };
    ids.into_iter().map(|id| run_check(id, opts)).collect()
}
