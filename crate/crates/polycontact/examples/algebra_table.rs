//! The graded commutator table of the distinguished fields.
//!
//!     cargo run --example algebra_table

use polycontact::calculus::{graded_commutator, VectorField};
use polycontact::susy::SusyFrame;

fn main() {
    let frame = SusyFrame::new();
    let named: Vec<(String, &VectorField)> = {
        let mut v: Vec<(String, &VectorField)> = Vec::new();
        for a in 0..2 {
            v.push((format!("Q{}", a + 1), frame.supercharge(a)));
        }
        for a in 0..2 {
            v.push((format!("Qb{}", a + 1), frame.supercharge_bar(a)));
        }
        for a in 0..2 {
            v.push((format!("D{}", a + 1), frame.covariant(a)));
        }
        for a in 0..2 {
            v.push((format!("Db{}", a + 1), frame.covariant_bar(a)));
        }
        v.push(("P0".into(), frame.translation(0)));
        v.push(("R".into(), frame.r_symmetry()));
        v
    };

    for (ln, lf) in &named {
        for (rn, rf) in &named {
            let bracket = graded_commutator(lf, rf).unwrap();
            if !bracket.is_zero() {
                println!("[{ln}, {rn}] = {bracket}");
            }
        }
    }
    println!("(all omitted brackets vanish)");
}
