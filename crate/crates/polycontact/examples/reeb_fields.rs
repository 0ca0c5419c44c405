//! The Reeb fields of the polycontact structure: i_P alpha picks one
//! coordinate leg and i_P(d alpha) = 0. The bounded-ansatz solve shows the
//! translations are the only solutions.
//!
//!     cargo run --example reeb_fields

use polycontact::calculus::{exterior_derivative, interior_product};
use polycontact::susy::solve::reeb_solve;
use polycontact::susy::SusyFrame;

fn main() {
    let frame = SusyFrame::new();
    let d_alpha = exterior_derivative(frame.alpha());

    for mu in 0..4 {
        let p = frame.translation(mu);
        let c1 = interior_product(p, frame.alpha()).unwrap();
        let c2 = interior_product(p, &d_alpha).unwrap();
        println!("i_(P{mu}, alpha) = {c1};  i_(P{mu}, d(alpha)) = {c2}");

        let solve = reeb_solve(&frame, mu);
        println!(
            "  ansatz solution space dimension: {}; normalized solution: {}",
            solve.solution_dimension,
            solve
                .field
                .map(|f| f.to_string())
                .unwrap_or_else(|| "none".into())
        );
    }
}
