//! The kernel of the polycontact form is exactly the span of the SUSY
//! covariant derivatives: direct contractions plus the degree-bounded
//! completeness solve.
//!
//!     cargo run --example kernel_theorem

use polycontact::calculus::interior_product;
use polycontact::susy::solve::kernel_completeness;
use polycontact::susy::SusyFrame;

fn main() {
    let frame = SusyFrame::new();
    let alpha = frame.alpha();

    for (name, field) in [
        ("D1", frame.covariant(0)),
        ("D2", frame.covariant(1)),
        ("Db1", frame.covariant_bar(0)),
        ("Db2", frame.covariant_bar(1)),
    ] {
        let c = interior_product(field, alpha).unwrap();
        println!("i_({name}, alpha) = {c}");
    }
    let not_kernel = interior_product(frame.translation(0), alpha).unwrap();
    println!("i_(P0, alpha) = {not_kernel}   (not in the kernel)");

    // Completeness: every solution of i_X alpha = 0 over the bounded
    // ansatz is a covariant-coefficient combination of D and Db.
    let solve = kernel_completeness(&frame, 2);
    println!(
        "ansatz unknowns: {}, solution dimension: {} (expected {})",
        solve.unknowns, solve.nullity, solve.expected_nullity
    );
    println!(
        "every solution lies in span{{D, Db}}: {}",
        solve.residual_witness.is_none()
    );
}
