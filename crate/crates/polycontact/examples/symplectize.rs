//! One even direction up: omega = d(e^l alpha) is an even, closed,
//! non-degenerate vector-valued two-form on the cylinder.
//!
//!     cargo run --example symplectize

use polycontact::calculus::{exterior_derivative, nondegeneracy_check};
use polycontact::symplectization::Symplectization;

fn main() {
    let s = Symplectization::new();
    let omega = s.omega();

    println!("omega = {omega}");
    println!("parity: {:?}", omega.parity());
    println!("closed: {}", exterior_derivative(omega).is_zero());
    println!(
        "matches the coordinate display: {}",
        omega == &s.omega_display()
    );

    let (full, _) = nondegeneracy_check(omega, &s.coordinate_frame()).unwrap();
    println!("non-degenerate on the full coordinate frame: {full}");
}
