//! Every vector field splits into a covariant-derivative part (killing
//! alpha) and a translation part (killing d alpha).
//!
//!     cargo run --example decompose_field

use polycontact::calculus::{exterior_derivative, interior_product};
use polycontact::susy::SusyFrame;

fn main() {
    let frame = SusyFrame::new();
    let d_alpha = exterior_derivative(frame.alpha());

    let named = [
        ("Q1", frame.supercharge(0).clone()),
        ("Qb1", frame.supercharge_bar(0).clone()),
        ("R", frame.r_symmetry().clone()),
        ("P2", frame.translation(2).clone()),
    ];
    for (name, field) in named {
        let (x_d, x_p) = frame.decompose(&field).unwrap();
        println!("{name}:");
        println!("  covariant part:   {x_d}");
        println!("  translation part: {x_p}");
        let ia = interior_product(&x_d, frame.alpha()).unwrap();
        let ida = interior_product(&x_p, &d_alpha).unwrap();
        println!(
            "  i_(covariant, alpha) = {}; i_(translation, d(alpha)) = {}",
            ia, ida
        );
    }
}
