//! The supercharges, translations and the R generator are strict
//! infinitesimal symmetries of alpha; a generic direction is not.
//!
//!     cargo run --example strict_symmetries

use polycontact::calculus::{lie_derivative, VectorField};
use polycontact::susy::SusyFrame;
use std::collections::BTreeMap;

fn main() {
    let frame = SusyFrame::new();
    let alpha = frame.alpha();

    let mut fields: Vec<(String, VectorField)> = Vec::new();
    for a in 0..2 {
        fields.push((format!("Q{}", a + 1), frame.supercharge(a).clone()));
        fields.push((format!("Qb{}", a + 1), frame.supercharge_bar(a).clone()));
    }
    for mu in 0..4 {
        fields.push((format!("P{mu}"), frame.translation(mu).clone()));
    }
    fields.push(("R".into(), frame.r_symmetry().clone()));

    for (name, field) in &fields {
        let l = lie_derivative(field, alpha).unwrap();
        println!("L_({name}, alpha) = {l}");
    }

    // Negative control: the Euler direction th1 d/dth1 deforms alpha.
    let ch = frame.chart();
    let mut comps = BTreeMap::new();
    comps.insert(frame.th_ids()[0], ch.gen(frame.th_ids()[0]));
    let control = VectorField::from_components(ch, comps).unwrap();
    let l = lie_derivative(&control, alpha).unwrap();
    println!("L_(th1*@th1, alpha) = {l}");
}
