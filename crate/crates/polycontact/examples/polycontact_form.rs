//! Build the polycontact form on R^{4|4} and look at it three ways:
//! componentwise, restricted to the even body, and as the exterior
//! derivative corrected by the covariant derivatives.
//!
//!     cargo run --example polycontact_form

use polycontact::calculus::VectorValuedForm;
use polycontact::susy::SusyFrame;
use std::collections::BTreeMap;

fn main() {
    let frame = SusyFrame::new();
    let alpha = frame.alpha();

    println!("alpha = {alpha}");
    println!("parity: {:?}", alpha.parity());

    // Setting th = thb = 0 leaves dx^mu in every slot: the form is nowhere
    // vanishing and reduces to the flat exterior derivative.
    let mut restricted = BTreeMap::new();
    for (slot, comp) in alpha.components() {
        restricted.insert(*slot, frame.restrict_odd_to_zero(comp));
    }
    let body = VectorValuedForm::from_components(frame.chart(), restricted).unwrap();
    println!("alpha at th = thb = 0: {body}");

    // alpha = d - dth^a D_a - dthb_a Db^a as tangent-valued forms.
    let ch = frame.chart();
    let mut d_comps = BTreeMap::new();
    for b in ch.base_ids() {
        d_comps.insert(*b, ch.gen(ch.fiber_of(*b).unwrap()));
    }
    let mut rhs = VectorValuedForm::from_components(ch, d_comps).unwrap();
    for a in 0..2 {
        let dth = ch.gen(ch.fiber_of(frame.th_ids()[a]).unwrap());
        let dthb = ch.gen(ch.fiber_of(frame.thb_ids()[a]).unwrap());
        rhs = rhs
            .sub(&VectorValuedForm::from_field(&frame.covariant(a).scale_form(&dth)))
            .unwrap();
        rhs = rhs
            .sub(&VectorValuedForm::from_field(&frame.covariant_bar(a).scale_form(&dthb)))
            .unwrap();
    }
    println!(
        "alpha equals d - dth^a D_a - dthb_a Db^a: {}",
        &rhs == alpha
    );
}
