//! alpha is preserved exactly by the SUSY shift, translations, the phase
//! rotation, and a rational boost paired with its spinor representative.
//!
//!     cargo run --example invariance

use polycontact::susy::{
    boost_z_17_8, lorentz_map, r_phase_map, susy_map, translation_map, SusyFrame,
};

fn main() {
    let frame = SusyFrame::new();
    let alpha = frame.alpha();

    let (lambda, spinor) = boost_z_17_8();
    let maps = [
        ("susy shift", susy_map(&frame)),
        ("translation", translation_map(&frame)),
        ("phase rotation", r_phase_map(&frame)),
        (
            "z-boost (cosh 17/8, sinh 15/8, spinor diag(2, 1/2))",
            lorentz_map(&frame, &lambda, &spinor).expect("the pair intertwines"),
        ),
    ];
    for (name, map) in &maps {
        let transformed = map.transform_vector_valued(alpha).unwrap();
        println!("{name}: alpha preserved = {}", &transformed == alpha);
    }

    // A boost without its spinor partner fails the precheck.
    let mut id4 = lambda;
    for (mu, row) in id4.iter_mut().enumerate() {
        for (nu, e) in row.iter_mut().enumerate() {
            *e = if mu == nu {
                polycontact::rational::GaussianRational::one()
            } else {
                polycontact::rational::GaussianRational::zero()
            };
        }
    }
    match lorentz_map(&frame, &id4, &spinor) {
        Err(e) => println!("identity Lambda with the boost spinor is rejected:\n  {e}"),
        Ok(_) => println!("unexpected: mismatched pair accepted"),
    }
}
