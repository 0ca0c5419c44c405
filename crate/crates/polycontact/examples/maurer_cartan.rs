//! The polycontact form out of the coset construction: the adjoint series
//! of the parametrization terminates after one bracket and its translation
//! block is exactly alpha.
//!
//!     cargo run --example maurer_cartan

use polycontact::susy::{coset_parametrization, maurer_cartan, SusyFrame, TranslationAlgebra};

fn main() {
    let frame = SusyFrame::new();
    let algebra = TranslationAlgebra::new(&frame);
    let a = coset_parametrization(&algebra);

    let da = a.differential();
    let ad1 = a.bracket(&da).unwrap();
    let ad2 = a.bracket(&ad1).unwrap();
    println!("double adjoint of dA vanishes: {}", ad2.is_zero());

    let mc = maurer_cartan(&a, 8).unwrap();
    for k in 0..algebra.len() {
        let c = mc.coefficient(k);
        if !c.is_zero() {
            println!("coefficient of {:>3}: {c}", algebra.name(k));
        }
    }

    let translation = mc.translation_part();
    println!("translation block: {translation}");
    println!("equals alpha exactly: {}", &translation == frame.alpha());
}
