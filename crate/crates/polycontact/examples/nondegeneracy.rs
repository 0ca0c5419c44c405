//! d(alpha) is non-degenerate on the covariant-derivative span: the
//! contraction displays and the body-rank criterion.
//!
//!     cargo run --example nondegeneracy

use polycontact::calculus::{exterior_derivative, interior_product, nondegeneracy_check};
use polycontact::susy::SusyFrame;

fn main() {
    let frame = SusyFrame::new();
    let d_alpha = exterior_derivative(frame.alpha());
    println!("d(alpha) = {d_alpha}");

    for (name, field) in [
        ("D1", frame.covariant(0)),
        ("D2", frame.covariant(1)),
        ("Db1", frame.covariant_bar(0)),
        ("Db2", frame.covariant_bar(1)),
    ] {
        let c = interior_product(field, &d_alpha).unwrap();
        println!("i_({name}, d(alpha)) = {c}");
    }

    let (full, _) = nondegeneracy_check(&d_alpha, &frame.covariant_basis()).unwrap();
    println!("body rank full on span{{D, Db}}: {full}");

    // alpha itself is degenerate there: the whole span is its kernel.
    let (ok, witness) = nondegeneracy_check(frame.alpha(), &frame.covariant_basis()).unwrap();
    println!("alpha non-degenerate on the same span: {ok}");
    if let Some(w) = witness {
        let rendered: Vec<String> = w.iter().map(|p| p.to_string()).collect();
        println!("kernel witness coefficients: [{}]", rendered.join(", "));
    }
}
