//! The cone form varpi = d(r^2 alpha) and the exact dilation identity:
//! pulling back along r -> t r multiplies varpi by t^2, as a ring identity
//! in the formal scale t.
//!
//!     cargo run --example cone_dilation

use polycontact::calculus::exterior_derivative;
use polycontact::symplectization::Cone;

fn main() {
    let cone = Cone::new();
    let varpi = cone.varpi();

    println!("varpi = {varpi}");
    println!("closed: {}", exterior_derivative(varpi).is_zero());

    let dilated = cone.dilation().transform_vector_valued(varpi).unwrap();
    println!("dilated varpi = {dilated}");

    let t_sq = cone.chart().gen_named("t").unwrap().pow(2).unwrap();
    println!(
        "dilated equals t^2 varpi exactly: {}",
        dilated == varpi.scale_form(&t_sq)
    );
}
