//! Exact arithmetic in the supercommutative polynomial ring generated by
//! even and odd symbols over Gaussian rationals, with formal exponential
//! atoms and left derivatives.

pub mod context;
pub mod linear;
pub mod monomial;
pub mod poly;

pub use context::{GenId, Generator, GeneratorContext, GeneratorKind, Parity};
pub use monomial::{ExpAtom, Monomial};
pub use poly::SuperPoly;
