//! Exact symbolic kernel for Grassmann-graded differential geometry.
//!
//! The crate constructs the supersymmetric polycontact structure on the
//! superspace R^{4|4} and machine-checks its properties with exact
//! Gaussian-rational arithmetic: the kernel and non-degeneracy theorem,
//! the invariance group, the Reeb fields, the vector-field decomposition,
//! and the polysymplectization of the structure.
//!
//! Layers, from the bottom up:
//!
//! * [`algebra`] - the supercommutative polynomial ring over Q(i) with
//!   formal exponentials and left derivatives.
//! * [`calculus`] - charts, vector fields, vector-valued pseudoforms, the
//!   exterior/interior/Lie derivatives, graded commutators, pullbacks and
//!   the body-rank non-degeneracy test.
//! * [`susy`] - the concrete R^{4|4} model: sigma matrices, the
//!   supercharges and covariant derivatives, the polycontact form and the
//!   executable verification of every statement about it.
//! * [`symplectization`] - the extended spaces R^{4|4} x R and the cone,
//!   with the closed non-degenerate vector-valued two-forms they carry.
//! * [`catalogue`] - the named check registry behind the `verify` command.
//! * [`parse`] / [`render`] - the expression front end used by the CLI.

// Spinor/vector index gymnastics read better as paired index loops.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod calculus;
pub mod error;
pub mod rational;
pub mod catalogue;
pub mod laws;
pub mod parse;
pub mod render;
pub mod report;
pub mod susy;
pub mod symplectization;

pub use error::{AlgebraError, CalculusError};
pub use rational::GaussianRational;
