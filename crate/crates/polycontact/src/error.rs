//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the graded scalar algebra.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("duplicate generator name `{0}` in context")]
    DuplicateGenerator(String),

    #[error("values belong to different generator contexts")]
    ContextMismatch,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("negative power of non-invertible generator `{0}`")]
    NotInvertible(String),

    #[error("exponential atom requires an even generator, got odd `{0}`")]
    OddExponentialBase(String),

    #[error("substitution for `{gen}` has parity different from the generator")]
    ParityMismatch { gen: String },

    #[error("unsupported substitution into exponential base `{gen}`: only c*{gen} or {gen} + nilpotent is supported")]
    UnsupportedExpSubstitution { gen: String },

    #[error("cannot raise a non-unit value to the negative power {power}")]
    NegativePowerOfNonUnit { power: i32 },

    #[error("value is not parity-homogeneous")]
    Inhomogeneous,

    #[error("no assignment for generator `{0}` when transporting between contexts")]
    UnmappedGenerator(String),
}

/// Errors from charts, fields, forms and maps.
#[derive(Debug, Error)]
pub enum CalculusError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("objects live on different charts")]
    ChartMismatch,

    #[error("operation requires a parity-homogeneous vector field")]
    InhomogeneousField,

    #[error("component for `{gen}` has parity inconsistent with the declared parity of the object")]
    ComponentParity { gen: String },

    #[error("`{0}` is not a base generator of the chart")]
    NotABaseGenerator(String),

    #[error("map does not invert: {side} composition is not the identity on `{gen}`")]
    NotInverse { side: &'static str, gen: String },

    #[error("spinor/vector pair fails the sigma intertwining relation; residual: {residual}")]
    Intertwining { residual: String },

    #[error("bracket does not close on the chosen generator basis (leftover in slot `{0}`)")]
    BracketNotClosed(String),

    #[error("adjoint series did not terminate within depth {depth}; wrong parametrization?")]
    NonTerminatingSeries { depth: usize },
}
