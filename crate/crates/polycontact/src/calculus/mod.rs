//! Charts, vector fields, tangent-valued pseudoforms, the exterior,
//! interior and Lie derivatives, graded commutators, pullbacks and the
//! body-rank non-degeneracy test.

pub mod chart;
pub mod field;
pub mod form;
pub mod map;
pub mod nondegen;

pub use chart::{Chart, ChartBuilder};
pub use field::{graded_commutator, VectorField};
pub use form::{
    exterior_derivative, exterior_scalar, interior_product, interior_scalar, lie_derivative,
    lie_derivative_via_cartan, lie_scalar, VectorValuedForm,
};
pub use map::{compose, SuperMap};
pub use nondegen::{body_row_rank, contraction_matrix, nondegeneracy_check, split_fiber};
