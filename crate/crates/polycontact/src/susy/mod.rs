//! The concrete R^{4|4} construction: sigma matrices, the SUSY, Poincare
//! and R-phase maps, the distinguished vector fields Q, Qb, D, Db, P, R,
//! the polycontact form alpha with its adjoint-series derivation, and
//! executable verification of everything stated about them.

pub mod hadamard;
pub mod maps;
pub mod model;
pub mod sigma;
pub mod solve;
pub mod verify;

pub use hadamard::{coset_parametrization, maurer_cartan, AlgebraForm, TranslationAlgebra};
pub use maps::{boost_z_17_8, lorentz_map, r_phase_map, susy_map, translation_map};
pub use model::{susy_chart, SusyFrame};
pub use sigma::SigmaTable;
