//! The crossed product of the deformed torus algebra by ℤ.

pub mod algebra;
pub mod element;
pub mod rieffel;

pub use algebra::{CoeffAlgebra, PwSeries, SubalgebraCtx};
pub use element::{Crossed, MatrixCrossed};
pub use rieffel::{idempotent_residual, rieffel_projection, subalgebra_ctx, subalgebra_embed};

use crate::torus::FourierPoly;

pub type FourierCrossed = Crossed<FourierPoly>;
pub type PwCrossed = Crossed<PwSeries>;
