//! Function algebras on T² (Fourier polynomials) and S¹ (piecewise
//! polynomial functions with square-root pieces).

pub mod exact_real;
pub mod fourier;
pub mod piecewise;
pub mod qpoly;
pub mod quadrature;
pub mod ramp;
pub mod surd;

pub use exact_real::ExactReal;
pub use fourier::{FourierPoly, Mode, TorusPoissonData};
pub use piecewise::{Piece, PiecewiseFn};
pub use qpoly::QPoly;
pub use ramp::{parse_rational, Ramp, RieffelParams};
pub use surd::SurdSum;
