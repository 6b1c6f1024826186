//! Scalars and truncated Laurent series in ℏ.

pub mod gauss;
pub mod laurent;
pub mod poly;
pub mod ratfn;
pub mod series;
pub mod value;

pub use gauss::GaussRational;
pub use laurent::{Coefficient, Laurent, DEFAULT_FLOOR, EXACT};
pub use ratfn::RatFn;
pub use series::FormalLaurent;
pub use value::{NumericBinding, Scalar, ScalarField};
