//! Cohomology of the groupoid `T² ⋊ ℤ` and its periodic assembly.

pub mod complex;
pub mod forms;

pub use complex::{
    cohomology_dims, homology_boundary_check, invariant_functions_dim, periodic_dims, rank, Action,
    CohomologyReport, FormChain,
};
pub use forms::DeRhamForm;
