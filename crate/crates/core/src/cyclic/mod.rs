//! The normalized `(b, B)`-complex, the Chern character and restriction of
//! chains to loops.

pub mod chain;
pub mod chern;
pub mod loops;

pub use chain::{Chain, EvenCycle, Tensor};
pub use chern::{chern, chern_coefficient, conjugate_by_unipotent, trace_tensor};
pub use loops::{aw_psi0, restrict_to_loops, BurgheleaTuple, LoopChain};
