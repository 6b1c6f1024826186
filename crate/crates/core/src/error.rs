use thiserror::Error;

/// Errors raised by the algebraic and analytic routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scalar backends do not match (exact vs numeric)")]
    BackendMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not invertible: lowest-order coefficient vanishes")]
    NotInvertible,
    #[error("Laurent order {order} is below the configured floor -{floor}")]
    BelowFloor { order: i32, floor: i32 },
    #[error("Fedosov degree cap {cap} is too small for hbar order {order} (need at least {needed})")]
    CapTooSmall { cap: u32, order: i32, needed: u32 },
    #[error("piecewise functions have incompatible periods or meshes: {0}")]
    PeriodMismatch(String),
    #[error("derivative of a root piece is undefined: {0}")]
    RootDerivative(String),
    #[error("product is not representable in the piecewise ring: {0}")]
    UnsupportedProduct(String),
    #[error("invalid piecewise function: {0}")]
    InvalidPiecewise(String),
    #[error("coefficient representations differ (Fourier vs subalgebra)")]
    ModeMismatch,
    #[error("promotion to Fourier mode requires a sampling resolution")]
    PromotionWithoutResolution,
    #[error("matrix sizes do not match: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("element is not idempotent (residual {0})")]
    NotIdempotent(String),
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("cochain arity {arity} does not match Chern degree {degree}")]
    ArityMismatch { arity: usize, degree: usize },
    #[error("unsupported cochain: {0}")]
    UnsupportedCochain(String),
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
