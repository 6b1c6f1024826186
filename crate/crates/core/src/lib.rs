//! Deformation quantization, cyclic cohomology and index pairings for the
//! quantum-torus crossed product by ℤ.

pub mod cohomology;
pub mod conventions;
pub mod crossed;
pub mod cyclic;
pub mod error;
pub mod fedosov;
pub mod pairing;
pub mod sample;
pub mod scalar;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
