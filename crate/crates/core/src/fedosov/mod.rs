//! The flat Fedosov connection on the torus and the star product it
//! induces.

pub mod forms;
pub mod quantize;
pub mod weyl;

pub use forms::{connection_form, WeylFormSection};
pub use quantize::{default_cap, quantize, star_via_fedosov};
pub use weyl::WeylSection;
