//! Simplicial cocycles of the ℤ-action, the cyclic cochains they induce and
//! their pairing with Chern characters.

pub mod cochain;
pub mod phi;
pub mod report;

pub use cochain::{ClosednessCertificate, NPoly, SimplicialCochain};
pub use phi::{
    trilinear_integrands,
    components_on_chain, index_pairing, pair, phi_on_chain, phi_xi0, phi_xi2, phi_xi3, Cocycle,
    PairingValue,
};
pub use report::{psi_chern_report, ComponentCoordinate, PsiReport};
