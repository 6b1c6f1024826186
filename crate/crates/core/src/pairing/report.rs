//! Coordinates of the Chern character after the map to groupoid cohomology,
//! assembled from the pairings with `ξ₀, ξ₂, ξ₃`.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::phi::{components_on_chain, phi_on_chain, Cocycle, PairingValue};
use crate::crossed::{CoeffAlgebra, MatrixCrossed};
use crate::cyclic::chern;
use crate::error::Result;
use crate::scalar::{FormalLaurent, Scalar, EXACT};

/// Form coefficients at one loop component `(a, b)` with `a + b = 0`.
#[derive(Clone, Debug)]
pub struct ComponentCoordinate {
    pub component: (i32, i32),
    pub dtheta1: FormalLaurent,
    pub dtheta2: FormalLaurent,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct PsiReport {
    /// Pairing with `ξ₀` (the identity component).
    pub identity: PairingValue,
    /// One-form coordinates on the degree-one loop components.
    pub components: Vec<ComponentCoordinate>,
    /// The coordinate dual to `ξ₁` needs the twisted cocycle τ₂.
    pub xi1: &'static str,
}

pub const XI1_UNAVAILABLE: &str = "unavailable (requires tau_2)";

/// Builds the report from `Ch₁(e)`: every triple `(n₀, n₁, n₂)` contributes
/// to the component `(n₀ + n₂, n₁)`; the `ξ₃` and `ξ₂` values there, divided
/// by the weight `n₁`, give the `dθ¹` (with a sign from `dθ¹ ∧ dθ²`) and
/// `dθ²` coefficients.
pub fn psi_chern_report<A: CoeffAlgebra>(e: &MatrixCrossed<A>, ctx: &A::Ctx) -> Result<PsiReport> {
    let ch = chern(e, 1, ctx)?;
    let identity = phi_on_chain(Cocycle::Xi0, &ch.parts[0], ctx)?;
    let field = A::field(ctx);
    let theta_inv = field.theta().inv()?;
    let h_over_theta = FormalLaurent::monomial(1, theta_inv, EXACT);

    let mut acc: BTreeMap<(i32, i32), (FormalLaurent, FormalLaurent, bool)> = BTreeMap::new();
    for c in [Cocycle::Xi3, Cocycle::Xi2] {
        for ((n0, n1, n2), v) in components_on_chain(c, &ch.parts[1], ctx)? {
            let (s, exact) = A::integral_series(&v, &field)?;
            // ξ₃ carries −ℏ/θ and pairs dθ¹ through dθ¹∧dθ² with a further
            // sign; ξ₂ carries +ℏ/θ. Both coordinates are (ℏ/θ)·s / n₁.
            let k = BigRational::new(1.into(), n1.into());
            let coord = s.try_mul(&h_over_theta)?.try_scale(&Scalar::rational(k))?;
            let entry = acc.entry((n0 + n2, n1)).or_insert_with(|| {
                (
                    FormalLaurent::zero(A::trunc(ctx) + 1),
                    FormalLaurent::zero(A::trunc(ctx) + 1),
                    true,
                )
            });
            if c == Cocycle::Xi3 {
                entry.0 = entry.0.try_add(&coord)?;
            } else {
                entry.1 = entry.1.try_add(&coord)?;
            }
            entry.2 &= exact;
        }
    }
    let components = acc
        .into_iter()
        .filter(|(_, (a, b, _))| !a.is_zero() || !b.is_zero())
        .map(|(component, (dtheta1, dtheta2, exact))| ComponentCoordinate {
            component,
            dtheta1,
            dtheta2,
            exact,
        })
        .collect();
    Ok(PsiReport {
        identity,
        components,
        xi1: XI1_UNAVAILABLE,
    })
}
