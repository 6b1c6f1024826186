//! The Rieffel projection `e₂ = W⁻¹g + f + gW` in the subalgebra of
//! functions constant along θ², and sampled residual norms.

use super::algebra::{PwSeries, SubalgebraCtx};
use super::element::{Crossed, MatrixCrossed};
use crate::error::Result;
use crate::scalar::laurent::EXACT;
use crate::torus::{PiecewiseFn, RieffelParams};

/// `f Wⁿ` for a piecewise function `f`.
pub fn subalgebra_embed(f: PiecewiseFn, n: i32) -> Crossed<PwSeries> {
    Crossed::monomial(n, PwSeries::constant(f, EXACT))
}

/// `e₂ = W⁻¹g + f + gW = g(· + α) W⁻¹ + f + g W`.
pub fn rieffel_projection(p: &RieffelParams) -> Result<Crossed<PwSeries>> {
    let f = p.f()?;
    let g = p.g()?;
    let lower = g.translate(&-p.alpha.clone());
    Crossed::from_terms([
        (-1, PwSeries::constant(lower, EXACT)),
        (0, PwSeries::constant(f, EXACT)),
        (1, PwSeries::constant(g, EXACT)),
    ])
}

pub fn subalgebra_ctx(p: &RieffelParams, trunc: i32) -> SubalgebraCtx {
    SubalgebraCtx::new(p.alpha.clone(), trunc)
}

/// Largest absolute value over all entries, components and ℏ orders of a
/// subalgebra matrix, sampled on `points` equally spaced points (offset by
/// half a step).
pub fn sampled_sup_norm(m: &MatrixCrossed<PwSeries>, points: usize) -> f64 {
    let mut sup: f64 = 0.0;
    for row in &m.entries {
        for e in row {
            for (_, series) in e.terms() {
                for (_, f) in series.terms() {
                    for i in 0..points {
                        let x = (i as f64 + 0.5) / points as f64;
                        sup = sup.max(f.eval_f64(x).abs());
                    }
                }
            }
        }
    }
    sup
}

/// Sampled residual of `E ⋆ E − E` together with the exact verdict.
pub fn idempotent_residual(
    e: &MatrixCrossed<PwSeries>,
    ctx: &SubalgebraCtx,
    points: usize,
) -> Result<(f64, bool)> {
    let d = e.idempotent_defect(ctx)?;
    Ok((sampled_sup_norm(&d, points), d.is_zero()))
}

/// `∫ f` of the degree-zero component as a float (for reports).
pub fn trace_f64(e: &Crossed<PwSeries>, ctx: &SubalgebraCtx) -> Result<f64> {
    let t = e.trace(ctx)?;
    Ok(t.coeff(0).map(|c| c.to_f64()).unwrap_or(0.0))
}
