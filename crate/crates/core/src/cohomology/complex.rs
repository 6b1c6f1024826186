//! Cohomology of the transformation groupoid `T² ⋊ ℤ` through the two-term
//! complex `Ω^•(T²) → Ω^•(T²)`, `ω ↦ (1 − γ*)ω`, computed mode by mode.

use std::collections::BTreeMap;

use super::forms::DeRhamForm;
use crate::cyclic::BurgheleaTuple;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarField};
use crate::torus::TorusPoissonData;

/// Pivot threshold for the numeric backend.
const NUMERIC_PIVOT: f64 = 1e-9;
/// Resonance gap below which numeric ranks are reported as unreliable.
const RESONANCE_WARNING: f64 = 1e-6;

/// Which action of the generator is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Translation by `(α, β)`, acting on mode `k` by `u^{k₁} v^{k₂}`.
    Rotation,
    /// The trivial action (`α = β = 0`), a consistency fixture.
    Identity,
}

#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub dims: [usize; 4],
    pub periodic: [usize; 2],
    pub warnings: Vec<String>,
}

fn is_negligible(s: &Scalar) -> bool {
    match s {
        Scalar::Exact(r) => r.is_zero(),
        Scalar::Numeric(z) => z.norm() < NUMERIC_PIVOT,
    }
}

/// Rank by Gaussian elimination; exact for the exact backend.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> Result<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows)
            .filter(|&r| !is_negligible(&m[r][c]))
            .max_by(|&a, &b| {
                let na = match &m[a][c] {
                    Scalar::Numeric(z) => z.norm(),
                    Scalar::Exact(_) => 1.0,
                };
                let nb = match &m[b][c] {
                    Scalar::Numeric(z) => z.norm(),
                    Scalar::Exact(_) => 1.0,
                };
                na.partial_cmp(&nb).unwrap_or(std::cmp::Ordering::Equal).then(b.cmp(&a))
            });
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].inv()?;
        for r in 0..rows {
            if r == rank || is_negligible(&m[r][c]) {
                continue;
            }
            let factor = m[r][c].try_mul(&inv)?;
            for j in c..cols {
                let t = factor.try_mul(&m[rank][j])?;
                m[r][j] = m[r][j].try_sub(&t)?;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

const BLOCK_DIMS: [usize; 3] = [1, 2, 1];

/// `d` on a single mode `k` from `Ωᵖ` to `Ωᵖ⁺¹`, with `a = 2πik₁`, `b = 2πik₂`.
fn mode_d(p: usize, a: &Scalar, b: &Scalar) -> Vec<Vec<Scalar>> {
    match p {
        0 => vec![vec![a.clone()], vec![b.clone()]],
        1 => vec![vec![b.neg(), a.clone()]],
        _ => vec![],
    }
}

/// Total complex `Cᵐ = Ωᵐ ⊕ Ωᵐ⁻¹` with `D(ω, η) = (dω, (1 − γ*)ω − dη)`.
fn total_matrix(m: usize, a: &Scalar, b: &Scalar, one_minus: &Scalar) -> Vec<Vec<Scalar>> {
    let dim = |p: isize| {
        if (0..=2).contains(&p) {
            BLOCK_DIMS[p as usize]
        } else {
            0
        }
    };
    let m = m as isize;
    let (src_a, src_b) = (dim(m), dim(m - 1));
    let (dst_a, dst_b) = (dim(m + 1), dim(m));
    let mut mat = vec![vec![Scalar::zero(); src_a + src_b]; dst_a + dst_b];
    if src_a > 0 && dst_a > 0 {
        for (i, row) in mode_d(m as usize, a, b).into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                mat[i][j] = v;
            }
        }
    }
    for i in 0..dst_b.min(src_a) {
        mat[dst_a + i][i] = one_minus.clone();
    }
    if m >= 1 && src_b > 0 && dst_b > 0 {
        for (i, row) in mode_d((m - 1) as usize, a, b).into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                mat[dst_a + i][src_a + j] = v.neg();
            }
        }
    }
    mat
}

/// Per-mode contribution `[h⁰, h¹, h², h³]`.
fn mode_dims(k: (i32, i32), data: &TorusPoissonData, action: Action) -> Result<[usize; 4]> {
    let tpi = data.two_pi_i()?;
    let a = tpi.try_mul(&Scalar::from_int(k.0 as i64))?;
    let b = tpi.try_mul(&Scalar::from_int(k.1 as i64))?;
    let lambda = match action {
        Action::Rotation => data.multiplier(k.0, k.1)?,
        Action::Identity => Scalar::one(),
    };
    let one_minus = Scalar::one().try_sub(&lambda)?;
    let sizes = [1usize, 3, 3, 1];
    let mut ranks = [0usize; 4];
    for (m, r) in ranks.iter_mut().enumerate().take(3) {
        *r = rank(total_matrix(m, &a, &b, &one_minus))?;
    }
    let mut dims = [0usize; 4];
    for m in 0..4 {
        let incoming = if m == 0 { 0 } else { ranks[m - 1] };
        dims[m] = sizes[m] - ranks[m] - incoming;
    }
    Ok(dims)
}

/// `[h⁰, h¹, h², h³]` of the groupoid on modes `|k₁|, |k₂| ≤ cutoff`.
pub fn cohomology_dims(cutoff: i32, data: &TorusPoissonData, action: Action) -> Result<CohomologyReport> {
    if cutoff < 1 {
        return Err(Error::Constraint(format!("cutoff must be at least 1, got {}", cutoff)));
    }
    let mut warnings = Vec::new();
    if let ScalarField::Numeric(b) = &data.field {
        let gap = b.min_resonance_gap(cutoff);
        if action == Action::Rotation && gap < RESONANCE_WARNING {
            warnings.push(format!(
                "near resonance: min |1 - u^a v^b| = {:.3e} over the mode box",
                gap
            ));
        }
    }
    let mut dims = [0usize; 4];
    for k1 in -cutoff..=cutoff {
        for k2 in -cutoff..=cutoff {
            let d = mode_dims((k1, k2), data, action)?;
            for i in 0..4 {
                dims[i] += d[i];
            }
        }
    }
    Ok(CohomologyReport {
        dims,
        periodic: periodic_dims(&dims),
        warnings,
    })
}

/// `hpᵉ = Σ_{p ≡ e (2)} hᵖ`.
pub fn periodic_dims(dims: &[usize; 4]) -> [usize; 2] {
    [dims[0] + dims[2], dims[1] + dims[3]]
}

/// Invariant closed functions on the mode box, computed from the full
/// simplicial differential `δω(n₀, n₁) = ω − T^{n₁}ω` for `n₁ = ±1, ±2`
/// rather than from the two-term model.
pub fn invariant_functions_dim(cutoff: i32, data: &TorusPoissonData) -> Result<usize> {
    let tpi = data.two_pi_i()?;
    let mut dim = 0;
    for k1 in -cutoff..=cutoff {
        for k2 in -cutoff..=cutoff {
            let mut column = vec![
                vec![tpi.try_mul(&Scalar::from_int(k1 as i64))?],
                vec![tpi.try_mul(&Scalar::from_int(k2 as i64))?],
            ];
            for n in [-2, -1, 1, 2] {
                let l = data.multiplier(n * k1, n * k2)?;
                column.push(vec![Scalar::one().try_sub(&l)?]);
            }
            dim += 1 - rank(column)?;
        }
    }
    Ok(dim)
}

/// Finitely supported simplicial chains of forms: component tuple ↦ form.
#[derive(Clone, Debug, Default)]
pub struct FormChain {
    pub parts: BTreeMap<BurgheleaTuple, DeRhamForm>,
}

impl FormChain {
    pub fn add_at(&mut self, t: BurgheleaTuple, f: &DeRhamForm) -> Result<()> {
        let next = match self.parts.get(&t) {
            Some(old) => old.add(f)?,
            None => f.clone(),
        };
        if next.is_zero() {
            self.parts.remove(&t);
        } else {
            self.parts.insert(t, next);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// `∂ = Σᵢ (−1)ⁱ (δᵢ)_*`; the last face moves the form by `T^{n_k}`.
    pub fn boundary(&self, data: &TorusPoissonData) -> Result<Self> {
        let mut out = Self::default();
        for (t, f) in &self.parts {
            let k = t.arity();
            if k == 0 {
                continue;
            }
            for i in 0..=k {
                let mut g = if i == k {
                    f.translate(t.entries()[k], data)?
                } else {
                    f.clone()
                };
                if i % 2 == 1 {
                    g = g.neg();
                }
                out.add_at(t.face(i)?, &g)?;
            }
        }
        Ok(out)
    }

    pub fn d(&self, data: &TorusPoissonData) -> Result<Self> {
        let mut out = Self::default();
        for (t, f) in &self.parts {
            out.add_at(t.clone(), &f.d(data)?)?;
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let mut r = self.clone();
        for (t, f) in &o.parts {
            r.add_at(t.clone(), &f.neg())?;
        }
        Ok(r)
    }
}

/// Residual flags `(∂² = 0, d∂ = ∂d)` for a chain.
pub fn homology_boundary_check(c: &FormChain, data: &TorusPoissonData) -> Result<(bool, bool)> {
    let bb = c.boundary(data)?.boundary(data)?;
    let comm = c.d(data)?.boundary(data)?.sub(&c.boundary(data)?.d(data)?)?;
    Ok((bb.is_zero(), comm.is_zero()))
}
