//! The Chern character of an idempotent matrix as a normalized `(b, B)`-cycle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::chain::{Chain, EvenCycle, Tensor};
use crate::crossed::{CoeffAlgebra, Crossed, MatrixCrossed};
use crate::error::{Error, Result};

/// `(−1)ⁱ (2i)! / i!`.
pub fn chern_coefficient(i: usize) -> BigRational {
    let mut c = BigInt::one();
    for j in (i + 1)..=(2 * i) {
        c *= BigInt::from(j);
    }
    let c = BigRational::from_integer(c);
    if i % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `tr(m₀ ⊗ m₁ ⊗ … ⊗ m_k) = Σ m₀[i₀,i₁] ⊗ m₁[i₁,i₂] ⊗ … ⊗ m_k[i_k,i₀]`.
pub fn trace_tensor<A: CoeffAlgebra>(
    ms: &[&MatrixCrossed<A>],
    coef: &BigRational,
    out: &mut Chain<A>,
    ctx: &A::Ctx,
) -> Result<()> {
    let n = ms[0].size();
    for m in ms {
        if m.size() != n {
            return Err(Error::SizeMismatch(n, m.size()));
        }
    }
    let k = ms.len();
    let mut idx = vec![0usize; k];
    loop {
        let t: Tensor<A> = (0..k)
            .map(|j| ms[j].get(idx[j], idx[(j + 1) % k]).clone())
            .collect();
        if t.iter().all(|a| !a.is_zero()) {
            out.push(coef.clone(), t, ctx)?;
        }
        let mut j = 0;
        loop {
            if j == k {
                return Ok(());
            }
            idx[j] += 1;
            if idx[j] < n {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// `(c_0, …, c_k)` with `c_0 = tr(e)` and
/// `c_i = (−1)ⁱ (2i)!/i! · tr((e − ½) ⊗ e^{⊗2i})`.
pub fn chern<A: CoeffAlgebra>(
    e: &MatrixCrossed<A>,
    k: usize,
    ctx: &A::Ctx,
) -> Result<EvenCycle<A>> {
    if !e.idempotent_defect(ctx)?.is_zero() {
        return Err(Error::NotIdempotent(
            "e * e - e does not vanish within the truncation order".into(),
        ));
    }
    let shifted = e.minus_half_identity(ctx)?;
    let mut parts = Vec::with_capacity(k + 1);
    let mut c0 = Chain::zero(0, true);
    trace_tensor(&[e], &BigRational::one(), &mut c0, ctx)?;
    parts.push(c0);
    for i in 1..=k {
        let mut ms = vec![&shifted];
        ms.extend(std::iter::repeat(e).take(2 * i));
        let mut c = Chain::zero(2 * i, true);
        trace_tensor(&ms, &chern_coefficient(i), &mut c, ctx)?;
        parts.push(c);
    }
    Ok(EvenCycle { parts })
}

/// Conjugate `u ⋆ e ⋆ u⁻¹` for a scalar-size idempotent and `u = 1 + ℏh`.
pub fn conjugate_by_unipotent<A: CoeffAlgebra>(
    e: &MatrixCrossed<A>,
    h: &Crossed<A>,
    ctx: &A::Ctx,
) -> Result<MatrixCrossed<A>> {
    let u = Crossed::one(ctx).add(&h.shift_hbar(1)?)?;
    let uinv = u.invert_unipotent(ctx)?;
    let n = e.size();
    MatrixCrossed::diagonal(n, &u)
        .mul(e, ctx)?
        .mul(&MatrixCrossed::diagonal(n, &uinv), ctx)
}
