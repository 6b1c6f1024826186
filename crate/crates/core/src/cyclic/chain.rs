//! Hochschild chains `a₀ ⊗ ā₁ ⊗ … ⊗ ā_k` over a crossed product, with the
//! boundary `b`, Connes' operator `B` and the regrouping maps used by the
//! degree-zero Alexander–Whitney map.
//!
//! In a normalized chain every entry in positions `≥ 1` is stored as its
//! representative with zero unit coordinate, so tensors with a pure-unit
//! entry vanish. Scalars are rational; ℏ-dependence lives in the entries.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::crossed::{CoeffAlgebra, Crossed};
use crate::error::Result;
use crate::scalar::Laurent;

pub type Tensor<A> = Vec<Crossed<A>>;

#[derive(Clone, Debug)]
pub struct Chain<A> {
    degree: usize,
    normalized: bool,
    terms: Vec<(BigRational, Tensor<A>)>,
}

/// Seed for the probe functional applied to slot `i`.
fn slot_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x2545_F491_4F6C_DD1D)
        .wrapping_add((i as u64 + 1).wrapping_mul(0x9E37_79B9))
}

impl<A: CoeffAlgebra> Chain<A> {
    pub fn zero(degree: usize, normalized: bool) -> Self {
        Self {
            degree,
            normalized,
            terms: Vec::new(),
        }
    }

    /// Single tensor `a₀ ⊗ … ⊗ a_k` (normalized).
    pub fn tensor(t: Tensor<A>, ctx: &A::Ctx) -> Result<Self> {
        let mut c = Self::zero(t.len().saturating_sub(1), true);
        c.push(BigRational::one(), t, ctx)?;
        Ok(c)
    }

    /// Single tensor kept in the unnormalized complex.
    pub fn tensor_unnormalized(t: Tensor<A>, ctx: &A::Ctx) -> Result<Self> {
        let mut c = Self::zero(t.len().saturating_sub(1), false);
        c.push(BigRational::one(), t, ctx)?;
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn terms(&self) -> &[(BigRational, Tensor<A>)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coef · t`, projecting entries and merging equal tensors.
    pub fn push(&mut self, coef: BigRational, mut t: Tensor<A>, ctx: &A::Ctx) -> Result<()> {
        assert_eq!(t.len(), self.degree + 1, "tensor length must be degree + 1");
        if coef.is_zero() {
            return Ok(());
        }
        if self.normalized {
            for a in t.iter_mut().skip(1) {
                *a = a.remove_unit(ctx)?;
            }
        }
        if t.iter().any(|a| a.is_zero()) {
            return Ok(());
        }
        if let Some(pos) = self.terms.iter().position(|(_, s)| *s == t) {
            self.terms[pos].0 += coef;
            if self.terms[pos].0.is_zero() {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push((coef, t));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self, ctx: &A::Ctx) -> Result<Self> {
        assert_eq!(self.degree, o.degree, "adding chains of different degree");
        let mut r = self.clone();
        r.normalized = self.normalized || o.normalized;
        for (c, t) in &o.terms {
            r.push(c.clone(), t.clone(), ctx)?;
        }
        Ok(r)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = Self::zero(self.degree, self.normalized);
        if !c.is_zero() {
            r.terms = self.terms.iter().map(|(k, t)| (k * c, t.clone())).collect();
        }
        r
    }

    pub fn sub(&self, o: &Self, ctx: &A::Ctx) -> Result<Self> {
        self.add(&o.scale(&-BigRational::one()), ctx)
    }

    /// Hochschild boundary
    /// `Σ_{i<k} (−1)ⁱ a₀ ⊗ … ⊗ aᵢaᵢ₊₁ ⊗ … + (−1)ᵏ a_k a₀ ⊗ a₁ ⊗ … ⊗ a_{k−1}`.
    pub fn hochschild_b(&self, ctx: &A::Ctx) -> Result<Self> {
        if self.degree == 0 {
            return Ok(Self::zero(0, self.normalized));
        }
        let k = self.degree;
        let mut r = Self::zero(k - 1, self.normalized);
        for (c, t) in &self.terms {
            for i in 0..k {
                let mut s: Tensor<A> = Vec::with_capacity(k);
                s.extend(t[..i].iter().cloned());
                s.push(t[i].mul(&t[i + 1], ctx)?);
                s.extend(t[i + 2..].iter().cloned());
                r.push(sign(i) * c, s, ctx)?;
            }
            let mut s: Tensor<A> = Vec::with_capacity(k);
            s.push(t[k].mul(&t[0], ctx)?);
            s.extend(t[1..k].iter().cloned());
            r.push(sign(k) * c, s, ctx)?;
        }
        Ok(r)
    }

    /// Connes' operator on normalized chains:
    /// `B(a₀ ⊗ … ⊗ a_k) = Σᵢ (−1)^{ki} 1 ⊗ aᵢ ⊗ … ⊗ a_k ⊗ a₀ ⊗ … ⊗ aᵢ₋₁`.
    pub fn connes_b(&self, ctx: &A::Ctx) -> Result<Self> {
        let k = self.degree;
        let mut r = Self::zero(k + 1, true);
        let one = Crossed::one(ctx);
        for (c, t) in &self.terms {
            for i in 0..=k {
                let mut s: Tensor<A> = Vec::with_capacity(k + 2);
                s.push(one.clone());
                s.extend(t[i..].iter().cloned());
                s.extend(t[..i].iter().cloned());
                r.push(sign(k * i) * c, s, ctx)?;
            }
        }
        Ok(r)
    }

    /// `R_q`: merge the first `q + 1` entries, `a₀⋯a_q ⊗ a_{q+1} ⊗ … ⊗ a_k`.
    pub fn regroup(&self, q: usize, ctx: &A::Ctx) -> Result<Self> {
        assert!(q <= self.degree, "regrouping beyond the chain degree");
        let mut r = Self::zero(self.degree - q, self.normalized);
        for (c, t) in &self.terms {
            let mut head = t[0].clone();
            for a in &t[1..=q] {
                head = head.mul(a, ctx)?;
            }
            let mut s = vec![head];
            s.extend(t[q + 1..].iter().cloned());
            r.push(c.clone(), s, ctx)?;
        }
        Ok(r)
    }

    /// `{degree, normalized, terms: [{coef, tensor}]}`.
    pub fn to_json(&self, ctx: &A::Ctx) -> Result<Value> {
        let terms = self
            .terms
            .iter()
            .map(|(c, t)| {
                let tensor = t.iter().map(|a| a.to_json(ctx)).collect::<Result<Vec<_>>>()?;
                Ok(json!({"coef": c.to_string(), "tensor": tensor}))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({"degree": self.degree, "normalized": self.normalized, "terms": terms}))
    }

    /// Value of the multilinear probe `Σ c · Π_i pᵢ(aᵢ)` for one seed.
    pub fn probe(&self, seed: u64, ctx: &A::Ctx) -> Result<Laurent<A::Atom>> {
        let mut acc = Laurent::zero(A::trunc(ctx));
        for (c, t) in &self.terms {
            let mut v = t[0].scale(c)?.probe(slot_seed(seed, 0), ctx)?;
            for (i, a) in t.iter().enumerate().skip(1) {
                v = v.try_mul(&a.probe(slot_seed(seed, i), ctx)?)?;
            }
            acc = acc.try_add(&v)?;
        }
        Ok(acc)
    }

    /// Zero test by independent probe functionals; a nonzero chain passes
    /// all `rounds` probes only with negligible probability.
    pub fn is_zero_probed(&self, seed: u64, rounds: usize, ctx: &A::Ctx) -> Result<bool> {
        if self.terms.is_empty() {
            return Ok(true);
        }
        for r in 0..rounds {
            if !self.probe(seed.wrapping_add(r as u64 * 7919), ctx)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sign(i: usize) -> BigRational {
    if i % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// A `(b, B)`-chain `(c_0, c_1, …)` indexed by half degree.
#[derive(Clone, Debug)]
pub struct EvenCycle<A> {
    pub parts: Vec<Chain<A>>,
}

impl<A: CoeffAlgebra> EvenCycle<A> {
    /// Components of `(b + B)` applied to the tuple, in odd degrees
    /// `1, 3, …, 2k − 1`: `b c_i + B c_{i−1}` for `i = 1..=k`, together with
    /// `B c_k` which lands in degree `2k + 1` and is truncated away.
    pub fn boundary_parts(&self, ctx: &A::Ctx) -> Result<Vec<Chain<A>>> {
        let mut out = Vec::new();
        for i in 1..self.parts.len() {
            let bc = self.parts[i].hochschild_b(ctx)?;
            let bb = self.parts[i - 1].connes_b(ctx)?;
            out.push(bc.add(&bb, ctx)?);
        }
        Ok(out)
    }

    pub fn is_cycle(&self, seed: u64, ctx: &A::Ctx) -> Result<bool> {
        for part in self.boundary_parts(ctx)? {
            if !part.is_zero_probed(seed, 3, ctx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
