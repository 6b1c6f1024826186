//! Integer tuples summing to zero (the components of the Burghelea spaces of
//! the free ℤ-action), their cyclic-set operators, and restriction of chains
//! to loops.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::chain::Chain;
use crate::crossed::CoeffAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Laurent;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurgheleaTuple(Vec<i32>);

impl BurgheleaTuple {
    pub fn new(ns: Vec<i32>) -> Result<Self> {
        if ns.is_empty() {
            return Err(Error::Constraint("a tuple needs at least one entry".into()));
        }
        let s: i64 = ns.iter().map(|&n| n as i64).sum();
        if s != 0 {
            return Err(Error::Constraint(format!("tuple {:?} does not sum to zero", ns)));
        }
        Ok(Self(ns))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    /// The simplicial degree `k` (the tuple has `k + 1` entries).
    pub fn arity(&self) -> usize {
        self.0.len() - 1
    }

    /// `δᵢ`: merge entries `i, i+1`; `δ_k` puts `n_k + n₀` first.
    pub fn face(&self, i: usize) -> Result<Self> {
        let k = self.arity();
        if k == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i, arity: k });
        }
        let n = &self.0;
        let mut out = Vec::with_capacity(k);
        if i < k {
            out.extend_from_slice(&n[..i]);
            out.push(n[i] + n[i + 1]);
            out.extend_from_slice(&n[i + 2..]);
        } else {
            out.push(n[k] + n[0]);
            out.extend_from_slice(&n[1..k]);
        }
        Ok(Self(out))
    }

    /// `sᵢ`: insert the identity (0) after entry `i`.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let k = self.arity();
        if i > k {
            return Err(Error::IndexOutOfRange { index: i, arity: k });
        }
        let mut out = self.0.clone();
        out.insert(i + 1, 0);
        Ok(Self(out))
    }

    /// `t(n₀, …, n_k) = (n_k, n₀, …, n_{k−1})`.
    pub fn cyclic(&self) -> Self {
        let mut out = self.0.clone();
        out.rotate_right(1);
        Self(out)
    }
}

/// Per-tuple tensors of coefficient functions: the component at `(n₀,…,n_k)`
/// is `f₀ ⊗ T^{n₀} f₁ ⊗ T^{n₀+n₁} f₂ ⊗ …`.
#[derive(Clone, Debug)]
pub struct LoopChain<A> {
    pub degree: usize,
    pub parts: BTreeMap<BurgheleaTuple, Vec<(BigRational, Vec<A>)>>,
}

impl<A: CoeffAlgebra> LoopChain<A> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            parts: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, tuple: BurgheleaTuple, coef: BigRational, t: Vec<A>) {
        if coef.is_zero() || t.iter().any(|a| a.is_zero()) {
            return;
        }
        let list = self.parts.entry(tuple).or_default();
        if let Some(pos) = list.iter().position(|(_, s)| *s == t) {
            list[pos].0 += coef;
            if list[pos].0.is_zero() {
                list.remove(pos);
            }
        } else {
            list.push((coef, t));
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (tuple, list) in &o.parts {
            for (c, t) in list {
                r.push(tuple.clone(), -c.clone(), t.clone());
            }
        }
        r
    }

    pub fn tuples(&self) -> impl Iterator<Item = &BurgheleaTuple> {
        self.parts.keys()
    }

    /// Boundary on loop components: pushforward along the faces combined with
    /// the pointwise product of the merged slots.
    pub fn boundary(&self, ctx: &A::Ctx) -> Result<Self> {
        let k = self.degree;
        let mut r = Self::zero(k.saturating_sub(1));
        if k == 0 {
            return Ok(r);
        }
        for (tuple, list) in &self.parts {
            let nk = tuple.entries()[k];
            for (c, x) in list {
                for i in 0..k {
                    let mut s = Vec::with_capacity(k);
                    s.extend(x[..i].iter().cloned());
                    s.push(x[i].star(&x[i + 1], ctx)?);
                    s.extend(x[i + 2..].iter().cloned());
                    let sc = if i % 2 == 0 { c.clone() } else { -c.clone() };
                    r.push(tuple.face(i)?, sc, s);
                }
                let mut s = Vec::with_capacity(k);
                s.push(x[k].star(&x[0], ctx)?.translate(nk, ctx)?);
                for a in &x[1..k] {
                    s.push(a.translate(nk, ctx)?);
                }
                let sc = if k % 2 == 0 { c.clone() } else { -c.clone() };
                r.push(tuple.face(k)?, sc, s);
            }
        }
        Ok(r)
    }

    /// Probe-based zero test, tuple by tuple.
    pub fn is_zero_probed(&self, seed: u64, rounds: usize, ctx: &A::Ctx) -> Result<bool> {
        for list in self.parts.values() {
            for r in 0..rounds {
                let s = seed.wrapping_add(r as u64 * 104_729);
                let mut acc: Laurent<A::Atom> = Laurent::zero(A::trunc(ctx));
                for (c, x) in list {
                    let mut v = x[0].scale(c)?.probe(s, ctx)?;
                    for (i, a) in x.iter().enumerate().skip(1) {
                        v = v.try_mul(&a.probe(s ^ ((i as u64) << 40), ctx)?)?;
                    }
                    acc = acc.try_add(&v)?;
                }
                if !acc.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Keep the sum-zero components of every tensor of `c`.
pub fn restrict_to_loops<A: CoeffAlgebra>(c: &Chain<A>, ctx: &A::Ctx) -> Result<LoopChain<A>> {
    let k = c.degree();
    let mut out = LoopChain::zero(k);
    for (coef, t) in c.terms() {
        let supports: Vec<Vec<i32>> = t.iter().map(|a| a.support()).collect();
        let mut idx = vec![0usize; k + 1];
        'outer: loop {
            let ns: Vec<i32> = (0..=k).map(|j| supports[j][idx[j]]).collect();
            if ns.iter().map(|&n| n as i64).sum::<i64>() == 0 {
                let mut shift = 0;
                let mut x = Vec::with_capacity(k + 1);
                for j in 0..=k {
                    x.push(t[j].component(ns[j]).translate(shift, ctx)?);
                    shift += ns[j];
                }
                out.push(BurgheleaTuple(ns), coef.clone(), x);
            }
            let mut j = 0;
            loop {
                if j > k {
                    break 'outer;
                }
                idx[j] += 1;
                if idx[j] < supports[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// Degree-zero Alexander–Whitney data: for each `q`, the regrouped chain
/// `a₀⋯a_q ⊗ a_{q+1} ⊗ … ⊗ a_k` restricted to loops.
pub fn aw_psi0<A: CoeffAlgebra>(c: &Chain<A>, ctx: &A::Ctx) -> Result<Vec<(usize, LoopChain<A>)>> {
    (0..=c.degree())
        .map(|q| Ok((q, restrict_to_loops(&c.regroup(q, ctx)?, ctx)?)))
        .collect()
}
