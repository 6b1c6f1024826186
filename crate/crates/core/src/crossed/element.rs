//! Elements `Σ_n f_n Wⁿ` of the crossed product by ℤ and matrices over it.
//!
//! Multiplication is `(f Wᵐ)(g Wⁿ) = (f ⋆ translate(g, m)) W^{m+n}`. The
//! torus is compact, so the algebra is unital and the adjoined unit is the
//! constant function 1 at `n = 0`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::algebra::{probe_weight, CoeffAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Laurent;
use crate::torus::FourierPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct Crossed<A> {
    terms: BTreeMap<i32, A>,
}

impl<A: CoeffAlgebra> Crossed<A> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &A::Ctx) -> Self {
        Self::monomial(0, A::one(ctx))
    }

    /// `f Wⁿ`.
    pub fn monomial(n: i32, f: A) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(n, f);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i32, A)>) -> Result<Self> {
        let mut r = Self::zero();
        for (n, f) in it {
            r.add_at(n, &f)?;
        }
        Ok(r)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &A)> {
        self.terms.iter()
    }

    pub fn component(&self, n: i32) -> A {
        self.terms.get(&n).cloned().unwrap_or_else(A::zero)
    }

    pub fn support(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_at(&mut self, n: i32, f: &A) -> Result<()> {
        let next = match self.terms.get(&n) {
            Some(old) => old.add(f)?,
            None => f.clone(),
        };
        if next.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, next);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut r = self.clone();
        for (n, f) in &o.terms {
            r.add_at(*n, f)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(n, f)| (*n, f.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        Self::from_terms(
            self.terms
                .iter()
                .map(|(n, f)| Ok((*n, f.scale(c)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn map(&self, g: impl Fn(i32, &A) -> Result<A>) -> Result<Self> {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(n, f)| Ok((*n, g(*n, f)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Convolution `(F ⋆ G)(n) = Σ_m F(m) ⋆ translate(G(n − m), m)`.
    pub fn mul(&self, o: &Self, ctx: &A::Ctx) -> Result<Self> {
        let mut r = Self::zero();
        for (m, f) in &self.terms {
            for (n, g) in &o.terms {
                let t = f.star(&g.translate(*m, ctx)?, ctx)?;
                r.add_at(m + n, &t)?;
            }
        }
        Ok(r)
    }

    pub fn shift_hbar(&self, k: i32) -> Result<Self> {
        self.map(|_, f| f.shift_hbar(k))
    }

    /// The coefficient of the unit under the fixed projection, as an element.
    pub fn unit_part(&self, ctx: &A::Ctx) -> Result<Self> {
        Ok(Self::monomial(0, self.component(0).unit_coordinate(ctx)?))
    }

    /// `F − c(F)·1`: the representative used in normalized chains.
    pub fn remove_unit(&self, ctx: &A::Ctx) -> Result<Self> {
        self.sub(&self.unit_part(ctx)?)
    }

    /// `Wⁿ` weighting operator `fWⁿ ↦ n f Wⁿ`.
    pub fn number_operator(&self) -> Result<Self> {
        self.map(|n, f| f.scale(&BigRational::from_integer(n.into())))
    }

    /// `{terms: [{n, coeff}], unit}` with `unit` the unit coordinate.
    pub fn to_json(&self, ctx: &A::Ctx) -> Result<Value> {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(n, f)| json!({"n": n, "coeff": f.to_json()}))
            .collect();
        Ok(json!({
            "terms": terms,
            "unit": self.component(0).unit_coordinate(ctx)?.to_json(),
        }))
    }

    /// Drop ℏ orders at or beyond the working truncation.
    pub fn truncated(&self, ctx: &A::Ctx) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(n, f)| (*n, f.truncated(ctx)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
        }
    }

    /// Coefficientwise `∂/∂θʲ`.
    pub fn derivative(&self, dir: usize, ctx: &A::Ctx) -> Result<Self> {
        self.map(|_, f| f.derivative(dir, ctx))
    }

    /// Trace functional `F ↦ ∫ F(0)`.
    pub fn trace(&self, ctx: &A::Ctx) -> Result<A::Integral> {
        match self.terms.get(&0) {
            Some(f) => f.integrate(ctx),
            None => Ok(A::zero_integral(ctx)),
        }
    }

    /// Random linear functional: weighted sum of coefficient probes.
    pub fn probe(&self, seed: u64, ctx: &A::Ctx) -> Result<Laurent<A::Atom>> {
        let mut acc: Option<Laurent<A::Atom>> = None;
        for (n, f) in &self.terms {
            let w = probe_weight(seed, *n as i64, -7, 3);
            let v = f.scale(&BigRational::from_integer(w.into()))?.probe(seed ^ (*n as u64).wrapping_mul(0x51), ctx)?;
            acc = Some(match acc {
                Some(a) => a.try_add(&v)?,
                None => v,
            });
        }
        Ok(acc.unwrap_or_else(|| Laurent::zero(A::trunc(ctx))))
    }

    /// `Σ_{j=0}^{N} (1 − u)^j`, the inverse of `u = 1 + ℏh` up to the
    /// truncation order (requires `u − 1` to be divisible by ℏ).
    pub fn invert_unipotent(&self, ctx: &A::Ctx) -> Result<Self> {
        let one = Self::one(ctx);
        let x = one.sub(self)?.truncated(ctx);
        let mut acc = one.clone();
        let mut pow = one;
        for _ in 0..=A::trunc(ctx).max(0) {
            pow = pow.mul(&x, ctx)?;
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow)?;
        }
        Ok(acc)
    }
}

/// Square matrix over the crossed product.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixCrossed<A> {
    pub entries: Vec<Vec<Crossed<A>>>,
}

impl<A: CoeffAlgebra> MatrixCrossed<A> {
    pub fn from_entries(entries: Vec<Vec<Crossed<A>>>) -> Result<Self> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch(n, row.len()));
        }
        Ok(Self { entries })
    }

    pub fn scalar(e: Crossed<A>) -> Self {
        Self {
            entries: vec![vec![e]],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![vec![Crossed::zero(); n]; n],
        }
    }

    pub fn identity(n: usize, ctx: &A::Ctx) -> Self {
        Self::diagonal(n, &Crossed::one(ctx))
    }

    /// `x` times the identity matrix.
    pub fn diagonal(n: usize, x: &Crossed<A>) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i][i] = x.clone();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Crossed<A> {
        &self.entries[i][j]
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.size() != o.size() {
            return Err(Error::SizeMismatch(self.size(), o.size()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.size();
        let mut r = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                r.entries[i][j] = self.entries[i][j].add(&o.entries[i][j])?;
            }
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.size();
        let mut r = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                r.entries[i][j] = self.entries[i][j].sub(&o.entries[i][j])?;
            }
        }
        Ok(r)
    }

    pub fn mul(&self, o: &Self, ctx: &A::Ctx) -> Result<Self> {
        self.check(o)?;
        let n = self.size();
        let mut r = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Crossed::zero();
                for k in 0..n {
                    if self.entries[i][k].is_zero() || o.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.entries[i][k].mul(&o.entries[k][j], ctx)?)?;
                }
                r.entries[i][j] = acc;
            }
        }
        Ok(r)
    }

    pub fn map(&self, f: impl Fn(&Crossed<A>) -> Result<Crossed<A>>) -> Result<Self> {
        Ok(Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// `E ⋆ E − E`.
    pub fn idempotent_defect(&self, ctx: &A::Ctx) -> Result<Self> {
        self.mul(self, ctx)?.sub(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// `E − ½ I`.
    pub fn minus_half_identity(&self, ctx: &A::Ctx) -> Result<Self> {
        let half = BigRational::new(1.into(), 2.into());
        self.sub(&Self::identity(self.size(), ctx).map(|e| e.scale(&half))?)
    }
}

impl Crossed<FourierPoly> {
    /// Reads `{terms: [{n, coeff}]}` with Fourier coefficients.
    pub fn from_json(v: &Value, trunc: i32) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("crossed element needs a terms array".into()))?;
        let mut out = Vec::new();
        for t in terms {
            let n = t
                .get("n")
                .and_then(|n| n.as_i64())
                .ok_or_else(|| Error::Parse("term needs an integer n".into()))?;
            let coeff = t
                .get("coeff")
                .ok_or_else(|| Error::Parse("term needs a coeff".into()))?;
            out.push((n as i32, FourierPoly::from_json(coeff, trunc)?));
        }
        Self::from_terms(out)
    }
}

impl<A: CoeffAlgebra> MatrixCrossed<A> {
    pub fn to_json(&self, ctx: &A::Ctx) -> Result<Value> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_json(ctx)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(json!(rows))
    }
}
