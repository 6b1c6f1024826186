//! The cyclic cochains obtained by integrating the simplicial cocycles
//! `ξ₀, ξ₂, ξ₃` against loop-restricted chains, and the index pairing.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::crossed::{CoeffAlgebra, Crossed, MatrixCrossed};
use crate::cyclic::{chern, Chain};
use crate::error::{Error, Result};
use crate::scalar::{series, Coefficient, FormalLaurent, Scalar, ScalarField, EXACT};

/// Component index `(n₀, n₁, n₂)` with `n₀ + n₁ + n₂ = 0`.
pub type Triple = (i32, i32, i32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cocycle {
    Xi0,
    Xi2,
    Xi3,
}

impl Cocycle {
    pub fn arity(self) -> usize {
        match self {
            Cocycle::Xi0 => 0,
            Cocycle::Xi2 | Cocycle::Xi3 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cocycle::Xi0 => "xi0",
            Cocycle::Xi2 => "xi2",
            Cocycle::Xi3 => "xi3",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "xi0" => Ok(Cocycle::Xi0),
            "xi2" => Ok(Cocycle::Xi2),
            "xi3" => Ok(Cocycle::Xi3),
            _ => Err(Error::Parse(format!("unknown cocycle {:?}", s))),
        }
    }
}

/// A pairing value with its exactness flag.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingValue {
    pub series: FormalLaurent,
    pub exact: bool,
}

impl PairingValue {
    pub fn text(&self) -> String {
        series::to_text(&self.series)
    }
}

/// `ℏᵏ θ^j · c` as an exact series.
fn prefactor(field: &ScalarField, c: i64, hbar: i32, theta: i32) -> Result<FormalLaurent> {
    let s = Scalar::from_int(c).try_mul(&field.theta().pow(theta)?)?;
    Ok(FormalLaurent::monomial(hbar, s, EXACT))
}

fn integral_value<A: CoeffAlgebra>(
    i: &A::Integral,
    pre: &FormalLaurent,
    ctx: &A::Ctx,
) -> Result<PairingValue> {
    let (s, exact) = A::integral_series(i, &A::field(ctx))?;
    Ok(PairingValue {
        series: s.try_mul(pre)?,
        exact,
    })
}

/// `Φ(ξ₀)(F) = −(ℏθ)⁻¹ ∫ F(0)`.
pub fn phi_xi0<A: CoeffAlgebra>(f: &Crossed<A>, ctx: &A::Ctx) -> Result<PairingValue> {
    let pre = prefactor(&A::field(ctx), -1, -1, -1)?;
    integral_value::<A>(&f.trace(ctx)?, &pre, ctx)
}

/// The weighted integrands `n₁ · f₀ ⋆ T^{n₀} f₁ ⋆ T^{n₀+n₁} ∂ⱼ f₂` per triple.
pub fn trilinear_integrands<A: CoeffAlgebra>(
    dir: usize,
    a0: &Crossed<A>,
    a1: &Crossed<A>,
    a2: &Crossed<A>,
    ctx: &A::Ctx,
) -> Result<BTreeMap<Triple, A>> {
    let mut out: BTreeMap<Triple, A> = BTreeMap::new();
    let d2 = a2.derivative(dir, ctx)?;
    for (&n0, f0) in a0.terms() {
        for (&n1, f1) in a1.terms() {
            if n1 == 0 {
                continue;
            }
            let n2 = -n0 - n1;
            let f2 = d2.component(n2);
            if f2.is_zero() {
                continue;
            }
            let prod = f0
                .star(&f1.translate(n0, ctx)?, ctx)?
                .star(&f2.translate(n0 + n1, ctx)?, ctx)?
                .scale(&BigRational::from_integer(n1.into()))?;
            if prod.is_zero() {
                continue;
            }
            let key = (n0, n1, n2);
            let next = match out.get(&key) {
                Some(old) => old.add(&prod)?,
                None => prod,
            };
            out.insert(key, next);
        }
    }
    Ok(out)
}

fn trilinear<A: CoeffAlgebra>(
    c: Cocycle,
    a0: &Crossed<A>,
    a1: &Crossed<A>,
    a2: &Crossed<A>,
    ctx: &A::Ctx,
) -> Result<BTreeMap<Triple, A::Integral>> {
    let dir = match c {
        Cocycle::Xi2 => 2,
        Cocycle::Xi3 => 1,
        Cocycle::Xi0 => unreachable!("xi0 has arity zero"),
    };
    trilinear_integrands(dir, a0, a1, a2, ctx)?
        .into_iter()
        .map(|(k, f)| Ok((k, f.integrate(ctx)?)))
        .collect()
}

fn trilinear_prefactor(c: Cocycle, field: &ScalarField) -> Result<FormalLaurent> {
    match c {
        Cocycle::Xi2 => prefactor(field, 1, 1, -1),
        Cocycle::Xi3 => prefactor(field, -1, 1, -1),
        Cocycle::Xi0 => prefactor(field, -1, -1, -1),
    }
}

/// `Φ(ξ₂)(F₀, F₁, F₂) = (ℏ/θ) Σ n₁ ∫ f₀ ⋆ T^{n₀}f₁ ⋆ T^{n₀+n₁} ∂₂f₂`.
pub fn phi_xi2<A: CoeffAlgebra>(
    a0: &Crossed<A>,
    a1: &Crossed<A>,
    a2: &Crossed<A>,
    ctx: &A::Ctx,
) -> Result<PairingValue> {
    phi_on_chain(Cocycle::Xi2, &Chain::tensor_unnormalized(vec![a0.clone(), a1.clone(), a2.clone()], ctx)?, ctx)
}

/// `Φ(ξ₃)(F₀, F₁, F₂) = −(ℏ/θ) Σ n₁ ∫ f₀ ⋆ T^{n₀}f₁ ⋆ T^{n₀+n₁} ∂₁f₂`.
pub fn phi_xi3<A: CoeffAlgebra>(
    a0: &Crossed<A>,
    a1: &Crossed<A>,
    a2: &Crossed<A>,
    ctx: &A::Ctx,
) -> Result<PairingValue> {
    phi_on_chain(Cocycle::Xi3, &Chain::tensor_unnormalized(vec![a0.clone(), a1.clone(), a2.clone()], ctx)?, ctx)
}

/// Per-triple raw integrals `Σ n₁ ∫ …` of a degree-2 chain (without the
/// `±ℏ/θ` prefactor).
pub fn components_on_chain<A: CoeffAlgebra>(
    c: Cocycle,
    chain: &Chain<A>,
    ctx: &A::Ctx,
) -> Result<BTreeMap<Triple, A::Integral>> {
    if chain.degree() != c.arity() || c == Cocycle::Xi0 {
        return Err(Error::ArityMismatch {
            arity: c.arity(),
            degree: chain.degree(),
        });
    }
    let mut out: BTreeMap<Triple, A::Integral> = BTreeMap::new();
    for (coef, t) in chain.terms() {
        let a0 = t[0].scale(coef)?;
        for (k, v) in trilinear(c, &a0, &t[1], &t[2], ctx)? {
            let next = match out.get(&k) {
                Some(old) => old.try_add(&v)?,
                None => v,
            };
            out.insert(k, next);
        }
    }
    Ok(out)
}

/// Evaluate a cochain on a chain of matching degree.
pub fn phi_on_chain<A: CoeffAlgebra>(
    c: Cocycle,
    chain: &Chain<A>,
    ctx: &A::Ctx,
) -> Result<PairingValue> {
    if chain.degree() != c.arity() {
        return Err(Error::ArityMismatch {
            arity: c.arity(),
            degree: chain.degree(),
        });
    }
    let pre = trilinear_prefactor(c, &A::field(ctx))?;
    if c == Cocycle::Xi0 {
        let mut total = A::zero_integral(ctx);
        for (coef, t) in chain.terms() {
            total = total.try_add(&t[0].scale(coef)?.trace(ctx)?)?;
        }
        return integral_value::<A>(&total, &pre, ctx);
    }
    let mut total = A::zero_integral(ctx);
    for v in components_on_chain(c, chain, ctx)?.values() {
        total = total.try_add(v)?;
    }
    integral_value::<A>(&total, &pre, ctx)
}

/// `⟨Φ, Ch_k(e)⟩`: evaluates the cochain on the component `c_k` of the
/// Chern character, which requires `2k` to equal the cochain's arity.
pub fn index_pairing<A: CoeffAlgebra>(
    c: Cocycle,
    e: &MatrixCrossed<A>,
    k: usize,
    ctx: &A::Ctx,
) -> Result<PairingValue> {
    if 2 * k != c.arity() {
        return Err(Error::ArityMismatch {
            arity: c.arity(),
            degree: 2 * k,
        });
    }
    let ch = chern(e, k, ctx)?;
    phi_on_chain(c, &ch.parts[k], ctx)
}

/// Pairing with the natural Chern component for the cochain.
pub fn pair<A: CoeffAlgebra>(c: Cocycle, e: &MatrixCrossed<A>, ctx: &A::Ctx) -> Result<PairingValue> {
    index_pairing(c, e, c.arity() / 2, ctx)
}
