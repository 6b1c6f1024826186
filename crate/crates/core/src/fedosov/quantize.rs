//! Flat sections: the quantization map, the symbol map, and the star
//! product they induce.

use super::weyl::WeylSection;
use crate::error::{Error, Result};
use crate::scalar::laurent::EXACT;
use crate::scalar::{FormalLaurent, GaussRational, Scalar};
use crate::torus::{FourierPoly, TorusPoissonData};

/// Default Fedosov-degree cap for ℏ-truncation `n`.
pub fn default_cap(n: i32) -> u32 {
    (2 * n.max(0) + 4) as u32
}

/// The unique `D`-flat section with symbol `f`: for each mode,
/// `e_k Σ_{a+b ≤ cap} (2πik₁)ᵃ (2πik₂)ᵇ y₁ᵃ y₂ᵇ / (a! b!)`.
pub fn quantize(f: &FourierPoly, data: &TorusPoissonData, cap: u32) -> Result<WeylSection> {
    let tpi = data.two_pi_i()?;
    let mut acc = WeylSection::zero(cap);
    let mut fact = vec![1i64; cap as usize + 1];
    for i in 1..=cap as usize {
        fact[i] = fact[i - 1] * i as i64;
    }
    for (k, c) in f.modes() {
        let z1 = tpi.try_mul(&Scalar::from_int(k.0 as i64))?;
        let z2 = tpi.try_mul(&Scalar::from_int(k.1 as i64))?;
        for a in 0..=cap {
            let za = z1.pow(a as i32)?;
            if za.is_zero() {
                continue;
            }
            for b in 0..=(cap - a) {
                let zb = z2.pow(b as i32)?;
                if zb.is_zero() {
                    continue;
                }
                let w = za
                    .try_mul(&zb)?
                    .scale(&GaussRational::from_ratio(1, fact[a as usize] * fact[b as usize]));
                let term = FourierPoly::mode(*k, c.try_mul(&FormalLaurent::constant(w, EXACT))?);
                acc = acc.add(&WeylSection::monomial((a, b), term, cap))?;
            }
        }
    }
    Ok(acc)
}

/// `σ(𝔮(f) ∘ 𝔮(g))` truncated at ℏ-order `n`. Only the `y`-free part of the
/// Weyl product is formed.
pub fn star_via_fedosov(
    f: &FourierPoly,
    g: &FourierPoly,
    data: &TorusPoissonData,
    cap: u32,
) -> Result<FourierPoly> {
    let n = data.trunc;
    if (cap as i32) < 2 * n {
        return Err(Error::CapTooSmall {
            cap,
            order: n,
            needed: (2 * n) as u32,
        });
    }
    let qf = quantize(f, data, cap)?;
    let qg = quantize(g, data, cap)?;
    Ok(qf.product_bounded(&qg, data, Some(0))?.symbol().truncate(n))
}
