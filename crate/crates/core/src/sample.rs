//! Seeded random elements for property suites.

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::crossed::{Crossed, PwSeries};
use crate::cyclic::{BurgheleaTuple, Chain};
use crate::error::Result;
use crate::fedosov::{WeylFormSection, WeylSection};
use crate::scalar::{FormalLaurent, GaussRational, Scalar, ScalarField, EXACT};
use crate::torus::{FourierPoly, Mode, PiecewiseFn, RieffelParams, TorusPoissonData};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random Gaussian rational.
pub fn gauss(rng: &mut SeededRng) -> GaussRational {
    let re = rng.gen_range(-4..=4);
    let im = rng.gen_range(-2..=2);
    let den = rng.gen_range(1..=3);
    GaussRational::new(
        num_rational::BigRational::new(re.into(), den.into()),
        num_rational::BigRational::new(im.into(), den.into()),
    )
}

/// Random scalar, optionally involving the symbols θ, u, v.
pub fn scalar(rng: &mut SeededRng, field: &ScalarField, symbolic: bool) -> Result<Scalar> {
    let mut s = Scalar::constant(gauss(rng));
    if symbolic && rng.gen_bool(0.5) {
        let t = match rng.gen_range(0..3) {
            0 => field.theta(),
            1 => field.u(),
            _ => field.v().inv()?,
        };
        s = s.try_add(&Scalar::constant(gauss(rng)).try_mul(&t)?)?;
    }
    Ok(s)
}

/// Random series with nonnegative orders `≤ max_order` (at most three terms).
pub fn series(
    rng: &mut SeededRng,
    field: &ScalarField,
    trunc: i32,
    max_order: i32,
) -> Result<FormalLaurent> {
    let mut acc = FormalLaurent::zero(trunc);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let n = rng.gen_range(0..=max_order.max(0));
        let c = scalar(rng, field, true)?;
        acc = acc.try_add(&FormalLaurent::monomial(n, c, trunc))?;
    }
    Ok(acc)
}

pub fn mode(rng: &mut SeededRng, radius: i32) -> Mode {
    (
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
    )
}

/// Random Fourier polynomial with up to `terms` modes in `[-radius, radius]²`.
pub fn fourier(
    rng: &mut SeededRng,
    field: &ScalarField,
    radius: i32,
    terms: usize,
    trunc: i32,
) -> Result<FourierPoly> {
    let mut f = FourierPoly::zero();
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let k = mode(rng, radius);
        let c = series(rng, field, trunc, 1)?;
        f = f.add(&FourierPoly::mode(k, c))?;
    }
    Ok(f)
}

/// Random Fourier polynomial depending on θ¹ only.
pub fn fourier_first_axis(
    rng: &mut SeededRng,
    field: &ScalarField,
    radius: i32,
    terms: usize,
    trunc: i32,
) -> Result<FourierPoly> {
    let mut f = FourierPoly::zero();
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let k = (rng.gen_range(-radius..=radius), 0);
        let c = series(rng, field, trunc, 1)?;
        f = f.add(&FourierPoly::mode(k, c))?;
    }
    Ok(f)
}

/// Random Weyl section with `y`-degree at most `ydeg`.
pub fn weyl_section(
    rng: &mut SeededRng,
    field: &ScalarField,
    ydeg: u32,
    trunc: i32,
    cap: u32,
) -> Result<WeylSection> {
    let mut s = WeylSection::zero(cap);
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(0..=ydeg);
        let b = rng.gen_range(0..=ydeg - a);
        let f = fourier(rng, field, 2, 2, trunc)?;
        s = s.add(&WeylSection::monomial((a, b), f, cap))?;
    }
    Ok(s)
}

pub fn weyl_form(
    rng: &mut SeededRng,
    field: &ScalarField,
    ydeg: u32,
    trunc: i32,
    cap: u32,
) -> Result<WeylFormSection> {
    let mut f = WeylFormSection::zero(cap);
    for slot in 0..4 {
        if rng.gen_bool(0.6) {
            f.parts[slot] = weyl_section(rng, field, ydeg, trunc, cap)?;
        }
    }
    Ok(f)
}

/// Random crossed-product element with components in `[-span, span]`.
pub fn crossed_fourier(
    rng: &mut SeededRng,
    field: &ScalarField,
    span: i32,
    trunc: i32,
) -> Result<Crossed<FourierPoly>> {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let n = rng.gen_range(-span..=span);
        terms.push((n, fourier(rng, field, 1, 2, trunc)?));
    }
    Crossed::from_terms(terms)
}

/// Random chain of the given degree with up to `terms` tensors.
pub fn chain_fourier(
    rng: &mut SeededRng,
    degree: usize,
    terms: usize,
    data: &TorusPoissonData,
    normalized: bool,
) -> Result<Chain<FourierPoly>> {
    let mut c = Chain::zero(degree, normalized);
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let t = (0..=degree)
            .map(|_| crossed_fourier(rng, &data.field, 1, data.trunc))
            .collect::<Result<Vec<_>>>()?;
        let coef = BigRational::from_integer(rng.gen_range(-3i64..=3).into());
        c.push(coef, t, data)?;
    }
    Ok(c)
}

/// Random tuple of `k + 1` integers in `[-radius, radius]` summing to zero.
pub fn burghelea_tuple(rng: &mut SeededRng, k: usize, radius: i32) -> BurgheleaTuple {
    let mut ns: Vec<i32> = (0..k).map(|_| rng.gen_range(-radius..=radius)).collect();
    ns.push(-ns.iter().sum::<i32>());
    BurgheleaTuple::new(ns).expect("sum is zero by construction")
}

/// Random subalgebra element `Σ r ℏᵃ T^{bα}(φ) Wⁿ` with `φ ∈ {1, f, g}` built
/// from the Rieffel functions, so all products stay in the exact ring.
pub fn crossed_rieffel(
    rng: &mut SeededRng,
    p: &RieffelParams,
    terms: usize,
) -> Result<Crossed<PwSeries>> {
    let basis = [PiecewiseFn::one(), p.f()?, p.g()?];
    let mut out = Crossed::zero();
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let phi = &basis[rng.gen_range(0..basis.len())];
        let shift = &p.alpha * BigRational::from_integer(rng.gen_range(-1i64..=1).into());
        let r = BigRational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into());
        let a = rng.gen_range(0..=1);
        let n = rng.gen_range(-1..=1);
        let series = PwSeries::monomial(a, phi.translate(&shift).scale(&r), EXACT);
        out = out.add(&Crossed::monomial(n, series))?;
    }
    Ok(out)
}
