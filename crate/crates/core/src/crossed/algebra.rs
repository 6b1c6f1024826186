//! Coefficient algebras for the crossed product: Fourier polynomials on T²
//! with the Moyal product, and ℏ-series of piecewise functions of θ¹ (the
//! subalgebra of functions constant along θ², where the star product is
//! pointwise).

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::scalar::{Coefficient, FormalLaurent, Laurent, Scalar, ScalarField};
use crate::torus::{ExactReal, FourierPoly, PiecewiseFn, SurdSum, TorusPoissonData};

/// Deterministic nonzero integer weight in `[-997, 997]` for a probe.
pub fn probe_weight(seed: u64, a: i64, b: i64, c: i64) -> i64 {
    let mut x = seed
        ^ (a as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (b as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ (c as u64).wrapping_mul(0x1656_67B1_9E37_79F9);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    let w = (x % 1995) as i64 - 997;
    if w == 0 {
        1
    } else {
        w
    }
}

/// Rational sample point `j / 10007` in `(0, 1)`; the prime denominator keeps
/// it off every breakpoint with a denominator coprime to 10007.
pub fn probe_point(seed: u64) -> BigRational {
    let j = probe_weight(seed, 17, 23, 29).rem_euclid(10006) + 1;
    BigRational::new(j.into(), 10007.into())
}

pub trait CoeffAlgebra: Clone + Debug + PartialEq {
    type Ctx: Clone + Debug;
    /// Values of the Haar integral.
    type Integral: Coefficient;
    /// Coefficients of probe values (which are ℏ-series of atoms).
    type Atom: Coefficient;

    fn zero() -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn scale(&self, c: &BigRational) -> Result<Self>;
    fn star(&self, o: &Self, ctx: &Self::Ctx) -> Result<Self>;
    /// Pullback along `-m` times the rotation.
    fn translate(&self, m: i32, ctx: &Self::Ctx) -> Result<Self>;
    /// `c(a) · 1` for a fixed linear functional `c` with `c(1) = 1`.
    fn unit_coordinate(&self, ctx: &Self::Ctx) -> Result<Self>;
    /// Multiply by `ℏ^k`.
    fn shift_hbar(&self, k: i32) -> Result<Self>;
    fn derivative(&self, dir: usize, ctx: &Self::Ctx) -> Result<Self>;
    fn integrate(&self, ctx: &Self::Ctx) -> Result<Self::Integral>;
    /// A random linear functional determined by `seed`.
    fn probe(&self, seed: u64, ctx: &Self::Ctx) -> Result<Laurent<Self::Atom>>;
    fn zero_integral(ctx: &Self::Ctx) -> Self::Integral;
    /// Integral as a scalar series (exact when possible).
    fn integral_series(i: &Self::Integral, field: &ScalarField) -> Result<(FormalLaurent, bool)>;
    fn field(ctx: &Self::Ctx) -> ScalarField;
    fn trunc(ctx: &Self::Ctx) -> i32;
    /// Drop ℏ orders at or beyond the working truncation.
    fn truncated(&self, ctx: &Self::Ctx) -> Self;
    fn to_json(&self) -> serde_json::Value;

    fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }
}

impl CoeffAlgebra for FourierPoly {
    type Ctx = TorusPoissonData;
    type Integral = FormalLaurent;
    type Atom = Scalar;

    fn zero() -> Self {
        FourierPoly::zero()
    }
    fn one(ctx: &Self::Ctx) -> Self {
        FourierPoly::one(ctx.trunc)
    }
    fn is_zero(&self) -> bool {
        FourierPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Result<Self> {
        FourierPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        FourierPoly::neg(self)
    }
    fn scale(&self, c: &BigRational) -> Result<Self> {
        FourierPoly::scale(self, &FormalLaurent::exact(Scalar::rational(c.clone())))
    }
    fn star(&self, o: &Self, ctx: &Self::Ctx) -> Result<Self> {
        self.moyal_star(o, ctx)
    }
    fn translate(&self, m: i32, ctx: &Self::Ctx) -> Result<Self> {
        FourierPoly::translate(self, m, ctx)
    }
    fn unit_coordinate(&self, _ctx: &Self::Ctx) -> Result<Self> {
        Ok(match self.coeff((0, 0)) {
            Some(c) => FourierPoly::constant(c.clone()),
            None => FourierPoly::zero(),
        })
    }
    fn shift_hbar(&self, k: i32) -> Result<Self> {
        self.map_coeffs(|_, c| c.shift(k))
    }
    fn derivative(&self, dir: usize, ctx: &Self::Ctx) -> Result<Self> {
        FourierPoly::derivative(self, dir, ctx)
    }
    fn integrate(&self, ctx: &Self::Ctx) -> Result<Self::Integral> {
        Ok(FourierPoly::integrate(self, ctx.trunc))
    }
    fn probe(&self, seed: u64, ctx: &Self::Ctx) -> Result<Laurent<Scalar>> {
        let mut acc = FormalLaurent::zero(ctx.trunc);
        for (k, c) in self.modes() {
            let w = probe_weight(seed, k.0 as i64, k.1 as i64, 0);
            acc = acc.try_add(&c.try_scale(&Scalar::from_int(w))?)?;
        }
        Ok(acc)
    }
    fn zero_integral(ctx: &Self::Ctx) -> Self::Integral {
        FormalLaurent::zero(ctx.trunc)
    }
    fn integral_series(i: &Self::Integral, _field: &ScalarField) -> Result<(FormalLaurent, bool)> {
        Ok((i.clone(), i.terms().all(|(_, c)| c.is_exact())))
    }
    fn field(ctx: &Self::Ctx) -> ScalarField {
        ctx.field
    }
    fn trunc(ctx: &Self::Ctx) -> i32 {
        ctx.trunc
    }
    fn truncated(&self, ctx: &Self::Ctx) -> Self {
        self.truncate(ctx.trunc)
    }
    fn to_json(&self) -> serde_json::Value {
        FourierPoly::to_json(self)
    }
}

/// ℏ-series of piecewise functions of θ¹.
pub type PwSeries = Laurent<PiecewiseFn>;

/// Rotation number (exact) and ℏ truncation for the subalgebra.
#[derive(Clone, Debug)]
pub struct SubalgebraCtx {
    pub alpha: BigRational,
    pub trunc: i32,
    pub field: ScalarField,
}

impl SubalgebraCtx {
    pub fn new(alpha: BigRational, trunc: i32) -> Self {
        Self {
            alpha,
            trunc,
            field: ScalarField::Exact,
        }
    }
}

impl CoeffAlgebra for PwSeries {
    type Ctx = SubalgebraCtx;
    type Integral = Laurent<ExactReal>;
    type Atom = SurdSum;

    fn zero() -> Self {
        PwSeries::zero(crate::scalar::EXACT)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        PwSeries::constant(PiecewiseFn::one(), ctx.trunc)
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Result<Self> {
        self.try_add(o)
    }
    fn neg(&self) -> Self {
        Laurent::neg(self)
    }
    fn scale(&self, c: &BigRational) -> Result<Self> {
        self.try_map(|f| Ok(f.scale(c)))
    }
    fn star(&self, o: &Self, _ctx: &Self::Ctx) -> Result<Self> {
        self.try_mul(o)
    }
    fn translate(&self, m: i32, ctx: &Self::Ctx) -> Result<Self> {
        if m == 0 {
            return Ok(self.clone());
        }
        let shift = &ctx.alpha * BigRational::from_integer(m.into());
        self.try_map(|f| Ok(f.translate(&shift)))
    }
    fn unit_coordinate(&self, _ctx: &Self::Ctx) -> Result<Self> {
        self.try_map(|f| Ok(PiecewiseFn::constant(f.poly_value_at_zero())))
    }
    fn shift_hbar(&self, k: i32) -> Result<Self> {
        self.shift(k)
    }
    fn derivative(&self, dir: usize, _ctx: &Self::Ctx) -> Result<Self> {
        if dir == 2 {
            return Ok(PwSeries::zero(self.trunc()));
        }
        self.try_map(|f| f.deriv())
    }
    fn integrate(&self, _ctx: &Self::Ctx) -> Result<Self::Integral> {
        self.try_map(|f| f.integrate())
    }
    fn probe(&self, seed: u64, _ctx: &Self::Ctx) -> Result<Laurent<SurdSum>> {
        let x = probe_point(seed);
        self.try_map(|f| f.eval_exact(&x))
    }
    fn zero_integral(ctx: &Self::Ctx) -> Self::Integral {
        Laurent::zero(ctx.trunc)
    }
    fn integral_series(i: &Self::Integral, field: &ScalarField) -> Result<(FormalLaurent, bool)> {
        let exact = i.terms().all(|(_, c)| c.as_rational().is_some());
        let s = i.try_map(|c| match (c.as_rational(), field) {
            (Some(r), ScalarField::Exact) => Ok(Scalar::rational(r)),
            (Some(r), ScalarField::Numeric(b)) => Ok(Scalar::Numeric(Scalar::rational(r).eval(b))),
            (None, _) => Ok(Scalar::Numeric(num_complex::Complex64::new(c.to_f64(), 0.0))),
        })?;
        Ok((s, exact))
    }
    fn field(ctx: &Self::Ctx) -> ScalarField {
        ctx.field
    }
    fn trunc(ctx: &Self::Ctx) -> i32 {
        ctx.trunc
    }
    fn truncated(&self, ctx: &Self::Ctx) -> Self {
        self.truncate(ctx.trunc)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(order, f)| serde_json::json!({"order": order, "function": f.to_json()}))
                .collect(),
        )
    }
}

/// `c · 1` in the piecewise subalgebra.
pub fn pw_constant(c: BigRational, trunc: i32) -> PwSeries {
    if c.is_zero() {
        return PwSeries::zero(trunc);
    }
    PwSeries::constant(PiecewiseFn::constant(c), trunc)
}

/// Exact unit series helper.
pub fn pw_one(trunc: i32) -> PwSeries {
    pw_constant(BigRational::one(), trunc)
}
