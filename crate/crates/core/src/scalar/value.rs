//! The scalar field: exact rational functions or bound complex doubles.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::gauss::GaussRational;
use super::poly::{LaurentPoly, NVARS};
use super::ratfn::RatFn;
use crate::error::{Error, Result};

pub const VAR_PI: usize = 0;
pub const VAR_THETA: usize = 1;
pub const VAR_U: usize = 2;
pub const VAR_V: usize = 3;

/// Numeric values for θ and the rotation numbers α, β.
///
/// The translation multipliers are `u = exp(-2πiα)` and `v = exp(-2πiβ)`,
/// matching `translate(e_k, m) = u^{m k₁} v^{m k₂} e_k` for the pullback
/// `a ↦ a(· - mα, · - mβ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericBinding {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl NumericBinding {
    pub fn u(&self) -> Complex64 {
        Complex64::from_polar(1.0, -2.0 * PI * self.alpha)
    }

    pub fn v(&self) -> Complex64 {
        Complex64::from_polar(1.0, -2.0 * PI * self.beta)
    }

    pub fn point(&self) -> [Complex64; NVARS] {
        [
            Complex64::new(PI, 0.0),
            Complex64::new(self.theta, 0.0),
            self.u(),
            self.v(),
        ]
    }

    /// Smallest `|1 - u^a v^b|` over `0 < max(|a|,|b|) ≤ cutoff`.
    pub fn min_resonance_gap(&self, cutoff: i32) -> f64 {
        let mut gap = f64::INFINITY;
        for a in -cutoff..=cutoff {
            for b in -cutoff..=cutoff {
                if a == 0 && b == 0 {
                    continue;
                }
                let z = self.u().powi(a) * self.v().powi(b);
                gap = gap.min((Complex64::new(1.0, 0.0) - z).norm());
            }
        }
        gap
    }
}

/// Which backend new scalars are created in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScalarField {
    Exact,
    Numeric(NumericBinding),
}

impl ScalarField {
    fn symbol(&self, var: usize) -> Scalar {
        match self {
            ScalarField::Exact => Scalar::Exact(RatFn::var(var)),
            ScalarField::Numeric(b) => Scalar::Numeric(b.point()[var]),
        }
    }

    pub fn pi(&self) -> Scalar {
        self.symbol(VAR_PI)
    }

    pub fn theta(&self) -> Scalar {
        self.symbol(VAR_THETA)
    }

    pub fn u(&self) -> Scalar {
        self.symbol(VAR_U)
    }

    pub fn v(&self) -> Scalar {
        self.symbol(VAR_V)
    }

    pub fn i(&self) -> Scalar {
        Scalar::constant(GaussRational::i())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarField::Exact)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ScalarField::Exact => "exact",
            ScalarField::Numeric(_) => "numeric",
        }
    }

    /// Bring a scalar into this field (exact values are evaluated when the
    /// field is numeric; numeric values cannot become exact).
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (ScalarField::Exact, Scalar::Exact(_)) => Ok(s.clone()),
            (ScalarField::Exact, Scalar::Numeric(_)) => Err(Error::BackendMismatch),
            (ScalarField::Numeric(b), _) => Ok(Scalar::Numeric(s.eval(b))),
        }
    }
}

/// A scalar. Exact constants (no symbols) combine freely with numeric
/// values; exact values that involve π, θ, u or v do not.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(RatFn),
    Numeric(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(RatFn::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(RatFn::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Scalar::Exact(RatFn::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussRational::from_ratio(num, den))
    }

    pub fn rational(r: BigRational) -> Self {
        Self::constant(GaussRational::real(r))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Numeric(z) => *z == Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&RatFn> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Numeric(_) => None,
        }
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        self.as_exact().and_then(|r| r.as_constant())
    }

    /// Value under a numeric binding.
    pub fn eval(&self, b: &NumericBinding) -> Complex64 {
        match self {
            Scalar::Exact(r) => r.eval(&b.point()),
            Scalar::Numeric(z) => *z,
        }
    }

    fn numeric_pair(&self, o: &Self) -> Result<(Complex64, Complex64)> {
        let to_c = |s: &Scalar| -> Result<Complex64> {
            match s {
                Scalar::Numeric(z) => Ok(*z),
                Scalar::Exact(r) => r
                    .as_constant()
                    .map(|c| c.to_complex())
                    .ok_or(Error::BackendMismatch),
            }
        };
        Ok((to_c(self)?, to_c(o)?))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.add(b))),
            _ => {
                let (a, b) = self.numeric_pair(o)?;
                Ok(Scalar::Numeric(a + b))
            }
        }
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.mul(b))),
            _ => {
                let (a, b) = self.numeric_pair(o)?;
                Ok(Scalar::Numeric(a * b))
            }
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.neg()),
            Scalar::Numeric(z) => Scalar::Numeric(-z),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Exact(a) => Ok(Scalar::Exact(a.inv()?)),
            Scalar::Numeric(z) => Ok(Scalar::Numeric(z.inv())),
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inv()?)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.scale(c)),
            Scalar::Numeric(z) => Scalar::Numeric(z * c.to_complex()),
        }
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Text form used inside series output.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl From<RatFn> for Scalar {
    fn from(r: RatFn) -> Self {
        Scalar::Exact(r)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::Exact(RatFn::from_poly(p))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", r),
            Scalar::Numeric(z) => write!(f, "({:e} + {:e} * i)", z.re, z.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_symbols_with_numeric_is_rejected() {
        let b = NumericBinding {
            theta: 0.7,
            alpha: 0.3,
            beta: 0.41,
        };
        let exact_theta = ScalarField::Exact.theta();
        let num_theta = ScalarField::Numeric(b).theta();
        assert!(matches!(
            exact_theta.try_add(&num_theta),
            Err(Error::BackendMismatch)
        ));
        // constants are fine
        let two = Scalar::from_int(2);
        let s = two.try_mul(&num_theta).unwrap();
        assert_eq!(s, Scalar::Numeric(Complex64::new(1.4, 0.0)));
    }

    #[test]
    fn u_times_inverse_is_one() {
        let u = ScalarField::Exact.u();
        assert_eq!(u.try_mul(&u.inv().unwrap()).unwrap(), Scalar::one());
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn binding_is_pure() {
        let b = NumericBinding {
            theta: 0.7,
            alpha: 0.3,
            beta: 0.41,
        };
        let s = ScalarField::Exact
            .u()
            .try_add(&ScalarField::Exact.pi())
            .unwrap();
        assert_eq!(s.eval(&b).re.to_bits(), s.eval(&b).re.to_bits());
        assert!(b.min_resonance_gap(4) > 1e-3);
    }
}
