//! Rational functions over ℚ(i) in π, θ, u, v, kept in lowest terms.

use std::fmt;

use num_complex::Complex64;

use super::gauss::GaussRational;
use super::poly::{fmt_term, poly_gcd, LaurentPoly, NVARS};
use crate::error::{Error, Result};

/// `num / den` with `den` a monic polynomial free of monomial content and
/// coprime to `num`. A constant denominator is always `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(index: usize) -> Self {
        Self::from_poly(LaurentPoly::var(index))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (de, dp) = den.split_monomial_content();
        let num = num.shift(&de.map(|x| -x));
        if let Some(c) = dp.as_constant() {
            let inv = c.inv().ok_or(Error::DivisionByZero)?;
            return Ok(Self::from_poly(num.scale(&inv)));
        }
        let (ne, mut np) = num.split_monomial_content();
        let mut dp = dp;
        let g = poly_gcd(&np, &dp);
        if !g.is_one() {
            np = np.div_exact(&g).expect("gcd divides numerator");
            dp = dp.div_exact(&g).expect("gcd divides denominator");
        }
        let lc = dp.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        let inv = lc.inv().ok_or(Error::DivisionByZero)?;
        let np = np.scale(&inv).shift(&ne);
        let dp = dp.scale(&inv);
        if let Some(c) = dp.as_constant() {
            // gcd removal can leave a constant denominator
            let inv = c.inv().ok_or(Error::DivisionByZero)?;
            return Ok(Self::from_poly(np.scale(&inv)));
        }
        Ok(Self { num: np, den: dp })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: if c.is_zero() {
                LaurentPoly::one()
            } else {
                self.den.clone()
            },
        }
    }

    /// Multiply by the monomial with exponents `e`.
    pub fn shift(&self, e: &[i32; NVARS]) -> Self {
        Self {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Complex64; NVARS]) -> Complex64 {
        self.num.eval(point) / self.den.eval(point)
    }

    /// Factor list (`c`, `i`, powers) when the value is a single monomial
    /// over `1`; used by the series printer to interleave the `h` power.
    pub(crate) fn monomial_parts(&self) -> Option<(GaussRational, [i32; NVARS])> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial().map(|(e, c)| (c, e))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if let Some((e, c)) = self.num.as_monomial() {
                return write!(f, "{}", fmt_term(&e, &c));
            }
            return write!(f, "({})", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> RatFn {
        RatFn::var(2)
    }

    #[test]
    fn cancels_common_factors() {
        // (u^2 - 1) / (u - 1) = u + 1
        let one = RatFn::one();
        let num = u().mul(&u()).sub(&one);
        let den = u().sub(&one);
        let q = num.div(&den).unwrap();
        assert_eq!(q, u().add(&one));
        assert!(q.is_polynomial());
    }

    #[test]
    fn monomial_inverse_is_polynomial() {
        let theta = RatFn::var(1);
        let t = theta.inv().unwrap();
        assert!(t.is_polynomial());
        assert!(t.mul(&theta).is_one());
    }

    #[test]
    fn geometric_denominator_is_kept() {
        let one = RatFn::one();
        let x = one.sub(&u()).inv().unwrap();
        assert!(!x.is_polynomial());
        assert!(x.mul(&one.sub(&u())).is_one());
        assert_eq!(x.to_string(), "(-1) / (u - 1)");
    }
}
