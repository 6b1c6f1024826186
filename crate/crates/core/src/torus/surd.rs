//! Finite sums `Σ c_j √r_j` with rational `c_j` and positive rational `r_j`.
//!
//! Two radicands are merged when their ratio is the square of a rational, so
//! distinct stored radicands are linearly independent over ℚ and the zero
//! test is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Clone, Debug, Default)]
pub struct SurdSum {
    /// `(radicand, coefficient)`, radicands pairwise non-square ratios.
    terms: Vec<(BigRational, BigRational)>,
}

fn sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    Some(BigRational::new(sqrt_int(x.numer())?, sqrt_int(x.denom())?))
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(c: BigRational) -> Self {
        let mut s = Self::zero();
        s.push(BigRational::one(), c);
        s
    }

    /// `√x` for a rational `x ≥ 0`.
    pub fn sqrt(x: &BigRational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::InvalidPiecewise(format!("square root of negative {}", x)));
        }
        let mut s = Self::zero();
        s.push(x.clone(), BigRational::one());
        Ok(s)
    }

    fn push(&mut self, radicand: BigRational, coef: BigRational) {
        if coef.is_zero() || radicand.is_zero() {
            return;
        }
        if let Some(r) = rational_sqrt(&radicand) {
            return self.push_at_one(coef * r);
        }
        for (k, c) in self.terms.iter_mut() {
            if let Some(q) = rational_sqrt(&(&radicand / &*k)) {
                *c += coef * q;
                self.terms.retain(|(_, c)| !c.is_zero());
                return;
            }
        }
        self.terms.push((radicand, coef));
    }

    fn push_at_one(&mut self, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        if let Some((_, c)) = self.terms.iter_mut().find(|(k, _)| k.is_one()) {
            *c += coef;
        } else {
            self.terms.push((BigRational::one(), coef));
        }
        self.terms.retain(|(_, c)| !c.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(k, c)] if k.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.push(k.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                r.push(k1 * k2, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * k.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

impl PartialEq for SurdSum {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}

impl Coefficient for SurdSum {
    fn is_zero(&self) -> bool {
        SurdSum::is_zero(self)
    }
    fn try_add(&self, o: &Self) -> Result<Self> {
        Ok(self.add(o))
    }
    fn try_mul(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(o))
    }
    fn neg(&self) -> Self {
        SurdSum::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::qpoly::{int, rat};

    #[test]
    fn merges_square_ratios() {
        // √8 - 2√2 = 0, √(1/2) = √2 / 2
        let a = SurdSum::sqrt(&int(8)).unwrap();
        let b = SurdSum::sqrt(&int(2)).unwrap().scale(&int(2));
        assert!(a.sub(&b).is_zero());
        let c = SurdSum::sqrt(&rat(1, 2)).unwrap().scale(&int(2));
        assert_eq!(c, SurdSum::sqrt(&int(2)).unwrap());
    }

    #[test]
    fn product_of_conjugate_surds_is_rational() {
        let s3 = SurdSum::sqrt(&int(3)).unwrap();
        let x = SurdSum::rational(int(2)).add(&s3);
        let y = SurdSum::rational(int(2)).sub(&s3);
        assert_eq!(x.mul(&y).as_rational(), Some(int(1)));
    }
}
