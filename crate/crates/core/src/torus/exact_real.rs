//! Exact values of integrals of piecewise functions with square-root pieces.
//!
//! `∫_0^h q(s) R(s)^{-1/2} ds` is Hermite-reduced to boundary terms
//! `[B √R]_0^h` plus a remainder `∫_0^h r R^{-1/2}` with `deg r < deg R − 1`.
//! Remainders are kept symbolically, keyed by `(R, h)`; two values are equal
//! when their reduced forms agree.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::qpoly::{int, QPoly};
use super::quadrature::integrate_endpoint_singular;
use super::surd::SurdSum;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExactReal {
    base: SurdSum,
    periods: BTreeMap<(QPoly, BigRational), QPoly>,
}

const QUAD_TOL: f64 = 1e-12;

impl ExactReal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(c: BigRational) -> Self {
        Self::surd(SurdSum::rational(c))
    }

    pub fn surd(s: SurdSum) -> Self {
        Self {
            base: s,
            periods: BTreeMap::new(),
        }
    }

    /// `∫_0^h q(s) / √R(s) ds` in reduced form.
    pub fn period(q: &QPoly, r: &QPoly, h: &BigRational) -> Result<Self> {
        let d = match r.degree() {
            Some(d) => d,
            None => return Err(Error::InvalidPiecewise("zero radicand".into())),
        };
        if d == 0 {
            // constant radicand c: (∫q) / √c = (∫q / c) √c
            let c = r.leading();
            let s = SurdSum::sqrt(&c)?.scale(&(q.integral(h) / &c));
            return Ok(Self::surd(s));
        }
        let lc = r.leading();
        let dr = r.deriv();
        let half = BigRational::new(1.into(), 2.into());
        let mut rem = q.clone();
        let mut b = QPoly::zero();
        while let Some(dq) = rem.degree() {
            if dq + 1 < d {
                break;
            }
            let j = dq + 1 - d;
            // E_j = j s^{j-1} R + s^j R'/2, leading coefficient (j + d/2) lc(R)
            let sj = QPoly::x().pow(j as u32);
            let mut e = sj.mul(&dr).scale(&half);
            if j > 0 {
                e = e.add(&QPoly::x().pow(j as u32 - 1).mul(r).scale(&int(j as i64)));
            }
            let lead = (int(j as i64) + int(d as i64) * &half) * &lc;
            let c = rem.leading() / lead;
            rem = rem.sub(&e.scale(&c));
            b = b.add(&sj.scale(&c));
        }
        let zero = BigRational::zero();
        let at_h = SurdSum::sqrt(&r.eval(h))?.scale(&b.eval(h));
        let at_0 = SurdSum::sqrt(&r.eval(&zero))?.scale(&b.eval(&zero));
        let mut out = Self::surd(at_h.sub(&at_0));
        if !rem.is_zero() {
            out.periods.insert((r.clone(), h.clone()), rem);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.periods.is_empty()
    }

    /// The value if it is a rational number.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.periods.is_empty() {
            self.base.as_rational()
        } else {
            None
        }
    }

    pub fn base(&self) -> &SurdSum {
        &self.base
    }

    pub fn num_periods(&self) -> usize {
        self.periods.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.base = r.base.add(&o.base);
        for (k, p) in &o.periods {
            let next = match r.periods.get(k) {
                Some(x) => x.add(p),
                None => p.clone(),
            };
            if next.is_zero() {
                r.periods.remove(k);
            } else {
                r.periods.insert(k.clone(), next);
            }
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            base: self.base.neg(),
            periods: self
                .periods
                .iter()
                .map(|(k, p)| (k.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            base: self.base.scale(c),
            periods: self
                .periods
                .iter()
                .map(|(k, p)| (k.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// Floating-point value; remainder integrals by adaptive quadrature.
    pub fn to_f64(&self) -> f64 {
        let mut acc = self.base.to_f64();
        for ((r, h), q) in &self.periods {
            let f = |s: f64| {
                let rv = r.eval_f64(s);
                if rv <= 0.0 {
                    0.0
                } else {
                    q.eval_f64(s) / rv.sqrt()
                }
            };
            acc += integrate_endpoint_singular(&f, h.to_f64().unwrap_or(f64::NAN), QUAD_TOL);
        }
        acc
    }
}

impl Coefficient for ExactReal {
    fn is_zero(&self) -> bool {
        ExactReal::is_zero(self)
    }
    fn try_add(&self, o: &Self) -> Result<Self> {
        Ok(self.add(o))
    }
    fn try_mul(&self, o: &Self) -> Result<Self> {
        if let Some(c) = self.as_rational() {
            return Ok(o.scale(&c));
        }
        if let Some(c) = o.as_rational() {
            return Ok(self.scale(&c));
        }
        Err(Error::UnsupportedProduct(
            "product of two irrational integrals".into(),
        ))
    }
    fn neg(&self) -> Self {
        ExactReal::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::qpoly::rat;
    use crate::torus::quadrature::integrate;

    #[test]
    fn derivative_of_root_integrates_to_boundary() {
        // ∫_0^1 R'/(2√R) = √R(1) − √R(0) with R = 1 + s^2
        let r = QPoly::from_ints(&[1, 0, 1]);
        let q = r.deriv().scale(&rat(1, 2));
        let v = ExactReal::period(&q, &r, &int(1)).unwrap();
        assert_eq!(v.num_periods(), 0);
        let expect = SurdSum::sqrt(&int(2)).unwrap().sub(&SurdSum::rational(int(1)));
        assert_eq!(v, ExactReal::surd(expect));
    }

    #[test]
    fn reduction_matches_quadrature() {
        let r = QPoly::from_ints(&[2, -1, 3, 1]);
        let q = QPoly::from_ints(&[1, 4, 0, -2, 5, 1]);
        let h = rat(3, 4);
        let v = ExactReal::period(&q, &r, &h).unwrap();
        let direct = integrate(
            &|s: f64| q.eval_f64(s) / r.eval_f64(s).sqrt(),
            0.0,
            0.75,
            1e-13,
        );
        assert!((v.to_f64() - direct).abs() < 1e-10);
        assert!(v.num_periods() == 1);
    }
}
