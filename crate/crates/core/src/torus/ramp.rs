//! Rieffel's bump functions `f` and `g = √(f − f²)` on S¹.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::piecewise::{Piece, PiecewiseFn};
use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Monotone ramp `r: [0, 1] → [0, 1]` with `r(0) = 0`, `r(1) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Ramp {
    /// `6t⁵ − 15t⁴ + 10t³`
    Quintic,
    /// `3t² − 2t³`
    Cubic,
    Custom(QPoly),
}

impl Ramp {
    pub fn poly(&self) -> QPoly {
        match self {
            Ramp::Quintic => QPoly::from_ints(&[0, 0, 0, 10, -15, 6]),
            Ramp::Cubic => QPoly::from_ints(&[0, 0, 3, -2]),
            Ramp::Custom(p) => p.clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Ramp::Quintic => "quintic",
            Ramp::Cubic => "cubic",
            Ramp::Custom(_) => "custom",
        }
    }

    /// Endpoint values and monotonicity (derivative sampled on 64 points).
    pub fn validate(&self) -> Result<()> {
        let p = self.poly();
        if !p.eval(&BigRational::zero()).is_zero() || !p.eval(&BigRational::one()).is_one() {
            return Err(Error::Constraint("ramp must satisfy r(0) = 0 and r(1) = 1".into()));
        }
        let d = p.deriv();
        if (0..=64).any(|i| d.eval_f64(i as f64 / 64.0) < -1e-12) {
            return Err(Error::Constraint("ramp must be monotone".into()));
        }
        Ok(())
    }
}

/// Rotation number α, ramp width ε and ramp shape, with `0 < ε < α` and
/// `α + ε < 1/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct RieffelParams {
    pub alpha: BigRational,
    pub eps: BigRational,
    pub ramp: Ramp,
}

impl RieffelParams {
    pub fn new(alpha: BigRational, eps: BigRational, ramp: Ramp) -> Result<Self> {
        let half = BigRational::new(1.into(), 2.into());
        if !eps.is_positive() || eps >= alpha {
            return Err(Error::Constraint(format!(
                "need 0 < eps < alpha, got alpha = {}, eps = {}",
                alpha, eps
            )));
        }
        if &alpha + &eps >= half {
            return Err(Error::Constraint(format!(
                "need alpha + eps < 1/2, got alpha = {}, eps = {}",
                alpha, eps
            )));
        }
        ramp.validate()?;
        Ok(Self { alpha, eps, ramp })
    }

    /// The ramp rescaled to the cell `[0, ε)`.
    fn ramp_on_cell(&self) -> QPoly {
        self.ramp
            .poly()
            .compose_linear(&(BigRational::one() / &self.eps), &BigRational::zero())
    }

    fn breaks(&self) -> Vec<BigRational> {
        vec![
            BigRational::zero(),
            self.eps.clone(),
            self.alpha.clone(),
            &self.alpha + &self.eps,
        ]
    }

    /// `f`: ramp up on `[0, ε]`, 1 on `[ε, α]`, `1 − f(x − α)` on
    /// `[α, α + ε]`, 0 afterwards.
    pub fn f(&self) -> Result<PiecewiseFn> {
        let r = self.ramp_on_cell();
        PiecewiseFn::new(
            self.breaks(),
            vec![
                Piece::poly(r.clone()),
                Piece::poly(QPoly::one()),
                Piece::poly(QPoly::one().sub(&r)),
                Piece::poly(QPoly::zero()),
            ],
        )
    }

    /// `g = √(f − f²)` on `[α, α + ε]`, zero elsewhere.
    pub fn g(&self) -> Result<PiecewiseFn> {
        let r = self.ramp_on_cell();
        let rad = r.sub(&r.mul(&r));
        PiecewiseFn::new(
            self.breaks(),
            vec![
                Piece::poly(QPoly::zero()),
                Piece::poly(QPoly::zero()),
                Piece::root(rad),
                Piece::poly(QPoly::zero()),
            ],
        )
    }
}

/// Parse a decimal or fraction string (`0.3`, `3/10`, `-2`) exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {:?}", s));
    if let Some((a, b)) = s.split_once('/') {
        let n: num_bigint::BigInt = a.trim().parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = b.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    let digits = format!("{}{}", ip, fp);
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let n: num_bigint::BigInt = digits.parse().map_err(|_| bad())?;
    let d = num_bigint::BigInt::from(10u32).pow(fp.len() as u32);
    let r = BigRational::new(n, d);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::qpoly::rat;

    fn params(ramp: Ramp) -> RieffelParams {
        RieffelParams::new(rat(3, 10), rat(1, 10), ramp).unwrap()
    }

    #[test]
    fn integral_of_f_is_alpha() {
        for ramp in [Ramp::Quintic, Ramp::Cubic] {
            let f = params(ramp).f().unwrap();
            f.check_continuity().unwrap();
            assert_eq!(f.integrate().unwrap().as_rational(), Some(rat(3, 10)));
        }
    }

    #[test]
    fn g_squared_is_f_minus_f_squared_on_the_second_ramp() {
        let p = params(Ramp::Quintic);
        let f = p.f().unwrap();
        let g = p.g().unwrap();
        g.check_continuity().unwrap();
        let g2 = g.mul(&g).unwrap();
        let target = f.sub(&f.mul(&f).unwrap());
        for j in 1..40 {
            let x = rat(j, 40);
            let want = if x > rat(3, 10) && x < rat(4, 10) {
                target.eval_exact(&x).unwrap()
            } else {
                crate::torus::SurdSum::rational(num_rational::BigRational::from_integer(0.into()))
            };
            assert_eq!(g2.eval_exact(&x).unwrap(), want);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(RieffelParams::new(rat(3, 10), rat(35, 100), Ramp::Quintic).is_err());
        assert!(RieffelParams::new(rat(35, 100), rat(2, 10), Ramp::Quintic).is_err());
    }

    #[test]
    fn parses_decimals() {
        assert_eq!(parse_rational("0.37").unwrap(), rat(37, 100));
        assert_eq!(parse_rational("-3/10").unwrap(), rat(-3, 10));
        assert!(parse_rational("abc").is_err());
    }
}
