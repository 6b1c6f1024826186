//! Truncated Laurent series in ℏ over any coefficient ring.
//!
//! A series stores the coefficients of orders `≤ trunc`; everything above is
//! unknown. Exact values (constants, monomial prefactors) use the sentinel
//! truncation [`EXACT`].

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{Error, Result};

/// Truncation order of a series that is known exactly.
pub const EXACT: i32 = i32::MAX / 4;

/// Default lowest permitted order is `-DEFAULT_FLOOR`.
pub const DEFAULT_FLOOR: i32 = 2;

/// Ring operations needed by series arithmetic.
pub trait Coefficient: Clone + Debug + PartialEq {
    fn is_zero(&self) -> bool;
    fn try_add(&self, o: &Self) -> Result<Self>;
    fn try_mul(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn try_inv(&self) -> Result<Self> {
        Err(Error::NotInvertible)
    }
    fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }
}

impl Coefficient for super::value::Scalar {
    fn is_zero(&self) -> bool {
        super::value::Scalar::is_zero(self)
    }
    fn try_add(&self, o: &Self) -> Result<Self> {
        super::value::Scalar::try_add(self, o)
    }
    fn try_mul(&self, o: &Self) -> Result<Self> {
        super::value::Scalar::try_mul(self, o)
    }
    fn neg(&self) -> Self {
        super::value::Scalar::neg(self)
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv().map_err(|_| Error::NotInvertible)
    }
}

/// Shift a truncation order, keeping exact series exact.
fn sat_add(a: i32, b: i32) -> i32 {
    if a >= EXACT {
        EXACT
    } else {
        a.saturating_add(b).min(EXACT - 1)
    }
}

/// Equality compares coefficients up to the smaller truncation order.
#[derive(Clone, Debug)]
pub struct Laurent<C> {
    coeffs: BTreeMap<i32, C>,
    trunc: i32,
    floor: i32,
}

impl<C: Coefficient> PartialEq for Laurent<C> {
    fn eq(&self, o: &Self) -> bool {
        self.agrees_with(o)
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero(trunc: i32) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            trunc,
            floor: DEFAULT_FLOOR,
        }
    }

    pub fn monomial(order: i32, c: C, trunc: i32) -> Self {
        let mut s = Self::zero(trunc);
        if order <= trunc && !c.is_zero() {
            s.coeffs.insert(order, c);
        }
        s
    }

    pub fn constant(c: C, trunc: i32) -> Self {
        Self::monomial(0, c, trunc)
    }

    /// Exactly known constant.
    pub fn exact(c: C) -> Self {
        Self::constant(c, EXACT)
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (i32, C)>, trunc: i32) -> Result<Self> {
        let mut s = Self::zero(trunc);
        for (n, c) in it {
            s.add_at(n, &c)?;
        }
        Ok(s)
    }

    pub fn with_floor(mut self, floor: i32) -> Self {
        self.floor = floor;
        self
    }

    pub fn trunc(&self) -> i32 {
        self.trunc
    }

    pub fn floor(&self) -> i32 {
        self.floor
    }

    pub fn is_exact(&self) -> bool {
        self.trunc >= EXACT
    }

    /// Lowest order with a nonzero coefficient.
    pub fn ord(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, n: i32) -> Option<&C> {
        self.coeffs.get(&n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_at(&mut self, n: i32, c: &C) -> Result<()> {
        if n > self.trunc || c.is_zero() {
            return Ok(());
        }
        let next = match self.coeffs.get(&n) {
            Some(old) => old.try_add(c)?,
            None => c.clone(),
        };
        if next.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, next);
        }
        Ok(())
    }

    /// Drop everything above order `n`.
    pub fn truncate(&self, n: i32) -> Self {
        let trunc = self.trunc.min(n);
        Self {
            coeffs: self
                .coeffs
                .range(..=trunc)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            trunc,
            floor: self.floor,
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let mut r = Self {
            coeffs: BTreeMap::new(),
            trunc: self.trunc.min(o.trunc),
            floor: self.floor.min(o.floor),
        };
        for (n, c) in self.coeffs.iter().chain(o.coeffs.iter()) {
            r.add_at(*n, c)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, c.neg())).collect(),
            trunc: self.trunc,
            floor: self.floor,
        }
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    /// Cauchy product. The result is known up to
    /// `min(N_a + ord b, N_b + ord a)`.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let oa = self.ord().unwrap_or(0);
        let ob = o.ord().unwrap_or(0);
        let trunc = sat_add(self.trunc, ob).min(sat_add(o.trunc, oa));
        let floor = self.floor.min(o.floor);
        let mut r = Self {
            coeffs: BTreeMap::new(),
            trunc,
            floor,
        };
        for (n, a) in &self.coeffs {
            for (m, b) in &o.coeffs {
                let k = n + m;
                if k > trunc {
                    break;
                }
                r.add_at(k, &a.try_mul(b)?)?;
            }
        }
        if let Some(k) = r.ord() {
            if k < -floor {
                return Err(Error::BelowFloor { order: k, floor });
            }
        }
        Ok(r)
    }

    /// Multiply every coefficient by `c` (on the right).
    pub fn try_scale(&self, c: &C) -> Result<Self> {
        let mut r = Self::zero(self.trunc).with_floor(self.floor);
        for (n, a) in &self.coeffs {
            r.add_at(*n, &a.try_mul(c)?)?;
        }
        Ok(r)
    }

    /// Multiply by `ℏ^k`.
    pub fn shift(&self, k: i32) -> Result<Self> {
        let r = Self {
            coeffs: self.coeffs.iter().map(|(n, c)| (n + k, c.clone())).collect(),
            trunc: sat_add(self.trunc, k),
            floor: self.floor,
        };
        if let Some(o) = r.ord() {
            if o < -r.floor {
                return Err(Error::BelowFloor {
                    order: o,
                    floor: r.floor,
                });
            }
        }
        Ok(r)
    }

    /// Inverse series; requires the lowest coefficient to be invertible.
    /// An exact monomial has an exact inverse; otherwise the result is known
    /// to order `trunc - 2 ord`.
    pub fn try_inv(&self) -> Result<Self> {
        let k = self.ord().ok_or(Error::NotInvertible)?;
        let lead_inv = self.coeffs[&k]
            .try_inv()
            .map_err(|_| Error::NotInvertible)?;
        if self.coeffs.len() == 1 {
            let trunc = if self.is_exact() {
                EXACT
            } else {
                self.trunc - 2 * k
            };
            let r = Self::monomial(-k, lead_inv, trunc).with_floor(self.floor);
            if -k < -self.floor {
                return Err(Error::BelowFloor {
                    order: -k,
                    floor: self.floor,
                });
            }
            return Ok(r);
        }
        let trunc = self.trunc - 2 * k;
        if -k < -self.floor {
            return Err(Error::BelowFloor {
                order: -k,
                floor: self.floor,
            });
        }
        // normalized a = ℏ^k a0 (1 + rest); b_j solves Σ a_{k+i} b_{j-i} = δ_j0
        let len = (self.trunc - k).max(0) as usize;
        let a: Vec<Option<&C>> = (0..=len as i32).map(|i| self.coeffs.get(&(k + i))).collect();
        let mut b: Vec<Option<C>> = Vec::with_capacity(len + 1);
        b.push(Some(lead_inv.clone()));
        for j in 1..=len {
            let mut acc: Option<C> = None;
            for i in 1..=j {
                if let (Some(ai), Some(bj)) = (a[i], b[j - i].as_ref()) {
                    let t = ai.try_mul(bj)?;
                    acc = Some(match acc {
                        Some(x) => x.try_add(&t)?,
                        None => t,
                    });
                }
            }
            b.push(match acc {
                Some(x) => {
                    let v = lead_inv.try_mul(&x)?.neg();
                    if v.is_zero() {
                        None
                    } else {
                        Some(v)
                    }
                }
                None => None,
            });
        }
        let mut r = Self::zero(trunc).with_floor(self.floor);
        for (j, c) in b.into_iter().enumerate() {
            if let Some(c) = c {
                r.add_at(j as i32 - k, &c)?;
            }
        }
        Ok(r)
    }

    /// Apply a coefficientwise map (which must send zero to zero).
    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Laurent<D>> {
        let mut r = Laurent::<D>::zero(self.trunc).with_floor(self.floor);
        for (n, c) in &self.coeffs {
            r.add_at(*n, &f(c)?)?;
        }
        Ok(r)
    }

    /// Equality of all coefficients up to the smaller truncation.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let t = self.trunc.min(o.trunc);
        self.coeffs.range(..=t).eq(o.coeffs.range(..=t))
    }
}

impl<C: Coefficient> Coefficient for Laurent<C> {
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn try_add(&self, o: &Self) -> Result<Self> {
        Laurent::try_add(self, o)
    }
    fn try_mul(&self, o: &Self) -> Result<Self> {
        Laurent::try_mul(self, o)
    }
    fn neg(&self) -> Self {
        Laurent::neg(self)
    }
    fn try_inv(&self) -> Result<Self> {
        Laurent::try_inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::value::Scalar;

    type S = Laurent<Scalar>;

    fn poly(cs: &[(i32, i64)], trunc: i32) -> S {
        S::from_coeffs(cs.iter().map(|(n, c)| (*n, Scalar::from_int(*c))), trunc).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let h = poly(&[(1, 1)], 6);
        assert!(h.try_add(&h.neg()).unwrap().is_zero());
    }

    #[test]
    fn truncation_is_minimum() {
        let a = poly(&[(0, 1), (3, 2)], 4);
        let b = poly(&[(1, 1)], 2);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.trunc(), 2);
        assert_eq!(s, poly(&[(0, 1), (1, 1)], 2));
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[(0, 1), (1, 1)], 6);
        let b = poly(&[(0, 1), (1, -1)], 6);
        assert_eq!(a.try_mul(&b).unwrap(), poly(&[(0, 1), (2, -1)], 6));
    }

    #[test]
    fn inverse_of_one_minus_h_is_geometric() {
        let a = poly(&[(0, 1), (1, -1)], 6);
        let inv = a.try_inv().unwrap();
        let expect: Vec<(i32, i64)> = (0..=6).map(|k| (k, 1)).collect();
        assert_eq!(inv, poly(&expect, 6));
    }

    #[test]
    fn zero_is_not_invertible() {
        assert!(matches!(S::zero(6).try_inv(), Err(Error::NotInvertible)));
    }

    #[test]
    fn monomial_inverse_is_exact() {
        let h = S::monomial(1, Scalar::from_int(3), EXACT);
        let inv = h.try_inv().unwrap();
        assert_eq!(inv, S::monomial(-1, Scalar::from_ratio(1, 3), EXACT));
        assert_eq!(h.try_mul(&inv).unwrap(), S::exact(Scalar::one()));
    }

    #[test]
    fn floor_is_enforced() {
        let a = S::monomial(-2, Scalar::one(), EXACT);
        assert!(matches!(
            a.try_mul(&a),
            Err(Error::BelowFloor { order: -4, .. })
        ));
    }
}
