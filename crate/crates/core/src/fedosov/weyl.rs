//! Sections of the Weyl bundle over T²: polynomials in the fibre
//! coordinates y¹, y² with Fourier-polynomial coefficients.
//!
//! The Fedosov degree of `ℏⁿ y₁ᵃ y₂ᵇ` is `2n + a + b`; every section keeps
//! only terms of degree at most its `cap`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::laurent::EXACT;
use crate::scalar::{FormalLaurent, GaussRational, Scalar};
use crate::torus::{FourierPoly, TorusPoissonData};

pub type YMono = (u32, u32);

#[derive(Clone, Debug, PartialEq)]
pub struct WeylSection {
    terms: BTreeMap<YMono, FourierPoly>,
    cap: u32,
}

fn falling(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).map(|i| (n - i) as i64).product()
}

fn binomial(n: u32, k: u32) -> i64 {
    falling(n, k) / falling(k, k)
}

fn factorial(n: u32) -> i64 {
    falling(n, n)
}

/// Largest ℏ order kept for the monomial `(a, b)` under `cap`.
fn hbar_room(cap: u32, m: YMono) -> Option<i32> {
    let used = m.0 + m.1;
    if used > cap {
        None
    } else {
        Some(((cap - used) / 2) as i32)
    }
}

impl WeylSection {
    pub fn zero(cap: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            cap,
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn from_fn(f: FourierPoly, cap: u32) -> Self {
        Self::monomial((0, 0), f, cap)
    }

    pub fn monomial(m: YMono, f: FourierPoly, cap: u32) -> Self {
        let mut s = Self::zero(cap);
        s.add_at(m, &f).expect("fresh section");
        s
    }

    /// The fibre coordinate `yⁱ` (`i ∈ {1, 2}`) with unit coefficient.
    pub fn y(i: usize, trunc: i32, cap: u32) -> Self {
        let m = if i == 1 { (1, 0) } else { (0, 1) };
        Self::monomial(m, FourierPoly::one(trunc), cap)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMono, &FourierPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: YMono) -> Option<&FourierPoly> {
        self.terms.get(&m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `y`-free part.
    pub fn symbol(&self) -> FourierPoly {
        self.terms.get(&(0, 0)).cloned().unwrap_or_default()
    }

    fn add_at(&mut self, m: YMono, f: &FourierPoly) -> Result<()> {
        let room = match hbar_room(self.cap, m) {
            Some(r) => r,
            None => return Ok(()),
        };
        let f = f.truncate(room);
        let next = match self.terms.get(&m) {
            Some(old) => old.add(&f)?,
            None => f,
        };
        if next.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, next);
        }
        Ok(())
    }

    /// Same terms under a larger nominal cap.
    pub fn raise_cap(mut self, cap: u32) -> Self {
        self.cap = self.cap.max(cap);
        self
    }

    /// Restrict to a smaller cap.
    pub fn with_cap(&self, cap: u32) -> Self {
        let mut r = Self::zero(cap.min(self.cap));
        for (m, f) in &self.terms {
            r.add_at(*m, f).expect("truncation only");
        }
        r
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut r = Self::zero(self.cap.min(o.cap));
        for (m, f) in self.terms.iter().chain(o.terms.iter()) {
            r.add_at(*m, f)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, f)| (*m, f.neg())).collect(),
            cap: self.cap,
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &FormalLaurent) -> Result<Self> {
        let mut r = Self::zero(self.cap);
        for (m, f) in &self.terms {
            r.add_at(*m, &f.scale(s)?)?;
        }
        Ok(r)
    }

    /// `∂/∂yⁱ`; lowers the Fedosov degree by one.
    pub fn dy(&self, i: usize) -> Result<Self> {
        let mut r = Self::zero(self.cap.saturating_sub(1));
        for (m, f) in &self.terms {
            let (k, next) = if i == 1 {
                (m.0, (m.0.wrapping_sub(1), m.1))
            } else {
                (m.1, (m.0, m.1.wrapping_sub(1)))
            };
            if k == 0 {
                continue;
            }
            let c = FormalLaurent::exact(Scalar::from_int(k as i64));
            r.add_at(next, &f.scale(&c)?)?;
        }
        Ok(r)
    }

    /// `∂/∂θⁱ` applied to the coefficients.
    pub fn dtheta(&self, i: usize, data: &TorusPoissonData) -> Result<Self> {
        let mut r = Self::zero(self.cap);
        for (m, f) in &self.terms {
            r.add_at(*m, &f.derivative(i, data)?)?;
        }
        Ok(r)
    }

    /// Fibrewise Weyl product
    /// `s ∘ t = Σ_m (1/m!) (−iℏθ/2)^m Π^m(s, t)`,
    /// `Π = ∂_{y¹} ⊗ ∂_{y²} − ∂_{y²} ⊗ ∂_{y¹}`, coefficients multiplied
    /// pointwise. Output terms of `y`-degree above `max_out` are skipped.
    pub fn product_bounded(
        &self,
        o: &Self,
        data: &TorusPoissonData,
        max_out: Option<u32>,
    ) -> Result<Self> {
        let cap = self.cap.min(o.cap);
        let mut r = Self::zero(cap);
        let half_step = data
            .field
            .i()
            .try_mul(&data.theta)?
            .scale(&GaussRational::from_ratio(-1, 2));
        for (a, fa) in &self.terms {
            for (b, fb) in &o.terms {
                let total = a.0 + a.1 + b.0 + b.1;
                let mmax = (a.0 + a.1).min(b.0 + b.1);
                let mmin = match max_out {
                    Some(d) if total > d => (total - d).div_ceil(2),
                    _ => 0,
                };
                if mmin > mmax {
                    continue;
                }
                let mut prod: Option<FourierPoly> = None;
                for m in mmin..=mmax {
                    let out_deg = total - 2 * m;
                    let room = match hbar_room(cap, (out_deg, 0)) {
                        Some(r) => r,
                        None => continue,
                    };
                    if m as i32 > room {
                        continue;
                    }
                    for j in 0..=m {
                        // ∂₁^j ∂₂^{m−j} on s, ∂₂^j ∂₁^{m−j} on t
                        let ca = falling(a.0, j) * falling(a.1, m - j);
                        let cb = falling(b.1, j) * falling(b.0, m - j);
                        if ca == 0 || cb == 0 {
                            continue;
                        }
                        let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                        let num = sign * binomial(m, j) * ca * cb;
                        let pf = prod.get_or_insert_with(|| {
                            fa.pointwise(fb).expect("coefficient product")
                        });
                        let c = half_step
                            .pow(m as i32)?
                            .scale(&GaussRational::from_ratio(num, factorial(m)));
                        let series = FormalLaurent::monomial(m as i32, c, EXACT);
                        let out = (a.0 + b.0 - m, a.1 + b.1 - m);
                        r.add_at(out, &pf.scale(&series)?)?;
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn product(&self, o: &Self, data: &TorusPoissonData) -> Result<Self> {
        self.product_bounded(o, data, None)
    }

    /// Graded-free commutator `s ∘ t − t ∘ s`.
    pub fn commutator(&self, o: &Self, data: &TorusPoissonData) -> Result<Self> {
        self.product(o, data)?.sub(&o.product(self, data)?)
    }

    /// Multiply every coefficient by `ℏ^k` (used to divide exact commutators
    /// by ℏ); the cap moves by `2k`.
    pub fn shift_hbar(&self, k: i32) -> Result<Self> {
        let cap = (self.cap as i32 + 2 * k).max(0) as u32;
        let mut r = Self::zero(cap);
        for (m, f) in &self.terms {
            let g = f.map_coeffs(|_, c| c.shift(k))?;
            r.add_at(*m, &g)?;
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> TorusPoissonData {
        TorusPoissonData::exact(6)
    }

    #[test]
    fn canonical_commutation() {
        let d = data();
        let y1 = WeylSection::y(1, 6, 14);
        let y2 = WeylSection::y(2, 6, 14);
        let c = y1.commutator(&y2, &d).unwrap();
        let expect = d.field.i().try_mul(&d.theta).unwrap().neg();
        let expect = WeylSection::from_fn(
            FourierPoly::constant(FormalLaurent::monomial(1, expect, 6)),
            14,
        );
        assert_eq!(c, expect);
    }

    #[test]
    fn unit_is_neutral() {
        let d = data();
        let one = WeylSection::from_fn(FourierPoly::one(6), 14);
        let s = WeylSection::y(1, 6, 14)
            .product(&WeylSection::y(2, 6, 14), &d)
            .unwrap()
            .add(&WeylSection::monomial((3, 1), FourierPoly::exp((1, -2)), 14))
            .unwrap();
        assert_eq!(one.product(&s, &d).unwrap(), s);
        assert_eq!(s.product(&one, &d).unwrap(), s);
    }
}
