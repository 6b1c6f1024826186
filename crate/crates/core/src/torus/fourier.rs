//! Fourier polynomials on T² with ℏ-series coefficients and the Moyal
//! star product for the Poisson bivector θ ∂₁∧∂₂.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::laurent::EXACT;
use crate::scalar::series::{self, FormalLaurent};
use crate::scalar::{Scalar, ScalarField};

pub type Mode = (i32, i32);

/// The Poisson data θ ∂₁∧∂₂ together with the scalar field and the global
/// ℏ truncation order used by every product.
#[derive(Clone, Debug)]
pub struct TorusPoissonData {
    pub field: ScalarField,
    pub theta: Scalar,
    pub trunc: i32,
}

impl TorusPoissonData {
    pub fn new(field: ScalarField, trunc: i32) -> Self {
        Self {
            theta: field.theta(),
            field,
            trunc,
        }
    }

    pub fn exact(trunc: i32) -> Self {
        Self::new(ScalarField::Exact, trunc)
    }

    /// `2πi` in the current field.
    pub fn two_pi_i(&self) -> Result<Scalar> {
        self.field
            .pi()
            .try_mul(&self.field.i())
            .map(|s| s.scale(&crate::scalar::GaussRational::from_int(2)))
    }

    /// `exp(2π²iℏθ w)` expanded to the truncation order.
    pub fn moyal_phase(&self, w: i64) -> Result<FormalLaurent> {
        if w == 0 {
            return Ok(FormalLaurent::constant(Scalar::one(), self.trunc));
        }
        let pi = self.field.pi();
        let step = pi
            .try_mul(&pi)?
            .try_mul(&self.field.i())?
            .try_mul(&self.theta)?
            .try_mul(&Scalar::from_int(2 * w))?;
        let mut coeffs = Vec::new();
        let mut term = Scalar::one();
        for m in 0..=self.trunc.max(0) {
            coeffs.push((m, term.clone()));
            term = term.try_mul(&step)?.try_div(&Scalar::from_int(m as i64 + 1))?;
        }
        FormalLaurent::from_coeffs(coeffs, self.trunc)
    }

    /// `u^a v^b` in the current field.
    pub fn multiplier(&self, a: i32, b: i32) -> Result<Scalar> {
        self.field.u().pow(a)?.try_mul(&self.field.v().pow(b)?)
    }
}

/// Σ_k c_k e_k with `e_k(θ) = exp(2πi(k₁θ¹ + k₂θ²))`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierPoly {
    coeffs: BTreeMap<Mode, FormalLaurent>,
}

impl Default for FourierPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl FourierPoly {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: FormalLaurent) -> Self {
        Self::mode((0, 0), c)
    }

    pub fn one(trunc: i32) -> Self {
        Self::constant(FormalLaurent::constant(Scalar::one(), trunc))
    }

    pub fn mode(k: Mode, c: FormalLaurent) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `e_k` with an exact unit coefficient.
    pub fn exp(k: Mode) -> Self {
        Self::mode(k, FormalLaurent::exact(Scalar::one()))
    }

    pub fn from_modes(it: impl IntoIterator<Item = (Mode, FormalLaurent)>) -> Result<Self> {
        let mut r = Self::zero();
        for (k, c) in it {
            r.add_at(k, &c)?;
        }
        Ok(r)
    }

    pub fn modes(&self) -> impl Iterator<Item = (&Mode, &FormalLaurent)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, k: Mode) -> Option<&FormalLaurent> {
        self.coeffs.get(&k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest |k₁| + |k₂| in the support.
    pub fn max_degree(&self) -> i32 {
        self.coeffs
            .keys()
            .map(|(a, b)| a.abs() + b.abs())
            .max()
            .unwrap_or(0)
    }

    fn add_at(&mut self, k: Mode, c: &FormalLaurent) -> Result<()> {
        let next = match self.coeffs.get(&k) {
            Some(old) => old.try_add(c)?,
            None => c.clone(),
        };
        if next.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, next);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_at(*k, c)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &FormalLaurent) -> Result<Self> {
        Self::from_modes(
            self.coeffs
                .iter()
                .map(|(k, c)| Ok((*k, c.try_mul(s)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn map_coeffs(&self, f: impl Fn(Mode, &FormalLaurent) -> Result<FormalLaurent>) -> Result<Self> {
        Self::from_modes(
            self.coeffs
                .iter()
                .map(|(k, c)| Ok((*k, f(*k, c)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn truncate(&self, n: i32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.truncate(n)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Commutative (pointwise) product.
    pub fn pointwise(&self, o: &Self) -> Result<Self> {
        let mut r = Self::zero();
        for (k, a) in &self.coeffs {
            for (l, b) in &o.coeffs {
                r.add_at((k.0 + l.0, k.1 + l.1), &a.try_mul(b)?)?;
            }
        }
        Ok(r)
    }

    /// Moyal product: `e_k ⋆ e_l = exp(2π²iℏθ(k₁l₂ − k₂l₁)) e_{k+l}`.
    pub fn moyal_star(&self, o: &Self, data: &TorusPoissonData) -> Result<Self> {
        let mut phases: BTreeMap<i64, FormalLaurent> = BTreeMap::new();
        let mut r = Self::zero();
        for (k, a) in &self.coeffs {
            for (l, b) in &o.coeffs {
                let w = k.0 as i64 * l.1 as i64 - k.1 as i64 * l.0 as i64;
                if !phases.contains_key(&w) {
                    phases.insert(w, data.moyal_phase(w)?);
                }
                let c = a.try_mul(b)?.try_mul(&phases[&w])?;
                r.add_at((k.0 + l.0, k.1 + l.1), &c)?;
            }
        }
        Ok(r)
    }

    /// `∂/∂θʲ` for `dir ∈ {1, 2}`.
    pub fn derivative(&self, dir: usize, data: &TorusPoissonData) -> Result<Self> {
        let tpi = data.two_pi_i()?;
        self.map_coeffs(|k, c| {
            let kj = if dir == 1 { k.0 } else { k.1 };
            c.try_scale(&tpi.try_mul(&Scalar::from_int(kj as i64))?)
        })
    }

    /// `{a, b} = θ(∂₁a ∂₂b − ∂₂a ∂₁b)`.
    pub fn poisson_bracket(&self, o: &Self, data: &TorusPoissonData) -> Result<Self> {
        let t1 = self
            .derivative(1, data)?
            .pointwise(&o.derivative(2, data)?)?;
        let t2 = self
            .derivative(2, data)?
            .pointwise(&o.derivative(1, data)?)?;
        t1.sub(&t2)?
            .scale(&FormalLaurent::exact(data.theta.clone()))
    }

    /// Normalized Haar integral: the (0,0) coefficient.
    pub fn integrate(&self, trunc: i32) -> FormalLaurent {
        self.coeffs
            .get(&(0, 0))
            .cloned()
            .unwrap_or_else(|| FormalLaurent::zero(trunc))
    }

    /// Pullback along translation by `-m(α, β)`: `c_k ↦ u^{m k₁} v^{m k₂} c_k`.
    pub fn translate(&self, m: i32, data: &TorusPoissonData) -> Result<Self> {
        if m == 0 {
            return Ok(self.clone());
        }
        self.map_coeffs(|k, c| c.try_scale(&data.multiplier(m * k.0, m * k.1)?))
    }

    /// Evaluate every coefficient under the given field (exact → numeric).
    pub fn coerce(&self, field: &ScalarField) -> Result<Self> {
        self.map_coeffs(|_, c| c.try_map(|s| field.coerce(s)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(k, c)| json!({"k": [k.0, k.1], "series": series::to_json(c)}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value, trunc: i32) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("Fourier polynomial must be an array".into()))?;
        let mut r = Self::zero();
        for t in arr {
            let k = t
                .get("k")
                .and_then(|k| k.as_array())
                .filter(|k| k.len() == 2)
                .ok_or_else(|| Error::Parse("mode must be [k1, k2]".into()))?;
            let get = |i: usize| -> Result<i32> {
                k[i].as_i64()
                    .map(|x| x as i32)
                    .ok_or_else(|| Error::Parse("mode entries must be integers".into()))
            };
            let s = series::from_json(
                t.get("series")
                    .ok_or_else(|| Error::Parse("mode without series".into()))?,
                trunc,
            )?;
            r.add_at((get(0)?, get(1)?), &s)?;
        }
        Ok(r)
    }
}

/// An exact series equal to the constant `c`.
pub fn exact_series(c: Scalar) -> FormalLaurent {
    FormalLaurent::constant(c, EXACT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> TorusPoissonData {
        TorusPoissonData::exact(6)
    }

    #[test]
    fn unit_is_neutral() {
        let d = data();
        let f = FourierPoly::exp((2, -1))
            .add(&FourierPoly::exp((0, 3)))
            .unwrap();
        let one = FourierPoly::one(6);
        assert_eq!(one.moyal_star(&f, &d).unwrap(), f.truncate(6));
    }

    #[test]
    fn translate_composes() {
        let d = data();
        let f = FourierPoly::exp((1, 0));
        let t = f.translate(1, &d).unwrap();
        assert_eq!(t, FourierPoly::mode((1, 0), exact_series(d.field.u())));
        let a = FourierPoly::exp((2, -3));
        assert_eq!(
            a.translate(2, &d).unwrap().translate(-5, &d).unwrap(),
            a.translate(-3, &d).unwrap()
        );
    }

    #[test]
    fn bracket_of_basis_modes() {
        let d = data();
        let b = FourierPoly::exp((1, 0))
            .poisson_bracket(&FourierPoly::exp((0, 1)), &d)
            .unwrap();
        let pi = d.field.pi();
        let expect = pi
            .try_mul(&pi)
            .unwrap()
            .try_mul(&d.theta)
            .unwrap()
            .try_mul(&Scalar::from_int(-4))
            .unwrap();
        assert_eq!(b, FourierPoly::mode((1, 1), exact_series(expect)));
    }
}
