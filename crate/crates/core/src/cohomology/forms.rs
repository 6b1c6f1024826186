//! Differential forms on T² with Fourier-polynomial coefficients.

use crate::error::Result;
use crate::torus::{FourierPoly, TorusPoissonData};

/// Components on the basis `1, dθ¹, dθ², dθ¹∧dθ²`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeRhamForm {
    pub parts: [FourierPoly; 4],
}

impl DeRhamForm {
    pub fn zero() -> Self {
        Self {
            parts: std::array::from_fn(|_| FourierPoly::zero()),
        }
    }

    pub fn in_slot(slot: usize, f: FourierPoly) -> Self {
        let mut r = Self::zero();
        r.parts[slot] = f;
        r
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut r = Self::zero();
        for i in 0..4 {
            r.parts[i] = self.parts[i].add(&o.parts[i])?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            parts: std::array::from_fn(|i| self.parts[i].neg()),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Exterior derivative, mode by mode.
    pub fn d(&self, data: &TorusPoissonData) -> Result<Self> {
        let [f, g1, g2, _] = &self.parts;
        Ok(Self {
            parts: [
                FourierPoly::zero(),
                f.derivative(1, data)?,
                f.derivative(2, data)?,
                g2.derivative(1, data)?.sub(&g1.derivative(2, data)?)?,
            ],
        })
    }

    /// Pullback along the generator of the ℤ-action: mode `k` is scaled by
    /// `u^{k₁} v^{k₂}`; the invariant frames `dθⁱ` are fixed.
    pub fn gamma_action(&self, data: &TorusPoissonData) -> Result<Self> {
        self.translate(1, data)
    }

    /// Pullback along the `m`-th power of the generator.
    pub fn translate(&self, m: i32, data: &TorusPoissonData) -> Result<Self> {
        let mut r = Self::zero();
        for i in 0..4 {
            r.parts[i] = self.parts[i].translate(m, data)?;
        }
        Ok(r)
    }
}
