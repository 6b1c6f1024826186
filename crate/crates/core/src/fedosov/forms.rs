//! Weyl-bundle-valued differential forms on T² and the flat Fedosov
//! connection `D = dθⁱ ∧ (∂_{θⁱ} − ∂_{yⁱ})`.

use super::weyl::WeylSection;
use crate::error::Result;
use crate::scalar::{FormalLaurent, Scalar};
use crate::torus::{FourierPoly, TorusPoissonData};

/// Basis slots: `1`, `dθ¹`, `dθ²`, `dθ¹∧dθ²`.
pub const FORM_DEGREE: [u32; 4] = [0, 1, 1, 2];

/// `(slot, sign)` of `e_I ∧ e_J`, or `None` when it vanishes.
fn wedge(i: usize, j: usize) -> Option<(usize, i64)> {
    match (i, j) {
        (0, j) => Some((j, 1)),
        (i, 0) => Some((i, 1)),
        (1, 2) => Some((3, 1)),
        (2, 1) => Some((3, -1)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylFormSection {
    pub parts: [WeylSection; 4],
}

impl WeylFormSection {
    pub fn zero(cap: u32) -> Self {
        Self {
            parts: std::array::from_fn(|_| WeylSection::zero(cap)),
        }
    }

    pub fn function(s: WeylSection) -> Self {
        Self::in_slot(0, s)
    }

    pub fn in_slot(slot: usize, s: WeylSection) -> Self {
        let mut f = Self::zero(s.cap());
        f.parts[slot] = s;
        f
    }

    pub fn cap(&self) -> u32 {
        self.parts.iter().map(|p| p.cap()).min().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    pub fn with_cap(&self, cap: u32) -> Self {
        Self {
            parts: std::array::from_fn(|i| self.parts[i].with_cap(cap)),
        }
    }

    /// Same terms under a larger nominal cap.
    fn relabel_cap(&self, cap: u32) -> Self {
        Self {
            parts: std::array::from_fn(|i| self.parts[i].clone().raise_cap(cap)),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut parts = Vec::with_capacity(4);
        for i in 0..4 {
            parts.push(self.parts[i].add(&o.parts[i])?);
        }
        Ok(Self {
            parts: parts.try_into().expect("four parts"),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            parts: std::array::from_fn(|i| self.parts[i].neg()),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Homogeneous part of form degree `p`.
    pub fn homogeneous(&self, p: u32) -> Self {
        let mut r = Self::zero(self.cap());
        for i in 0..4 {
            if FORM_DEGREE[i] == p {
                r.parts[i] = self.parts[i].clone();
            }
        }
        r
    }

    /// Exterior product with the Weyl product on coefficients.
    pub fn product(&self, o: &Self, data: &TorusPoissonData) -> Result<Self> {
        let mut r = Self::zero(self.cap().min(o.cap()));
        for i in 0..4 {
            if self.parts[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.parts[j].is_zero() {
                    continue;
                }
                if let Some((k, sign)) = wedge(i, j) {
                    let p = self.parts[i].product(&o.parts[j], data)?;
                    let p = if sign < 0 { p.neg() } else { p };
                    r.parts[k] = r.parts[k].add(&p)?;
                }
            }
        }
        Ok(r)
    }

    fn apply_first_order(
        &self,
        op: impl Fn(&WeylSection, usize) -> Result<WeylSection>,
        out_cap: u32,
    ) -> Result<Self> {
        let mut r = Self::zero(out_cap);
        let s0 = &self.parts[0];
        r.parts[1] = op(s0, 1)?.with_cap(out_cap);
        r.parts[2] = op(s0, 2)?.with_cap(out_cap);
        r.parts[3] = op(&self.parts[2], 1)?
            .sub(&op(&self.parts[1], 2)?)?
            .with_cap(out_cap);
        Ok(r)
    }

    /// Exterior derivative in θ.
    pub fn d(&self, data: &TorusPoissonData) -> Result<Self> {
        let cap = self.cap();
        self.apply_first_order(|s, i| s.dtheta(i, data), cap)
    }

    /// `D = dθⁱ ∧ (∂_{θⁱ} − ∂_{yⁱ})`; the output cap is one less than the
    /// input cap (the top degree cannot be resolved).
    pub fn fedosov_d(&self, data: &TorusPoissonData) -> Result<Self> {
        let out = self.cap().saturating_sub(1);
        self.apply_first_order(|s, i| s.dtheta(i, data)?.sub(&s.dy(i)?), out)
    }

    /// The same connection written as `d + (i/ℏ)[A, ·]` with
    /// `A = −(1/θ)(y¹ dθ² − y² dθ¹)`.
    pub fn fedosov_d_commutator(&self, data: &TorusPoissonData) -> Result<Self> {
        let cap = self.cap();
        let out = cap.saturating_sub(1);
        let a = connection_form(data, cap + 1)?;
        let lifted = self.relabel_cap(cap + 1);
        let i_unit = FormalLaurent::exact(data.field.i());
        let mut acc = self.d(data)?.with_cap(out);
        for p in 0..3 {
            let s = lifted.homogeneous(p);
            if s.is_zero() {
                continue;
            }
            let left = a.product(&s, data)?;
            let right = s.product(&a, data)?;
            let comm = if p % 2 == 0 {
                left.sub(&right)?
            } else {
                left.add(&right)?
            };
            let mut term = Self::zero(out);
            for k in 0..4 {
                term.parts[k] = comm.parts[k]
                    .shift_hbar(-1)?
                    .scale(&i_unit)?
                    .with_cap(out);
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// `A = −(1/θ)(y¹ dθ² − y² dθ¹)`.
pub fn connection_form(data: &TorusPoissonData, cap: u32) -> Result<WeylFormSection> {
    let inv_theta = FormalLaurent::exact(data.theta.inv()?);
    let y1 = WeylSection::y(1, crate::scalar::EXACT, cap).scale(&inv_theta)?;
    let y2 = WeylSection::y(2, crate::scalar::EXACT, cap).scale(&inv_theta)?;
    let mut a = WeylFormSection::zero(cap);
    a.parts[1] = y2;
    a.parts[2] = y1.neg();
    Ok(a)
}

/// Constant section helper.
pub fn constant_section(c: Scalar, trunc: i32, cap: u32) -> WeylSection {
    WeylSection::from_fn(FourierPoly::constant(FormalLaurent::constant(c, trunc)), cap)
}
