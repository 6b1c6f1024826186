//! Period-1 piecewise functions on S¹ built from polynomials and square
//! roots of polynomials.
//!
//! Each cell `[b_j, b_{j+1})` carries a [`Piece`] in the local coordinate
//! `s = x − b_j`. A piece is `P(s) + Σ_R q_R(s) R(s)^{-1/2}`; the square
//! root `√R` itself is stored as `R · R^{-1/2}`.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::exact_real::ExactReal;
use super::qpoly::QPoly;
use super::surd::SurdSum;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub poly: QPoly,
    /// `(R, q)` pairs sorted by `R`, all `q` nonzero.
    pub radicals: Vec<(QPoly, QPoly)>,
}

impl Piece {
    pub fn poly(p: QPoly) -> Self {
        Self {
            poly: p,
            radicals: Vec::new(),
        }
    }

    /// `√R` on this cell.
    pub fn root(r: QPoly) -> Self {
        let mut p = Self::poly(QPoly::zero());
        p.push_radical(r.clone(), r);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero() && self.radicals.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.radicals.is_empty()
    }

    fn push_radical(&mut self, r: QPoly, q: QPoly) {
        if q.is_zero() {
            return;
        }
        match self.radicals.binary_search_by(|(k, _)| k.cmp(&r)) {
            Ok(i) => {
                let next = self.radicals[i].1.add(&q);
                if next.is_zero() {
                    self.radicals.remove(i);
                } else {
                    self.radicals[i].1 = next;
                }
            }
            Err(i) => self.radicals.insert(i, (r, q)),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.poly = r.poly.add(&o.poly);
        for (k, q) in &o.radicals {
            r.push_radical(k.clone(), q.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            poly: self.poly.neg(),
            radicals: self
                .radicals
                .iter()
                .map(|(k, q)| (k.clone(), q.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            poly: self.poly.scale(c),
            radicals: self
                .radicals
                .iter()
                .map(|(k, q)| (k.clone(), q.scale(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut r = Self::poly(self.poly.mul(&o.poly));
        for (k, q) in &o.radicals {
            r.push_radical(k.clone(), self.poly.mul(q));
        }
        for (k, q) in &self.radicals {
            r.push_radical(k.clone(), o.poly.mul(q));
        }
        for (k1, q1) in &self.radicals {
            for (k2, q2) in &o.radicals {
                if k1 != k2 {
                    return Err(Error::UnsupportedProduct(format!(
                        "square roots of different polynomials {} and {}",
                        k1, k2
                    )));
                }
                let prod = q1.mul(q2).div_exact(k1).ok_or_else(|| {
                    Error::UnsupportedProduct(format!(
                        "product of root pieces is not polynomial over {}",
                        k1
                    ))
                })?;
                r.poly = r.poly.add(&prod);
            }
        }
        Ok(r)
    }

    /// `(q R^{-1/2})' = (q' − q R'/(2R)) R^{-1/2}`, requiring `R | q R'`.
    pub fn deriv(&self) -> Result<Self> {
        let mut r = Self::poly(self.poly.deriv());
        let half = BigRational::new(1.into(), 2.into());
        for (k, q) in &self.radicals {
            let corr = q.mul(&k.deriv()).div_exact(k).ok_or_else(|| {
                Error::RootDerivative(format!("{} does not divide q R' for q = {}", k, q))
            })?;
            r.push_radical(k.clone(), q.deriv().sub(&corr.scale(&half)));
        }
        Ok(r)
    }

    pub fn taylor_shift(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut r = Self::poly(self.poly.taylor_shift(c));
        for (k, q) in &self.radicals {
            r.push_radical(k.taylor_shift(c), q.taylor_shift(c));
        }
        r
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        let mut v = self.poly.eval_f64(s);
        for (k, q) in &self.radicals {
            let rv = k.eval_f64(s);
            if rv > 0.0 {
                v += q.eval_f64(s) / rv.sqrt();
            }
        }
        v
    }

    /// Exact value at a rational point where no radicand vanishes.
    pub fn eval_exact(&self, s: &BigRational) -> Result<SurdSum> {
        let mut v = SurdSum::rational(self.poly.eval(s));
        for (k, q) in &self.radicals {
            let rv = k.eval(s);
            if rv.is_zero() {
                return Err(Error::InvalidPiecewise(format!(
                    "sample point {} is a root of {}",
                    s, k
                )));
            }
            v = v.add(&SurdSum::sqrt(&rv)?.scale(&(q.eval(s) / rv)));
        }
        Ok(v)
    }

    pub fn integral(&self, h: &BigRational) -> Result<ExactReal> {
        let mut acc = ExactReal::rational(self.poly.integral(h));
        for (k, q) in &self.radicals {
            acc = acc.add(&ExactReal::period(q, k, h)?);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "poly": self.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "radicals": self.radicals.iter().map(|(k, q)| json!({
                "radicand": k.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "numerator": q.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Reduce `x` into `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiecewiseFn {
    breaks: Vec<BigRational>,
    pieces: Vec<Piece>,
}

impl Default for PiecewiseFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl PiecewiseFn {
    pub fn zero() -> Self {
        Self::constant(BigRational::zero())
    }

    pub fn constant(c: BigRational) -> Self {
        Self {
            breaks: vec![BigRational::zero()],
            pieces: vec![Piece::poly(QPoly::constant(c))],
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// Build from cells. Breakpoints must start at 0, increase strictly and
    /// stay below 1; root pieces must be nonnegative on their cell.
    pub fn new(breaks: Vec<BigRational>, pieces: Vec<Piece>) -> Result<Self> {
        if breaks.is_empty() || !breaks[0].is_zero() {
            return Err(Error::InvalidPiecewise("first breakpoint must be 0".into()));
        }
        if breaks.len() != pieces.len() {
            return Err(Error::InvalidPiecewise(
                "one piece per breakpoint required".into(),
            ));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) || breaks.last().unwrap() >= &BigRational::one() {
            return Err(Error::InvalidPiecewise(
                "breakpoints must increase strictly within [0, 1)".into(),
            ));
        }
        let f = Self { breaks, pieces };
        f.check_root_signs()?;
        Ok(f.compact())
    }

    pub fn breaks(&self) -> &[BigRational] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn cell_len(&self, j: usize) -> BigRational {
        let end = self
            .breaks
            .get(j + 1)
            .cloned()
            .unwrap_or_else(BigRational::one);
        end - &self.breaks[j]
    }

    fn check_root_signs(&self) -> Result<()> {
        for (j, p) in self.pieces.iter().enumerate() {
            let h = self.cell_len(j).to_f64().unwrap_or(f64::NAN);
            for (k, _) in &p.radicals {
                for i in 0..16 {
                    let t = (std::f64::consts::PI * (i as f64 + 0.5) / 16.0).cos();
                    let s = 0.5 * h * (1.0 + t);
                    if k.eval_f64(s) < -1e-12 {
                        return Err(Error::InvalidPiecewise(format!(
                            "radicand {} is negative on cell {}",
                            k, j
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Continuity across every breakpoint, including 1 ≡ 0: polynomial
    /// parts exactly, root parts to machine precision.
    pub fn check_continuity(&self) -> Result<()> {
        let n = self.pieces.len();
        for j in 0..n {
            let left = &self.pieces[j];
            let right = &self.pieces[(j + 1) % n];
            let h = self.cell_len(j);
            let lv = left.poly.eval(&h);
            let rv = right.poly.eval(&BigRational::zero());
            if left.is_polynomial() && right.is_polynomial() {
                if lv != rv {
                    return Err(Error::InvalidPiecewise(format!(
                        "jump at breakpoint {}",
                        j + 1
                    )));
                }
            } else {
                let a = left.eval_f64(h.to_f64().unwrap_or(f64::NAN));
                let b = right.eval_f64(0.0);
                if (a - b).abs() > 1e-12 {
                    return Err(Error::InvalidPiecewise(format!(
                        "jump of {} at breakpoint {}",
                        a - b,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn cell_of(&self, x: &BigRational) -> usize {
        match self.breaks.binary_search(x) {
            Ok(i) => i,
            Err(i) => i - 1,
        }
    }

    /// Representation on a finer grid containing all current breakpoints.
    fn refine(&self, grid: &[BigRational]) -> Vec<Piece> {
        grid.iter()
            .map(|b| {
                let j = self.cell_of(b);
                self.pieces[j].taylor_shift(&(b - &self.breaks[j]))
            })
            .collect()
    }

    /// Merge adjacent cells that carry the same function.
    fn compact(mut self) -> Self {
        let mut breaks = vec![self.breaks[0].clone()];
        let mut pieces = vec![std::mem::take(&mut self.pieces[0])];
        for j in 1..self.breaks.len() {
            let last = pieces.len() - 1;
            let shifted = pieces[last].taylor_shift(&(&self.breaks[j] - &breaks[last]));
            if shifted == self.pieces[j] {
                continue;
            }
            breaks.push(self.breaks[j].clone());
            pieces.push(std::mem::take(&mut self.pieces[j]));
        }
        Self { breaks, pieces }
    }

    fn zip(&self, o: &Self, f: impl Fn(&Piece, &Piece) -> Result<Piece>) -> Result<Self> {
        let mut grid: Vec<BigRational> = self.breaks.iter().chain(o.breaks.iter()).cloned().collect();
        grid.sort();
        grid.dedup();
        let a = self.refine(&grid);
        let b = o.refine(&grid);
        let pieces = a
            .iter()
            .zip(b.iter())
            .map(|(x, y)| f(x, y))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            breaks: grid,
            pieces,
        }
        .compact())
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| Ok(a.add(b))).expect("addition is total")
    }

    pub fn neg(&self) -> Self {
        Self {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
        }
        .compact()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.mul(b))
    }

    pub fn deriv(&self) -> Result<Self> {
        Ok(Self {
            breaks: self.breaks.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|p| p.deriv())
                .collect::<Result<Vec<_>>>()?,
        }
        .compact())
    }

    /// `x ↦ a(x − shift)`.
    pub fn translate(&self, shift: &BigRational) -> Self {
        let t = frac(shift);
        if t.is_zero() {
            return self.clone();
        }
        let one = BigRational::one();
        let mut cells: Vec<(BigRational, Piece)> = Vec::new();
        for (j, p) in self.pieces.iter().enumerate() {
            let start = &self.breaks[j] + &t;
            let end = &start + self.cell_len(j);
            if start >= one {
                cells.push((&start - &one, p.clone()));
            } else if end > one {
                let cut = &one - &start;
                cells.push((start, p.clone()));
                cells.push((BigRational::zero(), p.taylor_shift(&cut)));
            } else {
                cells.push((start, p.clone()));
            }
        }
        cells.sort_by(|a, b| a.0.cmp(&b.0));
        let (breaks, pieces) = cells.into_iter().unzip();
        Self { breaks, pieces }.compact()
    }

    pub fn integrate(&self) -> Result<ExactReal> {
        let mut acc = ExactReal::zero();
        for (j, p) in self.pieces.iter().enumerate() {
            acc = acc.add(&p.integral(&self.cell_len(j))?);
        }
        Ok(acc)
    }

    /// Integral by adaptive quadrature of the raw integrand on each cell.
    pub fn integrate_numeric(&self) -> f64 {
        let mut acc = 0.0;
        for (j, p) in self.pieces.iter().enumerate() {
            let h = self.cell_len(j).to_f64().unwrap_or(f64::NAN);
            if p.is_polynomial() {
                acc += p.poly.integral(&self.cell_len(j)).to_f64().unwrap_or(f64::NAN);
            } else {
                acc += super::quadrature::integrate_endpoint_singular(&|s| p.eval_f64(s), h, 1e-13);
            }
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let x = x - x.floor();
        let mut j = 0;
        for (i, b) in self.breaks.iter().enumerate() {
            if b.to_f64().unwrap_or(f64::NAN) <= x {
                j = i;
            }
        }
        let s = x - self.breaks[j].to_f64().unwrap_or(f64::NAN);
        self.pieces[j].eval_f64(s)
    }

    pub fn eval_exact(&self, x: &BigRational) -> Result<SurdSum> {
        let x = frac(x);
        let j = self.cell_of(&x);
        self.pieces[j].eval_exact(&(&x - &self.breaks[j]))
    }

    /// Value at `x = 0` of the polynomial part (the unit coordinate used by
    /// normalized chains).
    pub fn poly_value_at_zero(&self) -> BigRational {
        self.pieces[0].poly.eval(&BigRational::zero())
    }

    pub fn is_nonnegative_sampled(&self, n: usize) -> bool {
        (0..n).all(|i| self.eval_f64((i as f64 + 0.5) / n as f64) >= -1e-12)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "breakpoints": self.breaks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "pieces": self.pieces.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Supports are compared exactly: is `a · b` identically zero?
pub fn product_vanishes(a: &PiecewiseFn, b: &PiecewiseFn) -> Result<bool> {
    Ok(a.mul(b)?.is_zero())
}

impl Coefficient for PiecewiseFn {
    fn is_zero(&self) -> bool {
        PiecewiseFn::is_zero(self)
    }
    fn try_add(&self, o: &Self) -> Result<Self> {
        Ok(self.add(o))
    }
    fn try_mul(&self, o: &Self) -> Result<Self> {
        self.mul(o)
    }
    fn neg(&self) -> Self {
        PiecewiseFn::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::qpoly::{int, rat};

    fn hat() -> PiecewiseFn {
        // 0 on [0, 1/4), s on [1/4, 1/2), 1/4 - s on [1/2, 3/4), 0 after
        PiecewiseFn::new(
            vec![int(0), rat(1, 4), rat(1, 2), rat(3, 4)],
            vec![
                Piece::poly(QPoly::zero()),
                Piece::poly(QPoly::x()),
                Piece::poly(QPoly::new(vec![rat(1, 4), int(-1)])),
                Piece::poly(QPoly::zero()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn translation_wraps_and_preserves_integral() {
        let f = hat();
        f.check_continuity().unwrap();
        let t = f.translate(&rat(2, 5));
        t.check_continuity().unwrap();
        assert_eq!(t.integrate().unwrap(), f.integrate().unwrap());
        assert_eq!(t.translate(&rat(-2, 5)), f);
        assert_eq!(
            t.eval_exact(&rat(1, 20)).unwrap(),
            f.eval_exact(&rat(13, 20)).unwrap()
        );
    }

    #[test]
    fn root_squared_is_polynomial() {
        let r = QPoly::from_ints(&[0, 1, -1]); // s - s^2 on [0, 1)
        let g = PiecewiseFn::new(vec![int(0)], vec![Piece::root(r.clone())]).unwrap();
        let sq = g.mul(&g).unwrap();
        assert_eq!(sq, PiecewiseFn::new(vec![int(0)], vec![Piece::poly(r)]).unwrap());
    }

    #[test]
    fn derivative_of_root_rejects_simple_root_twice() {
        let r = QPoly::from_ints(&[0, 1, -1]);
        let g = PiecewiseFn::new(vec![int(0)], vec![Piece::root(r)]).unwrap();
        let d = g.deriv().unwrap();
        assert!(matches!(d.deriv(), Err(Error::RootDerivative(_))));
    }
}
