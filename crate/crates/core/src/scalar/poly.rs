//! Sparse Laurent polynomials over ℚ(i) in the four symbols π, θ, u, v.
//!
//! Exponents may be negative; monomials are units. Exact division and gcd
//! work on the polynomial part after pulling out the monomial content, so a
//! gcd is only ever defined up to a monomial and a nonzero constant.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::gauss::GaussRational;

pub const NVARS: usize = 4;
pub const VAR_NAMES: [&str; NVARS] = ["pi", "theta", "u", "v"];

pub type Exponents = [i32; NVARS];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, GaussRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(exps: Exponents, c: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    pub fn var(index: usize) -> Self {
        let mut e = [0; NVARS];
        e[index] = 1;
        Self::monomial(e, GaussRational::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exponents, GaussRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0; NVARS])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant if this polynomial has only a degree-zero term.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    /// `(exponents, coefficient)` if this is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(Exponents, GaussRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c.clone()))
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Exponents, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(GaussRational::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, &-c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(add_exps(e1, e2), &(c1 * c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn shift(&self, by: &Exponents) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (add_exps(e, by), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (zero vector for 0).
    pub fn min_exponents(&self) -> Exponents {
        let mut m = [i32::MAX; NVARS];
        if self.terms.is_empty() {
            return [0; NVARS];
        }
        for e in self.terms.keys() {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    /// Lex-leading term (π > θ > u > v).
    pub fn leading(&self) -> Option<(&Exponents, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Complex64; NVARS]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.to_complex();
            for i in 0..NVARS {
                t *= point[i].powi(e[i]);
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((e, c)) = d.as_monomial() {
            let inv = c.inv()?;
            let neg = e.map(|x| -x);
            return Some(self.shift(&neg).scale(&inv));
        }
        let ma = self.min_exponents();
        let md = d.min_exponents();
        let a = self.shift(&ma.map(|x| -x));
        let b = d.shift(&md.map(|x| -x));
        let q = poly_div_exact(&a, &b)?;
        let mut s = [0; NVARS];
        for i in 0..NVARS {
            s[i] = ma[i] - md[i];
        }
        Some(q.shift(&s))
    }

    /// Polynomial part with the monomial content removed (all minimum
    /// exponents zero), together with the removed monomial exponents.
    pub fn split_monomial_content(&self) -> (Exponents, Self) {
        let m = self.min_exponents();
        (m, self.shift(&m.map(|x| -x)))
    }

    /// Divide through by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }
}

fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut r = [0; NVARS];
    for i in 0..NVARS {
        r[i] = a[i] + b[i];
    }
    r
}

fn divides(small: &Exponents, big: &Exponents) -> bool {
    (0..NVARS).all(|i| small[i] <= big[i])
}

/// Exact division of ordinary polynomials (nonnegative exponents) under
/// lex order; `None` when `b` does not divide `a`.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (lb_e, lb_c) = b.leading().map(|(e, c)| (*e, c.clone()))?;
    let lb_inv = lb_c.inv()?;
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    while let Some((le, lc)) = r.leading().map(|(e, c)| (*e, c.clone())) {
        if !divides(&lb_e, &le) {
            return None;
        }
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = le[i] - lb_e[i];
        }
        let c = &lc * &lb_inv;
        let t = LaurentPoly::monomial(e, c);
        r = r.sub(&t.mul(b));
        q = q.add(&t);
    }
    Some(q)
}

/// Coefficients of `p` as a polynomial in variable `var` (index = power).
fn to_univariate(p: &LaurentPoly, var: usize) -> Vec<LaurentPoly> {
    let deg = p.degree_in(var).max(0) as usize;
    let mut out = vec![LaurentPoly::zero(); deg + 1];
    for (e, c) in &p.terms {
        let k = e[var] as usize;
        let mut e2 = *e;
        e2[var] = 0;
        out[k].add_term(e2, c);
    }
    while out.len() > 1 && out.last().map(|x| x.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

fn from_univariate(u: &[LaurentPoly], var: usize) -> LaurentPoly {
    let mut r = LaurentPoly::zero();
    for (k, c) in u.iter().enumerate() {
        let mut e = [0; NVARS];
        e[var] = k as i32;
        r = r.add(&c.shift(&e));
    }
    r
}

fn univ_is_zero(u: &[LaurentPoly]) -> bool {
    u.iter().all(|c| c.is_zero())
}

fn univ_degree(u: &[LaurentPoly]) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn univ_content(u: &[LaurentPoly]) -> LaurentPoly {
    let mut g = LaurentPoly::zero();
    for c in u {
        g = poly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn univ_div_scalar(u: &[LaurentPoly], c: &LaurentPoly) -> Vec<LaurentPoly> {
    u.iter()
        .map(|x| poly_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder of `a` by `b` in R[x].
fn univ_prem(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let db = univ_degree(b);
    let lb = b[db].clone();
    let mut r: Vec<LaurentPoly> = a.to_vec();
    loop {
        if univ_is_zero(&r) {
            return r;
        }
        let dr = univ_degree(&r);
        if dr < db {
            return r;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<LaurentPoly> = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        next.truncate(dr.max(1));
        while next.len() > 1 && next.last().map(|x| x.is_zero()).unwrap_or(false) {
            next.pop();
        }
        r = next;
    }
}

/// Greatest common divisor of ordinary polynomials (nonnegative exponents),
/// monic in lex order. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return LaurentPoly::one();
    }
    let var = (0..NVARS)
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0);
    let var = match var {
        Some(v) => v,
        None => return LaurentPoly::one(),
    };
    let ua = to_univariate(a, var);
    let ub = to_univariate(b, var);
    if univ_degree(&ua) == 0 {
        return poly_gcd(a, &univ_content(&ub));
    }
    if univ_degree(&ub) == 0 {
        return poly_gcd(b, &univ_content(&ua));
    }
    let ca = univ_content(&ua);
    let cb = univ_content(&ub);
    let c = poly_gcd(&ca, &cb);
    let mut r0 = univ_div_scalar(&ua, &ca);
    let mut r1 = univ_div_scalar(&ub, &cb);
    if univ_degree(&r0) < univ_degree(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !univ_is_zero(&r1) {
        let r = univ_prem(&r0, &r1);
        r0 = r1;
        if univ_is_zero(&r) {
            r1 = r;
        } else {
            let cr = univ_content(&r);
            r1 = univ_div_scalar(&r, &cr);
        }
    }
    let g = if univ_degree(&r0) == 0 {
        LaurentPoly::one()
    } else {
        let cg = univ_content(&r0);
        from_univariate(&univ_div_scalar(&r0, &cg), var)
    };
    c.mul(&g).make_monic()
}

fn fmt_power(name: &str, k: i32) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{}^{}", name, k)
    }
}

/// Writes a monomial as ` * `-joined factors (empty string for 1).
pub fn fmt_monomial(e: &Exponents) -> String {
    (0..NVARS)
        .filter(|&i| e[i] != 0)
        .map(|i| fmt_power(VAR_NAMES[i], e[i]))
        .collect::<Vec<_>>()
        .join(" * ")
}

pub(crate) fn fmt_term(e: &Exponents, c: &GaussRational) -> String {
    let mono = fmt_monomial(e);
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{}", mono)
    } else {
        format!("{} * {}", c, mono)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_real() && c.re < num_rational::BigRational::from_integer(0.into());
            if k == 0 {
                out.push_str(&fmt_term(e, c));
            } else if negative {
                out.push_str(" - ");
                out.push_str(&fmt_term(e, &-c));
            } else {
                out.push_str(" + ");
                out.push_str(&fmt_term(e, c));
            }
        }
        write!(f, "{}", out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(Exponents, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, GaussRational::from_int(*c))))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        // (u - 1)(theta + v) and (u - 1)(pi - v^2)
        let common = p(&[([0, 0, 1, 0], 1), ([0, 0, 0, 0], -1)]);
        let a = common.mul(&p(&[([0, 1, 0, 0], 1), ([0, 0, 0, 1], 1)]));
        let b = common.mul(&p(&[([1, 0, 0, 0], 1), ([0, 0, 0, 2], -1)]));
        assert_eq!(poly_gcd(&a, &b), common.make_monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p(&[([0, 0, 1, 0], 1), ([0, 0, 0, 0], -1)]);
        let b = p(&[([0, 0, 1, 1], 1), ([0, 0, 0, 0], -1)]);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_with_negative_exponents() {
        let a = p(&[([0, -1, 2, 0], 1), ([0, -1, 0, 0], -1)]); // theta^-1 (u^2 - 1)
        let d = p(&[([0, 0, 1, 0], 1), ([0, 0, 0, 0], 1)]); // u + 1
        let q = a.div_exact(&d).unwrap();
        assert_eq!(q.mul(&d), a);
        assert!(d.div_exact(&a).is_none());
    }
}
