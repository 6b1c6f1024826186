//! Simplicial cochains on the loop spaces of the ℤ-action: differential
//! forms on T² whose dependence on the component `(n₀, …, n_q)` is a
//! polynomial, together with the closedness check for `d` and `δ`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fedosov::forms::FORM_DEGREE;
use crate::torus::{FourierPoly, TorusPoissonData};

/// Polynomial with rational coefficients in `n₀, n₁, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl NPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable `n_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent vector, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let v = self.terms.remove(&e).unwrap_or_else(BigRational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            r.add_term(e.clone(), k * c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Substitute `n_i ↦ subs[i]` (all in a common ring of variables).
    pub fn substitute(&self, subs: &[NPoly]) -> Self {
        assert_eq!(subs.len(), self.nvars, "one substitution per variable");
        let target = subs.first().map(|s| s.nvars).unwrap_or(0);
        let mut r = Self::zero(target);
        for (e, c) in &self.terms {
            let mut m = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m = m.mul(&subs[i]);
                }
            }
            r = r.add(&m);
        }
        r
    }

    /// Evaluate at integer values.
    pub fn eval(&self, ns: &[i32]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    v *= BigRational::from_integer(ns[i].into());
                }
            }
            acc += v;
        }
        acc
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut s = c.to_string();
                for (i, &k) in e.iter().enumerate() {
                    match k {
                        0 => {}
                        1 => s.push_str(&format!("*n{}", i)),
                        _ => s.push_str(&format!("*n{}^{}", i, k)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Form basis slots, matching the Weyl-form layout: `1, dθ¹, dθ², dθ¹∧dθ²`.
pub const FORM_NAMES: [&str; 4] = ["1", "dtheta1", "dtheta2", "dtheta1^dtheta2"];

/// `Σ coeff · form-slot · P(n)` on the tuples of length `q + 1`.
#[derive(Clone, Debug)]
pub struct SimplicialCochain {
    pub name: String,
    pub q: usize,
    pub terms: Vec<(usize, FourierPoly, NPoly)>,
}

/// Residuals of `d x` and `δ x`.
#[derive(Clone, Debug)]
pub struct ClosednessCertificate {
    pub d_residual: Vec<String>,
    pub delta_residual: Vec<String>,
}

impl ClosednessCertificate {
    pub fn is_closed(&self) -> bool {
        self.d_residual.is_empty() && self.delta_residual.is_empty()
    }
}

impl SimplicialCochain {
    fn single(name: &str, q: usize, slot: usize, weight: NPoly) -> Self {
        Self {
            name: name.into(),
            q,
            terms: vec![(slot, FourierPoly::one(crate::scalar::EXACT), weight)],
        }
    }

    /// The eight generators `ξ₀…ξ₃`, `η₀…η₃` of the cohomology.
    pub fn generators() -> Vec<Self> {
        let n1 = NPoly::var(2, 1);
        vec![
            Self::single("xi0", 0, 0, NPoly::one(1)),
            Self::single("xi1", 0, 3, NPoly::one(1)),
            Self::single("xi2", 1, 1, n1.clone()),
            Self::single("xi3", 1, 2, n1.clone()),
            Self::single("eta0", 1, 3, n1.clone()),
            Self::single("eta1", 0, 1, NPoly::one(1)),
            Self::single("eta2", 0, 2, NPoly::one(1)),
            Self::single("eta3", 1, 0, n1),
        ]
    }

    /// Bidegree `(p, q)` of a homogeneous cochain.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let p = FORM_DEGREE[self.terms.first()?.0];
        self.terms
            .iter()
            .all(|(s, _, _)| FORM_DEGREE[*s] == p)
            .then_some((p as usize, self.q))
    }

    /// Evaluates `d x` and `δ x = Σᵢ (−1)ⁱ δᵢ* x` symbolically (the latter on
    /// tuples of length `q + 2` modulo the sum-zero constraint).
    pub fn closedness(&self, data: &TorusPoissonData) -> Result<ClosednessCertificate> {
        if self.q > 2 {
            return Err(Error::UnsupportedCochain(format!(
                "simplicial degree {} exceeds 2",
                self.q
            )));
        }
        let nv = self.q + 1;
        for (_, _, w) in &self.terms {
            if w.nvars() != nv {
                return Err(Error::UnsupportedCochain(format!(
                    "weight in {} variables for simplicial degree {}",
                    w.nvars(),
                    self.q
                )));
            }
        }
        // d: per slot and per monomial of the weight
        let mut d_parts: BTreeMap<(usize, Vec<u32>), FourierPoly> = BTreeMap::new();
        for (slot, f, w) in &self.terms {
            let pieces: Vec<(usize, FourierPoly)> = match slot {
                0 => vec![(1, f.derivative(1, data)?), (2, f.derivative(2, data)?)],
                1 => vec![(3, f.derivative(2, data)?.neg())],
                2 => vec![(3, f.derivative(1, data)?)],
                _ => vec![],
            };
            for (s, g) in pieces {
                for (e, c) in w.terms() {
                    let key = (s, e.clone());
                    let add = g.scale(&crate::scalar::FormalLaurent::exact(
                        crate::scalar::Scalar::rational(c.clone()),
                    ))?;
                    let next = match d_parts.get(&key) {
                        Some(old) => old.add(&add)?,
                        None => add,
                    };
                    d_parts.insert(key, next);
                }
            }
        }
        let d_residual = d_parts
            .into_iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|((s, e), _)| format!("{} at weight monomial {:?}", FORM_NAMES[s], e))
            .collect();

        // δ: faces of (n₀, …, n_{q+1}); the last face translates by n_{q+1},
        // which is invisible on translation-invariant coefficients.
        let m = nv + 1;
        let vars: Vec<NPoly> = (0..m).map(|i| NPoly::var(m, i)).collect();
        let mut delta_residual = Vec::new();
        for (slot, f, w) in &self.terms {
            let invariant = f.modes().all(|(k, _)| *k == (0, 0));
            if !invariant {
                return Err(Error::UnsupportedCochain(
                    "simplicial differential needs translation-invariant coefficients".into(),
                ));
            }
            let mut acc = NPoly::zero(m);
            for i in 0..m {
                let subs: Vec<NPoly> = if i + 1 < m {
                    (0..nv)
                        .map(|j| match j.cmp(&i) {
                            std::cmp::Ordering::Less => vars[j].clone(),
                            std::cmp::Ordering::Equal => vars[i].add(&vars[i + 1]),
                            std::cmp::Ordering::Greater => vars[j + 1].clone(),
                        })
                        .collect()
                } else {
                    (0..nv)
                        .map(|j| {
                            if j == 0 {
                                vars[m - 1].add(&vars[0])
                            } else {
                                vars[j].clone()
                            }
                        })
                        .collect()
                };
                let face = w.substitute(&subs);
                acc = if i % 2 == 0 { acc.add(&face) } else { acc.sub(&face) };
            }
            // impose n_{q+1} = −(n₀ + … + n_q)
            let mut last = NPoly::zero(m);
            for v in &vars[..m - 1] {
                last = last.sub(v);
            }
            let mut subs: Vec<NPoly> = vars[..m - 1].to_vec();
            subs.push(last);
            let reduced = acc.substitute(&subs);
            if !reduced.is_zero() {
                delta_residual.push(format!("{}: {}", FORM_NAMES[*slot], reduced));
            }
        }
        Ok(ClosednessCertificate {
            d_residual,
            delta_residual,
        })
    }
}
