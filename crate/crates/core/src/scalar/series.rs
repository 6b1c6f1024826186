//! Series over [`Scalar`]: text form, parsing, and JSON encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::gauss::GaussRational;
use super::laurent::{Laurent, EXACT};
use super::poly::{fmt_monomial, NVARS, VAR_NAMES};
use super::ratfn::RatFn;
use super::value::Scalar;
use crate::error::{Error, Result};

pub type FormalLaurent = Laurent<Scalar>;

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Leading constant factor of a monomial term; `None` means "omit" (±1
/// with other factors present is written as `-1`, `1` is dropped).
fn constant_factor(c: &GaussRational, has_other: bool) -> Option<String> {
    if c.is_real() {
        if c.re.is_one() && has_other {
            return None;
        }
        return Some(fmt_rational(&c.re));
    }
    if c.re.is_zero() {
        if c.im.is_one() {
            return Some("i".into());
        }
        return Some(format!("{} * i", fmt_rational(&c.im)));
    }
    Some(c.to_string())
}

fn h_factor(order: i32) -> Option<String> {
    match order {
        0 => None,
        1 => Some("h".into()),
        n => Some(format!("h^{}", n)),
    }
}

/// One `coeff * h^n` term.
pub fn fmt_term(order: i32, c: &Scalar) -> String {
    let mut parts: Vec<String> = Vec::new();
    match c {
        Scalar::Exact(r) => {
            if let Some((k, e)) = r.monomial_parts() {
                let mono = fmt_monomial(&e);
                let has_other = order != 0 || !mono.is_empty();
                if let Some(s) = constant_factor(&k, has_other) {
                    parts.push(s);
                }
                parts.extend(h_factor(order));
                if !mono.is_empty() {
                    parts.push(mono);
                }
            } else {
                parts.push(r.to_string());
                parts.extend(h_factor(order));
            }
        }
        Scalar::Numeric(z) if z.im.abs() <= 1e-15 * z.re.abs().max(1.0) => {
            parts.push(format!("{}", z.re));
            parts.extend(h_factor(order));
        }
        Scalar::Numeric(z) => {
            parts.push(format!("({} + {} * i)", z.re, z.im));
            parts.extend(h_factor(order));
        }
    }
    parts.join(" * ")
}

/// Canonical text: terms in increasing ℏ order joined by ` + `; `0` for the
/// zero series.
pub fn to_text(s: &FormalLaurent) -> String {
    if s.is_zero() {
        return "0".into();
    }
    s.terms()
        .map(|(n, c)| fmt_term(n, c))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn to_json(s: &FormalLaurent) -> Value {
    Value::Array(
        s.terms()
            .map(|(n, c)| {
                let coeff = match c {
                    Scalar::Exact(r) => Value::String(r.to_string()),
                    Scalar::Numeric(z) => json!({"re": z.re, "im": z.im}),
                };
                json!({"order": n, "coeff": coeff})
            })
            .collect(),
    )
}

pub fn from_json(v: &Value, trunc: i32) -> Result<FormalLaurent> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("series must be an array".into()))?;
    let mut acc = FormalLaurent::zero(trunc);
    for t in arr {
        let order = t
            .get("order")
            .and_then(|o| o.as_i64())
            .ok_or_else(|| Error::Parse("term without integer order".into()))?
            as i32;
        let coeff = match t.get("coeff") {
            Some(Value::String(s)) => {
                let p = parse(s)?;
                if p.terms().any(|(n, _)| n != 0) {
                    return Err(Error::Parse(format!("coefficient depends on h: {}", s)));
                }
                p.coeff(0).cloned().unwrap_or_else(Scalar::zero)
            }
            Some(Value::Number(x)) => Scalar::Numeric(num_complex::Complex64::new(
                x.as_f64().unwrap_or(f64::NAN),
                0.0,
            )),
            Some(Value::Object(o)) => {
                let g = |k: &str| o.get(k).and_then(|x| x.as_f64()).unwrap_or(0.0);
                Scalar::Numeric(num_complex::Complex64::new(g("re"), g("im")))
            }
            _ => return Err(Error::Parse("term without coefficient".into())),
        };
        acc = acc.try_add(&FormalLaurent::monomial(order, coeff, trunc))?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(chars[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {:?}", c)));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FormalLaurent> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FormalLaurent> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.try_mul(&d.try_inv().map_err(|_| Error::DivisionByZero)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FormalLaurent> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let k = match self.peek() {
                Some(Tok::Num(n)) => {
                    let k: i32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    k
                }
                _ => return Err(Error::Parse("expected exponent".into())),
            };
            let b = if neg { base.try_inv()? } else { base };
            let mut acc = FormalLaurent::exact(Scalar::one());
            for _ in 0..k {
                acc = acc.try_mul(&b)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FormalLaurent> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(FormalLaurent::exact(Scalar::rational(BigRational::from_integer(n)))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing )".into()));
                }
                Ok(e)
            }
            Tok::Ident(name) => {
                if name == "h" {
                    return Ok(FormalLaurent::monomial(1, Scalar::one(), EXACT));
                }
                if name == "i" {
                    return Ok(FormalLaurent::exact(Scalar::constant(GaussRational::i())));
                }
                match VAR_NAMES.iter().position(|v| *v == name) {
                    Some(k) if k < NVARS => Ok(FormalLaurent::exact(Scalar::Exact(RatFn::var(k)))),
                    _ => Err(Error::Parse(format!("unknown symbol {}", name))),
                }
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected {:?}", c))),
        }
    }
}

/// Parse the text form (also accepts any `+ - * / ^` expression in
/// integers, `i`, `pi`, `theta`, `u`, `v`, `h`). The result is exact.
pub fn parse(s: &str) -> Result<FormalLaurent> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {:?}", s)));
    }
    Ok(e)
}

/// Rational number as an exact scalar (helper for negative-sign checks).
pub fn is_negative_rational(c: &GaussRational) -> bool {
    c.is_real() && c.re.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::value::ScalarField;

    #[test]
    fn prints_reference_forms() {
        let f = ScalarField::Exact;
        let c = f.theta().inv().unwrap().neg();
        let s = FormalLaurent::monomial(-1, c, EXACT);
        assert_eq!(to_text(&s), "-1 * h^-1 * theta^-1");

        let pi4 = f.pi().pow(4).unwrap();
        let th2 = f.theta().pow(2).unwrap();
        let c = pi4
            .try_mul(&th2)
            .unwrap()
            .scale(&GaussRational::new(BigRational::zero(), BigRational::new(2.into(), 3.into())));
        let s = FormalLaurent::monomial(2, c, 6);
        assert_eq!(to_text(&s), "2/3 * i * h^2 * pi^4 * theta^2");
    }

    #[test]
    fn parse_roundtrip() {
        for txt in [
            "-1 * h^-1 * theta^-1",
            "2/3 * i * h^2 * pi^4 * theta^2",
            "1 + h + h^2",
            "(1/2 + 3/2 * i) * h",
            "(1) / (u - 1) * h",
        ] {
            let s = parse(txt).unwrap();
            assert_eq!(parse(&to_text(&s)).unwrap(), s, "{}", txt);
        }
        assert_eq!(to_text(&parse("(u^2 - 1)/(u - 1)").unwrap()), "(u + 1)");
    }

    #[test]
    fn json_roundtrip() {
        let s = parse("3/10 * h^-1 * theta^-1 + pi * h").unwrap();
        let back = from_json(&to_json(&s), EXACT).unwrap();
        assert_eq!(back, s);
    }
}
