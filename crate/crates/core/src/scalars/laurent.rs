use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::fmt_rational;
use super::{Cyclotomic, DensePoly, Rational};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `t` with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Cyclotomic>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`
    pub fn monomial(c: Cyclotomic, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Cyclotomic::one(), e)
    }

    /// `1 - c * t^e`
    pub fn one_minus(c: Cyclotomic, e: i64) -> Self {
        &Self::one() - &Self::monomial(c, e)
    }

    /// Builds from integer coefficients, `coeffs[i]` multiplying `t^i`.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i as i64, Cyclotomic::from_integer(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Cyclotomic {
        self.terms.get(&e).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<&Cyclotomic> {
        self.terms.values().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn as_monomial(&self) -> Option<(i64, &Cyclotomic)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// Polynomial with nonnegative integer coefficients.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.is_polynomial()
            && self.terms.values().all(|c| {
                c.to_rational().is_some_and(|r| r.is_integer() && !r.is_negative())
            })
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// `t -> t^r` for `r >= 1`.
    pub fn subst_power(&self, r: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e * r, c.clone())).collect() }
    }

    pub fn conj(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluates at `t = value`; `None` when a negative power meets `value = 0`.
    pub fn eval(&self, value: &Cyclotomic) -> Option<Cyclotomic> {
        let mut acc = Cyclotomic::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                value.pow(*e as u32)
            } else {
                value.inv().ok()?.pow((-e) as u32)
            };
            acc = &acc + &(c * &p);
        }
        Some(acc)
    }

    /// Splits into `t^v * p(t)` with `p(0) != 0`; zero maps to `(0, 0)`.
    pub(crate) fn to_dense(&self) -> (i64, DensePoly<Cyclotomic>) {
        let Some(v) = self.valuation() else {
            return (0, DensePoly::zero());
        };
        let len = (self.degree().unwrap() - v + 1) as usize;
        let mut coeffs = vec![Cyclotomic::zero(); len];
        for (e, c) in &self.terms {
            coeffs[(e - v) as usize] = c.clone();
        }
        (v, DensePoly::new(coeffs))
    }

    pub(crate) fn from_dense(shift: i64, p: &DensePoly<Cyclotomic>) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(shift + i as i64, c.clone());
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (va, a) = self.to_dense();
        let (vb, b) = divisor.to_dense();
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(&b)?;
        r.is_zero().then(|| Self::from_dense(va - vb, &q))
    }

    /// Integer coefficient vector when this is a polynomial over `Z`.
    pub fn to_integer_vec(&self) -> Option<Vec<BigInt>> {
        if !self.is_polynomial() {
            return None;
        }
        let deg = self.degree().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            let r = c.to_rational()?;
            if !r.is_integer() {
                return None;
            }
            out[*e as usize] = r.to_integer();
        }
        Some(out)
    }

    /// LaTeX rendering, descending powers.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = match c.to_rational() {
                Some(r) => (r.is_negative(), CoeffText::Rational(r.abs())),
                None => (false, CoeffText::Cyclotomic(c.to_string())),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = match (*e, latex) {
                (0, _) => String::new(),
                (1, _) => "t".into(),
                (e, true) => format!("t^{{{e}}}"),
                (e, false) => format!("t^{e}"),
            };
            match body {
                CoeffText::Rational(r) if r.is_one() && *e != 0 => s.push_str(&mono),
                CoeffText::Rational(r) if r.is_integer() => {
                    s.push_str(&fmt_rational(&r));
                    s.push_str(&mono);
                }
                CoeffText::Rational(r) => {
                    if latex {
                        s.push_str(&format!("\\frac{{{}}}{{{}}}{mono}", r.numer(), r.denom()));
                    } else {
                        s.push_str(&format!("({}){mono}", fmt_rational(&r)));
                    }
                }
                CoeffText::Cyclotomic(text) => s.push_str(&format!("({text}){mono}")),
            }
        }
        s
    }
}

enum CoeffText {
    Rational(Rational),
    Cyclotomic(String),
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// Parses the text form written by `Display` for rational coefficients,
/// e.g. `t^4+2t^2+1`, `-t^-1+(1/2)t`, `3`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = src.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let bad = |msg: &str| Error::Parse(format!("{msg} in '{s}'"));
        while i < bytes.len() {
            let mut sign = Rational::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected sign"));
            }
            // coefficient: digits, or "(p/q)", or "p/q" when no t follows
            let mut coeff: Option<Rational> = None;
            if i < bytes.len() && bytes[i] == b'(' {
                let close = src[i..].find(')').ok_or_else(|| bad("unclosed parenthesis"))? + i;
                coeff = Some(parse_rational(&src[i + 1..close]).ok_or_else(|| bad("bad coefficient"))?);
                i = close + 1;
            } else {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                    i += 1;
                }
                if i > start {
                    coeff = Some(parse_rational(&src[start..i]).ok_or_else(|| bad("bad coefficient"))?);
                }
            }
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let braced = i < bytes.len() && bytes[i] == b'{';
                    if braced {
                        i += 1;
                    }
                    let start = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = src[start..i].parse().map_err(|_| bad("bad exponent"))?;
                    if braced {
                        if i >= bytes.len() || bytes[i] != b'}' {
                            return Err(bad("unclosed exponent"));
                        }
                        i += 1;
                    }
                }
            } else if coeff.is_none() {
                return Err(bad("expected a term"));
            }
            let c = coeff.unwrap_or_else(Rational::one) * sign;
            out.add_term(exp, Cyclotomic::from_rational(c));
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let r = match body.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Rational::new(n.parse().ok()?, d)
        }
        None => Rational::from_integer(body.parse().ok()?),
    };
    Some(if neg { -r } else { r })
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, other: LaurentPoly) -> LaurentPoly {
                (&self).$f(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
