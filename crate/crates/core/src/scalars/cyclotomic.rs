use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{DensePoly, Rational};
use crate::error::{Error, Result};

static CYCLOTOMIC_POLYS: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of the `m`-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `x^m - 1` by all `Phi_d` with `d | m, d < m`; memoized.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let table = CYCLOTOMIC_POLYS.get_or_init(Default::default);
    if let Some(p) = table.read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        let div = cyclotomic_polynomial(d);
        num = divide_monic(&num, &div);
    }
    let poly = Arc::new(num);
    table.write().unwrap().insert(m, poly.clone());
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Element of `Q(zeta_m)` stored as a residue modulo `Phi_m`.
///
/// Coefficients are with respect to `1, z, z^2, ...` with `z = zeta_m`,
/// trailing zeros trimmed. Rational values are always stored with order 1,
/// and values of different orders are combined inside `Q(zeta_lcm)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(r: Rational) -> Self {
        Self::from_coeffs(1, vec![r])
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_coeffs(m, coeffs)
    }

    pub fn zeta(m: u32) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// Reduces an arbitrary coefficient vector modulo `Phi_m`.
    pub fn from_coeffs(order: u32, mut coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for k in (deg..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[k]);
            if c.is_zero() {
                continue;
            }
            for (i, p) in phi.iter().enumerate().take(deg) {
                if *p != 0 {
                    coeffs[k - deg + i] -= &c * BigInt::from(*p);
                }
            }
        }
        coeffs.truncate(deg);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let order = if coeffs.len() <= 1 { 1 } else { order };
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// True when every coefficient is an integer (a cyclotomic integer in the power basis).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Re-expresses `self` inside `Q(zeta_m)`; requires `order | m`.
    fn embed(&self, m: u32) -> Vec<Rational> {
        if self.order == m || self.is_rational() {
            return self.coeffs.clone();
        }
        debug_assert_eq!(m % self.order, 0);
        let step = (m / self.order) as usize;
        let mut out = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        Self::from_coeffs(m, out).coeffs
    }

    /// Coefficients with respect to powers of `zeta_m`, if `Q(zeta_m)` contains `self`.
    pub fn coeffs_in(&self, m: u32) -> Option<Vec<Rational>> {
        (self.is_rational() || m % self.order == 0).then(|| self.embed(m))
    }

    fn common(&self, other: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let m = if self.is_rational() {
            other.order
        } else if other.is_rational() {
            self.order
        } else {
            self.order.lcm(&other.order)
        };
        (m, self.embed(m), other.embed(m))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Complex conjugation `zeta -> zeta^(m-1)`.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let m = self.order as usize;
        let mut out = vec![Rational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(k * (m - 1)) % m] += c;
        }
        Self::from_coeffs(self.order, out)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let modulus = DensePoly::new(
            cyclotomic_polynomial(self.order).iter().map(|&c| Rational::from_integer(c.into())).collect(),
        );
        let a = DensePoly::new(self.coeffs.clone());
        let (g, s) = a.ext_gcd(&modulus);
        if g.degree() != Some(0) {
            return Err(Error::Inconsistent("cyclotomic element is not invertible".into()));
        }
        Ok(Self::from_coeffs(self.order, s.into_coeffs()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() != other.is_rational() {
            // A rational value is always stored with order 1 and a short vector.
            return false;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let (m, mut a, b) = self.common(other);
        if a.len() < b.len() {
            a.resize(b.len(), Rational::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Cyclotomic::from_coeffs(m, a)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        let (m, a, b) = self.common(other);
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_coeffs(m, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$f(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl super::Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self).ok()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && One::is_one(&self.coeffs[0])
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Writes `a_k z^k + ... + a_0` with `z` the chosen primitive root.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if abs.is_one() && k > 0 {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}{mono}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}
