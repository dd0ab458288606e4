use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Cyclotomic, Field, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Rational function in `t` over a cyclotomic field, kept in canonical form:
/// numerator and denominator coprime, the denominator monic with nonzero
/// constant term (powers of `t` live in the numerator's exponents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn t() -> Self {
        Self::from_laurent(LaurentPoly::t_pow(1))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        RatFunc { num, den: LaurentPoly::one() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(Cyclotomic::from_rational(r))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Cyclotomic::from_integer(n))
    }

    /// Canonical form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (vd, d) = den.to_dense();
        if d.degree() == Some(0) {
            let inv = d.coeffs()[0].inv().expect("nonzero constant");
            return RatFunc { num: num.scale(&inv).shift(-vd), den: LaurentPoly::one() };
        }
        let (vn, n) = num.to_dense();
        let g = n.gcd(&d);
        let (n, d) = if g.degree().unwrap_or(0) > 0 {
            (n.div_rem(&g).unwrap().0, d.div_rem(&g).unwrap().0)
        } else {
            (n, d)
        };
        let lead_inv = d.leading().and_then(Field::inv).expect("nonzero denominator");
        RatFunc {
            num: LaurentPoly::from_dense(vn - vd, &n.scale(&lead_inv)),
            den: LaurentPoly::from_dense(0, &d.scale(&lead_inv)),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `t -> t^r` (`r >= 1`); cyclotomic constants are untouched.
    pub fn subst_power(&self, r: i64) -> Self {
        assert!(r >= 1, "only positive powers of t may be substituted");
        if r == 1 {
            return self.clone();
        }
        RatFunc { num: self.num.subst_power(r), den: self.den.subst_power(r) }
    }

    /// Conjugates every cyclotomic coefficient (`t` is real).
    pub fn conj(&self) -> Self {
        RatFunc { num: self.num.conj(), den: self.den.conj() }
    }

    /// Exact evaluation at `t = value`.
    pub fn specialize(&self, value: &Cyclotomic) -> Result<Cyclotomic> {
        let pole = || Error::Pole(value.to_string());
        let d = self.den.eval(value).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.eval(value).ok_or_else(pole)?;
        Ok(&n * &d.inv()?)
    }

    /// Equality by cross-multiplication, independent of the normal form.
    pub fn eq_cross(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<Cyclotomic> for RatFunc {
    fn from(c: Cyclotomic) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_laurent() && other.is_laurent() {
            return RatFunc::from_laurent(&self.num + &other.num);
        }
        if self.den == other.den {
            return RatFunc::normalize(&self.num + &other.num, self.den.clone());
        }
        RatFunc::normalize(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, other: &RatFunc) -> RatFunc {
        self + &(-other)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        // Monomials are units against a denominator with nonzero constant term.
        if other.is_laurent() && other.num.as_monomial().is_some() {
            return RatFunc { num: &self.num * &other.num, den: self.den.clone() };
        }
        if self.is_laurent() && self.num.as_monomial().is_some() {
            return RatFunc { num: &self.num * &other.num, den: other.den.clone() };
        }
        if self.is_laurent() && other.is_laurent() {
            return RatFunc::from_laurent(&self.num * &other.num);
        }
        RatFunc::normalize(&self.num * &other.num, &self.den * &other.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, other: RatFunc) -> RatFunc {
                (&self).$f(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_integers(c)
    }

    #[test]
    fn normalize_cancels_common_factors() {
        // (1 - t^4)/(1 - t^2) = 1 + t^2
        let f = RatFunc::new(lp(&[1, 0, 0, 0, -1]), lp(&[1, 0, -1])).unwrap();
        assert_eq!(f, RatFunc::from_laurent(lp(&[1, 0, 1])));
        // (t - t)/1 = 0
        let t = LaurentPoly::t_pow(1);
        assert_eq!(RatFunc::new(&t - &t, LaurentPoly::one()).unwrap(), RatFunc::zero());
        assert_eq!(RatFunc::new(lp(&[1]), LaurentPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn denominator_is_monic_with_unit_constant_term() {
        // t^3 / (2 t^2 - 4 t) = (1/2) t^2 / (t - 2)
        let f = RatFunc::new(LaurentPoly::t_pow(3), lp(&[0, -4, 2])).unwrap();
        assert_eq!(f.denominator(), &lp(&[-2, 1]));
        assert_eq!(f.numerator().to_string(), "(1/2)t^2");
    }

    #[test]
    fn telescoping_step() {
        // l (1 - t^l) * (1/l) * t^k / (1 - t^l) = t^k
        for l in 1..=6i64 {
            for k in 0..4 {
                let one_minus = LaurentPoly::one_minus(Cyclotomic::one(), l);
                let a = RatFunc::from_laurent(one_minus.scale(&Cyclotomic::from_integer(l)));
                let b = RatFunc::new(
                    LaurentPoly::t_pow(k).scale(&Cyclotomic::from_rational(crate::scalars::rat(1, l))),
                    one_minus,
                )
                .unwrap();
                assert_eq!(&a * &b, RatFunc::from_laurent(LaurentPoly::t_pow(k)));
            }
        }
    }

    #[test]
    fn specialization() {
        let one = Cyclotomic::one();
        assert_eq!(RatFunc::from_laurent(lp(&[1, 0, 1])).specialize(&one).unwrap(), Cyclotomic::from_integer(2));
        assert!(RatFunc::from_laurent(lp(&[0, 1, 0, 1])).specialize(&Cyclotomic::zero()).unwrap().is_zero());
        let f = RatFunc::new(lp(&[1, 0, 0, 0, -1]), lp(&[1, 0, -1])).unwrap();
        assert_eq!(f.specialize(&one).unwrap(), Cyclotomic::from_integer(2));
        let g = RatFunc::new(lp(&[1]), lp(&[1, -1])).unwrap();
        assert!(matches!(g.specialize(&one), Err(Error::Pole(_))));
        let h = RatFunc::from_laurent(LaurentPoly::t_pow(-1));
        assert!(matches!(h.specialize(&Cyclotomic::zero()), Err(Error::Pole(_))));
    }

    #[test]
    fn cyclotomic_denominators() {
        // sum_j 1/(1 - zeta^j t) over l = 3 equals 3/(1 - t^3)
        let mut acc = RatFunc::zero();
        for j in 0..3 {
            let d = LaurentPoly::one_minus(Cyclotomic::zeta_pow(3, j), 1);
            acc = &acc + &RatFunc::new(LaurentPoly::one(), d).unwrap();
        }
        let expect = RatFunc::new(lp(&[3]), lp(&[1, 0, 0, -1])).unwrap();
        assert_eq!(acc, expect);
    }
}
