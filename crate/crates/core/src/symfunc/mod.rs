//! Symmetric functions over `Q(zeta)(t)` in the power-sum and Schur bases.
//!
//! Variables are never instantiated: substitutions such as `s[X/(1-t)]`
//! are coefficient transforms on power sums.

mod characters;
mod typea;

use std::collections::BTreeMap;
use std::fmt;

pub use characters::{sn_char_table, sn_character, SnCharTable};
pub use typea::{fake_degree_type_a, g_type_a, littlewood_richardson};

use crate::combinatorics::{partitions_of, Partition};
use crate::error::Result;
use crate::scalars::{Cyclotomic, RatFunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    PowerSum,
    Schur,
}

/// Finite linear combination of basis elements indexed by partitions of
/// possibly different sizes. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn p(lambda: Partition) -> Self {
        Self::monomial(Basis::PowerSum, lambda, RatFunc::one())
    }

    pub fn p_r(r: usize) -> Self {
        Self::p(Partition::from_unsorted(vec![r]))
    }

    pub fn s(lambda: Partition) -> Self {
        Self::monomial(Basis::Schur, lambda, RatFunc::one())
    }

    pub fn monomial(basis: Basis, lambda: Partition, c: RatFunc) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, &c);
        f
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::monomial(Basis::PowerSum, Partition::empty(), c)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, RatFunc)>) -> Self {
        let mut f = Self::zero(basis);
        for (lam, c) in terms {
            f.add_term(lam, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (lam, c) in other.terms {
            out.add_term(lam, &c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&RatFunc::from_integer(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> SymFunc {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Multiplies the coefficient of each basis element by `factor(index)`.
    pub fn transform(&self, factor: impl Fn(&Partition) -> RatFunc) -> SymFunc {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), c * &factor(l))))
    }

    pub fn to_basis(&self, basis: Basis) -> SymFunc {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Schur, Basis::PowerSum) => self.to_powersum(),
            _ => self.to_schur(),
        }
    }

    pub fn to_powersum(&self) -> SymFunc {
        if self.basis == Basis::PowerSum {
            return self.clone();
        }
        let mut out = Self::zero(Basis::PowerSum);
        for (lam, c) in &self.terms {
            for (mu, d) in schur_to_powersum(lam).terms {
                out.add_term(mu, &(c * &d));
            }
        }
        out
    }

    /// Schur expansion, using `p_lambda = sum_mu chi^mu_lambda s_mu`.
    pub fn to_schur(&self) -> SymFunc {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut acc: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (lam, c) in &self.terms {
            let table = sn_char_table(lam.size());
            let col = table.index_of(lam).expect("partition of its own size");
            for (row, mu) in table.partitions().iter().enumerate() {
                let chi = table.values()[row][col];
                if chi != 0 {
                    let term = c.scale(&Cyclotomic::from_integer(chi));
                    let slot = acc.entry(mu.clone()).or_insert_with(RatFunc::zero);
                    *slot = &*slot + &term;
                }
            }
        }
        Self::from_terms(Basis::Schur, acc)
    }

    /// Product in the power-sum basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let (a, b) = (self.to_powersum(), other.to_powersum());
        let mut out = Self::zero(Basis::PowerSum);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_term(la.union(lb), &(ca * cb));
            }
        }
        out
    }

    /// `p_r[self]`: indices scaled by `r`, coefficients under `t -> t^r`.
    pub fn adams(&self, r: usize) -> SymFunc {
        let f = self.to_powersum();
        Self::from_terms(
            Basis::PowerSum,
            f.terms.iter().map(|(l, c)| (Partition::from_unsorted(l.parts().iter().map(|p| p * r).collect()), c.subst_power(r as i64))),
        )
    }

    /// Plethysm `self[inner]`. The coefficients of `self` are constants; the
    /// map is a ring morphism in `self` and `p_r[t] = t^r` inside.
    pub fn plethysm(&self, inner: &SymFunc) -> SymFunc {
        let outer = self.to_powersum();
        let mut powers: BTreeMap<usize, SymFunc> = BTreeMap::new();
        let mut out = Self::zero(Basis::PowerSum);
        for (lam, c) in &outer.terms {
            let mut prod = Self::constant(c.clone());
            for &r in lam.parts() {
                let pr = powers.entry(r).or_insert_with(|| inner.adams(r));
                prod = prod.multiply(pr);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Ring morphism sending `p_r` to `image(r)`; coefficients are kept.
    pub fn evaluate(&self, image: impl Fn(usize) -> RatFunc) -> RatFunc {
        let f = self.to_powersum();
        let mut cache: BTreeMap<usize, RatFunc> = BTreeMap::new();
        let mut total = RatFunc::zero();
        for (lam, c) in &f.terms {
            let mut v = c.clone();
            for &r in lam.parts() {
                let x = cache.entry(r).or_insert_with(|| image(r));
                v = &v * x;
            }
            total = &total + &v;
        }
        total
    }

    /// Bilinear form with `<p_lambda, p_mu> = z_lambda delta`.
    pub fn scalar_product(&self, other: &SymFunc) -> RatFunc {
        let (a, b) = (self.to_powersum(), other.to_powersum());
        let mut total = RatFunc::zero();
        for (lam, ca) in &a.terms {
            if let Some(cb) = b.terms.get(lam) {
                total = &total + &(ca * cb).scale(&Cyclotomic::from_integer(lam.z() as i64));
            }
        }
        total
    }

    /// Evaluates every coefficient at `t = value`.
    pub fn specialize_t(&self, value: &Cyclotomic) -> Result<SymFunc> {
        let mut out = Self::zero(self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &RatFunc::constant(c.specialize(value)?));
        }
        Ok(out)
    }

    /// The homogeneous component of degree `n`.
    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        Self::from_terms(self.basis, self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())))
    }
}

/// `s_lambda = sum_mu z_mu^{-1} chi^lambda_mu p_mu`.
pub fn schur_to_powersum(lambda: &Partition) -> SymFunc {
    let table = sn_char_table(lambda.size());
    let row = table.index_of(lambda).expect("partition of its own size");
    let terms = table.partitions().iter().enumerate().map(|(col, mu)| {
        let c = Rational::new(table.values()[row][col].into(), (mu.z() as i64).into());
        (mu.clone(), RatFunc::from_rational(c))
    });
    SymFunc::from_terms(Basis::PowerSum, terms)
}

pub fn powersum_to_schur(f: &SymFunc) -> SymFunc {
    f.to_schur()
}

/// Schur functions of every partition of `n`, in enumeration order.
pub fn schur_basis(n: usize) -> Vec<SymFunc> {
    partitions_of(n).into_iter().map(SymFunc::s).collect()
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        };
        for (i, (lam, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){sym}{lam}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, LaurentPoly};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(rat(n, d))
    }

    #[test]
    fn schur_power_sum_transitions() {
        assert_eq!(schur_to_powersum(&p(&[1])), SymFunc::p(p(&[1])));
        let s2 = SymFunc::from_terms(Basis::PowerSum, [(p(&[1, 1]), q(1, 2)), (p(&[2]), q(1, 2))]);
        assert_eq!(schur_to_powersum(&p(&[2])), s2);
        let s11 = SymFunc::from_terms(Basis::PowerSum, [(p(&[1, 1]), q(1, 2)), (p(&[2]), q(-1, 2))]);
        assert_eq!(schur_to_powersum(&p(&[1, 1])), s11);
        let p11 = SymFunc::from_terms(Basis::Schur, [(p(&[2]), q(1, 1)), (p(&[1, 1]), q(1, 1))]);
        assert_eq!(SymFunc::p(p(&[1, 1])).to_schur(), p11);
        let p2 = SymFunc::from_terms(Basis::Schur, [(p(&[2]), q(1, 1)), (p(&[1, 1]), q(-1, 1))]);
        assert_eq!(SymFunc::p(p(&[2])).to_schur(), p2);
        for n in 0..=6 {
            for lam in partitions_of(n) {
                assert_eq!(schur_to_powersum(&lam).to_schur(), SymFunc::s(lam));
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(SymFunc::p(p(&[2])).multiply(&SymFunc::p(p(&[1]))), SymFunc::p(p(&[2, 1])));
        let s1 = SymFunc::s(p(&[1]));
        let sq = s1.multiply(&s1).to_schur();
        assert_eq!(sq, SymFunc::s(p(&[2])).add(&SymFunc::s(p(&[1, 1]))));
        let pieri = s1.multiply(&SymFunc::s(p(&[2]))).to_schur();
        assert_eq!(pieri, SymFunc::s(p(&[3])).add(&SymFunc::s(p(&[2, 1]))));
    }

    #[test]
    fn plethysm_axioms() {
        assert_eq!(SymFunc::p_r(2).plethysm(&SymFunc::p_r(3)), SymFunc::p_r(6));
        assert!(SymFunc::p_r(4).plethysm(&SymFunc::zero(Basis::PowerSum)).is_zero());
        assert_eq!(SymFunc::p_r(4).plethysm(&SymFunc::one()), SymFunc::one());
        let t = SymFunc::constant(RatFunc::t());
        assert_eq!(SymFunc::p_r(3).plethysm(&t), SymFunc::constant(RatFunc::t().pow(3)));
    }

    #[test]
    fn plethysm_parameter_example() {
        // p_r[c t^2 p_1 - p_s/(1-q)] with q = t and a non-real constant c
        let c = Cyclotomic::zeta(3);
        let one_minus_t = LaurentPoly::one_minus(Cyclotomic::one(), 1);
        let inner = SymFunc::from_terms(
            Basis::PowerSum,
            [
                (p(&[1]), RatFunc::from_laurent(LaurentPoly::monomial(c.clone(), 2))),
                (p(&[3]), RatFunc::new(LaurentPoly::from_integers(&[-1]), one_minus_t).unwrap()),
            ],
        );
        for r in 1..=4usize {
            let got = SymFunc::p_r(r).plethysm(&inner);
            let expect = SymFunc::from_terms(
                Basis::PowerSum,
                [
                    (p(&[r]), RatFunc::from_laurent(LaurentPoly::monomial(c.clone(), 2 * r as i64))),
                    (
                        p(&[3 * r]),
                        RatFunc::new(
                            LaurentPoly::from_integers(&[-1]),
                            LaurentPoly::one_minus(Cyclotomic::one(), r as i64),
                        )
                        .unwrap(),
                    ),
                ],
            );
            assert_eq!(got, expect, "r={r}");
        }
    }

    #[test]
    fn scalar_products() {
        for n in 0..=5 {
            let basis = schur_basis(n);
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    assert_eq!(a.scalar_product(b), RatFunc::from_integer((i == j) as i64));
                }
            }
        }
        assert_eq!(SymFunc::p(p(&[2])).scalar_product(&SymFunc::p(p(&[2]))), RatFunc::from_integer(2));
        assert!(SymFunc::p(p(&[1, 1])).scalar_product(&SymFunc::p(p(&[2]))).is_zero());
    }
}
