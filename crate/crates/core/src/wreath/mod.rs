//! Multisymmetric functions in `l` alphabets and the wreath product layer.

mod characters;
mod kostka;
mod twist;

use std::collections::BTreeMap;
use std::fmt;

pub(crate) use characters::install_table;
pub use characters::{identity_class, wreath_char_table, wreath_character, wreath_frobenius, WreathCharTable};
pub use kostka::{
    fake_degree_wreath, g_wreath, g_wreath_twisted, kostka_column, substitute_z, wreath_kostka,
    wreath_kostka_with, CharacterSumData, KostkaRoute,
};
pub use twist::{check_lemma_z, z_alphabet_weights, TwistMatrices};

use crate::combinatorics::{Multipartition, Partition};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, LaurentPoly, RatFunc};
use crate::symfunc::{schur_to_powersum, sn_char_table, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiBasis {
    /// `prod_j p_{mu^(j)}[X^(j)]`.
    MultiPowerSum,
    /// `prod_j s_{lambda^(j)}[X^(j)]`.
    MultiSchur,
    /// `prod_j p_{rho^(j)}[Y_j]` with `Y_j = sum_i zeta^{-ij} X^(i)`.
    Twisted,
}

/// Sparse element of `Lambda^{(x) l}` over `Q(zeta)(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSymFunc {
    ell: usize,
    basis: MultiBasis,
    terms: BTreeMap<Multipartition, RatFunc>,
}

/// A factor `sum_k w_k p_r[X^(k)]` (or in `Y_k`) of a basis product.
pub(crate) struct LinearFactor {
    pub r: usize,
    pub weights: Vec<LaurentPoly>,
}

/// Expands a product of linear factors into basis elements indexed by
/// where each part landed.
pub(crate) fn expand_factors(ell: usize, factors: &[LinearFactor]) -> BTreeMap<Multipartition, LaurentPoly> {
    let mut acc: BTreeMap<Vec<Vec<usize>>, LaurentPoly> = BTreeMap::new();
    acc.insert(vec![Vec::new(); ell], LaurentPoly::one());
    for f in factors {
        let mut next: BTreeMap<Vec<Vec<usize>>, LaurentPoly> = BTreeMap::new();
        for (key, c) in &acc {
            for (k, w) in f.weights.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let mut key = key.clone();
                let pos = key[k].partition_point(|&x| x >= f.r);
                key[k].insert(pos, f.r);
                let slot = next.entry(key).or_default();
                *slot = &*slot + &(c * w);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter()
        .map(|(key, c)| {
            let comps = key.into_iter().map(Partition::from_unsorted).collect();
            (Multipartition::new(comps).expect("ell >= 1"), c)
        })
        .collect()
}

/// Weight of `zeta^e` for `zeta = exp(2 pi i / ell)`.
pub(crate) fn zeta(ell: usize, e: i64) -> Cyclotomic {
    Cyclotomic::zeta_pow(ell as u32, e)
}

impl MultiSymFunc {
    pub fn zero(ell: usize, basis: MultiBasis) -> Self {
        assert!(ell >= 1, "ell must be positive");
        MultiSymFunc { ell, basis, terms: BTreeMap::new() }
    }

    pub fn one(ell: usize) -> Self {
        Self::basis_element(ell, MultiBasis::MultiPowerSum, Multipartition::new(vec![Partition::empty(); ell]).unwrap())
    }

    pub fn basis_element(ell: usize, basis: MultiBasis, index: Multipartition) -> Self {
        let mut f = Self::zero(ell, basis);
        f.add_term(index, &RatFunc::one());
        f
    }

    pub fn from_terms(ell: usize, basis: MultiBasis, terms: impl IntoIterator<Item = (Multipartition, RatFunc)>) -> Self {
        let mut f = Self::zero(ell, basis);
        for (k, c) in terms {
            f.add_term(k, &c);
        }
        f
    }

    /// Places an ordinary symmetric function in the alphabet `X^(slot)`.
    pub fn from_slot(ell: usize, slot: usize, f: &SymFunc) -> Self {
        let basis = match f.basis() {
            Basis::PowerSum => MultiBasis::MultiPowerSum,
            Basis::Schur => MultiBasis::MultiSchur,
        };
        Self::from_terms(
            ell,
            basis,
            f.terms().map(|(lam, c)| {
                let mut comps = vec![Partition::empty(); ell];
                comps[slot] = lam.clone();
                (Multipartition::new(comps).unwrap(), c.clone())
            }),
        )
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn basis(&self) -> MultiBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &Multipartition) -> RatFunc {
        self.terms.get(index).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: Multipartition, c: &RatFunc) {
        assert_eq!(index.ell(), self.ell, "index has the wrong number of components");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiSymFunc) -> MultiSymFunc {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (k, c) in other.terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn sub(&self, other: &MultiSymFunc) -> MultiSymFunc {
        self.add(&other.scale(&RatFunc::from_integer(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> MultiSymFunc {
        Self::from_terms(self.ell, self.basis, self.terms.iter().map(|(k, x)| (k.clone(), x * c)))
    }

    /// Multiplies the coefficient at each index by `factor(index)`.
    pub fn transform(&self, factor: impl Fn(&Multipartition) -> RatFunc) -> MultiSymFunc {
        Self::from_terms(self.ell, self.basis, self.terms.iter().map(|(k, c)| (k.clone(), c * &factor(k))))
    }

    /// Product; both power-sum type bases are multiplicative, Schur input is
    /// first converted to multi-power sums.
    pub fn multiply(&self, other: &MultiSymFunc) -> MultiSymFunc {
        let basis = match self.basis {
            MultiBasis::MultiSchur => MultiBasis::MultiPowerSum,
            b => b,
        };
        let (a, b) = (self.convert(basis), other.convert(basis));
        let mut out = Self::zero(self.ell, basis);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let comps = ka.components().iter().zip(kb.components()).map(|(x, y)| x.union(y)).collect();
                out.add_term(Multipartition::new(comps).unwrap(), &(ca * cb));
            }
        }
        out
    }

    pub fn convert(&self, target: MultiBasis) -> MultiSymFunc {
        use MultiBasis::*;
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            (MultiSchur, MultiPowerSum) => self.schur_to_mps(),
            (MultiPowerSum, MultiSchur) => self.mps_to_schur(),
            (Twisted, MultiPowerSum) => self.twisted_to_mps(),
            (MultiPowerSum, Twisted) => self.mps_to_twisted(),
            (Twisted, MultiSchur) => self.twisted_to_mps().mps_to_schur(),
            (MultiSchur, Twisted) => self.schur_to_mps().mps_to_twisted(),
            _ => unreachable!(),
        }
    }

    fn schur_to_mps(&self) -> MultiSymFunc {
        let mut out = Self::zero(self.ell, MultiBasis::MultiPowerSum);
        for (lam, c) in &self.terms {
            let prod = lam
                .components()
                .iter()
                .enumerate()
                .fold(Self::one(self.ell), |acc, (j, comp)| acc.multiply(&Self::from_slot(self.ell, j, &schur_to_powersum(comp))));
            for (mu, d) in prod.terms {
                out.add_term(mu, &(c * &d));
            }
        }
        out
    }

    fn mps_to_schur(&self) -> MultiSymFunc {
        let mut acc: BTreeMap<Multipartition, RatFunc> = BTreeMap::new();
        for (mu, c) in &self.terms {
            // p_mu = sum_nu chi^nu_mu s_nu componentwise
            let mut partial: Vec<(Vec<Partition>, i64)> = vec![(Vec::new(), 1)];
            for comp in mu.components() {
                let table = sn_char_table(comp.size());
                let col = table.index_of(comp).unwrap();
                let mut next = Vec::new();
                for (prefix, v) in &partial {
                    for (row, nu) in table.partitions().iter().enumerate() {
                        let chi = table.values()[row][col];
                        if chi != 0 {
                            let mut p = prefix.clone();
                            p.push(nu.clone());
                            next.push((p, v * chi));
                        }
                    }
                }
                partial = next;
            }
            for (comps, v) in partial {
                let slot = acc.entry(Multipartition::new(comps).unwrap()).or_insert_with(RatFunc::zero);
                *slot = &*slot + &c.scale(&Cyclotomic::from_integer(v));
            }
        }
        Self::from_terms(self.ell, MultiBasis::MultiSchur, acc)
    }

    fn relabel(&self, target: MultiBasis, factors_of: impl Fn(&Multipartition) -> Vec<LinearFactor>) -> MultiSymFunc {
        let mut acc: BTreeMap<Multipartition, RatFunc> = BTreeMap::new();
        for (idx, c) in &self.terms {
            for (k, w) in expand_factors(self.ell, &factors_of(idx)) {
                let slot = acc.entry(k).or_insert_with(RatFunc::zero);
                *slot = &*slot + &(c * &RatFunc::from_laurent(w));
            }
        }
        Self::from_terms(self.ell, target, acc)
    }

    /// `p_r[Y_j] = sum_i zeta^{-ij} p_r[X^(i)]`.
    fn twisted_to_mps(&self) -> MultiSymFunc {
        let ell = self.ell;
        self.relabel(MultiBasis::MultiPowerSum, |rho| {
            rho.components()
                .iter()
                .enumerate()
                .flat_map(|(j, comp)| {
                    comp.parts().iter().map(move |&r| LinearFactor {
                        r,
                        weights: (0..ell).map(|i| LaurentPoly::constant(zeta(ell, -((i * j) as i64)))).collect(),
                    })
                })
                .collect()
        })
    }

    /// `p_r[X^(i)] = l^{-1} sum_m zeta^{im} p_r[Y_m]`.
    fn mps_to_twisted(&self) -> MultiSymFunc {
        let ell = self.ell;
        let inv = crate::scalars::rat(1, ell as i64);
        self.relabel(MultiBasis::Twisted, |mu| {
            mu.components()
                .iter()
                .enumerate()
                .flat_map(|(i, comp)| {
                    let inv = inv.clone();
                    comp.parts().iter().map(move |&r| LinearFactor {
                        r,
                        weights: (0..ell)
                            .map(|m| LaurentPoly::constant(zeta(ell, (i * m) as i64).scale(&inv)))
                            .collect(),
                    })
                })
                .collect()
        })
    }

    /// Sesquilinear form, `<p_mu, p_nu> = prod_j z_{mu^(j)} delta`, conjugate
    /// linear in the second argument.
    pub fn hermitian_product(&self, other: &MultiSymFunc) -> RatFunc {
        let (a, b) = (self.convert(MultiBasis::MultiPowerSum), other.convert(MultiBasis::MultiPowerSum));
        let mut total = RatFunc::zero();
        for (k, ca) in &a.terms {
            if let Some(cb) = b.terms.get(k) {
                let z: u64 = k.components().iter().map(Partition::z).product();
                total = &total + &(ca * &cb.conj()).scale(&Cyclotomic::from_integer(z as i64));
            }
        }
        total
    }

    pub fn specialize_t(&self, value: &Cyclotomic) -> Result<MultiSymFunc> {
        let mut out = Self::zero(self.ell, self.basis);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &RatFunc::constant(c.specialize(value)?));
        }
        Ok(out)
    }

    /// Coefficient at `index`, required to be a Laurent polynomial.
    pub fn laurent_coeff(&self, index: &Multipartition) -> Result<LaurentPoly> {
        let c = self.coeff(index);
        c.to_laurent()
            .ok_or_else(|| Error::Inconsistent(format!("coefficient at {index} is not a Laurent polynomial: {c}")))
    }
}

impl fmt::Display for MultiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            MultiBasis::MultiPowerSum => "p",
            MultiBasis::MultiSchur => "s",
            MultiBasis::Twisted => "pt",
        };
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){sym}{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::multipartitions_of;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn twisted_round_trip() {
        for ell in 1..=4 {
            for n in 0..=3 {
                for idx in multipartitions_of(ell, n) {
                    for basis in [MultiBasis::Twisted, MultiBasis::MultiPowerSum, MultiBasis::MultiSchur] {
                        let e = MultiSymFunc::basis_element(ell, basis, idx.clone());
                        for via in [MultiBasis::Twisted, MultiBasis::MultiPowerSum, MultiBasis::MultiSchur] {
                            assert_eq!(e.convert(via).convert(basis), e, "l={ell} {idx} {basis:?} via {via:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ell_two_transition() {
        let y1 = MultiSymFunc::basis_element(2, MultiBasis::Twisted, mp("([],[1])")).convert(MultiBasis::MultiPowerSum);
        let expect = MultiSymFunc::from_terms(
            2,
            MultiBasis::MultiPowerSum,
            [(mp("([1],[])"), RatFunc::one()), (mp("([],[1])"), RatFunc::from_integer(-1))],
        );
        assert_eq!(y1, expect);
        let y0 = MultiSymFunc::basis_element(2, MultiBasis::Twisted, mp("([1],[])")).convert(MultiBasis::MultiPowerSum);
        assert_eq!(y0.len(), 2);
        assert!(y0.terms().all(|(_, c)| *c == RatFunc::one()));
    }

    #[test]
    fn schur_tensors_are_orthonormal() {
        for ell in 1..=3 {
            for n in 0..=3 {
                let all = multipartitions_of(ell, n);
                for a in &all {
                    for b in &all {
                        let ea = MultiSymFunc::basis_element(ell, MultiBasis::MultiSchur, a.clone());
                        let eb = MultiSymFunc::basis_element(ell, MultiBasis::MultiSchur, b.clone());
                        assert_eq!(ea.hermitian_product(&eb), RatFunc::from_integer((a == b) as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn twisted_norms_are_centralizer_orders() {
        for ell in 1..=3 {
            for rho in multipartitions_of(ell, 3) {
                let e = MultiSymFunc::basis_element(ell, MultiBasis::Twisted, rho.clone());
                assert_eq!(e.hermitian_product(&e), RatFunc::from_integer(rho.z() as i64), "{rho}");
            }
        }
    }
}
