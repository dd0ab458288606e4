//! Irreducible characters of `C_l wr S_n`.
//!
//! `chi^lambda_rho` is `z_rho` times the coefficient of the twisted power sum
//! `rho` in `prod_j s_{lambda^(j)}[X^(j)]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::{MultiBasis, MultiSymFunc};
use crate::combinatorics::{multipartitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, RatFunc, Rational};

/// Character table with rows indexed by irreducibles and columns by classes,
/// both in `multipartitions_of` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathCharTable {
    ell: usize,
    n: usize,
    labels: Vec<Multipartition>,
    index: HashMap<Multipartition, usize>,
    values: Vec<Vec<Cyclotomic>>,
}

impl WreathCharTable {
    pub fn compute(ell: usize, n: usize) -> Self {
        let labels = multipartitions_of(ell, n);
        let values = labels
            .iter()
            .map(|lam| {
                let twisted = MultiSymFunc::basis_element(ell, MultiBasis::MultiSchur, lam.clone()).convert(MultiBasis::Twisted);
                labels
                    .iter()
                    .map(|rho| {
                        let c = twisted.coeff(rho).specialize(&Cyclotomic::zero()).expect("constant coefficient");
                        c.scale(&Rational::from_integer((rho.z() as i64).into()))
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(ell, n, labels, values)
    }

    pub(crate) fn from_parts(ell: usize, n: usize, labels: Vec<Multipartition>, values: Vec<Vec<Cyclotomic>>) -> Self {
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        WreathCharTable { ell, n, labels, index, values }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducible labels, which coincide with the class labels.
    pub fn labels(&self) -> &[Multipartition] {
        &self.labels
    }

    pub fn index_of(&self, m: &Multipartition) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, lambda: &Multipartition, rho: &Multipartition) -> Result<&Cyclotomic> {
        let miss = |m: &Multipartition| {
            Error::SizeMismatch(format!("{m} is not an {}-multipartition of {}", self.ell, self.n))
        };
        let i = self.index_of(lambda).ok_or_else(|| miss(lambda))?;
        let j = self.index_of(rho).ok_or_else(|| miss(rho))?;
        Ok(&self.values[i][j])
    }

    /// Degree of the irreducible `lambda`: its value at the identity class.
    pub fn dimension(&self, lambda: &Multipartition) -> Result<u64> {
        let id = identity_class(self.ell, self.n);
        let v = self.value(lambda, &id)?;
        let r = v.to_rational().ok_or_else(|| Error::Inconsistent(format!("dimension of {lambda} is not rational")))?;
        u64::try_from(r.to_integer()).map_err(|_| Error::Inconsistent(format!("dimension of {lambda} is negative")))
    }

    /// `sum_rho z_rho^{-1} a(rho) conj(b(rho))`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        self.labels.iter().zip(a.iter().zip(b)).fold(Cyclotomic::zero(), |acc, (rho, (x, y))| {
            &acc + &(x * &y.conj()).scale(&Rational::new(1.into(), (rho.z() as i64).into()))
        })
    }
}

/// `((1^n), [], ..., [])`, the class of the identity element.
pub fn identity_class(ell: usize, n: usize) -> Multipartition {
    let mut comps = vec![crate::combinatorics::Partition::empty(); ell];
    comps[0] = crate::combinatorics::Partition::from_unsorted(vec![1; n]);
    Multipartition::new(comps).unwrap()
}

type TableCache = RwLock<HashMap<(usize, usize), Arc<WreathCharTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, memoized character table of `C_l wr S_n`.
pub fn wreath_char_table(ell: usize, n: usize) -> Arc<WreathCharTable> {
    if let Some(t) = table_cache().read().expect("character cache poisoned").get(&(ell, n)) {
        return Arc::clone(t);
    }
    let built = Arc::new(WreathCharTable::compute(ell, n));
    let mut w = table_cache().write().expect("character cache poisoned");
    Arc::clone(w.entry((ell, n)).or_insert(built))
}

/// Installs a table (for example one loaded from disk) into the shared cache.
pub(crate) fn install_table(table: WreathCharTable) -> Arc<WreathCharTable> {
    let key = (table.ell, table.n);
    let mut w = table_cache().write().expect("character cache poisoned");
    Arc::clone(w.entry(key).or_insert_with(|| Arc::new(table)))
}

pub fn wreath_character(lambda: &Multipartition, rho: &Multipartition) -> Result<Cyclotomic> {
    if lambda.ell() != rho.ell() || lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {rho} do not label the same group")));
    }
    wreath_char_table(lambda.ell(), lambda.size()).value(lambda, rho).cloned()
}

/// `ch(chi) = sum_rho z_rho^{-1} chi(rho) * (twisted power sum rho)`.
pub fn wreath_frobenius(ell: usize, chi: &BTreeMap<Multipartition, Cyclotomic>) -> MultiSymFunc {
    MultiSymFunc::from_terms(
        ell,
        MultiBasis::Twisted,
        chi.iter().map(|(rho, v)| {
            (rho.clone(), RatFunc::constant(v.scale(&Rational::new(1.into(), (rho.z() as i64).into()))))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions_of, Partition};
    use crate::symfunc::sn_character;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_character_and_b2_dimensions() {
        for ell in 1..=3 {
            for n in 0..=3 {
                let table = wreath_char_table(ell, n);
                let triv = Multipartition::trivial(ell, n);
                for rho in table.labels() {
                    assert_eq!(*table.value(&triv, rho).unwrap(), Cyclotomic::one());
                }
            }
        }
        let b2 = wreath_char_table(2, 2);
        let dims: Vec<u64> = b2.labels().iter().map(|l| b2.dimension(l).unwrap()).collect();
        assert_eq!(dims, [1, 1, 2, 1, 1]);
        assert_eq!(*b2.value(&mp("([1],[1])"), &mp("([1,1],[])")).unwrap(), Cyclotomic::from_integer(2));
    }

    #[test]
    fn ell_one_is_symmetric_group() {
        for n in 0..=4 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let w = wreath_character(&Multipartition::new(vec![lam.clone()]).unwrap(), &Multipartition::new(vec![mu.clone()]).unwrap()).unwrap();
                    assert_eq!(w, Cyclotomic::from_integer(sn_character(&lam, &mu).unwrap()));
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_integrality() {
        for ell in 1..=3 {
            for n in 0..=3 {
                let table = wreath_char_table(ell, n);
                let order = (ell as u64).pow(n as u32) * crate::combinatorics::factorial(n);
                let mut sq = 0;
                for (a, ra) in table.values().iter().enumerate() {
                    assert!(ra.iter().all(Cyclotomic::is_integral));
                    for (b, rb) in table.values().iter().enumerate() {
                        let expect = Cyclotomic::from_integer((a == b) as i64);
                        assert_eq!(table.inner_product(ra, rb), expect, "l={ell} n={n}");
                    }
                    sq += table.dimension(&table.labels()[a]).unwrap().pow(2);
                }
                assert_eq!(sq, order);
            }
        }
    }

    #[test]
    fn frobenius_sends_irreducibles_to_schur() {
        for ell in 1..=3 {
            for n in 0..=3 {
                let table = wreath_char_table(ell, n);
                for (i, lam) in table.labels().iter().enumerate() {
                    let chi = table.labels().iter().cloned().zip(table.values()[i].iter().cloned()).collect();
                    let ch = wreath_frobenius(ell, &chi).convert(MultiBasis::MultiSchur);
                    assert_eq!(ch, MultiSymFunc::basis_element(ell, MultiBasis::MultiSchur, lam.clone()));
                }
            }
        }
    }

    #[test]
    fn bad_sizes() {
        assert!(wreath_character(&mp("([1],[])"), &mp("([1],[1])")).is_err());
        assert!(wreath_character(&mp("([1],[])"), &Multipartition::new(vec![Partition::from_unsorted(vec![1])]).unwrap()).is_err());
    }
}
