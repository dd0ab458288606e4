//! `G_lambda(x; t, t)` and its Schur coefficients `K_{mu lambda}(t, t)`.
//!
//! Two independent routes are provided. The plethystic route builds
//! `prod_j H_{lambda^(j)}(t^l) s_{lambda^(j)}[Z^(j) / (1 - t^l)]` from type A
//! data and expands it in multi-Schur functions, touching only symmetric
//! group characters. The character-sum route evaluates the closed formula
//! over wreath classes.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::characters::{wreath_char_table, WreathCharTable};
use super::{expand_factors, z_alphabet_weights, zeta, LinearFactor, MultiBasis, MultiSymFunc};
use crate::combinatorics::{b_invariant, multipartitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, LaurentPoly, RatFunc, Rational};
use crate::symfunc::{g_type_a, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KostkaRoute {
    Plethystic,
    CharacterSum,
    /// Computes both routes and fails unless they agree.
    Verified,
}

/// `f[Z^(p)]` for `f` in one alphabet: `p_r` becomes `sum_k t^{r((k-p) mod l)} p_r[X^(k)]`.
/// Coefficients of `f` are constants of the substitution.
pub fn substitute_z(f: &SymFunc, ell: usize, p: usize) -> MultiSymFunc {
    let mut out = MultiSymFunc::zero(ell, MultiBasis::MultiPowerSum);
    for (mu, c) in f.to_powersum().terms() {
        let factors: Vec<LinearFactor> =
            mu.parts().iter().map(|&r| LinearFactor { r, weights: z_alphabet_weights(ell, p, r) }).collect();
        for (k, w) in expand_factors(ell, &factors) {
            out.add_term(k, &(c * &RatFunc::from_laurent(w)));
        }
    }
    out
}

/// `prod_j G_{lambda^(j)}(x; t^l, t^l)[Z^(j)]` in the multi-power-sum basis.
pub fn g_wreath(lambda: &Multipartition) -> MultiSymFunc {
    let ell = lambda.ell();
    lambda
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .fold(MultiSymFunc::one(ell), |acc, (j, comp)| acc.multiply(&substitute_z(&g_type_a(comp, ell), ell, j)))
}

fn hook_product(lambda: &Multipartition) -> LaurentPoly {
    let ell = lambda.ell();
    lambda.components().iter().fold(LaurentPoly::one(), |acc, c| &acc * &c.hook_polynomial(ell))
}

/// `prod_j prod_i (1 - zeta^j t^{rho^(j)_i})`.
fn twist_denominator(rho: &Multipartition) -> LaurentPoly {
    let ell = rho.ell();
    let mut d = LaurentPoly::one();
    for (j, comp) in rho.components().iter().enumerate() {
        for &r in comp.parts() {
            d = &d * &LaurentPoly::one_minus(zeta(ell, j as i64), r as i64);
        }
    }
    d
}

fn inv_z(rho: &Multipartition) -> Rational {
    Rational::new(1.into(), (rho.z() as i64).into())
}

/// `G_lambda` assembled directly in the twisted basis from wreath characters:
/// the coefficient at `rho` is `z_rho^{-1} prod_j H(t^l) prod_i (1 - zeta^j t^{rho_i})^{-1} chi^lambda_rho`.
pub fn g_wreath_twisted(lambda: &Multipartition) -> MultiSymFunc {
    let ell = lambda.ell();
    let table = wreath_char_table(ell, lambda.size());
    let hooks = hook_product(lambda);
    let row = table.index_of(lambda).expect("label of its own table");
    MultiSymFunc::from_terms(
        ell,
        MultiBasis::Twisted,
        table.labels().iter().zip(&table.values()[row]).map(|(rho, chi)| {
            let c = chi.scale(&inv_z(rho));
            (rho.clone(), RatFunc::new(hooks.scale(&c), twist_denominator(rho)).expect("nonzero"))
        }),
    )
}

/// `f_lambda(t) = t^{b(alpha)} prod_{k<=n} (1 - t^{kl}) prod_i t^{l b(lambda^(i))} / H_{lambda^(i)}(t^l)`.
pub fn fake_degree_wreath(lambda: &Multipartition) -> LaurentPoly {
    let ell = lambda.ell();
    let shift = b_invariant(&lambda.alpha()) + ell * lambda.components().iter().map(|c| c.b()).sum::<usize>();
    let top = (1..=lambda.size()).fold(LaurentPoly::t_pow(shift as i64), |acc, k| {
        &acc * &LaurentPoly::one_minus(Cyclotomic::one(), (k * ell) as i64)
    });
    top.div_exact(&hook_product(lambda)).expect("hook products divide the coinvariant product")
}

/// Precomputed data for the character-sum route at fixed `(l, n)`.
///
/// Every `prod (1 - zeta^j t^{rho_i})` divides `P = prod_{k<=n} (1 - t^{kl})`,
/// so each class contributes the polynomial `P / prod(...)` and the sum is
/// divided by `P` once at the end.
#[derive(Debug)]
pub struct CharacterSumData {
    table: Arc<WreathCharTable>,
    common: LaurentPoly,
    reduced: Vec<LaurentPoly>,
}

impl CharacterSumData {
    fn build(ell: usize, n: usize) -> Result<Self> {
        let table = wreath_char_table(ell, n);
        let common = (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &LaurentPoly::one_minus(Cyclotomic::one(), (k * ell) as i64));
        let reduced = table
            .labels()
            .iter()
            .map(|rho| {
                common
                    .div_exact(&twist_denominator(rho))
                    .ok_or_else(|| Error::Inconsistent(format!("twist denominator of {rho} does not divide the common one")))
            })
            .collect::<Result<_>>()?;
        Ok(CharacterSumData { table, common, reduced })
    }

    /// Shared instance for `(l, n)`.
    pub fn get(ell: usize, n: usize) -> Result<Arc<Self>> {
        type Cache = RwLock<HashMap<(usize, usize), Arc<CharacterSumData>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(d) = cache.read().expect("cache poisoned").get(&(ell, n)) {
            return Ok(Arc::clone(d));
        }
        let built = Arc::new(Self::build(ell, n)?);
        Ok(Arc::clone(cache.write().expect("cache poisoned").entry((ell, n)).or_insert(built)))
    }

    pub fn table(&self) -> &WreathCharTable {
        &self.table
    }

    fn row(&self, m: &Multipartition) -> Result<usize> {
        self.table
            .index_of(m)
            .ok_or_else(|| Error::SizeMismatch(format!("{m} is not an {}-multipartition of {}", self.table.ell(), self.table.n())))
    }

    /// `K_{mu lambda} = sum_rho z_rho^{-1} prod_j H(t^l) prod_i (1 - zeta^j t^{rho_i})^{-1}
    /// chi^lambda_rho conj(chi^mu_rho)`.
    pub fn kostka(&self, mu: &Multipartition, lambda: &Multipartition) -> Result<LaurentPoly> {
        let (a, b) = (self.row(lambda)?, self.row(mu)?);
        let mut sum = LaurentPoly::zero();
        for (k, rho) in self.table.labels().iter().enumerate() {
            let c = (&self.table.values()[a][k] * &self.table.values()[b][k].conj()).scale(&inv_z(rho));
            if !c.is_zero() {
                sum = &sum + &self.reduced[k].scale(&c);
            }
        }
        (&hook_product(lambda) * &sum)
            .div_exact(&self.common)
            .ok_or_else(|| Error::Inconsistent(format!("K at ({mu}, {lambda}) is not a Laurent polynomial")))
    }

    /// Right-hand side `prod_j H(t^l) prod_i (1 - zeta^j t^{rho_i})^{-1} chi^lambda_rho`.
    pub fn class_factor(&self, lambda: &Multipartition, rho: &Multipartition) -> Result<RatFunc> {
        let (a, k) = (self.row(lambda)?, self.row(rho)?);
        RatFunc::new(hook_product(lambda).scale(&self.table.values()[a][k]), twist_denominator(rho))
    }
}

fn check_sizes(mu: &Multipartition, lambda: &Multipartition) -> Result<()> {
    if mu.ell() != lambda.ell() || mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("{mu} and {lambda} do not label the same group")));
    }
    Ok(())
}

/// `K_{mu lambda}(t, t)` along every `mu`, in `multipartitions_of` order.
pub fn kostka_column(lambda: &Multipartition, route: KostkaRoute) -> Result<Vec<LaurentPoly>> {
    let (ell, n) = (lambda.ell(), lambda.size());
    let labels = multipartitions_of(ell, n);
    match route {
        KostkaRoute::Plethystic => {
            let g = g_wreath(lambda).convert(MultiBasis::MultiSchur);
            labels.iter().map(|mu| g.laurent_coeff(mu)).collect()
        }
        KostkaRoute::CharacterSum => {
            let data = CharacterSumData::get(ell, n)?;
            labels.iter().map(|mu| data.kostka(mu, lambda)).collect()
        }
        KostkaRoute::Verified => {
            let a = kostka_column(lambda, KostkaRoute::Plethystic)?;
            let b = kostka_column(lambda, KostkaRoute::CharacterSum)?;
            for ((mu, x), y) in labels.iter().zip(&a).zip(&b) {
                if x != y {
                    return Err(Error::Inconsistent(format!("routes disagree at ({mu}, {lambda}): {x} vs {y}")));
                }
            }
            Ok(a)
        }
    }
}

pub fn wreath_kostka_with(mu: &Multipartition, lambda: &Multipartition, route: KostkaRoute) -> Result<LaurentPoly> {
    check_sizes(mu, lambda)?;
    match route {
        KostkaRoute::Plethystic => g_wreath(lambda).convert(MultiBasis::MultiSchur).laurent_coeff(mu),
        KostkaRoute::CharacterSum => CharacterSumData::get(lambda.ell(), lambda.size())?.kostka(mu, lambda),
        KostkaRoute::Verified => {
            let a = wreath_kostka_with(mu, lambda, KostkaRoute::Plethystic)?;
            let b = wreath_kostka_with(mu, lambda, KostkaRoute::CharacterSum)?;
            if a != b {
                return Err(Error::Inconsistent(format!("routes disagree at ({mu}, {lambda}): {a} vs {b}")));
            }
            Ok(a)
        }
    }
}

/// Coefficient of `s_mu` in `G_lambda(x; t, t)`.
pub fn wreath_kostka(mu: &Multipartition, lambda: &Multipartition) -> Result<LaurentPoly> {
    wreath_kostka_with(mu, lambda, KostkaRoute::Plethystic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ell_one_is_type_a() {
        for n in 0..=4 {
            for lam in partitions_of(n) {
                let g = g_wreath(&Multipartition::new(vec![lam.clone()]).unwrap());
                let expect = MultiSymFunc::from_slot(1, 0, &g_type_a(&lam, 1));
                assert_eq!(g, expect);
            }
        }
    }

    #[test]
    fn b2_column_of_the_mixed_bipartition() {
        let col = kostka_column(&mp("([1],[1])"), KostkaRoute::Verified).unwrap();
        let expect: Vec<LaurentPoly> = ["t", "t", "t^2+1", "t", "t"].iter().map(|s| lp(s)).collect();
        assert_eq!(col, expect);
    }

    #[test]
    fn twisted_assembly_matches_plethystic() {
        for ell in 1..=3 {
            for n in 0..=2 {
                for lam in multipartitions_of(ell, n) {
                    let a = g_wreath(&lam).convert(MultiBasis::MultiSchur);
                    let b = g_wreath_twisted(&lam).convert(MultiBasis::MultiSchur);
                    assert_eq!(a, b, "{lam}");
                }
            }
        }
    }

    #[test]
    fn wreath_fake_degrees() {
        assert_eq!(fake_degree_wreath(&mp("([1],[1])")), lp("t^3+t"));
        assert_eq!(fake_degree_wreath(&mp("([2],[])")), LaurentPoly::one());
        assert_eq!(fake_degree_wreath(&mp("([1,1],[])")), lp("t^2"));
        for ell in 1..=3 {
            for n in 0..=3 {
                let table = wreath_char_table(ell, n);
                for lam in table.labels() {
                    let f = fake_degree_wreath(lam);
                    assert!(f.is_nonnegative_integral());
                    assert_eq!(f.valuation(), Some(lam.b() as i64), "{lam}");
                    let dim = table.dimension(lam).unwrap();
                    assert_eq!(f.eval(&Cyclotomic::one()), Some(Cyclotomic::from_integer(dim as i64)));
                }
            }
        }
        // l = 1 degenerates to the symmetric group
        for lam in partitions_of(5) {
            let m = Multipartition::new(vec![lam.clone()]).unwrap();
            assert_eq!(fake_degree_wreath(&m), crate::symfunc::fake_degree_type_a(&lam));
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(wreath_kostka(&mp("([1],[])"), &mp("([2],[])")).is_err());
    }
}
