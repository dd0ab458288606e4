use super::{expand_factors, zeta, LinearFactor, MultiBasis, MultiSymFunc};
use crate::combinatorics::{Multipartition, Partition};
use crate::scalars::{Cyclotomic, LaurentPoly, RatFunc};

/// The character table `T = (zeta^{ij})` of `C_l` and the diagonal factors
/// `D_j = (1 - t^l) / (1 - zeta^j t)` relating the `Z` and `X` alphabets.
#[derive(Clone, Debug)]
pub struct TwistMatrices {
    pub t: Vec<Vec<Cyclotomic>>,
    pub d: Vec<RatFunc>,
}

impl TwistMatrices {
    pub fn new(ell: usize) -> Self {
        let t = (0..ell).map(|i| (0..ell).map(|j| zeta(ell, (i * j) as i64)).collect()).collect();
        let d = (0..ell)
            .map(|j| {
                RatFunc::new(
                    LaurentPoly::one_minus(Cyclotomic::one(), ell as i64),
                    LaurentPoly::one_minus(zeta(ell, j as i64), 1),
                )
                .expect("nonzero")
            })
            .collect();
        TwistMatrices { t, d }
    }

    /// Checks `T * conj(T) = l * I`.
    pub fn is_orthogonal(&self) -> bool {
        let ell = self.t.len();
        (0..ell).all(|i| {
            (0..ell).all(|k| {
                let s = (0..ell).fold(Cyclotomic::zero(), |acc, j| &acc + &(&self.t[i][j] * &self.t[k][j].conj()));
                s == Cyclotomic::from_integer(if i == k { ell as i64 } else { 0 })
            })
        })
    }
}

/// Slot weights of `p_r[Z^(p)]`: slot `k` carries `t^{r ((k - p) mod l)}`.
pub fn z_alphabet_weights(ell: usize, p: usize, r: usize) -> Vec<LaurentPoly> {
    (0..ell).map(|k| LaurentPoly::t_pow((r * ((k + ell - p % ell) % ell)) as i64)).collect()
}

fn single(ell: usize, slot: usize, r: usize) -> Multipartition {
    let mut comps = vec![Partition::empty(); ell];
    comps[slot] = Partition::from_unsorted(vec![r]);
    Multipartition::new(comps).unwrap()
}

/// Verifies `sum_i conj(zeta^{ij}) p_r[Z^(i)] = D_j(t^r) p_r[Y_j]` for every
/// `j`, comparing both sides in the multi-power-sum basis.
pub fn check_lemma_z(ell: usize, r: usize) -> bool {
    let tw = TwistMatrices::new(ell);
    (0..ell).all(|j| {
        let mut lhs = MultiSymFunc::zero(ell, MultiBasis::MultiPowerSum);
        for i in 0..ell {
            let f = LinearFactor { r, weights: z_alphabet_weights(ell, i, r) };
            let w = RatFunc::constant(tw.t[i][j].conj());
            for (k, c) in expand_factors(ell, &[f]) {
                lhs.add_term(k, &(&w * &RatFunc::from_laurent(c)));
            }
        }
        let rhs = MultiSymFunc::basis_element(ell, MultiBasis::Twisted, single(ell, j, r))
            .scale(&tw.d[j].subst_power(r as i64))
            .convert(MultiBasis::MultiPowerSum);
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonality_of_t() {
        for ell in 1..=8 {
            assert!(TwistMatrices::new(ell).is_orthogonal());
        }
    }

    #[test]
    fn lemma_z() {
        for ell in 1..=6 {
            for r in 1..=3 {
                assert!(check_lemma_z(ell, r), "l={ell} r={r}");
            }
        }
    }

    #[test]
    fn z_is_a_cyclic_shift() {
        let w = z_alphabet_weights(3, 1, 1);
        assert_eq!(w, vec![LaurentPoly::t_pow(2), LaurentPoly::t_pow(0), LaurentPoly::t_pow(1)]);
        assert_eq!(z_alphabet_weights(3, 0, 2), vec![LaurentPoly::t_pow(0), LaurentPoly::t_pow(2), LaurentPoly::t_pow(4)]);
    }
}
