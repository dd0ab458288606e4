use std::collections::BTreeMap;

use proptest::prelude::*;

use wreathmac::combinatorics::{multipartitions_of, partitions_of, Multipartition, Partition};
use wreathmac::scalars::{rat, Cyclotomic, LaurentPoly, RatFunc};
use wreathmac::symfunc::{Basis, SymFunc};
use wreathmac::wreath::{wreath_char_table, wreath_frobenius};

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..6)
        .prop_map(move |cs| Cyclotomic::from_coeffs(order, cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn element_pair_of_order() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=12).prop_flat_map(|m| (cyclotomic(m), cyclotomic(m), cyclotomic(m)))
}

/// Laurent polynomials with small rational coefficients, optionally over `Q(zeta_3)`.
fn laurent(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i64..=5, -3i64..=3, 0i64..=2, any::<bool>()), 0..max_terms).prop_map(|ts| {
        let mut p = LaurentPoly::zero();
        for (e, c, z, twisted) in ts {
            let coeff = if twisted { &Cyclotomic::from_integer(c) * &Cyclotomic::zeta_pow(3, z) } else { Cyclotomic::from_integer(c) };
            p = &p + &LaurentPoly::monomial(coeff, e);
        }
        p
    })
}

fn rational_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=6, -4i64..=4, 1i64..=3), 0..5).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (e, n, d)| &acc + &LaurentPoly::monomial(Cyclotomic::from_rational(rat(n, d)), e))
    })
}

fn partition_up_to(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|d| {
        let all = partitions_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// Power-sum combinations of degree at most `max_degree`; coefficients include `t` powers when asked.
fn symfunc(max_degree: usize, with_t: bool) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_up_to(max_degree), -3i64..=3, 1i64..=2, 0i64..=2), 1..3).prop_map(move |ts| {
        let mut f = SymFunc::zero(Basis::PowerSum);
        for (lam, n, d, e) in ts {
            let mut c = RatFunc::from_rational(rat(n, d));
            if with_t {
                c = &c * &RatFunc::from_laurent(LaurentPoly::t_pow(e));
            }
            f.add_term(lam, &c);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in element_pair_of_order()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn mixed_orders_embed_consistently(a in cyclotomic(3), b in cyclotomic(4)) {
        // (a + b) lives in Q(zeta_12); subtracting b must recover a
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn ratfunc_normal_form(num in laurent(4), den in laurent(4), common in laurent(3)) {
        prop_assume!(!den.is_zero() && !common.is_zero());
        let f = RatFunc::new(num.clone(), den.clone()).unwrap();
        let g = RatFunc::new(&num * &common, &den * &common).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert!(f.eq_cross(&g));
        // denominator is monic with nonzero constant term
        let d = f.denominator();
        prop_assert_eq!(d.valuation(), Some(0));
        prop_assert_eq!(d.leading().cloned(), Some(Cyclotomic::one()));
        prop_assert_eq!(f.conj().conj(), f.clone());
        if !f.is_zero() {
            prop_assert_eq!(&f * &f.inv().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn ratfunc_field_axioms(a in laurent(3), b in laurent(3), c in laurent(3), d in laurent(3)) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &x, &(&x * &x) + &(&y * &x));
    }

    #[test]
    fn laurent_text_round_trip(p in rational_laurent()) {
        prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn partition_text_round_trip(lam in partition_up_to(8)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        let m = Multipartition::new(vec![lam.clone(), Partition::empty(), lam]).unwrap();
        prop_assert_eq!(m.to_string().parse::<Multipartition>().unwrap(), m);
    }

    #[test]
    fn plethysm_associativity(f in symfunc(2, false), g in symfunc(2, true), h in symfunc(2, true)) {
        prop_assert_eq!(f.plethysm(&g.plethysm(&h)), f.plethysm(&g).plethysm(&h));
    }

    #[test]
    fn plethysm_identity(g in symfunc(4, true)) {
        let p1 = SymFunc::p_r(1);
        prop_assert_eq!(p1.plethysm(&g), g.clone());
        prop_assert_eq!(g.plethysm(&p1), g);
    }

    #[test]
    fn plethysm_is_multiplicative_in_the_outer_argument(f in symfunc(2, false), g in symfunc(2, false), h in symfunc(2, true)) {
        prop_assert_eq!(f.multiply(&g).plethysm(&h), f.plethysm(&h).multiply(&g.plethysm(&h)));
    }

    #[test]
    fn schur_round_trip(f in symfunc(5, true)) {
        prop_assert_eq!(f.to_basis(Basis::Schur).to_basis(Basis::PowerSum), f);
    }

    #[test]
    fn frobenius_isometry(ell in 1usize..=3, n in 1usize..=3, seed in prop::collection::vec((-2i64..=2, 0i64..3), 22 * 2)) {
        let table = wreath_char_table(ell, n);
        let k = table.labels().len();
        let make = |offset: usize| -> Vec<Cyclotomic> {
            (0..k).map(|i| {
                let (c, z) = seed[offset + i];
                &Cyclotomic::from_integer(c) + &Cyclotomic::zeta_pow(ell as u32, z)
            }).collect()
        };
        let (x, y) = (make(0), make(k));
        let as_map = |v: &[Cyclotomic]| -> BTreeMap<Multipartition, Cyclotomic> {
            table.labels().iter().cloned().zip(v.iter().cloned()).collect()
        };
        let lhs = wreath_frobenius(ell, &as_map(&x)).hermitian_product(&wreath_frobenius(ell, &as_map(&y)));
        prop_assert_eq!(lhs, RatFunc::constant(table.inner_product(&x, &y)));
    }

    #[test]
    fn dual_is_an_involution(ell in 1usize..=4, n in 0usize..=4, pick in any::<prop::sample::Index>()) {
        let all = multipartitions_of(ell, n);
        let m = &all[pick.index(all.len())];
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.dual().size(), m.size());
    }
}
