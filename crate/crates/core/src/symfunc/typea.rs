use super::{schur_to_powersum, Basis, SymFunc};
use crate::combinatorics::{Multipartition, Partition};
use crate::scalars::{Cyclotomic, LaurentPoly, RatFunc};

/// `H_lambda(t^m) * s_lambda[X / (1 - t^m)]` in the power-sum basis.
///
/// The substitution sends `p_r` to `p_r / (1 - t^{m r})`; with `m = 1` this is
/// the `q = t` specialization of the modified Macdonald polynomial, up to the
/// shift `t^{b(lambda)}`.
pub fn g_type_a(lambda: &Partition, m: usize) -> SymFunc {
    let hook = lambda.hook_polynomial(m);
    schur_to_powersum(lambda).transform(|mu| {
        let den = mu
            .parts()
            .iter()
            .fold(LaurentPoly::one(), |acc, &r| &acc * &LaurentPoly::one_minus(Cyclotomic::one(), (m * r) as i64));
        RatFunc::new(hook.clone(), den).expect("nonzero denominator")
    })
}

/// `prod_{k<=n} (1 - t^k) * t^{b(lambda)} / H_lambda(t)`.
pub fn fake_degree_type_a(lambda: &Partition) -> LaurentPoly {
    let n = lambda.size();
    let top = (1..=n).fold(LaurentPoly::t_pow(lambda.b() as i64), |acc, k| {
        &acc * &LaurentPoly::one_minus(Cyclotomic::one(), k as i64)
    });
    top.div_exact(&lambda.hook_polynomial(1)).expect("hook polynomial divides the coinvariant product")
}

/// Multiplicity of `s_nu` in `prod_i s_{rho^(i)}`.
pub fn littlewood_richardson(rho: &Multipartition, nu: &Partition) -> u64 {
    if rho.size() != nu.size() {
        return 0;
    }
    let product = rho.components().iter().fold(SymFunc::one(), |acc, c| acc.multiply(&schur_to_powersum(c)));
    let c = product.to_basis(Basis::Schur).coeff(nu);
    let value = c.to_laurent().and_then(|l| l.to_integer_vec()).unwrap_or_default();
    match value.as_slice() {
        [] => 0,
        [v] => u64::try_from(v.clone()).expect("nonnegative multiplicity"),
        _ => unreachable!("constant coefficient expected"),
    }
}
