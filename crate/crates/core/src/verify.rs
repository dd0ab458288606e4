//! Executable identity suites behind `wreathmac verify`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cherednik::{c_delta, c_l_from, d_delta, fake_degree_reduced, graded_character_l, kostka_matrix};
use crate::combinatorics::{factorial, multipartitions_of, partitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::golden;
use crate::scalars::{rat, Cyclotomic, LaurentPoly, RatFunc};
use crate::symfunc::{schur_to_powersum, Basis, SymFunc};
use crate::wreath::{
    check_lemma_z, fake_degree_wreath, kostka_column, wreath_char_table, wreath_frobenius, CharacterSumData,
    KostkaRoute, MultiBasis, MultiSymFunc, TwistMatrices,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    B2,
    Plethysm,
    Isometry,
    Prop12,
    KostkaDualRoute,
    Dimensions,
    Hilbert,
    LemmaZ,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["b2", "plethysm", "isometry", "prop12", "kostka-dual-route", "dimensions", "hilbert", "lemma-z", "all"];

    fn members(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![B2, Plethysm, Isometry, Prop12, KostkaDualRoute, Dimensions, Hilbert, LemmaZ],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        use Suite::*;
        let i = [B2, Plethysm, Isometry, Prop12, KostkaDualRoute, Dimensions, Hilbert, LemmaZ, All]
            .iter()
            .position(|&s| s == self)
            .unwrap();
        Self::NAMES[i]
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use Suite::*;
        let all = [B2, Plethysm, Isometry, Prop12, KostkaDualRoute, Dimensions, Hilbert, LemmaZ, All];
        Self::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| all[i])
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}' (expected one of {})", Self::NAMES.join(", "))))
    }
}

/// Ranges swept by the suites.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub ell_max: usize,
    pub n_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { ell_max: 3, n_max: 3 }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub description: String,
    pub passed: bool,
    /// First counterexample, when the check failed.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, suite: &'static str, description: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check { suite, description: description.into(), passed: failure.is_none(), detail: failure });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} [{}] {}", c.suite, c.description)?;
            if let Some(d) = &c.detail {
                write!(f, "\n     counterexample: {d}")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

/// Runs `suite` over `limits`. Arithmetic inconsistencies surface as errors,
/// failed identities as failed checks.
pub fn run(suite: Suite, limits: Limits) -> Result<Report> {
    let mut report = Report::default();
    for s in suite.members() {
        match s {
            Suite::B2 => b2(&mut report)?,
            Suite::Plethysm => plethysm(&mut report),
            Suite::Isometry => isometry(&mut report, limits),
            Suite::Prop12 => prop12(&mut report, limits)?,
            Suite::KostkaDualRoute => dual_route(&mut report, limits)?,
            Suite::Dimensions => dimensions(&mut report, limits)?,
            Suite::Hilbert => hilbert(&mut report, limits)?,
            Suite::LemmaZ => lemma_z(&mut report, limits),
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

/// Yields `(l, n)` for `1 <= l <= ell_max`, `1 <= n <= n_max`.
fn groups(limits: Limits) -> impl Iterator<Item = (usize, usize)> {
    (1..=limits.ell_max).flat_map(move |l| (1..=limits.n_max).map(move |n| (l, n)))
}

fn matrix_diff(name: &str, got: &crate::cherednik::GradedMatrix, expect: &crate::cherednik::GradedMatrix) -> Option<String> {
    if got.labels() != expect.labels() {
        return Some(format!("{name}: row labels differ"));
    }
    for i in 0..got.size() {
        for j in 0..got.size() {
            if got.entry(i, j) != expect.entry(i, j) {
                return Some(format!(
                    "{name} at ({}, {}): computed {} but expected {}",
                    got.labels()[i],
                    got.labels()[j],
                    got.entry(i, j),
                    expect.entry(i, j)
                ));
            }
        }
    }
    None
}

fn b2(report: &mut Report) -> Result<()> {
    let cd = c_delta(2, 2)?;
    report.push("b2", "C_Delta matches the reference table", matrix_diff("C_Delta", &cd, &golden::b2_c_delta()));
    let cl = c_l_from(&cd)?;
    report.push("b2", "C_L matches the reference table", matrix_diff("C_L", &cl, &golden::b2_c_l()));
    let k = kostka_matrix(2, 2, KostkaRoute::Verified, false)?;
    report.push("b2", "Kostka matrix matches the reference C_L", matrix_diff("K", &k, &golden::b2_c_l()));
    let d = d_delta(2, 2);
    let bad = golden::b2_fbar().into_iter().enumerate().find_map(|(i, (m, f))| {
        (d.entry(i, i) != &f).then(|| format!("f_bar{m} = {} but expected {f}", d.entry(i, i)))
    });
    report.push("b2", "D_Delta matches the reference shifted fake degrees", bad.or_else(|| (!d.is_diagonal()).then(|| "D_Delta is not diagonal".into())));
    Ok(())
}

fn random_symfunc(rng: &mut StdRng, max_degree: usize, with_t: bool) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(1..=max_degree);
        let parts = partitions_of(d);
        let lam = parts[rng.gen_range(0..parts.len())].clone();
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let mut coeff = RatFunc::from_rational(c);
        if with_t {
            coeff = &coeff * &RatFunc::from_laurent(LaurentPoly::t_pow(rng.gen_range(0..=2)));
        }
        f.add_term(lam, &coeff);
    }
    if f.is_zero() {
        f = SymFunc::p_r(1);
    }
    f
}

fn max_degree(f: &SymFunc) -> usize {
    f.terms().map(|(l, _)| l.size()).max().unwrap_or(0)
}

fn plethysm(report: &mut Report) {
    report.push(
        "plethysm",
        "p_2[p_3] = p_6 and p_r[0] = 0, p_r[1] = 1",
        (SymFunc::p_r(2).plethysm(&SymFunc::p_r(3)) != SymFunc::p_r(6)
            || !SymFunc::p_r(3).plethysm(&SymFunc::zero(Basis::PowerSum)).is_zero()
            || SymFunc::p_r(3).plethysm(&SymFunc::one()) != SymFunc::one())
        .then(|| "basic axiom failed".into()),
    );
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut assoc = None;
    let mut ident = None;
    let mut trials = 0;
    while trials < 40 {
        let f = random_symfunc(&mut rng, 2, false);
        let g = random_symfunc(&mut rng, 2, true);
        let h = random_symfunc(&mut rng, 2, true);
        if max_degree(&f) * max_degree(&g) * max_degree(&h) > 8 {
            continue;
        }
        trials += 1;
        if assoc.is_none() && f.plethysm(&g.plethysm(&h)) != f.plethysm(&g).plethysm(&h) {
            assoc = Some(format!("f = {f}, g = {g}, h = {h}"));
        }
        let p1 = SymFunc::p_r(1);
        if ident.is_none() && (p1.plethysm(&g) != g || g.plethysm(&p1) != g) {
            ident = Some(format!("g = {g}"));
        }
    }
    report.push("plethysm", "associativity f[g[h]] = (f[g])[h] on 40 random inputs of degree <= 8", assoc);
    report.push("plethysm", "p_1 is a two-sided identity", ident);

    let shook = partitions_of(0)
        .into_iter()
        .chain((1..=6).flat_map(partitions_of))
        .find_map(|lam| {
            let lhs = schur_to_powersum(&lam).evaluate(|r| {
                RatFunc::new(LaurentPoly::one(), LaurentPoly::one_minus(Cyclotomic::one(), r as i64)).unwrap()
            });
            let rhs = RatFunc::new(LaurentPoly::t_pow(lam.b() as i64), lam.hook_polynomial(1)).unwrap();
            (lhs != rhs).then(|| format!("s_{lam}[1/(1-t)] = {lhs}, expected {rhs}"))
        });
    report.push("plethysm", "s_lambda[1/(1-t)] = t^b(lambda) / H_lambda(t) for |lambda| <= 6", shook);
}

fn class_function(table: &crate::wreath::WreathCharTable, values: &[Cyclotomic]) -> BTreeMap<Multipartition, Cyclotomic> {
    table.labels().iter().cloned().zip(values.iter().cloned()).collect()
}

fn isometry(report: &mut Report, limits: Limits) {
    let mut irr = None;
    let mut random = None;
    let mut rng = StdRng::seed_from_u64(0x150);
    for (ell, n) in groups(limits) {
        let table = wreath_char_table(ell, n);
        let chs: Vec<MultiSymFunc> = table.values().iter().map(|row| wreath_frobenius(ell, &class_function(&table, row))).collect();
        for (a, ca) in chs.iter().enumerate() {
            if irr.is_none() && ca.convert(MultiBasis::MultiSchur) != MultiSymFunc::basis_element(ell, MultiBasis::MultiSchur, table.labels()[a].clone()) {
                irr = Some(format!("ch chi^{} is not s_{}", table.labels()[a], table.labels()[a]));
            }
            for (b, cb) in chs.iter().enumerate() {
                let v = ca.hermitian_product(cb);
                if irr.is_none() && v != RatFunc::from_integer((a == b) as i64) {
                    irr = Some(format!("<ch chi^{}, ch chi^{}> = {v}", table.labels()[a], table.labels()[b]));
                }
            }
        }
        let rand_fn = |rng: &mut StdRng| -> Vec<Cyclotomic> {
            (0..table.labels().len())
                .map(|_| &Cyclotomic::from_integer(rng.gen_range(-2..=2)) + &Cyclotomic::zeta_pow(ell as u32, rng.gen_range(0..ell as i64)))
                .collect()
        };
        for _ in 0..3 {
            let (x, y) = (rand_fn(&mut rng), rand_fn(&mut rng));
            let lhs = wreath_frobenius(ell, &class_function(&table, &x)).hermitian_product(&wreath_frobenius(ell, &class_function(&table, &y)));
            let rhs = RatFunc::constant(table.inner_product(&x, &y));
            if random.is_none() && lhs != rhs {
                random = Some(format!("l={ell} n={n}: {lhs} vs {rhs}"));
            }
        }
    }
    let range = format!("l <= {}, n <= {}", limits.ell_max, limits.n_max);
    report.push("isometry", format!("ch chi^lambda = s_lambda and <ch chi^lambda, ch chi^mu> = delta, {range}"), irr);
    report.push("isometry", format!("Frobenius map is an isometry on random class functions, {range}"), random);
}

fn as_rat(p: &LaurentPoly) -> RatFunc {
    RatFunc::from_laurent(p.clone())
}

fn prop12(report: &mut Report, limits: Limits) -> Result<()> {
    let mut first = None;
    let mut second = None;
    let mut third = None;
    for (ell, n) in groups(limits) {
        let data = CharacterSumData::get(ell, n)?;
        let table = data.table();
        let labels = table.labels();
        let fakes: Vec<LaurentPoly> = labels.iter().map(fake_degree_wreath).collect();
        let triv = Multipartition::trivial(ell, n);
        for lam in labels {
            let col = kostka_column(lam, KostkaRoute::Plethystic)?;
            if lam == &triv && second.is_none() {
                if let Some((mu, (k, f))) = labels.iter().zip(col.iter().zip(&fakes)).find(|(_, (k, f))| k != f) {
                    second = Some(format!("K_{{{mu},1}} = {k} but f = {f}"));
                }
            }
            let fl = fake_degree_wreath(lam).shift(-(lam.b() as i64));
            for (r, rho) in labels.iter().enumerate() {
                let chi = |m: usize| RatFunc::constant(table.values()[m][r].clone());
                let lhs = col.iter().enumerate().fold(RatFunc::zero(), |acc, (m, k)| &acc + &(&as_rat(k) * &chi(m)));
                let rhs = data.class_factor(lam, rho)?;
                if first.is_none() && lhs != rhs {
                    first = Some(format!("lambda = {lam}, rho = {rho}: {lhs} vs {rhs}"));
                }
                let li = table.index_of(lam).unwrap();
                let left = fakes.iter().enumerate().fold(RatFunc::zero(), |acc, (m, f)| &acc + &(&as_rat(f) * &(&chi(m) * &chi(li))));
                let right = &as_rat(&fl) * &lhs;
                if third.is_none() && left != right {
                    third = Some(format!("lambda = {lam}, rho = {rho}: {left} vs {right}"));
                }
            }
        }
    }
    let range = format!("l <= {}, n <= {}", limits.ell_max, limits.n_max);
    report.push("prop12", format!("sum_mu K_mu,lambda chi^mu_rho = prod_j H(t^l) prod_i (1 - zeta^j t^rho_i)^-1 chi^lambda_rho, {range}"), first);
    report.push("prop12", format!("K_mu,1 = f_mu, {range}"), second);
    report.push("prop12", format!("sum_mu f_mu chi^mu chi^lambda = f_bar_lambda sum_mu K_mu,lambda chi^mu, {range}"), third);
    Ok(())
}

fn dual_route(report: &mut Report, limits: Limits) -> Result<()> {
    let mut bad = None;
    for (ell, n) in groups(limits) {
        for lam in multipartitions_of(ell, n) {
            let a = kostka_column(&lam, KostkaRoute::Plethystic)?;
            let b = kostka_column(&lam, KostkaRoute::CharacterSum)?;
            if bad.is_none() && a != b {
                let labels = multipartitions_of(ell, n);
                let i = (0..a.len()).find(|&i| a[i] != b[i]).unwrap();
                bad = Some(format!("K at ({}, {lam}): plethystic {} vs character sum {}", labels[i], a[i], b[i]));
            }
        }
    }
    report.push(
        "kostka-dual-route",
        format!("plethystic and character-sum routes agree, l <= {}, n <= {}", limits.ell_max, limits.n_max),
        bad,
    );
    Ok(())
}

fn dimensions(report: &mut Report, limits: Limits) -> Result<()> {
    let mut dims = None;
    let mut positive = None;
    let mut at_zero = None;
    let mut factor = None;
    let mut ident = None;
    let mut trivial = None;
    let mut dual = None;
    for (ell, n) in groups(limits) {
        let order = (ell as u64).pow(n as u32) * factorial(n);
        let k = kostka_matrix(ell, n, KostkaRoute::Plethystic, false)?;
        let cd = c_delta(ell, n)?;
        let cl = c_l_from(&cd)?;
        if positive.is_none() && !k.is_nonnegative_polynomial() {
            positive = Some(format!("l={ell} n={n}: some K entry is not in N[t]"));
        }
        if at_zero.is_none() && !(k.is_identity_at_zero() && cd.is_identity_at_zero()) {
            at_zero = Some(format!("l={ell} n={n}: K or C_Delta is not the identity at t = 0"));
        }
        if factor.is_none() && d_delta(ell, n).mul(&cl)? != cd {
            factor = Some(format!("l={ell} n={n}: D_Delta C_L != C_Delta"));
        }
        if ident.is_none() {
            ident = matrix_diff(&format!("l={ell} n={n}: C_L vs K"), &cl, &k);
        }
        for lam in k.labels() {
            let gc = graded_character_l(lam)?;
            let total = gc.total_dimension()?;
            if dims.is_none() && total != order {
                dims = Some(format!("dim L({lam}) = {total}, expected {order}"));
            }
            let tr = gc.multiplicity(&Multipartition::trivial(ell, n)).cloned().unwrap_or_default();
            if trivial.is_none() && tr != LaurentPoly::t_pow(lam.dual().b() as i64) {
                trivial = Some(format!("<G_{lam}, s_1> = {tr}, expected t^{}", lam.dual().b()));
            }
            if dual.is_none() && fake_degree_reduced(lam) != fake_degree_reduced(&lam.dual()) {
                dual = Some(format!("f_bar differs between {lam} and {}", lam.dual()));
            }
        }
    }
    let range = format!("l <= {}, n <= {}", limits.ell_max, limits.n_max);
    report.push("dimensions", format!("sum_mu dim(mu) K_mu,lambda(1) = l^n n!, {range}"), dims);
    report.push("dimensions", format!("every K entry lies in N[t], {range}"), positive);
    report.push("dimensions", format!("K and C_Delta are the identity at t = 0, {range}"), at_zero);
    report.push("dimensions", format!("C_Delta = D_Delta C_L, {range}"), factor);
    report.push("dimensions", format!("C_L equals the Kostka matrix, {range}"), ident);
    report.push("dimensions", format!("coefficient of s_1 in G_lambda is t^b(lambda*), {range}"), trivial);
    report.push("dimensions", format!("f_bar(lambda) = f_bar(lambda*), {range}"), dual);
    Ok(())
}

fn hilbert(report: &mut Report, limits: Limits) -> Result<()> {
    let mut bad = None;
    let n_max = limits.n_max.max(1);
    for ell in 1..=limits.ell_max {
        for n in 1..=n_max {
            let table = wreath_char_table(ell, n);
            let mut lhs = LaurentPoly::zero();
            for lam in table.labels() {
                lhs = &lhs + &fake_degree_wreath(lam).scale(&Cyclotomic::from_integer(table.dimension(lam)? as i64));
            }
            let top = (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &LaurentPoly::one_minus(Cyclotomic::one(), (i * ell) as i64));
            let rhs = top.div_exact(&LaurentPoly::one_minus(Cyclotomic::one(), 1).pow(n as u32)).expect("(1 - t)^n divides");
            if bad.is_none() && lhs != rhs {
                bad = Some(format!("l={ell} n={n}: {lhs} vs {rhs}"));
            }
        }
    }
    report.push(
        "hilbert",
        format!("sum_lambda dim(lambda) f_lambda = prod_i [(1 - t^(il)) / (1 - t)], l <= {}, n <= {n_max}", limits.ell_max),
        bad,
    );
    Ok(())
}

fn lemma_z(report: &mut Report, limits: Limits) {
    let ortho = (1..=limits.ell_max).find(|&l| !TwistMatrices::new(l).is_orthogonal()).map(|l| format!("l={l}"));
    report.push("lemma-z", format!("T conj(T) = l I, l <= {}", limits.ell_max), ortho);
    let bad = (1..=limits.ell_max)
        .flat_map(|l| (1..=3).map(move |r| (l, r)))
        .find(|&(l, r)| !check_lemma_z(l, r))
        .map(|(l, r)| format!("l={l} r={r}"));
    report.push("lemma-z", format!("conj(T) p_r[z] = D(t^r) conj(T) p_r[x], l <= {}, r <= 3", limits.ell_max), bad);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_run_passes() {
        let report = run(Suite::All, Limits { ell_max: 2, n_max: 2 }).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().contains("PASS [b2]"));
    }
}
