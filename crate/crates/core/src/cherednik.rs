//! Graded decomposition matrices of restricted rational Cherednik algebras
//! of `G(l, 1, n)` at generic parameters.
//!
//! Rows are labelled by the standard or simple module `M(lambda)`, `L(lambda)`,
//! columns by irreducible `W`-modules, both in `multipartitions_of` order.

use rayon::prelude::*;

use crate::combinatorics::{multipartitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, LaurentPoly, Rational};
use crate::wreath::{fake_degree_wreath, g_wreath, kostka_column, wreath_char_table, KostkaRoute, MultiBasis, MultiSymFunc};

/// Square matrix of Laurent polynomials with multipartition labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    labels: Vec<Multipartition>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl GradedMatrix {
    pub fn new(labels: Vec<Multipartition>, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = labels.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!("matrix is not {n}x{n}")));
        }
        Ok(GradedMatrix { labels, entries })
    }

    pub fn identity(labels: Vec<Multipartition>) -> Self {
        let n = labels.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        GradedMatrix { labels, entries }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Multipartition] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let entries = (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect();
        GradedMatrix { labels: self.labels.clone(), entries }
    }

    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.labels != other.labels {
            return Err(Error::SizeMismatch("matrices have different labels".into()));
        }
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(LaurentPoly::zero(), |acc, k| &acc + &(&self.entries[i][k] * &other.entries[k][j])))
                    .collect()
            })
            .collect();
        Ok(GradedMatrix { labels: self.labels.clone(), entries })
    }

    /// Evaluates every entry at `t = value`.
    pub fn at(&self, value: &Cyclotomic) -> Result<Vec<Vec<Cyclotomic>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.eval(value).ok_or_else(|| Error::Pole(value.to_string()))).collect())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, e)| i == j || e.is_zero()))
    }

    /// True if every entry lies in `N[t]`.
    pub fn is_nonnegative_polynomial(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_polynomial() && e.is_nonnegative_integral())
    }

    pub fn is_identity_at_zero(&self) -> bool {
        let n = self.size();
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, e)| e.coeff(0) == Cyclotomic::from_integer((i == j) as i64))
        }) && n == self.entries.len()
    }
}

fn check_sizes(ms: &[&Multipartition]) -> Result<(usize, usize)> {
    let (ell, n) = (ms[0].ell(), ms[0].size());
    if ms.iter().any(|m| m.ell() != ell || m.size() != n) {
        let names: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        return Err(Error::SizeMismatch(format!("{} do not label the same group", names.join(", "))));
    }
    Ok((ell, n))
}

/// Multiplicity of `nu` in `mu (x) lambda`:
/// `sum_rho z_rho^{-1} chi^mu_rho chi^lambda_rho conj(chi^nu_rho)`.
pub fn kronecker(mu: &Multipartition, lambda: &Multipartition, nu: &Multipartition) -> Result<u64> {
    let (ell, n) = check_sizes(&[mu, lambda, nu])?;
    let table = wreath_char_table(ell, n);
    let (a, b, c) = (table.index_of(mu).unwrap(), table.index_of(lambda).unwrap(), table.index_of(nu).unwrap());
    kronecker_by_index(&table, a, b, c)
}

fn kronecker_by_index(table: &crate::wreath::WreathCharTable, a: usize, b: usize, c: usize) -> Result<u64> {
    let v = table.values();
    let total = table.labels().iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, rho)| {
        let prod = &(&v[a][k] * &v[b][k]) * &v[c][k].conj();
        &acc + &prod.scale(&Rational::new(1.into(), (rho.z() as i64).into()))
    });
    total
        .to_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| u64::try_from(r.to_integer()).ok())
        .ok_or_else(|| Error::Inconsistent(format!("tensor multiplicity {total} is not a natural number")))
}

fn build_rows<F>(count: usize, parallel: bool, row: F) -> Result<Vec<Vec<LaurentPoly>>>
where
    F: Fn(usize) -> Result<Vec<LaurentPoly>> + Sync,
{
    if parallel {
        (0..count).into_par_iter().map(&row).collect()
    } else {
        (0..count).map(row).collect()
    }
}

/// `[M(lambda)] = sum_mu f_mu(t) [mu (x) lambda]`.
pub fn c_delta_with(ell: usize, n: usize, parallel: bool) -> Result<GradedMatrix> {
    let table = wreath_char_table(ell, n);
    let labels = table.labels().to_vec();
    let fakes: Vec<LaurentPoly> = labels.iter().map(fake_degree_wreath).collect();
    let size = labels.len();
    let entries = build_rows(size, parallel, |lam| {
        (0..size)
            .map(|nu| {
                let mut acc = LaurentPoly::zero();
                for (mu, f) in fakes.iter().enumerate() {
                    let k = kronecker_by_index(&table, mu, lam, nu)?;
                    if k > 0 {
                        acc = &acc + &f.scale(&Cyclotomic::from_integer(k as i64));
                    }
                }
                Ok(acc)
            })
            .collect()
    })?;
    GradedMatrix::new(labels, entries)
}

pub fn c_delta(ell: usize, n: usize) -> Result<GradedMatrix> {
    c_delta_with(ell, n, false)
}

/// `f_lambda(t) / t^{b(lambda)}`.
pub fn fake_degree_reduced(lambda: &Multipartition) -> LaurentPoly {
    fake_degree_wreath(lambda).shift(-(lambda.b() as i64))
}

/// Diagonal matrix of reduced fake degrees.
pub fn d_delta(ell: usize, n: usize) -> GradedMatrix {
    let labels = multipartitions_of(ell, n);
    let size = labels.len();
    let entries = (0..size)
        .map(|i| {
            (0..size).map(|j| if i == j { fake_degree_reduced(&labels[i]) } else { LaurentPoly::zero() }).collect()
        })
        .collect();
    GradedMatrix { labels, entries }
}

/// `C_L = D_Delta^{-1} C_Delta`, by exact division of each row.
pub fn c_l_from(delta: &GradedMatrix) -> Result<GradedMatrix> {
    let entries = delta
        .labels
        .iter()
        .zip(&delta.entries)
        .map(|(lam, row)| {
            let d = fake_degree_reduced(lam);
            row.iter()
                .map(|e| {
                    let q = e
                        .div_exact(&d)
                        .ok_or_else(|| Error::Inconsistent(format!("row {lam} of C_Delta is not divisible by {d}")))?;
                    if !(q.is_polynomial() && q.is_nonnegative_integral()) {
                        return Err(Error::Inconsistent(format!("C_L entry {q} in row {lam} is not in N[t]")));
                    }
                    Ok(q)
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    GradedMatrix::new(delta.labels.clone(), entries)
}

pub fn c_l(ell: usize, n: usize) -> Result<GradedMatrix> {
    c_l_from(&c_delta(ell, n)?)
}

/// Kostka matrix arranged like `C_L`: entry `(lambda, mu)` is `K_{mu lambda}(t, t)`.
pub fn kostka_matrix(ell: usize, n: usize, route: KostkaRoute, parallel: bool) -> Result<GradedMatrix> {
    let labels = multipartitions_of(ell, n);
    let entries = build_rows(labels.len(), parallel, |i| kostka_column(&labels[i], route))?;
    GradedMatrix::new(labels, entries)
}

/// Graded character of `L(lambda)`: multiplicities `[L(lambda) : mu]^gr` and the
/// symmetric function `G_lambda(x; t, t) = t^{b(lambda*)} H_lambda(x; t, 1/t)`.
#[derive(Clone, Debug)]
pub struct GradedCharacter {
    pub label: Multipartition,
    pub multiplicities: Vec<(Multipartition, LaurentPoly)>,
    pub symmetric_function: MultiSymFunc,
}

impl GradedCharacter {
    pub fn multiplicity(&self, mu: &Multipartition) -> Option<&LaurentPoly> {
        self.multiplicities.iter().find(|(m, _)| m == mu).map(|(_, k)| k)
    }

    /// `sum_mu dim(mu) * [L : mu]^gr` evaluated at `t = 1`.
    pub fn total_dimension(&self) -> Result<u64> {
        let table = wreath_char_table(self.label.ell(), self.label.size());
        let mut total = 0;
        for (mu, k) in &self.multiplicities {
            let v = k.eval(&Cyclotomic::one()).and_then(|c| c.to_rational()).ok_or_else(|| Error::Pole("1".into()))?;
            let v = u64::try_from(v.to_integer()).map_err(|_| Error::Inconsistent(format!("negative multiplicity at {mu}")))?;
            total += table.dimension(mu)? * v;
        }
        Ok(total)
    }
}

pub fn graded_character_l(lambda: &Multipartition) -> Result<GradedCharacter> {
    let g = g_wreath(lambda).convert(MultiBasis::MultiSchur);
    let multiplicities = multipartitions_of(lambda.ell(), lambda.size())
        .into_iter()
        .map(|mu| {
            let k = g.laurent_coeff(&mu)?;
            Ok((mu, k))
        })
        .collect::<Result<_>>()?;
    Ok(GradedCharacter { label: lambda.clone(), multiplicities, symmetric_function: g })
}
