//! Partitions, multipartitions and their statistics.
//!
//! Enumeration orders are deterministic and part of the public contract:
//! partitions come in reverse lexicographic order (`[2]` before `[1,1]`),
//! multipartitions by descending composition of sizes and then
//! componentwise in partition order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, LaurentPoly};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// A cell `(row, column)` of a Young diagram with its hook length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookDatum {
    pub cell: (usize, usize),
    pub hook_length: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_lambda = prod_i i^{a_i} a_i!`, the centralizer order in `S_n`.
    pub fn z(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| (p as u64).pow(m as u32) * factorial(m))
            .product()
    }

    /// `b(lambda) = sum_i (i - 1) lambda_i`.
    pub fn b(&self) -> usize {
        b_invariant(&self.0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn hooks(&self) -> Vec<HookDatum> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(HookDatum { cell: (i, j), hook_length: (row - j - 1) + (conj.0[j] - i - 1) + 1 });
            }
        }
        out
    }

    /// `H_lambda(t^m) = prod_{cells} (1 - t^{m h(i,j)})`.
    pub fn hook_polynomial(&self, m: usize) -> LaurentPoly {
        self.hooks().iter().fold(LaurentPoly::one(), |acc, h| {
            &acc * &LaurentPoly::one_minus(Cyclotomic::one(), (m * h.hook_length) as i64)
        })
    }

    /// Dominance order: every partial sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{self} and {other} have different sizes")));
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Concatenation of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `b(alpha) = sum_i (i - 1) alpha_i` for an arbitrary vector, 1-indexed.
pub fn b_invariant(alpha: &[usize]) -> usize {
    alpha.iter().enumerate().map(|(i, a)| i * a).sum()
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1,1]`; whitespace is ignored, `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = src
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: '{s}'")))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad part '{p}' in '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// An `l`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPartition("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(components))
    }

    /// `((n), [], ..., [])`, the label of the trivial representation.
    pub fn trivial(ell: usize, n: usize) -> Self {
        let mut comps = vec![Partition::empty(); ell];
        if n > 0 {
            comps[0] = Partition(vec![n]);
        }
        Multipartition(comps)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.0[j]
    }

    pub fn ell(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// `alpha = (|lambda^(0)|, ..., |lambda^(l-1)|)`.
    pub fn alpha(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    /// `b(alpha) + l * sum_i b(lambda^(i))`.
    pub fn b(&self) -> usize {
        b_invariant(&self.alpha()) + self.ell() * self.0.iter().map(Partition::b).sum::<usize>()
    }

    /// Centralizer order of the class `self` in `C_l wr S_n`:
    /// `prod_j z_{rho^(j)} * l^{len(rho^(j))}`.
    pub fn z(&self) -> u64 {
        let ell = self.ell() as u64;
        self.0.iter().map(|p| p.z() * ell.pow(p.length() as u32)).product()
    }

    /// `(lambda^(0), lambda^(l-1), ..., lambda^(1))`.
    pub fn dual(&self) -> Self {
        let mut comps = Vec::with_capacity(self.ell());
        comps.push(self.0[0].clone());
        comps.extend(self.0[1..].iter().rev().cloned());
        Multipartition(comps)
    }

    /// LaTeX label in the `( ( 2 ), \emptyset )` style.
    pub fn to_latex(&self) -> String {
        let comps: Vec<String> = self
            .0
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "\\emptyset".to_string()
                } else {
                    let parts: Vec<String> = p.0.iter().map(usize::to_string).collect();
                    format!("( {} )", parts.join(", "))
                }
            })
            .collect();
        format!("( {} )", comps.join(", "))
    }
}

/// Compositions of `n` into `ell` nonnegative parts, lexicographically descending.
pub fn compositions(n: usize, ell: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=rest).rev() {
            cur.push(first);
            go(rest - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if ell > 0 {
        go(n, ell, &mut Vec::new(), &mut out);
    }
    out
}

/// All `ell`-multipartitions of `n` in the documented order.
pub fn multipartitions_of(ell: usize, n: usize) -> Vec<Multipartition> {
    assert!(ell >= 1, "ell must be positive");
    let mut out = Vec::new();
    for comp in compositions(n, ell) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &k in &comp {
            let parts = partitions_of(k);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(Multipartition));
    }
    out
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses `([2],[],[1])`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = src
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("multipartition must be parenthesized: '{s}'")))?;
        let mut comps = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let close = rest.find(']').ok_or_else(|| Error::Parse(format!("unclosed bracket in '{s}'")))?;
            comps.push(rest[..=close].parse::<Partition>()?);
            rest = &rest[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(Error::Parse(format!("trailing comma in '{s}'")));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' in '{s}'")));
            }
        }
        Multipartition::new(comps)
    }
}
