//! Symmetric group characters by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};

/// Full character table of `S_n`, rows indexed by irreducibles and columns
/// by cycle types, both in `partitions_of` order.
#[derive(Debug)]
pub struct SnCharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl SnCharTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| partitions.iter().map(|mu| mn_value(lam, mu.parts(), &mut memo)).collect())
            .collect();
        SnCharTable { n, partitions, index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `chi^lambda` at cycle type `mu`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let mismatch = || Error::SizeMismatch(format!("{lambda} and {mu} are not both of size {}", self.n));
        let i = self.index_of(lambda).ok_or_else(mismatch)?;
        let j = self.index_of(mu).ok_or_else(mismatch)?;
        Ok(self.values[i][j])
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }
}

/// Border strips of size `r` removable from `lambda`, with their signs.
pub(crate) fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.length();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[k] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

fn mn_value(lambda: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_rim_hooks(lambda, r).iter().map(|(nu, sign)| sign * mn_value(nu, rest, memo)).sum();
    memo.insert(key, v);
    v
}

type TableCache = RwLock<HashMap<usize, Arc<SnCharTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, memoized character table of `S_n`.
pub fn sn_char_table(n: usize) -> Arc<SnCharTable> {
    if let Some(t) = table_cache().read().expect("character cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(SnCharTable::build(n));
    let mut w = table_cache().write().expect("character cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

/// `chi^lambda_mu`.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu} have different sizes")));
    }
    sn_char_table(lambda.size()).value(lambda, mu)
}
