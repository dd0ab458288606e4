//! On-disk cache of wreath character tables.
//!
//! Layout (`chartable_l{l}_n{n}.json`):
//!
//! ```text
//! { "ell": 2, "n": 2,
//!   "classes": [{"multipartition": "([2],[])", "z": 4}, ...],
//!   "irreducibles": ["([2],[])", ...],
//!   "values": [[["1"], ["-1", "0", "1/2"], ...], ...] }
//! ```
//!
//! Each value is its coefficient vector with respect to `1, zeta_l, zeta_l^2, ...`
//! reduced modulo the `l`-th cyclotomic polynomial, entries as rational strings.
//! Row `i` of `values` is the irreducible `irreducibles[i]`, column `j` the class
//! `classes[j]`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{multipartitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Rational};
use crate::wreath::{wreath_char_table, WreathCharTable};

#[derive(Serialize, Deserialize)]
struct ClassEntry {
    multipartition: String,
    z: u64,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    ell: usize,
    n: usize,
    classes: Vec<ClassEntry>,
    irreducibles: Vec<String>,
    values: Vec<Vec<Vec<String>>>,
}

fn encode(c: &Cyclotomic, ell: usize) -> Vec<String> {
    c.coeffs_in(ell as u32).expect("value lies in Q(zeta_l)").iter().map(|r| r.to_string()).collect()
}

fn decode(v: &[String], ell: usize) -> Result<Cyclotomic> {
    let coeffs = v
        .iter()
        .map(|s| s.parse::<Rational>().map_err(|_| Error::Cache(format!("bad rational '{s}'"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cyclotomic::from_coeffs(ell as u32, coeffs))
}

pub fn table_to_json(table: &WreathCharTable) -> String {
    let ell = table.ell();
    let file = TableFile {
        ell,
        n: table.n(),
        classes: table.labels().iter().map(|m| ClassEntry { multipartition: m.to_string(), z: m.z() }).collect(),
        irreducibles: table.labels().iter().map(|m| m.to_string()).collect(),
        values: table.values().iter().map(|row| row.iter().map(|c| encode(c, ell)).collect()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

/// Parses and validates a cached table: labels, orders and shape must match
/// a freshly enumerated group and the rows must be orthonormal.
pub fn table_from_json(src: &str) -> Result<WreathCharTable> {
    let file: TableFile = serde_json::from_str(src).map_err(|e| Error::Cache(e.to_string()))?;
    let (ell, n) = (file.ell, file.n);
    if ell == 0 {
        return Err(Error::Cache("ell must be positive".into()));
    }
    let labels = multipartitions_of(ell, n);
    let parse_all = |v: &[String]| v.iter().map(|s| s.parse::<Multipartition>()).collect::<Result<Vec<_>>>();
    let classes = parse_all(&file.classes.iter().map(|c| c.multipartition.clone()).collect::<Vec<_>>())?;
    let irreducibles = parse_all(&file.irreducibles)?;
    if classes != labels || irreducibles != labels {
        return Err(Error::Cache(format!("labels do not match the {ell}-multipartitions of {n}")));
    }
    if file.classes.iter().zip(&labels).any(|(c, m)| c.z != m.z()) {
        return Err(Error::Cache("centralizer orders do not match".into()));
    }
    if file.values.len() != labels.len() || file.values.iter().any(|r| r.len() != labels.len()) {
        return Err(Error::Cache("value matrix has the wrong shape".into()));
    }
    let values = file
        .values
        .iter()
        .map(|row| row.iter().map(|v| decode(v, ell)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let table = WreathCharTable::from_parts(ell, n, labels, values);
    for (a, ra) in table.values().iter().enumerate() {
        for (b, rb) in table.values().iter().enumerate() {
            if table.inner_product(ra, rb) != Cyclotomic::from_integer((a == b) as i64) {
                return Err(Error::Cache("cached rows are not orthonormal".into()));
            }
        }
    }
    Ok(table)
}

pub fn cache_path(dir: &Path, ell: usize, n: usize) -> PathBuf {
    dir.join(format!("chartable_l{ell}_n{n}.json"))
}

/// Loads the table from `dir` when present and valid, otherwise computes it
/// and writes it there. Either way the result is the shared in-memory table.
pub fn load_or_compute(ell: usize, n: usize, dir: Option<&Path>) -> Result<Arc<WreathCharTable>> {
    let Some(dir) = dir else {
        return Ok(wreath_char_table(ell, n));
    };
    let path = cache_path(dir, ell, n);
    if let Ok(src) = fs::read_to_string(&path) {
        if let Ok(table) = table_from_json(&src) {
            return Ok(crate::wreath::install_table(table));
        }
    }
    let table = wreath_char_table(ell, n);
    fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    fs::write(&path, table_to_json(&table)).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        for ell in 1..=4 {
            for n in 0..=3 {
                let table = wreath_char_table(ell, n);
                let json = table_to_json(&table);
                let back = table_from_json(&json).unwrap();
                assert_eq!(back, *table);
                assert_eq!(table_to_json(&back), json);
            }
        }
    }

    #[test]
    fn rejects_tampering() {
        let json = table_to_json(&wreath_char_table(2, 2));
        let bad = json.replacen("\"-1\"", "\"-2\"", 1);
        assert!(table_from_json(&bad).is_err());
        assert!(table_from_json("{}").is_err());
    }

    #[test]
    fn writes_and_reloads() {
        let dir = std::env::temp_dir().join(format!("wreathmac-cache-{}", std::process::id()));
        let first = load_or_compute(3, 2, Some(&dir)).unwrap();
        assert!(cache_path(&dir, 3, 2).exists());
        let second = load_or_compute(3, 2, Some(&dir)).unwrap();
        assert_eq!(*first, *second);
        fs::remove_dir_all(&dir).ok();
    }
}
