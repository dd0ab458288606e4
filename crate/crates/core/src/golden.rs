//! Reference tables for `B2 = C_2 wr S_2`, stored as plain text under `data/`.

use crate::cherednik::GradedMatrix;
use crate::combinatorics::Multipartition;
use crate::error::{Error, Result};
use crate::scalars::LaurentPoly;

const B2_CDELTA: &str = include_str!("../data/b2_cdelta.txt");
const B2_CL: &str = include_str!("../data/b2_cl.txt");
const B2_FBAR: &str = include_str!("../data/b2_fbar.txt");

fn content_lines(src: &str) -> impl Iterator<Item = &str> {
    src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a `labels: ...` line followed by one whitespace-separated row per label.
pub fn parse_matrix(src: &str) -> Result<GradedMatrix> {
    let mut lines = content_lines(src);
    let header = lines
        .next()
        .and_then(|l| l.strip_prefix("labels:"))
        .ok_or_else(|| Error::Parse("missing 'labels:' line".into()))?;
    let labels = header.split_whitespace().map(str::parse).collect::<Result<Vec<Multipartition>>>()?;
    let entries = lines
        .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<LaurentPoly>>>())
        .collect::<Result<Vec<_>>>()?;
    GradedMatrix::new(labels, entries)
}

pub fn b2_c_delta() -> GradedMatrix {
    parse_matrix(B2_CDELTA).expect("embedded table is well formed")
}

pub fn b2_c_l() -> GradedMatrix {
    parse_matrix(B2_CL).expect("embedded table is well formed")
}

pub fn b2_fbar() -> Vec<(Multipartition, LaurentPoly)> {
    content_lines(B2_FBAR)
        .map(|l| {
            let (m, f) = l.split_once(' ').expect("label and polynomial");
            (m.parse().expect("label"), f.trim().parse().expect("polynomial"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::{c_delta, c_l, d_delta, fake_degree_reduced};
    use crate::combinatorics::multipartitions_of;

    #[test]
    fn golden_tables_parse() {
        assert_eq!(b2_c_delta().size(), 5);
        assert_eq!(b2_c_l().labels(), multipartitions_of(2, 2).as_slice());
        assert_eq!(b2_fbar().len(), 5);
    }

    #[test]
    fn computed_tables_match() {
        assert_eq!(c_delta(2, 2).unwrap(), b2_c_delta());
        assert_eq!(c_l(2, 2).unwrap(), b2_c_l());
        let d = d_delta(2, 2);
        for (i, (m, f)) in b2_fbar().iter().enumerate() {
            assert_eq!(fake_degree_reduced(m), *f);
            assert_eq!(d.entry(i, i), f);
        }
    }
}
