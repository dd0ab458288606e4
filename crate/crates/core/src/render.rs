//! Text, JSON and LaTeX output of the computed tables.

use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cherednik::{fake_degree_reduced, GradedMatrix};
use crate::combinatorics::Multipartition;
use crate::error::{Error, Result};
use crate::scalars::LaurentPoly;
use crate::wreath::{fake_degree_wreath, WreathCharTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format '{s}' (expected text, json or latex)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    CDelta,
    DDelta,
    CL,
    Kostka,
}

impl MatrixKind {
    fn title(self) -> &'static str {
        match self {
            MatrixKind::CDelta => "C_Delta",
            MatrixKind::DDelta => "D_Delta",
            MatrixKind::CL => "C_L",
            MatrixKind::Kostka => "K(t,t)",
        }
    }

    fn latex_title(self) -> &'static str {
        match self {
            MatrixKind::CDelta => "C_\\Delta",
            MatrixKind::DDelta => "D_\\Delta",
            MatrixKind::CL => "C_L",
            MatrixKind::Kostka => "K(t,t)",
        }
    }

    fn row_prefix(self) -> &'static str {
        match self {
            MatrixKind::CDelta => "M",
            MatrixKind::DDelta => "",
            MatrixKind::CL | MatrixKind::Kostka => "L",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    kind: MatrixKind,
    ell: usize,
    n: usize,
    labels: Vec<String>,
    rows: Vec<Vec<String>>,
}

fn row_label(kind: MatrixKind, m: &Multipartition) -> String {
    match kind.row_prefix() {
        "" => m.to_string(),
        p => format!("{p}({m})"),
    }
}

fn group_of(m: &GradedMatrix) -> (usize, usize) {
    m.labels().first().map(|l| (l.ell(), l.size())).unwrap_or((1, 0))
}

fn text_grid(title: &str, header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let first = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..header.len())
        .map(|j| rows.iter().map(|(_, r)| r[j].len()).chain([header[j].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    writeln!(out, "{title}").unwrap();
    let mut line = format!("{:first$}", "");
    for (h, w) in header.iter().zip(&widths) {
        write!(line, "  {h:<w$}").unwrap();
    }
    writeln!(out, "{}", line.trim_end()).unwrap();
    for (label, r) in rows {
        let mut line = format!("{label:first$}");
        for (e, w) in r.iter().zip(&widths) {
            write!(line, "  {e:<w$}").unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

fn latex_array(title: &str, header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut out = String::new();
    writeln!(out, "% {title}").unwrap();
    writeln!(out, "\\begin{{array}}{{l||{}|}}", vec!["r"; header.len()].join("|")).unwrap();
    writeln!(out, "   & {} \\\\", header.join(" & ")).unwrap();
    writeln!(out, "  \\hline\\hline").unwrap();
    for (label, r) in rows {
        writeln!(out, "  {label} & {} \\\\", r.join(" & ")).unwrap();
        writeln!(out, "  \\hline").unwrap();
    }
    writeln!(out, "\\end{{array}}").unwrap();
    out
}

pub fn render_matrix(m: &GradedMatrix, kind: MatrixKind, format: Format) -> String {
    let (ell, n) = group_of(m);
    match format {
        Format::Text => {
            let header: Vec<String> = m.labels().iter().map(|l| l.to_string()).collect();
            let rows: Vec<(String, Vec<String>)> = m
                .labels()
                .iter()
                .zip(m.rows())
                .map(|(l, r)| (row_label(kind, l), r.iter().map(|e| e.to_string()).collect()))
                .collect();
            text_grid(&format!("{} (l={ell}, n={n})", kind.title()), &header, &rows)
        }
        Format::Json => matrix_to_json(m, kind),
        Format::Latex => {
            let header: Vec<String> = m.labels().iter().map(|l| l.to_latex()).collect();
            let rows: Vec<(String, Vec<String>)> = m
                .labels()
                .iter()
                .zip(m.rows())
                .map(|(l, r)| {
                    let label = match kind.row_prefix() {
                        "" => l.to_latex(),
                        p => format!("{p}({})", l.to_latex()),
                    };
                    (label, r.iter().map(LaurentPoly::to_latex).collect())
                })
                .collect();
            latex_array(&format!("{} for l={ell}, n={n}", kind.latex_title()), &header, &rows)
        }
    }
}

pub fn matrix_to_json(m: &GradedMatrix, kind: MatrixKind) -> String {
    let (ell, n) = group_of(m);
    let doc = MatrixDoc {
        kind,
        ell,
        n,
        labels: m.labels().iter().map(|l| l.to_string()).collect(),
        rows: m.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Inverse of [`matrix_to_json`] for matrices with rational coefficients.
pub fn matrix_from_json(src: &str) -> Result<(MatrixKind, GradedMatrix)> {
    let doc: MatrixDoc = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    let labels = doc.labels.iter().map(|s| s.parse()).collect::<Result<Vec<Multipartition>>>()?;
    let rows = doc
        .rows
        .iter()
        .map(|r| r.iter().map(|e| e.parse()).collect::<Result<Vec<LaurentPoly>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((doc.kind, GradedMatrix::new(labels, rows)?))
}

#[derive(Serialize)]
struct FakeDegreeDoc {
    ell: usize,
    n: usize,
    entries: Vec<FakeDegreeEntry>,
}

#[derive(Serialize)]
struct FakeDegreeEntry {
    label: String,
    b: usize,
    fake_degree: String,
    reduced: String,
}

/// Fake degrees `f`, their trailing degrees `b` and the shifted `f / t^b`.
pub fn render_fake_degrees(labels: &[Multipartition], format: Format) -> String {
    let (ell, n) = labels.first().map(|l| (l.ell(), l.size())).unwrap_or((1, 0));
    let data: Vec<(String, usize, LaurentPoly, LaurentPoly)> =
        labels.iter().map(|l| (l.to_string(), l.b(), fake_degree_wreath(l), fake_degree_reduced(l))).collect();
    match format {
        Format::Text => {
            let header = ["b".to_string(), "f".to_string(), "f/t^b".to_string()];
            let rows: Vec<(String, Vec<String>)> = data
                .iter()
                .map(|(l, b, f, r)| (l.clone(), vec![b.to_string(), f.to_string(), r.to_string()]))
                .collect();
            text_grid(&format!("fake degrees (l={ell}, n={n})"), &header, &rows)
        }
        Format::Json => {
            let doc = FakeDegreeDoc {
                ell,
                n,
                entries: data
                    .iter()
                    .map(|(l, b, f, r)| FakeDegreeEntry { label: l.clone(), b: *b, fake_degree: f.to_string(), reduced: r.to_string() })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Latex => {
            let header = ["b".to_string(), "f".to_string(), "\\bar f".to_string()];
            let rows: Vec<(String, Vec<String>)> = labels
                .iter()
                .zip(&data)
                .map(|(l, (_, b, f, r))| (l.to_latex(), vec![b.to_string(), f.to_latex(), r.to_latex()]))
                .collect();
            latex_array(&format!("fake degrees for l={ell}, n={n}"), &header, &rows)
        }
    }
}

pub fn render_char_table(table: &WreathCharTable, format: Format) -> String {
    let (ell, n) = (table.ell(), table.n());
    match format {
        Format::Json => crate::cache::table_to_json(table),
        Format::Text => {
            let header: Vec<String> = table.labels().iter().map(|l| l.to_string()).collect();
            let rows: Vec<(String, Vec<String>)> = table
                .labels()
                .iter()
                .zip(table.values())
                .map(|(l, r)| (l.to_string(), r.iter().map(|c| c.to_string()).collect()))
                .collect();
            let mut out = text_grid(&format!("character table (l={ell}, n={n}), z = zeta_{ell}"), &header, &rows);
            let zs: Vec<String> = table.labels().iter().map(|l| l.z().to_string()).collect();
            writeln!(out, "centralizer orders: {}", zs.join(" ")).unwrap();
            out
        }
        Format::Latex => {
            let header: Vec<String> = table.labels().iter().map(|l| l.to_latex()).collect();
            let rows: Vec<(String, Vec<String>)> = table
                .labels()
                .iter()
                .zip(table.values())
                .map(|(l, r)| (format!("\\chi^{{{}}}", l.to_latex()), r.iter().map(|c| c.to_string().replace('z', "\\zeta")).collect()))
                .collect();
            latex_array(&format!("character table for l={ell}, n={n}"), &header, &rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::c_l;

    #[test]
    fn json_round_trip() {
        for (ell, n) in [(1, 3), (2, 2), (3, 2)] {
            let m = c_l(ell, n).unwrap();
            let json = render_matrix(&m, MatrixKind::CL, Format::Json);
            let (kind, back) = matrix_from_json(&json).unwrap();
            assert_eq!(kind, MatrixKind::CL);
            assert_eq!(back, m);
        }
    }

    #[test]
    fn text_layout() {
        let text = render_matrix(&c_l(2, 2).unwrap(), MatrixKind::CL, Format::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "C_L (l=2, n=2)");
        assert!(lines[1].trim_start().starts_with("([2],[])"));
        let mixed: Vec<&str> = lines[4].split_whitespace().collect();
        assert_eq!(mixed, ["L(([1],[1]))", "t", "t", "t^2+1", "t", "t"]);
    }

    #[test]
    fn latex_layout() {
        let tex = render_matrix(&c_l(2, 2).unwrap(), MatrixKind::CDelta, Format::Latex);
        assert!(tex.contains("\\begin{array}{l||r|r|r|r|r|}"));
        assert!(tex.contains("( ( 1, 1 ), \\emptyset )"));
        assert!(tex.contains("M(( ( 2 ), \\emptyset )) & 1 & t^{2}"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("latex".parse::<Format>().unwrap(), Format::Latex);
        assert!("yaml".parse::<Format>().is_err());
    }
}
