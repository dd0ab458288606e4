//! Brute-force Kostka–Macdonald coefficients at q = t for the symmetric group,
//! from semistandard tableaux over the doubled alphabet `x_i t^k`.

#![allow(dead_code)]

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of SSYT of `shape` with letters `(i, k)`, ordered lexicographically,
/// whose `i`-content equals `content`, graded by the sum of the `k`, up to degree `d`.
pub fn tableau_series(shape: &[usize], content: &[usize], d: usize) -> Vec<i64> {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut filling: Vec<Vec<(usize, usize)>> = shape.iter().map(|&len| vec![(0, 0); len]).collect();
    let mut used = vec![0usize; content.len()];
    let mut series = vec![0i64; d + 1];
    fill(0, &cells, &mut filling, &mut used, content, 0, d, &mut series);
    series
}

#[allow(clippy::too_many_arguments)]
fn fill(
    pos: usize,
    cells: &[(usize, usize)],
    filling: &mut Vec<Vec<(usize, usize)>>,
    used: &mut Vec<usize>,
    content: &[usize],
    degree: usize,
    d: usize,
    series: &mut Vec<i64>,
) {
    if pos == cells.len() {
        series[degree] += 1;
        return;
    }
    let (r, c) = cells[pos];
    for i in 0..content.len() {
        if used[i] == content[i] {
            continue;
        }
        for k in 0..=(d - degree) {
            let letter = (i, k);
            if c > 0 && letter < filling[r][c - 1] {
                continue;
            }
            if r > 0 && letter <= filling[r - 1][c] {
                continue;
            }
            filling[r][c] = letter;
            used[i] += 1;
            fill(pos + 1, cells, filling, used, content, degree + k, d, series);
            used[i] -= 1;
        }
    }
}

fn hook_product(shape: &[usize]) -> Vec<i64> {
    let mut poly = vec![1i64];
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let below = shape.iter().skip(r + 1).filter(|&&l| l > c).count();
            let h = len - c + below;
            let mut next = vec![0i64; poly.len() + h];
            for (e, &a) in poly.iter().enumerate() {
                next[e] += a;
                next[e + h] -= a;
            }
            poly = next;
        }
    }
    poly
}

fn truncated_product(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; d + 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if i + j <= d {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// For each `lambda` of `n`, the Schur coefficients of `H_lambda(t) s_lambda[X/(1-t)]`,
/// as coefficient vectors in `t` indexed like `partitions(n)`.
pub fn gordon_rows(n: usize) -> Vec<(Vec<usize>, Vec<Vec<i64>>)> {
    let d = 2 * n * n + n;
    let parts = partitions(n);
    let kostka: Vec<Vec<i64>> = parts.iter().map(|nu| parts.iter().map(|mu| tableau_series(nu, mu, 0)[0]).collect()).collect();
    parts
        .iter()
        .map(|lam| {
            let hooks = hook_product(lam);
            let monomial: Vec<Vec<i64>> =
                parts.iter().map(|mu| truncated_product(&tableau_series(lam, mu, d), &hooks, d)).collect();
            // partitions(n) lists every nu dominating mu before mu
            let mut schur: Vec<Vec<i64>> = Vec::with_capacity(parts.len());
            for (m, coeff) in monomial.iter().enumerate() {
                let mut c = coeff.clone();
                for (v, prev) in schur.iter().enumerate() {
                    for e in 0..=d {
                        c[e] -= prev[e] * kostka[v][m];
                    }
                }
                schur.push(c);
            }
            (lam.clone(), schur)
        })
        .collect()
}
