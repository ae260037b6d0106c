//! Dimension tables of the first pages of the stratification spectral
//! sequences of M̄_{0,m} and of its good-tree part, and the E-polynomial
//! consistency check.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::SpectralError;
use crate::graph::Graph;
use crate::strata::{for_each_tree, stratum_classes, StratumClass};

fn out_of_range(what: &'static str, value: impl Into<i64>, range: &'static str) -> SpectralError {
    SpectralError::OutOfRange {
        what,
        value: value.into(),
        range,
    }
}

/// Coefficients of `∏_{k=2}^{n-2} (1 + k t)`: the Betti numbers of M_{0,n}.
pub fn betti_m0n(n: usize) -> Result<Vec<u64>, SpectralError> {
    if !(3..=12).contains(&n) {
        return Err(out_of_range("n", n as i64, "3..=12"));
    }
    Ok(betti_unchecked(n))
}

fn betti_unchecked(n: usize) -> Vec<u64> {
    let mut p = vec![1u64];
    for k in 2..n.saturating_sub(1) {
        let mut next = vec![0; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * k as u64;
        }
        p = next;
    }
    p
}

/// `dim H^j_c(M_{0,k})` for `j = 0..=2(k-3)`.
pub fn compact_betti_m0n(k: usize) -> Vec<u64> {
    let b = betti_unchecked(k);
    let top = 2 * (k - 3);
    (0..=top).map(|j| b.get(top - j).copied().unwrap_or(0)).collect()
}

/// Compactly supported Betti numbers of an open stratum `∏_v M_{0,|F(v)|}`,
/// by Künneth.
pub fn stratum_compact_betti(t: &Graph) -> Vec<u64> {
    let mut acc = vec![1u64];
    for v in 0..t.vertex_count() {
        let f = compact_betti_m0n(t.vertex_flags(v).len());
        let mut next = vec![0; acc.len() + f.len() - 1];
        for (i, &a) in acc.iter().enumerate() {
            for (j, &b) in f.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    E,
    F,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::E => "e1",
            TableKind::F => "f1",
        })
    }
}

/// One stratum class contributing to a cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellSource {
    /// Index into [`SpectralTable::classes`].
    pub class: usize,
    /// Numbered trees in the orbit.
    pub multiplicity: u64,
    /// `dim H^{p+q}_c` of one stratum.
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Cell {
    pub dim: u64,
    pub strata: Vec<CellSource>,
}

/// Cells `(p, q)`, `p = -edges`, `p + q` the compact-support degree.
#[derive(Debug, Clone)]
pub struct SpectralTable {
    pub kind: TableKind,
    /// Number of leaves `m` of the trees (`2g + 2` for F tables).
    pub m: usize,
    pub classes: Vec<StratumClass>,
    pub cells: BTreeMap<(i64, i64), Cell>,
}

impl SpectralTable {
    fn build(kind: TableKind, m: usize, classes: Vec<StratumClass>) -> Self {
        let contributions: Vec<Vec<((i64, i64), CellSource)>> = classes
            .par_iter()
            .enumerate()
            .map(|(i, c)| {
                let r = c.edge_count as i64;
                stratum_compact_betti(c.representative.graph())
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, d)| d > 0)
                    .map(|(j, d)| {
                        (
                            (-r, j as i64 + r),
                            CellSource {
                                class: i,
                                multiplicity: c.orbit_size,
                                dim: d,
                            },
                        )
                    })
                    .collect()
            })
            .collect();
        let mut cells: BTreeMap<(i64, i64), Cell> = BTreeMap::new();
        for (pq, src) in contributions.into_iter().flatten() {
            let cell = cells.entry(pq).or_default();
            cell.dim += src.multiplicity * src.dim;
            cell.strata.push(src);
        }
        SpectralTable {
            kind,
            m,
            classes,
            cells,
        }
    }

    pub fn dim(&self, p: i64, q: i64) -> u64 {
        self.cells.get(&(p, q)).map_or(0, |c| c.dim)
    }

    /// `Σ_p (-1)^{p+q} dim E₁^{p,q}` for each row `q`.
    pub fn row_euler_characteristics(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for (&(p, q), c) in &self.cells {
            let s = if (p + q) % 2 == 0 { 1 } else { -1 };
            *out.entry(q).or_insert(0) += s * c.dim as i64;
        }
        out
    }

    /// Lines `p,q,dim,strata` with strata as `class*multiplicity*dim` joined
    /// by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,dim,strata\n");
        for (&(p, q), c) in &self.cells {
            let strata: Vec<String> = c
                .strata
                .iter()
                .map(|s| format!("{}*{}*{}", s.class, s.multiplicity, s.dim))
                .collect();
            out += &format!("{p},{q},{},{}\n", c.dim, strata.join(";"));
        }
        out
    }

    /// Cells outside `1-g ≤ p ≤ 0`, `2g-1 ≤ q ≤ 4g-2`, `p+q ≥ g`; empty for
    /// E tables.
    pub fn bound_violations(&self) -> Vec<(i64, i64)> {
        if self.kind == TableKind::E {
            return Vec::new();
        }
        let g = (self.m as i64 - 2) / 2;
        self.cells
            .keys()
            .copied()
            .filter(|&(p, q)| !((1 - g..=0).contains(&p) && (2 * g - 1..=4 * g - 2).contains(&q) && p + q >= g))
            .collect()
    }
}

/// E₁ dimensions for M̄_{0,m}, weighted by numbered orbits.
pub fn e1_table(m: usize) -> Result<SpectralTable, SpectralError> {
    if !(4..=10).contains(&m) {
        return Err(out_of_range("m", m as i64, "4..=10"));
    }
    Ok(SpectralTable::build(TableKind::E, m, stratum_classes(m, None)?))
}

/// F₁ dimensions: the E₁ table of M̄_{0,2g+2} restricted to good trees.
pub fn f1_table(g: u32) -> Result<SpectralTable, SpectralError> {
    if !(2..=4).contains(&g) {
        return Err(out_of_range("g", g, "2..=4"));
    }
    let m = 2 * g as usize + 2;
    let mut good = Vec::new();
    for c in stratum_classes(m, None)? {
        if c.annotated()?.is_good() {
            good.push(c);
        }
    }
    Ok(SpectralTable::build(TableKind::F, m, good))
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `E(M_{0,k})(q) = ∏_{j=2}^{k-2} (q - j)`, low degree first.
pub fn epoly_m0n(k: usize) -> Vec<i64> {
    (2..k.saturating_sub(1)).fold(vec![1], |acc, j| poly_mul(&acc, &[-(j as i64), 1]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpolyReport {
    pub m: usize,
    /// Coefficients of `Σ_T ∏_v E(M_{0,|F(v)|})`, low degree first.
    pub poly: Vec<i64>,
    pub nonnegative: bool,
    pub palindromic: bool,
    pub degree_ok: bool,
    pub constant_one: bool,
    /// Alternating row sums of the E₁ table agree with `poly`.
    pub rows_match: bool,
    /// Agreement with `1+q` (m = 4) and `1+5q+q²` (m = 5).
    pub known_match: Option<bool>,
}

impl EpolyReport {
    pub fn passed(&self) -> bool {
        self.nonnegative
            && self.palindromic
            && self.degree_ok
            && self.constant_one
            && self.rows_match
            && self.known_match != Some(false)
    }

    pub fn show(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => c,
                1 => format!("{c}q"),
                _ => format!("{c}q^{i}"),
            });
        }
        terms.join(" + ")
    }
}

/// Sums the E-polynomials of all open strata of M̄_{0,m}, one numbered tree
/// at a time, and compares with the Euler characteristics of the E₁ rows.
pub fn stratification_epoly_check(m: usize) -> Result<EpolyReport, SpectralError> {
    if !(4..=8).contains(&m) {
        return Err(out_of_range("m", m as i64, "4..=8"));
    }
    let mut total = vec![0i64; m - 2];
    for_each_tree(m, None, |t| {
        let g = t.graph();
        let e = (0..g.vertex_count()).fold(vec![1], |acc, v| poly_mul(&acc, &epoly_m0n(g.vertex_flags(v).len())));
        for (i, c) in e.into_iter().enumerate() {
            total[i] += c;
        }
    })?;
    while total.len() > 1 && total.last() == Some(&0) {
        total.pop();
    }
    let rev: Vec<i64> = total.iter().rev().copied().collect();
    let table = e1_table(m)?;
    let rows = table.row_euler_characteristics();
    let rows_match = (0..=m as i64 - 3).all(|i| {
        let row = rows.get(&(m as i64 - 3 + i)).copied().unwrap_or(0);
        row == total.get(i as usize).copied().unwrap_or(0)
    }) && rows.keys().all(|&q| q >= m as i64 - 3 && q <= 2 * (m as i64 - 3));
    let known: Option<Vec<i64>> = match m {
        4 => Some(vec![1, 1]),
        5 => Some(vec![1, 5, 1]),
        _ => None,
    };
    Ok(EpolyReport {
        m,
        nonnegative: total.iter().all(|&c| c >= 0),
        palindromic: total == rev,
        degree_ok: total.len() == m - 2,
        constant_one: total[0] == 1,
        rows_match,
        known_match: known.map(|k| k == total),
        poly: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_small() {
        assert_eq!(betti_m0n(3).unwrap(), vec![1]);
        assert_eq!(betti_m0n(4).unwrap(), vec![1, 2]);
        assert_eq!(betti_m0n(5).unwrap(), vec![1, 5, 6]);
        for n in 4..=12 {
            let b = betti_m0n(n).unwrap();
            assert_eq!(*b.last().unwrap() as u128, crate::strata::factorial(n - 2));
        }
        assert!(betti_m0n(13).is_err());
    }

    #[test]
    fn e1_m4() {
        let t = e1_table(4).unwrap();
        assert_eq!(t.dim(0, 1), 2);
        assert_eq!(t.dim(0, 2), 1);
        assert_eq!(t.dim(-1, 1), 3);
        assert_eq!(t.cells.len(), 3);
    }

    #[test]
    fn e1_point_strata() {
        for m in 4..=7 {
            let t = e1_table(m).unwrap();
            let r = m as i64 - 3;
            let maximal: u64 = t.classes.iter().filter(|c| c.edge_count == m - 3).map(|c| c.orbit_size).sum();
            assert_eq!(t.dim(-r, r), maximal);
            assert!(t.cells.keys().all(|&(p, q)| q - p <= 2 * r));
        }
    }

    #[test]
    fn epoly_small() {
        let r4 = stratification_epoly_check(4).unwrap();
        assert_eq!(r4.poly, vec![1, 1]);
        assert!(r4.passed());
        let r5 = stratification_epoly_check(5).unwrap();
        assert_eq!(r5.poly, vec![1, 5, 1]);
        assert!(r5.passed());
        assert_eq!(r5.show(), "1 + 5q + q^2");
    }

    #[test]
    fn f1_bounds_g2() {
        let t = f1_table(2).unwrap();
        assert!(t.bound_violations().is_empty());
        assert!(t.cells.keys().all(|&(p, _)| p == 0 || p == -1));
    }
}
