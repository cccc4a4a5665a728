use serde::Serialize;

use crate::field::{Fe, Gf2h};
use crate::geometry::{Conic, DeltaSet};

/// An ordered list of polynomials of degree at most 2, each stored as the
/// coefficient vector of a conic.
#[derive(Clone, Debug, Serialize)]
pub struct LinearSystemBasis {
    pub name: String,
    pub polys: Vec<Conic>,
}

impl LinearSystemBasis {
    pub fn new(name: impl Into<String>, polys: Vec<Conic>) -> Self {
        Self { name: name.into(), polys }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Rank of the coefficient vectors.
    pub fn coefficient_rank(&self, f: &Gf2h) -> usize {
        rank(f, self.polys.iter().map(|c| c.coeffs().to_vec()).collect())
    }

    /// `Σ m_i p_i`, or `None` when it is the zero polynomial.
    pub fn combination(&self, f: &Gf2h, message: &[Fe]) -> Option<Conic> {
        let mut acc = [Fe::ZERO; 6];
        for (m, p) in message.iter().zip(&self.polys) {
            for (slot, c) in acc.iter_mut().zip(p.coeffs()) {
                *slot += f.mul(*m, c);
            }
        }
        Conic::new(acc).ok()
    }
}

/// A `k x n` matrix whose row `i` holds the values of the `i`-th basis
/// polynomial on the points of `Δ` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: Vec<Vec<Fe>>,
    n: usize,
    rank: usize,
}

impl GeneratorMatrix {
    pub fn from_rows(f: &Gf2h, rows: Vec<Vec<Fe>>) -> Self {
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged matrix");
        let rank = rank(f, rows.clone());
        Self { rows, n, rank }
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Number of rows, whether or not they are independent.
    pub fn k_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The dimension of the code actually spanned.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// `Σ m_i row_i`.
    pub fn encode(&self, f: &Gf2h, message: &[Fe]) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.n];
        for (m, row) in message.iter().zip(&self.rows) {
            if m.is_zero() {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(row) {
                *o += f.mul(*m, v);
            }
        }
        out
    }

    /// Rows as hex strings.
    pub fn dump(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(Fe::to_string).collect()).collect()
    }
}

/// Evaluates every basis polynomial on `Δ`. The true rank is kept with the
/// matrix; dependent rows are not removed.
pub fn evaluate_system(basis: &LinearSystemBasis, delta: &DeltaSet) -> GeneratorMatrix {
    let f = delta.field();
    let rows = basis
        .polys
        .iter()
        .map(|c| delta.monomials().iter().map(|m| c.eval_monomials(f, m)).collect())
        .collect();
    GeneratorMatrix::from_rows(f, rows)
}

/// Rank over GF(q) by Gaussian elimination.
pub fn rank(f: &Gf2h, mut rows: Vec<Vec<Fe>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = f.inv(rows[r][col]).expect("pivot is nonzero");
        let pivot: Vec<Fe> = rows[r].iter().map(|&v| f.mul(inv, v)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let s = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot) {
                *x += f.mul(s, p);
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
