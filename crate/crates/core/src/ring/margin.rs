//! Compositions and the margin matrices `M^{β,γ}` indexing the terms of the
//! geometric lemma.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};

/// An ordered partition `(n_1, ..., n_r)` of a degree; parts may be zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }
}

impl Deref for Composition {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition(parts)
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(parts: [u32; N]) -> Self {
        Composition(parts.to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Non-negative integer matrix with prescribed row and column sums.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MarginMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl MarginMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }
}

/// All matrices with row sums `beta` and column sums `gamma`, each exactly
/// once, in lexicographic order of their row-major entries.
pub fn margin_matrices(beta: &Composition, gamma: &Composition) -> Result<Vec<MarginMatrix>> {
    if beta.total() != gamma.total() {
        return Err(Error::MarginMismatch(beta.total(), gamma.total()));
    }
    let (rows, cols) = (beta.len(), gamma.len());
    let mut out = Vec::new();
    if rows == 0 || cols == 0 {
        // only the empty matrix, and only when both margins are empty or zero
        if beta.total() == 0 {
            out.push(MarginMatrix { rows, cols, entries: vec![0; rows * cols] });
        }
        return Ok(out);
    }
    let mut entries = vec![0; rows * cols];
    let mut row_rem = beta.to_vec();
    let mut col_rem = gamma.to_vec();
    fill(0, rows, cols, &mut entries, &mut row_rem, &mut col_rem, &mut out);
    Ok(out)
}

fn fill(
    cell: usize,
    rows: usize,
    cols: usize,
    entries: &mut [u32],
    row_rem: &mut [u32],
    col_rem: &mut [u32],
    out: &mut Vec<MarginMatrix>,
) {
    if cell == rows * cols {
        if col_rem.iter().all(|&c| c == 0) {
            out.push(MarginMatrix { rows, cols, entries: entries.to_vec() });
        }
        return;
    }
    let (i, j) = (cell / cols, cell % cols);
    let hi = row_rem[i].min(col_rem[j]);
    let lo = if j + 1 == cols { row_rem[i] } else { 0 };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        entries[cell] = v;
        row_rem[i] -= v;
        col_rem[j] -= v;
        fill(cell + 1, rows, cols, entries, row_rem, col_rem, out);
        row_rem[i] += v;
        col_rem[j] += v;
    }
    entries[cell] = 0;
}
