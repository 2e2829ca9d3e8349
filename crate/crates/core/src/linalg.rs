//! Dense matrices over GF(q²): rank and the k-subset column-minor MDS check.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Default cap on the number of k-column subsets examined by [`mds_column_check`].
pub const DEFAULT_MINOR_BUDGET: u128 = 1_000_000;

/// Row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix<'f> {
    field: &'f Field,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl<'f> CodeMatrix<'f> {
    pub fn zeros(field: &'f Field, rows: usize, cols: usize) -> Self {
        CodeMatrix {
            field,
            rows,
            cols,
            entries: vec![Elem::Zero; rows * cols],
        }
    }

    pub fn from_rows(field: &'f Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for &x in row {
                entries.push(field.check(x)?);
            }
        }
        Ok(CodeMatrix {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn identity(field: &'f Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m: Vec<Vec<Elem>> = self.row_iter().map(<[Elem]>::to_vec).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = f.inv(m[rank][c]).expect("pivot is nonzero");
            for x in m[rank].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                let factor = row[c];
                if r != rank && !factor.is_zero() {
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// True iff every `rows`-subset of columns of `g` is nonsingular.
///
/// Subsets are visited depth-first in lexicographic order. Each level reduces
/// one new column against the columns already chosen, so a prefix shared by
/// many subsets is eliminated once. Fails with [`Error::BudgetExceeded`] when
/// C(n, k) exceeds `budget`.
pub fn mds_column_check(g: &CodeMatrix<'_>, budget: u128) -> Result<bool> {
    let (k, n) = (g.rows(), g.cols());
    if k == 0 || k > n {
        return Err(Error::params("column check needs 1 <= rows <= cols"));
    }
    let needed = binomial(n as u64, k as u64);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let columns: Vec<Vec<Elem>> = (0..n)
        .map(|c| (0..k).map(|r| g.get(r, c)).collect())
        .collect();
    let mut search = MinorSearch {
        field: g.field(),
        k,
        columns,
        basis: Vec::with_capacity(k),
    };
    Ok(search.extend(0))
}

struct MinorSearch<'a> {
    field: &'a Field,
    k: usize,
    columns: Vec<Vec<Elem>>,
    /// Reduced chosen columns, each normalized to 1 at its pivot row.
    basis: Vec<(usize, Vec<Elem>)>,
}

impl MinorSearch<'_> {
    fn extend(&mut self, start: usize) -> bool {
        let depth = self.basis.len();
        if depth == self.k {
            return true;
        }
        // leave room for the remaining k - depth - 1 columns
        let last = self.columns.len() - (self.k - depth);
        for c in start..=last {
            let Some(reduced) = self.reduce(c) else {
                return false;
            };
            self.basis.push(reduced);
            let ok = self.extend(c + 1);
            self.basis.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn reduce(&self, c: usize) -> Option<(usize, Vec<Elem>)> {
        let f = self.field;
        let mut v = self.columns[c].clone();
        for (pivot, b) in &self.basis {
            let factor = v[*pivot];
            if !factor.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((pivot, v))
    }
}
