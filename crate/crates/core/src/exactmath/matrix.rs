//! Dense matrices over the exact rationals: rank, kernel, and incremental
//! row ranks via plain rational Gaussian elimination.
//!
//! Pivot choice is always the first nonzero entry in row-major order, so
//! every result is reproducible.

use num_traits::{One, Zero};

use super::rational::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_antisymmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != -self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Exact rank and a basis of the kernel, from the reduced row echelon
    /// form. Every returned vector satisfies `M v = 0` exactly; for the
    /// zero matrix the kernel basis is the standard basis.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let mut a: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut prow = 0usize;

        for col in 0..self.cols {
            if prow >= self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(prow, r);
            let pivot = a[prow][col].clone();
            for entry in a[prow][col..].iter_mut() {
                if !entry.is_zero() {
                    *entry = &*entry / &pivot;
                }
            }
            for r2 in 0..self.rows {
                if r2 == prow || a[r2][col].is_zero() {
                    continue;
                }
                let factor = a[r2][col].clone();
                let (pivot_row, target_row) = if prow < r2 {
                    let (head, tail) = a.split_at_mut(r2);
                    (&head[prow], &mut tail[0])
                } else {
                    let (head, tail) = a.split_at_mut(prow);
                    (&tail[0], &mut head[r2])
                };
                for (t, p) in target_row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !p.is_zero() {
                        let s = p * &factor;
                        *t = &*t - &s;
                    }
                }
            }
            pivot_cols.push(col);
            prow += 1;
        }

        let rank = pivot_cols.len();
        let mut kernel = Vec::with_capacity(self.cols - rank);
        let mut col_to_pivot_row = vec![None; self.cols];
        for (r, &c) in pivot_cols.iter().enumerate() {
            col_to_pivot_row[c] = Some(r);
        }
        for free in 0..self.cols {
            if col_to_pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                if !a[r][free].is_zero() {
                    v[pc] = -a[r][free].clone();
                }
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    /// Rank via incremental row echelon (an independent path from the
    /// RREF in [`Self::rank_and_kernel`]).
    pub fn rank(&self) -> usize {
        *self.incremental_row_ranks().last().unwrap_or(&0)
    }

    /// `r_j` = rank of the submatrix formed by the first `j` rows.
    /// Consecutive values differ by 0 or 1.
    pub fn incremental_row_ranks(&self) -> Vec<usize> {
        // (pivot column, normalized reduced row), kept sorted by column.
        let mut pivots: Vec<(usize, Vec<Rat>)> = Vec::new();
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut v = self.row(r).to_vec();
            for (pc, pr) in &pivots {
                if v[*pc].is_zero() {
                    continue;
                }
                let f = v[*pc].clone();
                for (t, p) in v[*pc..].iter_mut().zip(&pr[*pc..]) {
                    if !p.is_zero() {
                        let s = p * &f;
                        *t = &*t - &s;
                    }
                }
            }
            if let Some(lead) = v.iter().position(|c| !c.is_zero()) {
                let pivot = v[lead].clone();
                for item in v.iter_mut().skip(lead) {
                    if !item.is_zero() {
                        *item = &*item / &pivot;
                    }
                }
                let at = pivots.partition_point(|(pc, _)| *pc < lead);
                pivots.insert(at, (lead, v));
            }
            out.push(pivots.len());
        }
        out
    }
}
