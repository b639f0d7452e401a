//! Shared fixtures and independent oracles for the integration tests.
//!
//! The rank oracle here goes through minor determinants (Laplace
//! expansion), deliberately avoiding the elimination code under test.
#![allow(dead_code)] // each test target uses its own subset

use nilcortex::exactmath::{rat, Rat, RatMatrix};
use nilcortex::liealg::LieAlgebra;
use num_traits::Zero;

/// Determinant by Laplace expansion along the first column, skipping zero
/// entries. Fine for the small fixtures this file is used on.
pub fn determinant(m: &RatMatrix) -> Rat {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant needs a square matrix");
    if n == 0 {
        return rat(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Rat::zero();
    for r in 0..n {
        let pivot = m.get(r, 0);
        if pivot.is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<Rat>> = (0..n)
            .filter(|&i| i != r)
            .map(|i| (1..n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let minor = RatMatrix::from_rows(minor_rows).unwrap();
        let term = pivot * &determinant(&minor);
        if r % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Rank as the largest k with a nonsingular k x k minor.
pub fn rank_by_minors(m: &RatMatrix) -> usize {
    let max_k = m.rows().min(m.cols());
    for k in (1..=max_k).rev() {
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let sub_rows: Vec<Vec<Rat>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                let sub = RatMatrix::from_rows(sub_rows).unwrap();
                if !determinant(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Prefix ranks through the minor oracle: rank of the first `j` rows for
/// each `j`.
pub fn prefix_ranks_by_minors(m: &RatMatrix) -> Vec<usize> {
    (1..=m.rows())
        .map(|j| {
            let rows: Vec<Vec<Rat>> = (0..j).map(|i| m.row(i).to_vec()).collect();
            rank_by_minors(&RatMatrix::from_rows(rows).unwrap())
        })
        .collect()
}

/// The 8-dimensional two-step algebra with basis `(X1..X6, Z1, Z2)` and
/// nontrivial brackets `[X1,X5] = [X2,X3] = Z1`, `[X1,X6] = [X2,X4] = Z2`;
/// its cortex is the quadric `t3 t6 = t4 t5` inside `z = 0`.
pub fn quadric_example_algebra() -> LieAlgebra {
    let labels: Vec<String> = (1..=6)
        .map(|i| format!("X{i}"))
        .chain((1..=2).map(|i| format!("Z{i}")))
        .collect();
    LieAlgebra::new(
        8,
        labels,
        vec![
            (0, 4, vec![(6, rat(1))]), // [X1, X5] = Z1
            (1, 2, vec![(6, rat(1))]), // [X2, X3] = Z1
            (0, 5, vec![(7, rat(1))]), // [X1, X6] = Z2
            (1, 3, vec![(7, rat(1))]), // [X2, X4] = Z2
        ],
    )
    .unwrap()
}

/// Basis map from the quadric example onto `g_2` (0-based positions in
/// the `(Z, Y, X)` ordering): X1 -> X1, X2 -> X2, X3 -> Y3, X4 -> Y4,
/// X5 -> Y1, X6 -> Y2, Z1 -> Z1, Z2 -> Z2.
pub const QUADRIC_TO_G2: [usize; 8] = [6, 7, 4, 5, 2, 3, 0, 1];
