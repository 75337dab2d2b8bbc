//! Exact Gaussian elimination over the rationals.

use crate::error::{Error, Result};
use crate::rat::Rat;
use num_traits::{One, Zero};

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rat>),
    /// Consistent but rank-deficient; `particular` sets free variables to 0.
    Underdetermined { rank: usize, unknowns: usize, particular: Vec<Rat> },
    Inconsistent { rank: usize },
}

/// Row-reduced echelon form; returns the reduced matrix and its pivot columns.
pub fn rref(a: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(a: &[Vec<Rat>]) -> usize {
    rref(a).1.len()
}

/// Indices of a maximal linearly independent set of columns (leftmost first).
pub fn independent_columns(a: &[Vec<Rat>]) -> Vec<usize> {
    rref(a).1
}

pub fn determinant(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Solves `A x = b` and classifies the system.
pub fn solve_system(a: &[Vec<Rat>], b: &[Rat]) -> Solution {
    let unknowns = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&aug);
    if pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent { rank: pivots.len() - 1 };
    }
    let rank = pivots.len();
    let mut x = vec![Rat::zero(); unknowns];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][unknowns].clone();
    }
    if rank == unknowns {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined { rank, unknowns, particular: x }
    }
}

/// Square, nonsingular solve.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    match solve_system(a, b) {
        Solution::Unique(x) => Ok(x),
        Solution::Underdetermined { rank, unknowns, .. } => Err(Error::Singular(format!(
            "rank {rank} < {unknowns} unknowns"
        ))),
        Solution::Inconsistent { rank } => {
            Err(Error::Singular(format!("inconsistent system of rank {rank}")))
        }
    }
}

pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}
