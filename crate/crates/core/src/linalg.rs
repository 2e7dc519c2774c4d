//! Exact fraction-free elimination over the integers.
//!
//! Rational rows are scaled to integer rows first (row scaling changes
//! neither rank nor nullspace), then Bareiss elimination keeps every entry
//! integral with exact divisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ring::Rational;

/// Row-echelon form produced by Bareiss elimination.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn integral_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

pub fn echelon(rows: &[Vec<Rational>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            integral_row(r)
        })
        .collect();
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in below.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots, ncols }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

/// Basis of `{ v : M v = 0 }`, one vector per free column, with a 1 in that
/// free column and 0 in the other free columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (t, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[t];
                let mut acc = Rational::zero();
                for j in pc + 1..ncols {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            v
        })
        .collect()
}
