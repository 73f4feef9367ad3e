//! Fraction-free (Bareiss) elimination over the integers, with exact rank
//! and nullspace extraction. Rational input is cleared of denominators row
//! by row before elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Row echelon form produced by [`echelon`].
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The first `rank` rows are the echelon rows; the rest are zero.
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.pivots.len()
    }

    /// Basis of the right nullspace as primitive integer vectors, one per
    /// free column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.ncols];
            x[free] = Rational::one();
            for (i, &p) in self.pivots.iter().enumerate().rev() {
                let row = &self.rows[i];
                let mut acc = Rational::zero();
                for j in (p + 1)..self.ncols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[p] = -acc / Rational::from_integer(row[p].clone());
            }
            basis.push(primitive(&x));
        }
        basis
    }
}

/// Scales a rational vector to a primitive integer vector whose last
/// nonzero entry is positive.
pub fn primitive(x: &[Rational]) -> Vec<BigInt> {
    let den = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&den / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in &mut ints {
            *v /= &g;
        }
    }
    if ints.iter().rev().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in &mut ints {
            *v = -v.clone();
        }
    }
    ints
}

/// Clears denominators row by row.
pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&den / v.denom())).collect()
        })
        .collect()
}

/// Bareiss elimination with first-nonzero pivoting, scanning columns left
/// to right. Every intermediate entry is a minor of the input, so each
/// division is exact.
pub fn echelon(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    // All-zero rows never contribute a pivot.
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(found) = (r..nrows).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            if factor.is_zero() {
                if !prev.is_one() || !p.is_one() {
                    for v in row[c + 1..].iter_mut().filter(|v| !v.is_zero()) {
                        *v = (&*v * p) / &prev;
                    }
                }
                continue;
            }
            for j in (c + 1)..ncols {
                let a = &row[j];
                let b = &pivot_row[j];
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                row[j] = (a * p - &factor * b) / &prev;
            }
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots, ncols }
}

pub fn rank_int(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

pub fn rank_rational(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rank_int(integer_rows(rows), ncols)
}
