//! Exact rank and incremental echelon bases over the rationals, using
//! fraction-free integer elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Scales a rational row to a primitive integer row.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    row
}

/// Rank by Bareiss elimination. Every division is exact: after step `k` each
/// entry is a `(k+1)`-minor of the input.
pub fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                let num = &pivot * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    rank_integer(rows.iter().map(|r| integer_row(r)).collect())
}

/// Row echelon basis built one vector at a time. Rows are kept as primitive
/// integer vectors.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * y;
            }
            v = make_primitive(v);
        }
        v
    }

    /// True when `v` lies in the span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(integer_row(v)).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current rows; reports whether it
    /// was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(integer_row(v));
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if w[p].is_negative() {
            for x in w.iter_mut() {
                *x = -&*x;
            }
        }
        // Keep earlier rows reduced against the new pivot column as well, so
        // every pivot column is zero in all other rows.
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let a = w[p].clone();
                let b = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x = &a * &*x - &b * y;
                }
                *row = make_primitive(std::mem::take(row));
            }
        }
        self.rows.push((p, w));
        true
    }
}
