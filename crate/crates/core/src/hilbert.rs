//! Rational generating functions, the Hilbert–Poincaré series of
//! `M_*(Γ0^(2)(5))`, and a consistency check against elliptic cusp forms of
//! level 5.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest expansion length served.
pub const MAX_EXPANSION: u32 = 200;

/// `P(t)` in the numerator of the Hilbert–Poincaré series.
pub const NUMERATOR_FACTOR: [i64; 15] = [1, 2, 2, 1, 3, 5, 8, 8, 8, 5, 3, 1, 2, 2, 1];

/// `dim M_k(Γ0^(2)(5))` for `k = 1..=19`.
pub const DIMENSION_TABLE: [(u32, u64); 19] = [
    (1, 0),
    (2, 1),
    (3, 0),
    (4, 6),
    (5, 0),
    (6, 10),
    (7, 0),
    (8, 22),
    (9, 0),
    (10, 34),
    (11, 3),
    (12, 57),
    (13, 6),
    (14, 79),
    (15, 16),
    (16, 117),
    (17, 25),
    (18, 153),
    (19, 45),
];

/// Γ0(5): genus 0, two elliptic points of order 2, none of order 3, two cusps
/// (index 6 in SL2(Z)). See Diamond–Shurman, Modular Forms, §3.9 and Fig. 3.4.
pub const GAMMA0_5_GENUS: i64 = 0;
pub const GAMMA0_5_ELLIPTIC_2: i64 = 2;
pub const GAMMA0_5_ELLIPTIC_3: i64 = 0;
pub const GAMMA0_5_CUSPS: i64 = 2;

/// Integer polynomial, lowest degree first.
pub type IntPoly = Vec<BigInt>;

pub fn int_poly(coeffs: &[i64]) -> IntPoly {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn poly_mul(x: &[BigInt], y: &[BigInt]) -> IntPoly {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `1 - t^n` (or `1 + t^n` with `plus`).
fn binomial(n: usize, plus: bool) -> IntPoly {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    p[n] = if plus { BigInt::one() } else { -BigInt::one() };
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalFunction {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        match denominator.first() {
            Some(c) if !c.is_zero() => Ok(RationalFunction {
                numerator,
                denominator,
            }),
            _ => Err(Error::NotExpandable),
        }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// Coefficients `c_0, …, c_upto` of the power series at `t = 0`.
    /// Non-integral coefficients are a domain error.
    pub fn expand(&self, upto: u32) -> Result<Vec<BigInt>> {
        if upto > MAX_EXPANSION {
            return Err(Error::Domain(format!(
                "expansion length is capped at {MAX_EXPANSION}"
            )));
        }
        let n = upto as usize;
        let d0 = &self.denominator[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut s = self.numerator.get(k).cloned().unwrap_or_default();
            for j in 1..self.denominator.len().min(k + 1) {
                s -= &self.denominator[j] * &out[k - j];
            }
            if !(&s % d0).is_zero() {
                return Err(Error::Domain(format!(
                    "coefficient of t^{k} is not an integer"
                )));
            }
            out.push(s / d0);
        }
        Ok(out)
    }
}

pub fn expand_rational(f: &RationalFunction, upto: u32) -> Result<Vec<BigInt>> {
    f.expand(upto)
}

/// `(1-t)^2 (1+t^7) P(t) / ((1-t^2)^2 (1-t^3) (1-t^4)^2 (1-t^5))`.
pub fn siegel_series() -> RationalFunction {
    let num = [binomial(1, false), binomial(1, false), binomial(7, true), int_poly(&NUMERATOR_FACTOR)]
        .iter()
        .fold(int_poly(&[1]), |acc, p| poly_mul(&acc, p));
    let den = [2, 2, 3, 4, 4, 5]
        .iter()
        .fold(int_poly(&[1]), |acc, &n| poly_mul(&acc, &binomial(n, false)));
    RationalFunction::new(num, den).expect("constant term 1")
}

/// `dim M_k(Γ0^(2)(5))`.
pub fn siegel_dim(k: u32) -> Result<u64> {
    let c = siegel_series().expand(k)?;
    c[k as usize]
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("negative coefficient at t^{k}")))
}

/// `dim S_k(Γ0(5))` for even `k >= 4`, from the genus formula
/// `(k-1)(g-1) + ⌊k/4⌋ ε2 + ⌊k/3⌋ ε3 + (k/2 - 1) ε∞`.
pub fn classical_cusp_dim(k: u32) -> Result<u64> {
    if k % 2 == 1 || k < 4 {
        return Err(Error::Domain(format!(
            "cusp dimension formula needs even k >= 4, got {k}"
        )));
    }
    let k = k as i64;
    let d = (k - 1) * (GAMMA0_5_GENUS - 1)
        + (k / 4) * GAMMA0_5_ELLIPTIC_2
        + (k / 3) * GAMMA0_5_ELLIPTIC_3
        + (k / 2 - 1) * GAMMA0_5_CUSPS;
    Ok(d as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiRow {
    pub k: u32,
    pub siegel_dim: u64,
    pub classical_cusp_dim: u64,
    /// `dim M_k - 2 dim S_k(Γ0(5)) - 3`, the implied Siegel cusp dimension.
    pub implied_cusp_dim: i64,
}

impl BiRow {
    pub fn consistent(&self) -> bool {
        self.implied_cusp_dim >= 0
    }
}

/// Rows for even `4 <= k <= upto` of
/// `dim M_k = dim S_k + 2 dim S_k(Γ0(5)) + 3`.
pub fn bi_consistency(upto: u32) -> Result<Vec<BiRow>> {
    if upto < 4 {
        return Err(Error::Domain("consistency check needs upto >= 4".into()));
    }
    let series = siegel_series().expand(upto)?;
    (4..=upto)
        .step_by(2)
        .map(|k| {
            let m = series[k as usize]
                .to_u64()
                .ok_or_else(|| Error::Domain(format!("negative coefficient at t^{k}")))?;
            let s = classical_cusp_dim(k)?;
            Ok(BiRow {
                k,
                siegel_dim: m,
                classical_cusp_dim: s,
                implied_cusp_dim: m as i64 - 2 * s as i64 - 3,
            })
        })
        .collect()
}

/// Whether `t^deg P(1/t) = P(t)`.
pub fn is_palindromic(p: &[i64]) -> bool {
    p.iter().eq(p.iter().rev())
}
