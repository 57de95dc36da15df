//! Truncated Fourier expansions `Σ c(a,b,c) q^a r^b s^c` with exact rational
//! coefficients, where `q = e(τ)`, `r = e(z)`, `s = e(w)`.
//!
//! A series carries its precision `trunc`: every coefficient with
//! `a + c <= trunc` is known (absent keys are zero), everything beyond is
//! unknown and querying it is an error.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    pub a: u32,
    pub b: i32,
    pub c: u32,
}

impl Exponent {
    pub const fn new(a: u32, b: i32, c: u32) -> Self {
        Exponent { a, b, c }
    }

    /// Total order `a + c`.
    pub fn order(&self) -> u32 {
        self.a + self.c
    }

    pub fn in_cone(&self) -> bool {
        let b = self.b as i64;
        b * b <= 4 * self.a as i64 * self.c as i64
    }

    pub fn swapped(&self) -> Self {
        Exponent::new(self.c, self.b, self.a)
    }

    pub fn mirrored(&self) -> Self {
        Exponent::new(self.a, -self.b, self.c)
    }

    /// Table ordering: total order, then `a` descending, then `b` ascending.
    pub fn table_key(&self) -> (u32, Reverse<u32>, i32) {
        (self.order(), Reverse(self.a), self.b)
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Every exponent of the support cone with `a + c <= n`, in table order.
pub fn cone_exponents(n: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for m in 0..=n {
        for a in (0..=m).rev() {
            let c = m - a;
            let bound = (4 * a as u64 * c as u64) as f64;
            let mut bmax = bound.sqrt() as i64;
            while bmax * bmax > 4 * a as i64 * c as i64 {
                bmax -= 1;
            }
            while (bmax + 1) * (bmax + 1) <= 4 * a as i64 * c as i64 {
                bmax += 1;
            }
            for b in -bmax..=bmax {
                out.push(Exponent::new(a, b as i32, c));
            }
        }
    }
    out
}

/// Differentiation variable; `D = (2πi)⁻¹ ∂` multiplies by `a`, `b` or `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Tau,
    Z,
    W,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Tau, Var::Z, Var::W];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierSeries {
    weight: i64,
    trunc: u32,
    coeffs: BTreeMap<Exponent, Rational>,
}

impl FourierSeries {
    pub fn zero(weight: i64, trunc: u32) -> Self {
        FourierSeries {
            weight,
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(weight: i64, value: Rational, trunc: u32) -> Self {
        let mut s = Self::zero(weight, trunc);
        if !value.is_zero() {
            s.coeffs.insert(Exponent::new(0, 0, 0), value);
        }
        s
    }

    /// The weight-0 constant 1.
    pub fn one(trunc: u32) -> Self {
        Self::constant(0, Rational::one(), trunc)
    }

    /// Builds a series from explicit terms. Repeated exponents are summed.
    pub fn from_terms<I>(weight: i64, trunc: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut coeffs: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, v) in terms {
            if e.order() > trunc {
                return Err(Error::Precision {
                    a: e.a,
                    b: e.b,
                    c: e.c,
                    trunc,
                });
            }
            if !e.in_cone() {
                return Err(Error::SupportCone {
                    a: e.a,
                    b: e.b,
                    c: e.c,
                });
            }
            *coeffs.entry(e).or_insert_with(Rational::zero) += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(FourierSeries {
            weight,
            trunc,
            coeffs,
        })
    }

    fn from_map(weight: i64, trunc: u32, mut coeffs: BTreeMap<Exponent, Rational>) -> Self {
        coeffs.retain(|e, v| !v.is_zero() && e.order() <= trunc);
        debug_assert!(coeffs.keys().all(Exponent::in_cone));
        FourierSeries {
            weight,
            trunc,
            coeffs,
        }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in `(a, b, c)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.coeffs.iter()
    }

    /// Nonzero terms in table order.
    pub fn table_terms(&self) -> Vec<(Exponent, Rational)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(e, x)| (*e, x.clone())).collect();
        v.sort_by_key(|(e, _)| e.table_key());
        v
    }

    pub fn coefficient(&self, a: u32, b: i32, c: u32) -> Result<Rational> {
        self.coeff(Exponent::new(a, b, c))
    }

    pub fn coeff(&self, e: Exponent) -> Result<Rational> {
        if e.order() > self.trunc {
            return Err(Error::Precision {
                a: e.a,
                b: e.b,
                c: e.c,
                trunc: self.trunc,
            });
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero))
    }

    /// Lowest total order carrying a nonzero coefficient, or `trunc + 1`
    /// when every known coefficient vanishes.
    pub fn valuation(&self) -> u32 {
        self.coeffs
            .keys()
            .map(Exponent::order)
            .min()
            .unwrap_or(self.trunc + 1)
    }

    /// First nonzero term in table order.
    pub fn leading_term(&self) -> Option<(Exponent, Rational)> {
        self.coeffs
            .iter()
            .min_by_key(|(e, _)| e.table_key())
            .map(|(e, v)| (*e, v.clone()))
    }

    pub fn with_weight(mut self, weight: i64) -> Self {
        self.weight = weight;
        self
    }

    /// Forgets everything beyond `a + c <= n`. A no-op when `n >= trunc`.
    pub fn truncate(&self, n: u32) -> Self {
        if n >= self.trunc {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(e, _)| e.order() <= n)
            .map(|(e, v)| (*e, v.clone()))
            .collect();
        FourierSeries {
            weight: self.weight,
            trunc: n,
            coeffs,
        }
    }

    fn check_weight(&self, other: &Self) -> Result<()> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_weight(other)?;
        Ok(self.combine(other, true))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_weight(other)?;
        Ok(self.combine(other, false))
    }

    /// Sum or difference without the weight check; keeps `self.weight`.
    pub(crate) fn combine(&self, other: &Self, plus: bool) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs: BTreeMap<Exponent, Rational> = self
            .coeffs
            .iter()
            .filter(|(e, _)| e.order() <= trunc)
            .map(|(e, v)| (*e, v.clone()))
            .collect();
        for (e, v) in other.coeffs.iter().filter(|(e, _)| e.order() <= trunc) {
            let slot = coeffs.entry(*e).or_insert_with(Rational::zero);
            if plus {
                *slot += v;
            } else {
                *slot -= v;
            }
        }
        Self::from_map(self.weight, trunc, coeffs)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|(e, v)| (*e, v * s)).collect();
        Self::from_map(self.weight, self.trunc, coeffs)
    }

    /// Precision of a product: a coefficient of order `n` only involves
    /// factor terms of order at most `n - v` on either side, where `v` is the
    /// other factor's valuation.
    fn product_trunc(&self, other: &Self) -> u32 {
        (self.trunc + other.valuation()).min(other.trunc + self.valuation())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.product_trunc(other);
        let mut right: Vec<(&Exponent, &Rational)> = other.coeffs.iter().collect();
        right.sort_by_key(|(e, _)| e.order());
        let mut coeffs: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (ex, vx) in &self.coeffs {
            if ex.order() > trunc {
                continue;
            }
            let room = trunc - ex.order();
            let end = right.partition_point(|(e, _)| e.order() <= room);
            for (ey, vy) in &right[..end] {
                let key = Exponent::new(ex.a + ey.a, ex.b + ey.b, ex.c + ey.c);
                *coeffs.entry(key).or_insert_with(Rational::zero) += vx * *vy;
            }
        }
        Self::from_map(self.weight + other.weight, trunc, coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.trunc).with_weight(0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derive(&self, var: Var) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, v)| {
                let factor = match var {
                    Var::Tau => e.a as i64,
                    Var::Z => e.b as i64,
                    Var::W => e.c as i64,
                };
                (*e, v * Rational::from_integer(factor.into()))
            })
            .collect();
        Self::from_map(self.weight, self.trunc, coeffs)
    }

    /// The involution `q ↔ s`.
    pub fn swap_qs(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, v)| (e.swapped(), v.clone()))
            .collect();
        Self::from_map(self.weight, self.trunc, coeffs)
    }

    /// First exponent (in table order) within the common precision where the
    /// two series differ. Weights are not compared.
    pub fn first_difference(&self, other: &Self) -> Option<Exponent> {
        let trunc = self.trunc.min(other.trunc);
        let diff = self.combine(other, false);
        diff.coeffs
            .keys()
            .filter(|e| e.order() <= trunc)
            .min_by_key(|e| e.table_key())
            .copied()
    }

    /// Coefficientwise equality on the common precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Coefficients of `q^0, …, q^trunc` in the restriction to `s = 0`.
    pub fn restrict_s_zero(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.trunc as usize + 1];
        for (e, v) in &self.coeffs {
            if e.c == 0 {
                out[e.a as usize] += v;
            }
        }
        out
    }
}
