//! The cyclotomic field `Q(ζ40)` in the power basis `1, ζ, …, ζ^15`, reduced
//! modulo `Φ40(x) = x^16 - x^12 + x^8 - x^4 + 1`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

pub const CONDUCTOR: i64 = 40;
pub const DEGREE: usize = 16;

/// Integral coordinates in the power basis.
pub type Coords = [BigInt; DEGREE];

pub(crate) fn zero_coords() -> Coords {
    std::array::from_fn(|_| BigInt::zero())
}

/// Adds `x * y` (polynomial product, degree <= 30) into `buf`.
pub(crate) fn mul_acc(buf: &mut [BigInt], x: &Coords, y: &Coords) {
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                buf[i + j] += a * b;
            }
        }
    }
}

/// Reduces a polynomial of degree `< 2·DEGREE - 1` modulo `Φ40`.
pub(crate) fn reduce(mut buf: Vec<BigInt>) -> Coords {
    for k in (DEGREE..buf.len()).rev() {
        if buf[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut buf[k]);
        // x^16 = x^12 - x^8 + x^4 - 1
        buf[k - 4] += &c;
        buf[k - 8] -= &c;
        buf[k - 12] += &c;
        buf[k - 16] -= &c;
    }
    buf.truncate(DEGREE);
    std::array::from_fn(|i| std::mem::take(&mut buf[i]))
}

/// `x^k mod Φ40` for `k = 0..40`.
fn power_table() -> &'static [Coords] {
    static TABLE: OnceLock<Vec<Coords>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..CONDUCTOR as usize)
            .map(|k| {
                let mut buf = vec![BigInt::zero(); k.max(DEGREE) + 1];
                buf[k] = BigInt::one();
                if buf.len() < 2 * DEGREE - 1 {
                    buf.resize(2 * DEGREE - 1, BigInt::zero());
                }
                reduce(buf)
            })
            .collect()
    })
}

/// An element `num / den` with `num` integral, `den > 0` and the gcd of all
/// entries and `den` equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    num: Coords,
    den: BigInt,
}

impl CyclotomicNumber {
    pub fn new(num: Coords, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut x = CyclotomicNumber { num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        let g = if self.den.is_negative() { -g } else { g };
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero() -> Self {
        CyclotomicNumber {
            num: zero_coords(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(&Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        let mut num = zero_coords();
        num[0] = r.numer().clone();
        Self::new(num, r.denom().clone())
    }

    /// `ζ40^k`.
    pub fn zeta(k: i64) -> Self {
        let idx = k.rem_euclid(CONDUCTOR) as usize;
        CyclotomicNumber {
            num: power_table()[idx].clone(),
            den: BigInt::one(),
        }
    }

    /// `e(r) = exp(2πi r)`; requires `40 r` to be an integer.
    pub fn e(r: &Rational) -> Result<Self> {
        let scaled = r * Rational::from_integer(CONDUCTOR.into());
        if !scaled.is_integer() {
            return Err(Error::Domain(format!("e({r}) is not in Q(ζ40)")));
        }
        let k = (scaled.to_integer() % BigInt::from(CONDUCTOR))
            .to_i64()
            .expect("reduced exponent");
        Ok(Self::zeta(k))
    }

    pub fn i() -> Self {
        Self::zeta(10)
    }

    /// `√2 = ζ8 + ζ8^-1`.
    pub fn sqrt2() -> Self {
        Self::zeta(5).add(&Self::zeta(35))
    }

    /// `√5 = 1 + 2(ζ5 + ζ5^-1)`.
    pub fn sqrt5() -> Self {
        Self::one().add(&Self::zeta(8).add(&Self::zeta(32)).scale(&Rational::from_integer(2.into())))
    }

    /// `√n` for `n = m^2 · s` with squarefree part `s` dividing 10, or `-1`
    /// times such an `n` (giving `i·√|n|`).
    pub fn sqrt_integer(n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::zero());
        }
        let mut m = n.unsigned_abs();
        let mut root = 1i64;
        let mut p = 2u64;
        while p * p <= m {
            while m % (p * p) == 0 {
                m /= p * p;
                root *= p as i64;
            }
            p += 1;
        }
        let base = match m {
            1 => Self::one(),
            2 => Self::sqrt2(),
            5 => Self::sqrt5(),
            10 => Self::sqrt2().mul(&Self::sqrt5()),
            _ => return Err(Error::Domain(format!("√{n} is not in Q(ζ40)"))),
        };
        let r = base.scale(&Rational::from_integer(root.into()));
        Ok(if n < 0 { r.mul(&Self::i()) } else { r })
    }

    pub fn coords(&self) -> &Coords {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let l = self.den.lcm(&other.den);
        let (fa, fb) = (&l / &self.den, &l / &other.den);
        let num = std::array::from_fn(|i| &self.num[i] * &fa + &other.num[i] * &fb);
        Self::new(num, l)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            num: std::array::from_fn(|i| -&self.num[i]),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = std::array::from_fn(|i| &self.num[i] * r.numer());
        Self::new(num, &self.den * r.denom())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut buf = vec![BigInt::zero(); 2 * DEGREE - 1];
        mul_acc(&mut buf, &self.num, &other.num);
        Self::new(reduce(buf), &self.den * &other.den)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Complex conjugation `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> Self {
        let mut acc = vec![BigInt::zero(); DEGREE];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &power_table()[(CONDUCTOR as usize - k) % CONDUCTOR as usize];
            for (slot, x) in acc.iter_mut().zip(image) {
                *slot += c * x;
            }
        }
        Self::new(std::array::from_fn(|i| std::mem::take(&mut acc[i])), self.den.clone())
    }

    /// The exponent `k` in `0..8` with `self = ζ8^k`, if any.
    pub fn eighth_root_index(&self) -> Option<u32> {
        (0..8).find(|&k| self == &Self::zeta(5 * k as i64))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}
