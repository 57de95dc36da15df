//! Weighted polynomials in `F1, F2, G1, G2` (weights 1, 1, 2, 2) and `X_J`
//! (weight 9), the ε₂ action on them, and evaluation into Fourier series.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::fourier::FourierSeries;
use crate::gendata::GeneratorSet;
use crate::{frac, rat, Error, Rational, Result};

/// Data file listing the weight-18 polynomial `P_J` with `J^2 = P_J(f, g)`.
pub const JACOBIAN_SQUARE_TABLE: &str = include_str!("../data/jacobian_square.tsv");
pub const JACOBIAN_SQUARE_SHA256: &str =
    "4ab1b6fd8f744ae7da91c620358981e0fca0b449a8af515c40160e334fd9ebba";

/// Grading weights of `F1, F2, G1, G2, X_J`.
pub const WEIGHTS: [u32; 5] = [1, 1, 2, 2, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    F1,
    F2,
    G1,
    G2,
    XJ,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::F1, Gen::F2, Gen::G1, Gen::G2, Gen::XJ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["F1", "F2", "G1", "G2", "X_J"][self.index()]
    }
}

/// Exponent vector `(e1, e2, e3, e4, e_J)`. Ordered lexicographically on
/// `(e_J, e1, e2, e3, e4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    fn key(&self) -> [u32; 5] {
        let e = self.0;
        [e[4], e[0], e[1], e[2], e[3]]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// `self / other`, assuming `other` divides `self`.
    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(g: Gen) -> Self {
        let mut e = [0; 5];
        e[g.index()] = 1;
        Self::term(Monomial(e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GradedPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in it {
            *terms.entry(m).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        GradedPoly { terms }
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all terms; `None` for the zero polynomial.
    pub fn homogeneous_weight(&self) -> Result<Option<u32>> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let Some(w) = weights.next() else {
            return Ok(None);
        };
        if weights.all(|x| x == w) {
            Ok(Some(w))
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_weight().is_ok()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(*m).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        GradedPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GradedPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The ring homomorphism sending each generator to the given image.
    pub fn substitute(&self, images: &[GradedPoly; 5]) -> Self {
        let mut cache: HashMap<(usize, u32), GradedPoly> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let p = cache
                        .entry((i, e))
                        .or_insert_with(|| images[i].pow(e))
                        .clone();
                    t = t.mul(&p);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// ε₂: `F1 ↦ F2, F2 ↦ -F1, G1 ↦ G2, G2 ↦ G1, X_J ↦ -X_J`.
    pub fn apply_eps2(&self) -> Self {
        self.substitute(&eps2_images())
    }

    /// Average over the cyclic group generated by ε₂.
    pub fn reynolds(&self) -> Self {
        let mut acc = self.clone();
        let mut cur = self.clone();
        for _ in 1..4 {
            cur = cur.apply_eps2();
            acc = acc.add(&cur);
        }
        acc.scale(&frac(1, 4))
    }

    /// Replaces `X_J^2` by `λ · P_J` until `e_J <= 1` everywhere.
    pub fn reduce_jacobian_square(&self, lambda: &Rational, p_j: &GradedPoly) -> Self {
        let sq = p_j.scale(lambda);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            let halves = e[4] / 2;
            e[4] %= 2;
            out = out.add(&Self::term(Monomial(e), c.clone()).mul(&sq.pow(halves)));
        }
        out
    }
}

fn eps2_images() -> [GradedPoly; 5] {
    [
        GradedPoly::var(Gen::F2),
        GradedPoly::var(Gen::F1).neg(),
        GradedPoly::var(Gen::G2),
        GradedPoly::var(Gen::G1),
        GradedPoly::var(Gen::XJ).neg(),
    ]
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = Gen::ALL
                .iter()
                .zip(m.0)
                .filter(|(_, e)| *e > 0)
                .map(|(g, e)| {
                    if e == 1 {
                        g.name().to_string()
                    } else {
                        format!("{}^{e}", g.name())
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Division by a single polynomial with respect to the canonical order.
/// Returns the quotient and whether the remainder vanished.
pub fn poly_divide(p: &GradedPoly, d: &GradedPoly) -> Result<(GradedPoly, bool)> {
    let Some((lead_m, lead_c)) = d.terms.iter().next_back() else {
        return Err(Error::Domain("division by the zero polynomial".into()));
    };
    let mut rest = p.clone();
    let mut quotient = GradedPoly::zero();
    let mut remainder = GradedPoly::zero();
    while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
        if lead_m.divides(&m) {
            let q = GradedPoly::term(m.div(lead_m), c / lead_c);
            rest = rest.sub(&q.mul(d));
            quotient = quotient.add(&q);
        } else {
            rest.terms.remove(&m);
            remainder.terms.insert(m, c);
        }
    }
    Ok((quotient, remainder.is_zero()))
}

/// Substitutes `F1 ↦ f1, …, X_J ↦ J`. The zero polynomial maps to the zero
/// series of weight 0.
pub fn poly_eval(p: &GradedPoly, gens: &GeneratorSet) -> Result<FourierSeries> {
    let Some(weight) = p.homogeneous_weight()? else {
        return Ok(FourierSeries::zero(0, gens.f1.trunc()));
    };
    let base = [&gens.f1, &gens.f2, &gens.g1, &gens.g2, &gens.j];
    let mut cache: HashMap<(usize, u32), FourierSeries> = HashMap::new();
    let mut acc: Option<FourierSeries> = None;
    for (m, c) in &p.terms {
        let mut t: Option<FourierSeries> = None;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = cache.entry((i, e)).or_insert_with(|| base[i].pow(e));
            t = Some(match t {
                None => pw.clone(),
                Some(x) => x.mul(pw),
            });
        }
        let t = t
            .unwrap_or_else(|| FourierSeries::one(gens.f1.trunc()))
            .scale(c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.combine(&t, true),
        });
    }
    Ok(acc.expect("nonzero polynomial").with_weight(weight as i64))
}

/// Parses lines `c e1 e2 e3 e4` (exponent of `X_J` zero); `#` starts a comment.
/// Repeated monomials are rejected.
pub fn parse_jacobian_square(text: &str) -> Result<GradedPoly> {
    let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(err(format!("expected 5 fields, found {}", fields.len())));
        }
        let c: i64 = fields[0]
            .parse()
            .map_err(|_| err(format!("not an integer: {:?}", fields[0])))?;
        let mut e = [0u32; 5];
        for (slot, f) in e.iter_mut().zip(&fields[1..]) {
            *slot = f
                .parse()
                .map_err(|_| err(format!("not a nonnegative integer: {f:?}")))?;
        }
        if terms.insert(Monomial(e), rat(c)).is_some() {
            return Err(Error::DataIntegrity(format!(
                "monomial on line {} appears twice",
                idx + 1
            )));
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(GradedPoly { terms })
}

/// The embedded polynomial `P_J`.
pub fn jacobian_square_poly() -> GradedPoly {
    parse_jacobian_square(JACOBIAN_SQUARE_TABLE).expect("embedded polynomial is well formed")
}

fn v(g: Gen) -> GradedPoly {
    GradedPoly::var(g)
}

fn lincomb(terms: &[(i64, GradedPoly)]) -> GradedPoly {
    terms
        .iter()
        .fold(GradedPoly::zero(), |acc, (k, p)| acc.add(&p.scale(&rat(*k))))
}

/// `F1^2 + F2^2 - 4 G1 - 4 G2`.
pub fn e2_poly() -> GradedPoly {
    lincomb(&[
        (1, v(Gen::F1).pow(2)),
        (1, v(Gen::F2).pow(2)),
        (-4, v(Gen::G1)),
        (-4, v(Gen::G2)),
    ])
}

#[derive(Clone, Debug)]
pub struct NamedPoly {
    pub name: &'static str,
    pub poly: GradedPoly,
}

/// The eighteen generators of the ring of holomorphic forms, in order of
/// weight: 2, 4 (×5), 6 (×4), 10, 11 (×3), 13 (×3), 15.
pub fn holomorphic_generators() -> Vec<NamedPoly> {
    let (f1, f2, g1, g2, x) = (v(Gen::F1), v(Gen::F2), v(Gen::G1), v(Gen::G2), v(Gen::XJ));
    let f1f2 = f1.mul(&f2);
    let f1sq = f1.pow(2);
    let f2sq = f2.pow(2);
    let sq_sum = f1sq.add(&f2sq);
    let sq_diff = f1sq.sub(&f2sq);
    let g_diff = g1.sub(&g2);
    let list = [
        ("e2", e2_poly()),
        ("F1^2 G1 + F2^2 G2", f1sq.mul(&g1).add(&f2sq.mul(&g2))),
        ("F1 F2 (G1 - G2)", f1f2.mul(&g_diff)),
        ("F1 F2 (F1^2 - F2^2)", f1f2.mul(&sq_diff)),
        ("F1^2 F2^2", f1f2.pow(2)),
        ("G1 G2", g1.mul(&g2)),
        ("F1^2 F2^2 (G1 + G2)", f1f2.pow(2).mul(&g1.add(&g2))),
        (
            "F1^3 F2 G1 - F1 F2^3 G2",
            f1sq.mul(&f1f2).mul(&g1).sub(&f2sq.mul(&f1f2).mul(&g2)),
        ),
        (
            "F1^2 G1^2 + F2^2 G2^2",
            f1sq.mul(&g1.pow(2)).add(&f2sq.mul(&g2.pow(2))),
        ),
        ("G1 G2 (F1^2 + F2^2)", g1.mul(&g2).mul(&sq_sum)),
        ("F1^2 F2^2 (F1^2 + F2^2)^3", f1f2.pow(2).mul(&sq_sum.pow(3))),
        ("F1 F2 X_J", f1f2.mul(&x)),
        ("(F1^2 - F2^2) X_J", sq_diff.mul(&x)),
        ("(G1 - G2) X_J", g_diff.mul(&x)),
        ("(F1^2 + F2^2) F1 F2 X_J", sq_sum.mul(&f1f2).mul(&x)),
        ("(F1^4 - F2^4) X_J", f1.pow(4).sub(&f2.pow(4)).mul(&x)),
        ("(F1^2 + F2^2)(G1 - G2) X_J", sq_sum.mul(&g_diff).mul(&x)),
        ("(F1^2 - F2^2)^3 X_J", sq_diff.pow(3).mul(&x)),
    ];
    list.into_iter()
        .map(|(name, poly)| NamedPoly { name, poly })
        .collect()
}
