//! The embedded coefficient table of the basic forms `f1, f2, g1, g2` and
//! every form derived from them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::One;
use sha2::{Digest, Sha256};

use crate::fourier::{Exponent, FourierSeries};
use crate::jacobian::jacobian;
use crate::{rat, Error, Rational, Result};

/// Coefficients of `f1, f2, g1, g2` for `a + c <= 7`.
pub const GENERATOR_TABLE: &str = include_str!("../data/generators.tsv");
pub const GENERATOR_TABLE_SHA256: &str =
    "89cea6e79552bed58b20ac3be1bf551eeff04b78df40ccd4bacefe6261e08e94";

/// Precision of the embedded table.
pub const TABLE_PRECISION: u32 = 7;

pub const FORM_NAMES: [&str; 12] = [
    "f1", "f2", "g1", "g2", "h1", "h2", "e2", "phi1", "phi2", "phi3", "phi4", "J",
];

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub exponent: Exponent,
    /// Values of `f1, f2, g1, g2`.
    pub values: [i64; 4],
}

/// Parses whitespace-separated rows `a b c f1 f2 g1 g2`; `#` starts a comment.
pub fn parse_generator_table(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        if fields.len() != 7 {
            return Err(parse_err(format!("expected 7 fields, found {}", fields.len())));
        }
        let mut nums = [0i64; 7];
        for (slot, f) in nums.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| parse_err(format!("not an integer: {f:?}")))?;
        }
        if nums[0] < 0 || nums[2] < 0 {
            return Err(parse_err("exponents a and c must be nonnegative".into()));
        }
        rows.push(TableRow {
            exponent: Exponent::new(nums[0] as u32, nums[1] as i32, nums[2] as u32),
            values: [nums[3], nums[4], nums[5], nums[6]],
        });
    }
    Ok(rows)
}

/// The four basic forms as read from the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicGenerators {
    pub f1: FourierSeries,
    pub f2: FourierSeries,
    pub g1: FourierSeries,
    pub g2: FourierSeries,
}

impl BasicGenerators {
    pub fn truncate(&self, n: u32) -> Self {
        BasicGenerators {
            f1: self.f1.truncate(n),
            f2: self.f2.truncate(n),
            g1: self.g1.truncate(n),
            g2: self.g2.truncate(n),
        }
    }
}

/// Builds `f1, f2, g1, g2` from table rows. Each row fixes the coefficients at
/// `(a, b, c)`; a missing sign partner `(a, -b, c)` is filled by symmetry.
pub fn load_generators(rows: &[TableRow]) -> Result<BasicGenerators> {
    let mut given: BTreeMap<Exponent, [i64; 4]> = BTreeMap::new();
    for row in rows {
        let e = row.exponent;
        if e.order() > TABLE_PRECISION {
            return Err(Error::Precision {
                a: e.a,
                b: e.b,
                c: e.c,
                trunc: TABLE_PRECISION,
            });
        }
        if !e.in_cone() {
            return Err(Error::SupportCone {
                a: e.a,
                b: e.b,
                c: e.c,
            });
        }
        if let Some(prev) = given.insert(e, row.values) {
            if prev != row.values {
                return Err(Error::DataIntegrity(format!(
                    "conflicting duplicate rows at {e}"
                )));
            }
        }
    }
    let mut full = given.clone();
    for (e, v) in &given {
        match given.get(&e.mirrored()) {
            Some(w) if w != v => {
                return Err(Error::DataIntegrity(format!(
                    "rows {e} and {} disagree",
                    e.mirrored()
                )))
            }
            Some(_) => {}
            None => {
                full.insert(e.mirrored(), *v);
            }
        }
    }
    let column = |i: usize, weight: i64| {
        FourierSeries::from_terms(
            weight,
            TABLE_PRECISION,
            full.iter().map(|(e, v)| (*e, rat(v[i]))),
        )
    };
    Ok(BasicGenerators {
        f1: column(0, 1)?,
        f2: column(1, 1)?,
        g1: column(2, 2)?,
        g2: column(3, 2)?,
    })
}

/// The basic forms together with every derived form.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub f1: FourierSeries,
    pub f2: FourierSeries,
    pub g1: FourierSeries,
    pub g2: FourierSeries,
    pub h1: FourierSeries,
    pub h2: FourierSeries,
    pub e2: FourierSeries,
    pub phi: [FourierSeries; 4],
    pub j: FourierSeries,
}

fn lin(terms: &[(i64, &FourierSeries)]) -> FourierSeries {
    let mut acc = terms[0].1.scale(&rat(terms[0].0));
    for (k, s) in &terms[1..] {
        acc = acc.combine(&s.scale(&rat(*k)), true);
    }
    acc
}

impl GeneratorSet {
    /// Computes `h1, h2, e2, φ1..φ4` and the Jacobian `J` from the basic forms.
    pub fn from_basic(basic: BasicGenerators) -> Result<Self> {
        let BasicGenerators { f1, f2, g1, g2 } = basic;
        let f1f2 = f1.mul(&f2);
        let f1sq = f1.mul(&f1);
        let f2sq = f2.mul(&f2);
        let h1 = g1.combine(&f1f2, false);
        let h2 = g2.combine(&f1f2, true);
        let e2 = lin(&[(1, &f1sq), (1, &f2sq), (-4, &g1), (-4, &g2)]);
        let g1g2 = g1.mul(&g2);
        let phi1 = e2.mul(&e2).combine(&f1f2.mul(&f1f2), true);
        let phi2 = lin(&[(1, &f1sq.mul(&g1)), (1, &f2sq.mul(&g2)), (-2, &g1g2)]);
        let inner = lin(&[(1, &f1sq), (-2, &f1f2), (-1, &f2sq), (2, &g1), (-2, &g2)]);
        let phi3 = f1f2.mul(&inner);
        let phi4 = lin(&[(2, &g1g2), (1, &f1f2.mul(&g1.combine(&g2, false)))]);
        let j = jacobian([&f1, &f2, &g1, &g2], [1, 1, 2, 2])?;
        Ok(GeneratorSet {
            f1,
            f2,
            g1,
            g2,
            h1,
            h2,
            e2,
            phi: [phi1, phi2, phi3, phi4],
            j,
        })
    }

    pub fn from_table_text(text: &str) -> Result<Self> {
        Self::from_basic(load_generators(&parse_generator_table(text)?)?)
    }

    /// The generator set of the embedded table, computed once.
    pub fn embedded() -> &'static GeneratorSet {
        static SET: OnceLock<GeneratorSet> = OnceLock::new();
        SET.get_or_init(|| {
            GeneratorSet::from_table_text(GENERATOR_TABLE).expect("embedded table is well formed")
        })
    }

    pub fn basic(&self) -> BasicGenerators {
        BasicGenerators {
            f1: self.f1.clone(),
            f2: self.f2.clone(),
            g1: self.g1.clone(),
            g2: self.g2.clone(),
        }
    }

    /// Recomputes everything from the basic forms truncated to `a + c <= n`.
    pub fn truncated(&self, n: u32) -> Result<Self> {
        Self::from_basic(self.basic().truncate(n))
    }

    pub fn by_name(&self, name: &str) -> Option<&FourierSeries> {
        Some(match name {
            "f1" => &self.f1,
            "f2" => &self.f2,
            "g1" => &self.g1,
            "g2" => &self.g2,
            "h1" => &self.h1,
            "h2" => &self.h2,
            "e2" => &self.e2,
            "phi1" => &self.phi[0],
            "phi2" => &self.phi[1],
            "phi3" => &self.phi[2],
            "phi4" => &self.phi[3],
            "J" | "j" => &self.j,
            _ => return None,
        })
    }

    /// The structural checks on the generators, each with its first failing
    /// exponent (if any).
    pub fn relation_checks(&self) -> Vec<RelationCheck> {
        let mut out = Vec::new();
        let mut push = |name: &'static str, witness: Option<Exponent>| {
            out.push(RelationCheck { name, witness });
        };
        for (name, s) in [
            ("b-symmetry of f1", &self.f1),
            ("b-symmetry of f2", &self.f2),
            ("b-symmetry of g1", &self.g1),
            ("b-symmetry of g2", &self.g2),
        ] {
            push(name, b_symmetry_witness(s));
        }
        let f1f2 = self.f1.mul(&self.f2);
        let h1_swap = self.g1.swap_qs();
        let h2_swap = self.g2.swap_qs();
        push("swap(f1) = f1", self.f1.swap_qs().first_difference(&self.f1));
        push("swap(f2) = -f2", self.f2.swap_qs().first_difference(&self.f2.neg()));
        push("swap(g1) = h1", h1_swap.first_difference(&self.h1));
        push("swap(g2) = h2", h2_swap.first_difference(&self.h2));
        push(
            "g1 - swap(g1) = f1 f2",
            self.g1.combine(&h1_swap, false).first_difference(&f1f2),
        );
        push(
            "swap(g2) - g2 = f1 f2",
            h2_swap.combine(&self.g2, false).first_difference(&f1f2),
        );
        push("e2 constant term is 1", {
            match self.e2.coefficient(0, 0, 0) {
                Ok(v) if v.is_one() => None,
                _ => Some(Exponent::new(0, 0, 0)),
            }
        });
        push(
            "e2 restricts to the weight-2 Eisenstein series of level 5",
            restriction_witness(&self.e2, &eisenstein_level5_weight2(TABLE_PRECISION)),
        );
        push("e2 is holomorphic", holomorphy_witness(&self.e2));
        push("phi4 is cuspidal", cusp_witness(&self.phi[3]));
        push(
            "restriction of f1 begins 1 + 3q + 4q^2 + 2q^3 + q^4 + 3q^5",
            restriction_witness(&self.f1, &[1, 3, 4, 2, 1, 3].map(rat)),
        );
        push(
            "restriction of f2 begins q - 2q^2 + 4q^3 - 3q^4 + q^5",
            restriction_witness(&self.f2, &[0, 1, -2, 4, -3, 1].map(rat)),
        );
        push(
            "h1 begins s - 5qs + s^2 + (-r^-1 + 7 - r)q^2 s + (-3r^-1 + 1 - 3r)qs^2 + 2s^3",
            prefix_witness(&self.h1, 3, &H1_PREFIX),
        );
        out
    }
}

/// Expansion of `h1` through total order 3.
const H1_PREFIX: [(u32, i32, u32, i64); 10] = [
    (0, 0, 1, 1),
    (1, 0, 1, -5),
    (0, 0, 2, 1),
    (2, -1, 1, -1),
    (2, 0, 1, 7),
    (2, 1, 1, -1),
    (1, -1, 2, -3),
    (1, 0, 2, 1),
    (1, 1, 2, -3),
    (0, 0, 3, 2),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub witness: Option<Exponent>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn b_symmetry_witness(s: &FourierSeries) -> Option<Exponent> {
    s.terms()
        .map(|(e, _)| *e)
        .find(|e| s.coeff(e.mirrored()).ok() != s.coeff(*e).ok())
}

/// First coefficient outside `a, c >= 0, b^2 <= 4ac`. The cone part is a
/// storage invariant, so this only fails on malformed data.
pub fn holomorphy_witness(s: &FourierSeries) -> Option<Exponent> {
    s.terms().map(|(e, _)| *e).find(|e| !e.in_cone())
}

/// First nonzero coefficient with `a = 0`, `c = 0` or `4ac = b^2`.
pub fn cusp_witness(s: &FourierSeries) -> Option<Exponent> {
    s.terms().map(|(e, _)| *e).find(|e| {
        let disc = 4 * e.a as i64 * e.c as i64 - (e.b as i64) * (e.b as i64);
        e.a == 0 || e.c == 0 || disc <= 0
    })
}

/// Compares the `s = 0` restriction with a prefix of `q`-coefficients.
pub fn restriction_witness(s: &FourierSeries, prefix: &[Rational]) -> Option<Exponent> {
    let r = s.restrict_s_zero();
    prefix
        .iter()
        .enumerate()
        .find(|(n, v)| r.get(*n) != Some(*v))
        .map(|(n, _)| Exponent::new(n as u32, 0, 0))
}

/// Compares every coefficient of total order `<= order` with a list of
/// expected values (unlisted coefficients must vanish).
fn prefix_witness(s: &FourierSeries, order: u32, expected: &[(u32, i32, u32, i64)]) -> Option<Exponent> {
    let reference = FourierSeries::from_terms(
        s.weight(),
        order,
        expected
            .iter()
            .map(|&(a, b, c, v)| (Exponent::new(a, b, c), rat(v))),
    )
    .ok()?;
    s.truncate(order).first_difference(&reference)
}

/// `1 + 6 Σ (σ(n) - 5σ(n/5)) q^n`, the normalized Eisenstein series of weight 2
/// on Γ0(5), through `q^n`.
pub fn eisenstein_level5_weight2(n: u32) -> Vec<Rational> {
    let sigma = |m: u32| -> i64 { (1..=m).filter(|d| m % d == 0).map(i64::from).sum() };
    (0..=n)
        .map(|m| {
            if m == 0 {
                return Rational::one();
            }
            let tail = if m % 5 == 0 { 5 * sigma(m / 5) } else { 0 };
            rat(6 * (sigma(m) - tail))
        })
        .collect()
}

/// True when every relation check passes.
pub fn all_relations_hold(set: &GeneratorSet) -> bool {
    set.relation_checks().iter().all(RelationCheck::passed)
}
