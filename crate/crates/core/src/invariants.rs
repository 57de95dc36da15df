//! Invariant theory of finite cyclic groups acting on
//! `C[F1, F2, G1, G2] ⊕ X_J · C[F1, F2, G1, G2]`.

use std::collections::HashMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{rank_rational, EchelonBasis};
use crate::polyring::{Gen, GradedPoly, Monomial, WEIGHTS};
use crate::{frac, rat, Error, Rational, Result};

/// Largest weight for which `X_J` may be treated as a free module generator
/// (the first product `X_J^2` has weight 18).
pub const MAX_FREE_WEIGHT: u32 = 17;

pub type Matrix4 = [[Rational; 4]; 4];

/// One group element: the substitution `x_i ↦ Σ_j m[i][j] x_j` on
/// `(F1, F2, G1, G2)` together with the sign by which it acts on `X_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: Matrix4,
    pub jac_sign: i32,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            matrix: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
            }),
            jac_sign: 1,
        }
    }

    pub fn from_integers(m: [[i64; 4]; 4], jac_sign: i32) -> Self {
        GroupElement {
            matrix: m.map(|row| row.map(rat)),
            jac_sign,
        }
    }

    /// Composite substitution: first `other`, then `self`.
    fn compose(&self, other: &Self) -> Self {
        let matrix = std::array::from_fn(|i| {
            std::array::from_fn(|k| {
                (0..4).fold(Rational::zero(), |acc, j| {
                    acc + &other.matrix[i][j] * &self.matrix[j][k]
                })
            })
        });
        GroupElement {
            matrix,
            jac_sign: self.jac_sign * other.jac_sign,
        }
    }

    fn respects_weights(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| (i < 2) == (j < 2) || self.matrix[i][j].is_zero()))
    }

    /// The substitution as images of the five generators.
    fn images(&self) -> [GradedPoly; 5] {
        std::array::from_fn(|i| {
            if i == 4 {
                return GradedPoly::var(Gen::XJ).scale(&rat(self.jac_sign as i64));
            }
            (0..4).fold(GradedPoly::zero(), |acc, j| {
                acc.add(&GradedPoly::var(Gen::ALL[j]).scale(&self.matrix[i][j]))
            })
        })
    }

    pub fn apply(&self, p: &GradedPoly) -> GradedPoly {
        p.substitute(&self.images())
    }

    fn block(&self, offset: usize) -> (Rational, Rational) {
        let m = &self.matrix;
        let (a, b, c, d) = (
            &m[offset][offset],
            &m[offset][offset + 1],
            &m[offset + 1][offset],
            &m[offset + 1][offset + 1],
        );
        (a + d, a * d - b * c)
    }
}

/// A cyclic group listed as `g^0, g^1, …, g^(n-1)`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    elements: Vec<GroupElement>,
}

impl GroupAction {
    /// The cyclic group generated by `g`. The generator must preserve the
    /// weight blocks and have order at most 64.
    pub fn cyclic(g: GroupElement) -> Result<Self> {
        if !g.respects_weights() {
            return Err(Error::Domain(
                "group element mixes weight-1 and weight-2 variables".into(),
            ));
        }
        if g.jac_sign.abs() != 1 {
            return Err(Error::Domain("character on X_J must be ±1".into()));
        }
        let id = GroupElement::identity();
        let mut elements = vec![id.clone()];
        let mut cur = g.clone();
        while cur != id {
            if elements.len() >= 64 {
                return Err(Error::Domain("group element has infinite or large order".into()));
            }
            elements.push(cur.clone());
            cur = cur.compose(&g);
        }
        Ok(GroupAction { elements })
    }

    pub fn eps2() -> Self {
        let g = GroupElement::from_integers(
            [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            -1,
        );
        Self::cyclic(g).expect("ε₂ has order 4")
    }

    pub fn eps4() -> Self {
        let g = GroupElement::from_integers(
            [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            1,
        );
        Self::cyclic(g).expect("ε₄ has order 2")
    }

    pub fn trivial() -> Self {
        GroupAction {
            elements: vec![GroupElement::identity()],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn fixes(&self, p: &GradedPoly) -> bool {
        self.elements.iter().all(|g| &g.apply(p) == p)
    }

    fn character_value(&self, index: usize, chi: Character) -> Result<Gaussian> {
        match chi {
            Character::Trivial => Ok(Gaussian::one()),
            Character::DetJ => Ok(Gaussian::from(rat(self.elements[index].jac_sign as i64))),
            Character::Power(j) => {
                let n = self.order();
                if 4 % n != 0 {
                    return Err(Error::Domain(format!(
                        "characters of a cyclic group of order {n} are not Gaussian"
                    )));
                }
                Ok(Gaussian::i_pow((4 / n) as u32 * j * index as u32))
            }
        }
    }

    /// Projection onto the `chi`-isotypic part; real characters only.
    fn project(&self, p: &GradedPoly, chi: Character) -> Result<GradedPoly> {
        let mut acc = GradedPoly::zero();
        for (k, g) in self.elements.iter().enumerate() {
            let c = self.character_value(k, chi)?;
            if !c.im.is_zero() {
                return Err(Error::Domain("Reynolds projection needs a real character".into()));
            }
            acc = acc.add(&g.apply(p).scale(&c.re));
        }
        Ok(acc.scale(&frac(1, self.order() as i64)))
    }
}

/// Character of the group: trivial, the action on `X_J`, or `g^m ↦ ζ_n^{jm}`
/// for a cyclic group of order `n` dividing 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Trivial,
    DetJ,
    Power(u32),
}

/// Gaussian rationals, enough for the characters of cyclic groups of order
/// dividing 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    fn one() -> Self {
        Gaussian::from(Rational::one())
    }

    fn i_pow(k: u32) -> Self {
        let (re, im) = [(1, 0), (0, 1), (-1, 0), (0, -1)][(k % 4) as usize];
        Gaussian {
            re: rat(re),
            im: rat(im),
        }
    }

    fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    fn scale(&self, s: &Rational) -> Self {
        Gaussian {
            re: &self.re * s,
            im: &self.im * s,
        }
    }
}

impl From<Rational> for Gaussian {
    fn from(re: Rational) -> Self {
        Gaussian {
            re,
            im: Rational::zero(),
        }
    }
}

/// Power series coefficients of `1 / p(t)` through `t^n`, with `p(0) = 1`.
fn inverse_series(p: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    out[0] = Rational::one();
    for k in 1..=n {
        let mut s = Rational::zero();
        for j in 1..p.len().min(k + 1) {
            s -= &p[j] * &out[k - j];
        }
        out[k] = s;
    }
    out
}

fn series_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len().min(y.len());
    (0..n)
        .map(|k| (0..=k).fold(Rational::zero(), |acc, j| acc + &x[j] * &y[k - j]))
        .collect()
}

fn to_dimension(v: &Gaussian) -> Result<u64> {
    if !v.im.is_zero() || !v.re.is_integer() || v.re.is_negative() {
        return Err(Error::Domain(format!(
            "Molien coefficient {} + {}i is not a dimension",
            v.re, v.im
        )));
    }
    v.re.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Domain("dimension overflow".into()))
}

/// Dimensions of the `chi`-isotypic part of `C[F1, F2, G1, G2]_d` for
/// `d = 0..=upto`, from `(1/|G|) Σ conj(χ(g)) / (det(1 - t A_g) det(1 - t^2 B_g))`.
pub fn molien_series(action: &GroupAction, chi: Character, upto: u32) -> Result<Vec<u64>> {
    let n = upto as usize;
    let mut total = vec![Gaussian::from(Rational::zero()); n + 1];
    for (k, g) in action.elements().iter().enumerate() {
        let (tr_a, det_a) = g.block(0);
        let (tr_b, det_b) = g.block(2);
        let lin = inverse_series(&[Rational::one(), -tr_a, det_a], n);
        let quad = inverse_series(
            &[Rational::one(), Rational::zero(), -tr_b, Rational::zero(), det_b],
            n,
        );
        let s = series_mul(&lin, &quad);
        let c = action.character_value(k, chi)?.conj();
        for (slot, x) in total.iter_mut().zip(&s) {
            let add = c.scale(x);
            slot.re += add.re;
            slot.im += add.im;
        }
    }
    let scale = frac(1, action.order() as i64);
    total.iter().map(|x| to_dimension(&x.scale(&scale))).collect()
}

/// Same dimensions as [`molien_series`], computed as ranks of Reynolds images
/// of monomial bases. Real characters only.
pub fn molien_by_reynolds(action: &GroupAction, chi: Character, upto: u32) -> Result<Vec<u64>> {
    (0..=upto)
        .map(|d| {
            let basis = monomials(d, false);
            let index = column_index(&basis);
            let rows = basis
                .iter()
                .map(|m| {
                    let p = action.project(&GradedPoly::term(*m, Rational::one()), chi)?;
                    Ok(coordinates(&p, &index))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(rank_rational(&rows) as u64)
        })
        .collect()
}

/// Number of monomials of weight `d` in `F1, F2, G1, G2`.
pub fn free_dimension(d: u32) -> u64 {
    monomials(d, false).len() as u64
}

/// Monomials of weight `d`, in canonical order; with `with_j`, also those
/// carrying one factor `X_J`.
pub fn monomials(d: u32, with_j: bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    let max_j = if with_j { 1 } else { 0 };
    for ej in 0..=max_j {
        let Some(rest) = d.checked_sub(ej * WEIGHTS[4]) else {
            continue;
        };
        for e3 in 0..=rest / 2 {
            for e4 in 0..=(rest / 2 - e3) {
                let lin = rest - 2 * (e3 + e4);
                for e1 in 0..=lin {
                    out.push(Monomial([e1, lin - e1, e3, e4, ej]));
                }
            }
        }
    }
    out.sort();
    out
}

fn column_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

fn coordinates(p: &GradedPoly, index: &HashMap<Monomial, usize>) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateOrder {
    Canonical,
    Reversed,
}

/// Weights of a minimal homogeneous generating set of the invariant ring
/// (trivial character on the whole module, `X_J` included), through weight
/// `upto`. Only the multiset is meaningful; candidates are tried in the given
/// order.
pub fn minimal_generator_degrees(
    action: &GroupAction,
    upto: u32,
    order: CandidateOrder,
) -> Result<Vec<u32>> {
    if upto > MAX_FREE_WEIGHT {
        return Err(Error::Domain(format!(
            "weights above {MAX_FREE_WEIGHT} involve X_J^2"
        )));
    }
    let mut invariant_bases: Vec<Vec<GradedPoly>> = vec![vec![GradedPoly::one()]];
    let mut generators: Vec<(u32, GradedPoly)> = Vec::new();
    for d in 1..=upto {
        let mut mons = monomials(d, true);
        if order == CandidateOrder::Reversed {
            mons.reverse();
        }
        let index = column_index(&mons);

        let mut span = EchelonBasis::new();
        let mut basis = Vec::new();
        for m in &mons {
            let p = action.project(&GradedPoly::term(*m, Rational::one()), Character::Trivial)?;
            if span.insert(&coordinates(&p, &index)) {
                basis.push(p);
            }
        }

        let mut decomposable = EchelonBasis::new();
        for (w, g) in &generators {
            for b in &invariant_bases[(d - w) as usize] {
                decomposable.insert(&coordinates(&g.mul(b), &index));
            }
        }
        for p in &basis {
            if decomposable.insert(&coordinates(p, &index)) {
                generators.push((d, p.clone()));
            }
        }
        invariant_bases.push(basis);
    }
    Ok(generators.into_iter().map(|(w, _)| w).collect())
}

/// Whether each polynomial is fixed by every element of the group.
pub fn check_invariance(polys: &[GradedPoly], action: &GroupAction) -> Vec<bool> {
    polys.iter().map(|p| action.fixes(p)).collect()
}
