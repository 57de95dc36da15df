//! Finite quadratic modules `L'/L`, their Weil representations over `Q(ζ40)`,
//! and dimensions of vector-valued modular forms.
//!
//! Conventions: `ρ(T) e_γ = e(-Q(γ)) e_γ` and
//! `ρ(S) e_γ = e(sig/8) |L'/L|^{-1/2} Σ_β e(⟨γ, β⟩) e_β`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::{mul_acc, reduce, Coords, CyclotomicNumber, DEGREE};
use crate::{frac, rat, Error, Rational, Result};

fn frac_part(r: &Rational) -> Rational {
    r - r.floor()
}

/// An element of `S^{-1} Z^n / Z^n`, coordinates reduced into `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset(Vec<Rational>);

impl Coset {
    pub fn new(coords: Vec<Rational>) -> Self {
        Coset(coords.iter().map(frac_part).collect())
    }

    pub fn zero(n: usize) -> Self {
        Coset(vec![Rational::zero(); n])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Coset::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Coset::new(self.0.iter().map(|a| -a).collect())
    }

    pub fn times(&self, k: i64) -> Self {
        Coset::new(self.0.iter().map(|a| a * rat(k)).collect())
    }
}

impl std::fmt::Display for Coset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `γ_n = (n/5, 1/2, 4n^{-1}/5)`, of norm `1/20`.
pub fn gamma(n: i64) -> Coset {
    Coset::new(vec![frac(n, 5), frac(1, 2), frac(4 * inverse_mod5(n).unwrap_or(0), 5)])
}

/// `α_n = (n/5, 1/2, 0)`, of norm `1/4`.
pub fn alpha(n: i64) -> Coset {
    Coset::new(vec![frac(n, 5), frac(1, 2), rat(0)])
}

/// `β_n = (0, 1/2, n/5)`, of norm `1/4`.
pub fn beta(n: i64) -> Coset {
    Coset::new(vec![rat(0), frac(1, 2), frac(n, 5)])
}

/// `δ_n = 2 γ_n`, of norm `1/5`.
pub fn delta(n: i64) -> Coset {
    gamma(n).times(2)
}

fn inverse_mod5(u: i64) -> Result<i64> {
    let r = u.rem_euclid(5);
    (1..5)
        .find(|v| (r * v) % 5 == 1)
        .ok_or(Error::NotAUnit(u))
}

/// The action of `ε_u` on the level-5 model: `(x1, x2, x3) ↦ (u x1, x2, u^{-1} x3)`.
pub fn eps_action(u: i64, g: &Coset) -> Result<Coset> {
    let inv = inverse_mod5(u)?;
    let c = g.coords();
    if c.len() != 3 {
        return Err(Error::ArgumentMismatch(
            "ε_u acts on the three-coordinate level-5 model".into(),
        ));
    }
    Ok(Coset::new(vec![&c[0] * rat(u), c[1].clone(), &c[2] * rat(inv)]))
}

#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    gram: Vec<Vec<i64>>,
    elements: Vec<Coset>,
    index: HashMap<Coset, usize>,
}

impl DiscriminantForm {
    /// The discriminant form of an even nondegenerate lattice with Gram matrix
    /// `gram`.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("Gram matrix must be square".into()));
        }
        for i in 0..n {
            if gram[i][i] % 2 != 0 {
                return Err(Error::Domain("lattice must be even".into()));
            }
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Domain("Gram matrix must be symmetric".into()));
                }
            }
        }
        let inv = rational_inverse(&gram).ok_or_else(|| Error::Domain("Gram matrix is singular".into()))?;
        let generators: Vec<Coset> = (0..n)
            .map(|j| Coset::new((0..n).map(|i| inv[i][j].clone()).collect()))
            .collect();
        let mut seen: Vec<Coset> = vec![Coset::zero(n)];
        let mut set: HashMap<Coset, ()> = HashMap::from([(Coset::zero(n), ())]);
        let mut queue = VecDeque::from([Coset::zero(n)]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.add(g);
                if set.insert(y.clone(), ()).is_none() {
                    seen.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        seen.sort();
        let index = seen.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(DiscriminantForm {
            gram,
            elements: seen,
            index,
        })
    }

    /// Gram matrix `[[0,0,5],[0,2,0],[5,0,0]]`, i.e. `U(5) ⊕ A1` in the order
    /// `(x1, x2, x3)` with `x1, x3` the `U(5)` pair.
    pub fn level_five() -> Self {
        Self::new(vec![vec![0, 0, 5], vec![0, 2, 0], vec![5, 0, 0]]).expect("valid Gram matrix")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Coset] {
        &self.elements
    }

    pub fn index_of(&self, g: &Coset) -> Option<usize> {
        self.index.get(g).copied()
    }

    fn form(&self, x: &Coset, y: &Coset) -> Rational {
        let (x, y) = (x.coords(), y.coords());
        let mut s = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if *g != 0 {
                    s += &x[i] * &y[j] * rat(*g);
                }
            }
        }
        s
    }

    /// `Q(γ) = γᵀSγ/2 mod 1`.
    pub fn q_value(&self, g: &Coset) -> Rational {
        frac_part(&(self.form(g, g) / rat(2)))
    }

    /// `⟨γ, β⟩ = γᵀSβ mod 1`.
    pub fn pairing(&self, x: &Coset, y: &Coset) -> Rational {
        frac_part(&self.form(x, y))
    }

    /// `Σ_γ e(Q(γ))`.
    pub fn gauss_sum(&self) -> Result<CyclotomicNumber> {
        self.elements.iter().try_fold(CyclotomicNumber::zero(), |acc, g| {
            Ok(acc.add(&CyclotomicNumber::e(&self.q_value(g))?))
        })
    }

    /// `√|L'/L|`.
    pub fn sqrt_order(&self) -> Result<CyclotomicNumber> {
        CyclotomicNumber::sqrt_integer(self.order() as i64)
    }

    /// The signature mod 8 from `Σ e(Q(γ)) = √|L'/L| · e(sig/8)`.
    pub fn milgram_signature(&self) -> Result<u32> {
        let g = self.gauss_sum()?;
        let root = self.sqrt_order()?;
        (0..8)
            .find(|&s| g == root.mul(&CyclotomicNumber::zeta(5 * s as i64)))
            .ok_or_else(|| Error::Domain("Gauss sum does not have modulus √|L'/L|".into()))
    }

    pub fn weil_t(&self) -> Result<WeilMatrix> {
        let n = self.order();
        let diag: Vec<CyclotomicNumber> = self
            .elements
            .iter()
            .map(|g| CyclotomicNumber::e(&-self.q_value(g)))
            .collect::<Result<_>>()?;
        Ok(WeilMatrix::from_fn(n, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                CyclotomicNumber::zero()
            }
        }))
    }

    pub fn weil_s(&self) -> Result<WeilMatrix> {
        let n = self.order();
        let sig = self.milgram_signature()?;
        let scalar = CyclotomicNumber::zeta(5 * sig as i64)
            .mul(&self.sqrt_order()?)
            .scale(&frac(1, n as i64));
        let mut phases = Vec::with_capacity(n * n);
        for b in &self.elements {
            for g in &self.elements {
                phases.push(CyclotomicNumber::e(&self.pairing(g, b))?);
            }
        }
        Ok(WeilMatrix::from_fn(n, |i, j| phases[i * n + j].mul(&scalar)))
    }

    /// Permutation `γ ↦ -γ` as an index map.
    pub fn negation(&self) -> Vec<usize> {
        self.elements
            .iter()
            .map(|g| self.index[&g.neg()])
            .collect()
    }

    /// Permutation induced by `ε_u` on the level-5 model.
    pub fn eps_permutation(&self, u: i64) -> Result<Vec<usize>> {
        self.elements
            .iter()
            .map(|g| {
                let h = eps_action(u, g)?;
                self.index_of(&h)
                    .ok_or_else(|| Error::Domain(format!("ε_{u} image {h} is not in the form")))
            })
            .collect()
    }
}

fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| rat(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Square matrix over `Q(ζ40)` stored as integral coordinates over one
/// common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilMatrix {
    n: usize,
    den: BigInt,
    num: Vec<Coords>,
}

impl WeilMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> CyclotomicNumber>(n: usize, mut f: F) -> Self {
        let entries: Vec<CyclotomicNumber> = (0..n * n).map(|k| f(k / n, k % n)).collect();
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denominator()));
        let num = entries
            .iter()
            .map(|x| {
                let factor = &den / x.denominator();
                std::array::from_fn(|i| &x.coords()[i] * &factor)
            })
            .collect();
        let mut m = WeilMatrix { n, den, num };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        let g = self
            .num
            .iter()
            .flat_map(|c| c.iter())
            .fold(self.den.clone(), |g, x| g.gcd(x));
        if g.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = if self.den.is_negative() { -g } else { g };
        if !g.is_one() {
            for c in self.num.iter_mut() {
                for x in c.iter_mut() {
                    *x /= &g;
                }
            }
            self.den /= &g;
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                CyclotomicNumber::one()
            } else {
                CyclotomicNumber::zero()
            }
        })
    }

    /// `P e_j = e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        Self::from_fn(n, |i, j| {
            if perm[j] == i {
                CyclotomicNumber::one()
            } else {
                CyclotomicNumber::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> CyclotomicNumber {
        CyclotomicNumber::new(self.num[i * self.n + j].clone(), self.den.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut num = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut buf = vec![BigInt::zero(); 2 * DEGREE - 1];
                for k in 0..n {
                    mul_acc(&mut buf, &self.num[i * n + k], &other.num[k * n + j]);
                }
                num.push(reduce(buf));
            }
        }
        let mut m = WeilMatrix {
            n,
            den: &self.den * &other.den,
            num,
        };
        m.normalize();
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        Self::from_fn(self.n, |i, j| self.entry(i, j).mul(c))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.entry(j, i).conj())
    }

    pub fn trace(&self) -> CyclotomicNumber {
        (0..self.n).fold(CyclotomicNumber::zero(), |acc, i| acc.add(&self.entry(i, i)))
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    /// First index pair where the matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        (0..self.n * self.n)
            .map(|k| (k / self.n, k % self.n))
            .find(|&(i, j)| self.entry(i, j) != other.entry(i, j))
    }
}

/// Outcome of the metaplectic relation checks, each with a witnessing matrix
/// index on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mp2Report {
    pub s_squared_equals_st_cubed: Option<(usize, usize)>,
    pub s_eighth_power_is_identity: Option<(usize, usize)>,
    pub s_unitary: Option<(usize, usize)>,
    pub t_unitary: Option<(usize, usize)>,
    /// `ρ(S)^2 e_γ = i^sig e_{-γ}`.
    pub s_squared_is_central: Option<(usize, usize)>,
}

impl Mp2Report {
    pub fn passed(&self) -> bool {
        self.s_squared_equals_st_cubed.is_none()
            && self.s_eighth_power_is_identity.is_none()
            && self.s_unitary.is_none()
            && self.t_unitary.is_none()
            && self.s_squared_is_central.is_none()
    }
}

pub fn verify_mp2_relations(df: &DiscriminantForm) -> Result<Mp2Report> {
    let s = df.weil_s()?;
    let t = df.weil_t()?;
    let n = df.order();
    let id = WeilMatrix::identity(n);
    let s2 = s.mul(&s);
    let st = s.mul(&t);
    let st3 = st.mul(&st).mul(&st);
    let s4 = s2.mul(&s2);
    let s8 = s4.mul(&s4);
    let sig = df.milgram_signature()?;
    let z = WeilMatrix::permutation(&df.negation()).scale(&CyclotomicNumber::zeta(10 * sig as i64));
    Ok(Mp2Report {
        s_squared_equals_st_cubed: s2.first_difference(&st3),
        s_eighth_power_is_identity: s8.first_difference(&id),
        s_unitary: s.mul(&s.conj_transpose()).first_difference(&id),
        t_unitary: t.mul(&t.conj_transpose()).first_difference(&id),
        s_squared_is_central: s2.first_difference(&z),
    })
}

/// Whether the permutation induced by `ε_u` commutes with `ρ(S)` and `ρ(T)`.
pub fn eps_intertwines(df: &DiscriminantForm, u: i64) -> Result<bool> {
    let p = WeilMatrix::permutation(&df.eps_permutation(u)?);
    let s = df.weil_s()?;
    let t = df.weil_t()?;
    Ok(p.mul(&s) == s.mul(&p) && p.mul(&t) == t.mul(&p))
}

/// The pieces of the dimension formula
/// `dim M_κ = d + dκ/12 - α(e(κ/4) ρ(S)) - α((e(κ/6) ρ(ST))^{-1}) - α(ρ(T))`
/// on the subspace `W` of `C[L'/L]` compatible with `Z = (-I, i)` and any
/// requested symmetries, where `α(A) = Σ β_j` over eigenvalues `e(β_j)`,
/// `0 <= β_j < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvmfDimension {
    pub weight: Rational,
    pub compatible_dim: usize,
    pub alpha_s: Rational,
    pub alpha_st: Rational,
    pub alpha_t: Rational,
    pub isotropic_orbits: usize,
    pub modular: u64,
    pub cusp: u64,
}

type SignedPerm = (Vec<usize>, i64);

fn compose(p: &SignedPerm, q: &SignedPerm) -> SignedPerm {
    (q.0.iter().map(|&i| p.0[i]).collect(), p.1 * q.1)
}

/// Closure of the generators; `None` if some permutation would need two
/// different signs (then no nonzero vector is compatible).
fn signed_closure(gens: &[SignedPerm]) -> Option<Vec<SignedPerm>> {
    let n = gens[0].0.len();
    let id: SignedPerm = ((0..n).collect(), 1);
    let mut seen: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(id.0.clone(), 1)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            match seen.get(&y.0) {
                Some(&sign) if sign != y.1 => return None,
                Some(_) => {}
                None => {
                    seen.insert(y.0.clone(), y.1);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// Sign by which `Z` acts on the forms of weight `κ`: `v(-γ) = i^{2κ+1} v(γ)`.
fn parity(kappa: &Rational) -> Result<i64> {
    let two_k = kappa * rat(2);
    if !two_k.is_integer() || two_k.to_integer().is_even() {
        return Err(Error::UnsupportedWeight(format!(
            "{kappa}: the representation has half-integral weight"
        )));
    }
    if kappa < &frac(5, 2) {
        return Err(Error::UnsupportedWeight(format!(
            "{kappa}: the dimension formula is only used for weights >= 5/2"
        )));
    }
    let e = (two_k.to_integer() + 1i32).to_i64().expect("small weight") / 2;
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

fn rational_of(x: &CyclotomicNumber, what: &str) -> Result<Rational> {
    x.to_rational()
        .ok_or_else(|| Error::Domain(format!("{what} is not rational")))
}

/// Dimension data for weight `κ` on the level-5 form, restricted to vectors
/// fixed by `ε_u` for each `u` in `units`.
pub fn vvmf_dimension_report(kappa: &Rational, units: &[i64]) -> Result<VvmfDimension> {
    let s_sign = parity(kappa)?;
    let df = DiscriminantForm::level_five();
    let mut gens: Vec<SignedPerm> = vec![(df.negation(), s_sign)];
    for &u in units {
        gens.push((df.eps_permutation(u)?, 1));
    }
    let n = df.order();
    let mut basis: Vec<(usize, Vec<i64>)> = Vec::new();
    if let Some(group) = signed_closure(&gens) {
        let mut covered = vec![false; n];
        for rep in 0..n {
            if covered[rep] {
                continue;
            }
            let mut v = vec![0i64; n];
            for (perm, sign) in &group {
                v[perm[rep]] += sign;
                covered[perm[rep]] = true;
            }
            if v.iter().any(|x| *x != 0) {
                basis.push((rep, v));
            }
        }
    }
    let d = basis.len();
    let restrict = |a: &WeilMatrix| -> Result<WeilMatrix> {
        let mut entries = vec![CyclotomicNumber::zero(); d * d];
        for (col, (_, w)) in basis.iter().enumerate() {
            for (row, (rep, w_row)) in basis.iter().enumerate() {
                let mut acc = CyclotomicNumber::zero();
                for (g, &c) in w.iter().enumerate() {
                    if c != 0 {
                        acc = acc.add(&a.entry(*rep, g).scale(&rat(c)));
                    }
                }
                entries[row * d + col] = acc.scale(&frac(1, w_row[*rep]));
            }
        }
        // The basis vectors must span an invariant subspace.
        for (col, (_, w)) in basis.iter().enumerate() {
            for g in 0..n {
                let direct = w
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .fold(CyclotomicNumber::zero(), |acc, (h, c)| {
                        acc.add(&a.entry(g, h).scale(&rat(*c)))
                    });
                let via = basis.iter().enumerate().fold(CyclotomicNumber::zero(), |acc, (row, (_, wr))| {
                    if wr[g] == 0 {
                        acc
                    } else {
                        acc.add(&entries[row * d + col].scale(&rat(wr[g])))
                    }
                });
                if direct != via {
                    return Err(Error::Domain("compatible subspace is not invariant".into()));
                }
            }
        }
        Ok(WeilMatrix::from_fn(d, |i, j| entries[i * d + j].clone()))
    };

    let qs: Vec<Rational> = basis.iter().map(|(rep, _)| df.q_value(&df.elements()[*rep])).collect();
    let isotropic_orbits = qs.iter().filter(|q| q.is_zero()).count();
    let alpha_t = qs.iter().fold(Rational::zero(), |acc, q| acc + frac_part(&-q));

    if d == 0 {
        return Ok(VvmfDimension {
            weight: kappa.clone(),
            compatible_dim: 0,
            alpha_s: Rational::zero(),
            alpha_st: Rational::zero(),
            alpha_t,
            isotropic_orbits,
            modular: 0,
            cusp: 0,
        });
    }

    let rs = restrict(&df.weil_s()?)?;
    let rt = restrict(&df.weil_t()?)?;
    let id = WeilMatrix::identity(d);

    let bs = rs.scale(&CyclotomicNumber::e(&(kappa / rat(4)))?);
    if !bs.mul(&bs).is_identity() {
        return Err(Error::Domain("e(κ/4) ρ(S) is not an involution".into()));
    }
    let tr = rational_of(&bs.trace(), "trace of e(κ/4) ρ(S)")?;
    let minus_one = (rat(d as i64) - tr) / rat(2);
    let alpha_s = minus_one / rat(2);

    // ρ(ST)^3 = ρ(S)^2 = i·s on W, so the eigenvalues are ν, νω, νω² with
    // ν = -i·s in Q(ζ40) and ω a primitive cube root of unity outside it.
    let c = rs.mul(&rt);
    let c2 = c.mul(&c);
    let theta0 = if s_sign == 1 { frac(3, 4) } else { frac(1, 4) };
    let nu = CyclotomicNumber::e(&theta0)?;
    if c2.mul(&c) != id.scale(&nu.pow(3)) {
        return Err(Error::Domain("ρ(ST)^3 is not scalar on the compatible subspace".into()));
    }
    let nu_bar = nu.conj();
    let projector_trace = rat(d as i64)
        + rational_of(&c.trace().mul(&nu_bar), "trace")?
        + rational_of(&c2.trace().mul(&nu_bar.pow(2)), "trace")?;
    let m0 = projector_trace / rat(3);
    let m_rest = (rat(d as i64) - &m0) / rat(2);
    if !m0.is_integer() || !m_rest.is_integer() {
        return Err(Error::Domain("eigenvalue multiplicities are not integers".into()));
    }
    let beta0 = frac_part(&(-(kappa / rat(6)) - &theta0));
    let alpha_st = &m0 * &beta0 + &m_rest * (Rational::one() - &beta0);

    let dim = rat(d as i64) + rat(d as i64) * kappa / rat(12) - &alpha_s - &alpha_st - &alpha_t;
    if !dim.is_integer() || dim.is_negative() {
        return Err(Error::Domain(format!("dimension formula gave {dim}")));
    }
    let modular = dim.to_integer().to_u64().expect("small dimension");
    Ok(VvmfDimension {
        weight: kappa.clone(),
        compatible_dim: d,
        alpha_s,
        alpha_st,
        alpha_t,
        isotropic_orbits,
        modular,
        cusp: modular.saturating_sub(isotropic_orbits as u64),
    })
}

/// `dim M_κ(ρ_L)` or `dim S_κ(ρ_L)` for half-integral `κ >= 5/2`.
pub fn vvmf_dimension(kappa: &Rational, cuspidal: bool) -> Result<u64> {
    let r = vvmf_dimension_report(kappa, &[])?;
    Ok(if cuspidal { r.cusp } else { r.modular })
}
