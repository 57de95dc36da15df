//! Antisymmetric `4×4` matrices with the Pfaffian as quadratic form, the
//! level-5 lattice `L ≅ U ⊕ U(5) ⊕ A1` inside `𝒥^⊥`, the embedding of the
//! Siegel upper half-space, and the matrices `ε_u`.
//!
//! Entries are labelled
//! `[[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]]`, so `pf = af - be + cd`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::weilrep::Coset;
use crate::{frac, rat, Error, Rational, Result};

pub type Mat4 = [[i64; 4]; 4];
pub type RatMat4 = [[Rational; 4]; 4];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AntisymMatrix {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
}

impl AntisymMatrix {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, f: Rational) -> Self {
        AntisymMatrix { a, b, c, d, e, f }
    }

    pub fn from_integers([a, b, c, d, e, f]: [i64; 6]) -> Self {
        Self::new(rat(a), rat(b), rat(c), rat(d), rat(e), rat(f))
    }

    /// A vector of `𝒥^⊥`, i.e. with `e = -b`.
    pub fn in_complement(a: Rational, b: Rational, c: Rational, d: Rational, f: Rational) -> Self {
        let e = -b.clone();
        Self::new(a, b, c, d, e, f)
    }

    pub fn zero() -> Self {
        Self::from_integers([0; 6])
    }

    pub fn entries(&self) -> [&Rational; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn to_matrix(&self) -> RatMat4 {
        let z = Rational::zero;
        [
            [z(), self.a.clone(), self.b.clone(), self.c.clone()],
            [-self.a.clone(), z(), self.d.clone(), self.e.clone()],
            [-self.b.clone(), -self.d.clone(), z(), self.f.clone()],
            [-self.c.clone(), -self.e.clone(), -self.f.clone(), z()],
        ]
    }

    pub fn from_matrix(m: &RatMat4) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if m[i][j] != -m[j][i].clone() {
                    return Err(Error::Domain(format!("matrix is not antisymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self::new(
            m[0][1].clone(),
            m[0][2].clone(),
            m[0][3].clone(),
            m[1][2].clone(),
            m[1][3].clone(),
            m[2][3].clone(),
        ))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.a + &other.a,
            &self.b + &other.b,
            &self.c + &other.c,
            &self.d + &other.d,
            &self.e + &other.e,
            &self.f + &other.f,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(
            &self.a * r,
            &self.b * r,
            &self.c * r,
            &self.d * r,
            &self.e * r,
            &self.f * r,
        )
    }

    pub fn pfaffian(&self) -> Rational {
        pfaffian(self)
    }

    pub fn in_complement_of_j(&self) -> bool {
        (&self.b + &self.e).is_zero()
    }

    /// Membership in `L`: integral, `a ≡ 0 (5)`, `b + e = 0`.
    pub fn in_lattice(&self) -> bool {
        self.in_complement_of_j()
            && self.entries().iter().all(|x| x.is_integer())
            && (self.a.to_integer() % 5i32).is_zero()
    }

    /// Membership in `L'`: `a, c, d ∈ Z`, `2b ∈ Z`, `5f ∈ Z`, `b + e = 0`.
    pub fn in_dual(&self) -> bool {
        self.in_complement_of_j()
            && self.a.is_integer()
            && self.c.is_integer()
            && self.d.is_integer()
            && (&self.b * rat(2)).is_integer()
            && (&self.f * rat(5)).is_integer()
    }

    /// The class in `L'/L` in the three-coordinate model
    /// `(x1, x2, x3) = (a/5, b, f) mod 1`.
    pub fn coset(&self) -> Result<Coset> {
        if !self.in_dual() {
            return Err(Error::Domain(format!("{self} is not in the dual lattice")));
        }
        Ok(Coset::new(vec![&self.a / rat(5), self.b.clone(), self.f.clone()]))
    }

    /// A representative in `L'` of a coset of the three-coordinate model.
    pub fn from_coset(g: &Coset) -> Result<Self> {
        let x = g.coords();
        if x.len() != 3 {
            return Err(Error::ArgumentMismatch("expected a three-coordinate coset".into()));
        }
        let v = Self::in_complement(&x[0] * rat(5), x[1].clone(), rat(0), rat(0), x[2].clone());
        if !v.in_dual() {
            return Err(Error::Domain(format!("{g} is not a coset of L'/L")));
        }
        Ok(v)
    }

    /// `AᵀXA`.
    pub fn conjugate(&self, a: &RatMat4) -> Self {
        let x = self.to_matrix();
        let at = transpose(a);
        Self::from_matrix(&mat_mul(&mat_mul(&at, &x), a)).expect("conjugation preserves antisymmetry")
    }
}

impl std::fmt::Display for AntisymMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[a={}, b={}, c={}, d={}, e={}, f={}]",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

pub fn pfaffian(m: &AntisymMatrix) -> Rational {
    &m.a * &m.f - &m.b * &m.e + &m.c * &m.d
}

/// `⟨x, y⟩ = pf(x + y) - pf(x) - pf(y)`.
pub fn bilinear(x: &AntisymMatrix, y: &AntisymMatrix) -> Rational {
    pfaffian(&x.add(y)) - pfaffian(x) - pfaffian(y)
}

/// `𝒥 = [[0,0,-1,0],[0,0,0,-1],[1,0,0,0],[0,1,0,0]]`.
pub fn j_matrix() -> AntisymMatrix {
    AntisymMatrix::from_integers([0, -1, 0, 0, -1, 0])
}

/// `Z = [[τ, z], [z, w]]` at a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiegelPoint {
    pub tau: Rational,
    pub z: Rational,
    pub w: Rational,
}

impl SiegelPoint {
    pub fn new(tau: Rational, z: Rational, w: Rational) -> Self {
        SiegelPoint { tau, z, w }
    }

    pub fn det(&self) -> Rational {
        &self.tau * &self.w - &self.z * &self.z
    }

    fn matrix(&self) -> [[Rational; 2]; 2] {
        [
            [self.tau.clone(), self.z.clone()],
            [self.z.clone(), self.w.clone()],
        ]
    }
}

/// `φ(Z)`: `a = 1, b = z, c = w, d = -τ, e = -z, f = τw - z²`.
pub fn phi_embed(p: &SiegelPoint) -> AntisymMatrix {
    AntisymMatrix::new(
        rat(1),
        p.z.clone(),
        p.w.clone(),
        -p.tau.clone(),
        -p.z.clone(),
        p.det(),
    )
}

/// Integer polynomials in `τ, z, w`.
type Poly3 = BTreeMap<[u32; 3], i64>;

fn poly3_mul(x: &Poly3, y: &Poly3) -> Poly3 {
    let mut out = Poly3::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let e = [ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]];
            *out.entry(e).or_default() += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly3_add(x: &Poly3, y: &Poly3, sign: i64) -> Poly3 {
    let mut out = x.clone();
    for (e, c) in y {
        *out.entry(*e).or_default() += sign * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `pf(φ(Z))` expanded symbolically; the nonzero terms as
/// `([deg τ, deg z, deg w], coefficient)`.
pub fn embedding_pfaffian_polynomial() -> Vec<([u32; 3], i64)> {
    let mono = |e: [u32; 3], c: i64| Poly3::from([(e, c)]);
    let one = mono([0, 0, 0], 1);
    let (tau, z, w) = (mono([1, 0, 0], 1), mono([0, 1, 0], 1), mono([0, 0, 1], 1));
    let neg = |p: &Poly3| p.iter().map(|(e, c)| (*e, -c)).collect::<Poly3>();
    let (a, b, c, d, e) = (one, z.clone(), w.clone(), neg(&tau), neg(&z));
    let f = poly3_add(&poly3_mul(&tau, &w), &poly3_mul(&z, &z), -1);
    let af = poly3_mul(&a, &f);
    let be = poly3_mul(&b, &e);
    let cd = poly3_mul(&c, &d);
    poly3_add(&poly3_add(&af, &be, -1), &cd, 1).into_iter().collect()
}

/// `⟨φ(Z), λ⟩`.
pub fn humbert_pairing(p: &SiegelPoint, lambda: &AntisymMatrix) -> Rational {
    bilinear(&phi_embed(p), lambda)
}

/// `a det(Z) - cτ + 2bz + dw + f` for `λ ∈ 𝒥^⊥`.
pub fn humbert_equation(p: &SiegelPoint, lambda: &AntisymMatrix) -> Result<Rational> {
    if !lambda.in_complement_of_j() {
        return Err(Error::Domain(format!("{lambda} is not orthogonal to 𝒥")));
    }
    let l = lambda;
    Ok(&l.a * p.det() - &l.c * &p.tau + rat(2) * &l.b * &p.z + &l.d * &p.w + &l.f)
}

/// `λ0 = (a, b, c, d, f) = (1, 5/2, 0, 0, -1)`, cutting out `det(Z) = 1 - 5z`.
pub fn humbert_lambda0() -> AntisymMatrix {
    AntisymMatrix::in_complement(rat(1), frac(5, 2), rat(0), rat(0), rat(-1))
}

/// `(a, b, c, d, f) = (0, 1, 1, 0, 0)`, cutting out `τ = 2z`.
pub fn diagonal_twice_lambda() -> AntisymMatrix {
    AntisymMatrix::in_complement(rat(0), rat(1), rat(1), rat(0), rat(0))
}

pub fn to_rational(m: &Mat4) -> RatMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| rat(m[i][j])))
}

pub fn transpose<T: Clone>(m: &[[T; 4]; 4]) -> [[T; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn mat_mul(x: &RatMat4, y: &RatMat4) -> RatMat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(Rational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
    })
}

pub fn int_mat_mul(x: &Mat4, y: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| x[i][k] * y[k][j]).sum()))
}

pub fn identity4() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)))
}

/// Determinant by cofactor expansion along the first row.
pub fn det4(m: &RatMat4) -> Rational {
    let minor = |col: usize| {
        let rows: Vec<Vec<&Rational>> = (1..4)
            .map(|i| (0..4).filter(|&j| j != col).map(|j| &m[i][j]).collect())
            .collect();
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    };
    (0..4).fold(Rational::zero(), |acc, j| {
        let t = &m[0][j] * minor(j);
        if j % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// `Mᵀ𝒥M = 𝒥`.
pub fn is_symplectic(m: &Mat4) -> bool {
    j_matrix().conjugate(&to_rational(m)) == j_matrix()
}

/// Symplectic with lower-left block divisible by 5.
pub fn in_gamma0_5(m: &Mat4) -> bool {
    is_symplectic(m) && (2..4).all(|i| (0..2).all(|j| m[i][j] % 5 == 0))
}

/// `[[A,B],[C,D]] ↦ [[Dᵀ,Bᵀ],[Cᵀ,Aᵀ]]`.
pub fn block_transpose(m: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (bi, bj) = (i / 2, j / 2);
            let (ri, rj) = (i % 2, j % 2);
            let (si, sj) = (1 - bj, 1 - bi);
            m[2 * si + rj][2 * sj + ri]
        })
    })
}

fn block(m: &Mat4, bi: usize, bj: usize) -> [[Rational; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| rat(m[2 * bi + i][2 * bj + j])))
}

type Mat2 = [[Rational; 2]; 2];

fn mul2(x: &Mat2, y: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j]))
}

fn add2(x: &Mat2, y: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &x[i][j] + &y[i][j]))
}

fn det2(x: &Mat2) -> Rational {
    &x[0][0] * &x[1][1] - &x[0][1] * &x[1][0]
}

/// `(M·Z, j(M; Z)) = ((AZ + B)(CZ + D)^{-1}, det(CZ + D))`.
pub fn mobius(m: &Mat4, p: &SiegelPoint) -> Result<(SiegelPoint, Rational)> {
    let z = p.matrix();
    let num = add2(&mul2(&block(m, 0, 0), &z), &block(m, 0, 1));
    let den = add2(&mul2(&block(m, 1, 0), &z), &block(m, 1, 1));
    let j = det2(&den);
    if j.is_zero() {
        return Err(Error::SingularAutomorphy);
    }
    let inv: Mat2 = [
        [&den[1][1] / &j, -&den[0][1] / &j],
        [-&den[1][0] / &j, &den[0][0] / &j],
    ];
    let r = mul2(&num, &inv);
    if r[0][1] != r[1][0] {
        return Err(Error::Domain("image point is not symmetric".into()));
    }
    Ok((SiegelPoint::new(r[0][0].clone(), r[0][1].clone(), r[1][1].clone()), j))
}

/// Both sides of `Mᵀ φ(Z) M = j(M♯; Z) φ(M♯·Z)`, `M♯` the block transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformCheck {
    pub lhs: AntisymMatrix,
    pub rhs: AntisymMatrix,
}

impl TransformCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_transform(m: &Mat4, p: &SiegelPoint) -> Result<TransformCheck> {
    if !is_symplectic(m) {
        return Err(Error::NotSymplectic);
    }
    let sharp = block_transpose(m);
    let (image, j) = mobius(&sharp, p)?;
    Ok(TransformCheck {
        lhs: phi_embed(p).conjugate(&to_rational(m)),
        rhs: phi_embed(&image).scale(&j),
    })
}

/// `ε_u = [[u,0,b,0],[0,1,0,0],[5,0,u*,0],[0,0,0,1]]` with `u` reduced into
/// `1..5`, `u*` its inverse in `1..5` and `b = (u u* - 1)/5`.
pub fn epsilon_u(u: i64) -> Result<Mat4> {
    let r = u.rem_euclid(5);
    let inv = (1..5).find(|v| (r * v) % 5 == 1).ok_or(Error::NotAUnit(u))?;
    let b = (r * inv - 1) / 5;
    Ok([[r, 0, b, 0], [0, 1, 0, 0], [5, 0, inv, 0], [0, 0, 0, 1]])
}

/// The induced map on `L'/L`: `X ↦ MᵀXM` on a representative.
pub fn coset_action(m: &Mat4, g: &Coset) -> Result<Coset> {
    AntisymMatrix::from_coset(g)?.conjugate(&to_rational(m)).coset()
}

/// Basis of `L`: `a = 5`; `b = 1, e = -1`; `c = 1`; `d = 1`; `f = 1`.
pub fn lattice_basis() -> [AntisymMatrix; 5] {
    [
        AntisymMatrix::from_integers([5, 0, 0, 0, 0, 0]),
        AntisymMatrix::from_integers([0, 1, 0, 0, -1, 0]),
        AntisymMatrix::from_integers([0, 0, 1, 0, 0, 0]),
        AntisymMatrix::from_integers([0, 0, 0, 1, 0, 0]),
        AntisymMatrix::from_integers([0, 0, 0, 0, 0, 1]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramReport {
    pub gram: Vec<Vec<i64>>,
    pub determinant: i64,
    /// `(positive, negative)` eigenvalue counts.
    pub signature: (usize, usize),
}

/// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier, lowest
/// degree first.
pub fn characteristic_polynomial(m: &[Vec<i64>]) -> Vec<Rational> {
    let n = m.len();
    let a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).fold(Rational::zero(), |acc, l| acc + &a[i][l] * &mk[l][j]);
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am_trace = (0..n).fold(Rational::zero(), |acc, i| {
            acc + (0..n).fold(Rational::zero(), |s, l| s + &a[i][l] * &mk[l][i])
        });
        coeffs[n - k] = -am_trace / rat(k as i64);
    }
    coeffs
}

fn sign_changes(c: &[Rational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Signature of a nondegenerate symmetric integer matrix. The characteristic
/// polynomial is real-rooted, so Descartes' rule counts roots exactly.
pub fn signature(m: &[Vec<i64>]) -> (usize, usize) {
    let p = characteristic_polynomial(m);
    let mirrored: Vec<Rational> = p
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    (sign_changes(&p), sign_changes(&mirrored))
}

pub fn gram_of_l() -> GramReport {
    let basis = lattice_basis();
    let gram: Vec<Vec<i64>> = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| {
                    let v = bilinear(x, y);
                    assert!(v.is_integer(), "lattice is integral");
                    i64::try_from(v.to_integer()).expect("small entry")
                })
                .collect()
        })
        .collect();
    let p = characteristic_polynomial(&gram);
    let det = if gram.len() % 2 == 0 { p[0].clone() } else { -p[0].clone() };
    GramReport {
        determinant: i64::try_from(det.to_integer()).expect("small determinant"),
        signature: signature(&gram),
        gram,
    }
}

fn random_symmetric<R: Rng>(rng: &mut R, bound: i64) -> [[i64; 2]; 2] {
    let (x, y, z) = (
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    );
    [[x, y], [y, z]]
}

fn from_blocks(a: [[i64; 2]; 2], b: [[i64; 2]; 2], c: [[i64; 2]; 2], d: [[i64; 2]; 2]) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let blk = match (i / 2, j / 2) {
                (0, 0) => &a,
                (0, 1) => &b,
                (1, 0) => &c,
                _ => &d,
            };
            blk[i % 2][j % 2]
        })
    })
}

/// A random word of length `len` in generators of `Γ0(5)`: translations
/// `[[I,S],[0,I]]`, `[[I,0],[5S,I]]`, `[[U,0],[0,U^{-T}]]` and `ε_u`.
pub fn random_gamma0_5<R: Rng>(rng: &mut R, len: usize) -> Mat4 {
    const UNIMODULAR: [([[i64; 2]; 2], [[i64; 2]; 2]); 4] = [
        ([[1, 1], [0, 1]], [[1, 0], [-1, 1]]),
        ([[1, 0], [1, 1]], [[1, -1], [0, 1]]),
        ([[0, 1], [1, 0]], [[0, 1], [1, 0]]),
        ([[-1, 0], [0, 1]], [[-1, 0], [0, 1]]),
    ];
    let id = [[1, 0], [0, 1]];
    let zero = [[0, 0], [0, 0]];
    let mut m = identity4();
    for _ in 0..len {
        let g = match rng.gen_range(0..4) {
            0 => from_blocks(id, random_symmetric(rng, 2), zero, id),
            1 => {
                let s = random_symmetric(rng, 1);
                let c = s.map(|r| r.map(|x| 5 * x));
                from_blocks(id, zero, c, id)
            }
            2 => {
                let (u, u_inv_t) = UNIMODULAR[rng.gen_range(0..UNIMODULAR.len())];
                from_blocks(u, zero, zero, u_inv_t)
            }
            _ => epsilon_u(rng.gen_range(1..5)).expect("unit"),
        };
        m = int_mat_mul(&m, &g);
    }
    m
}

/// A random rational point with small numerators and denominators.
pub fn random_point<R: Rng>(rng: &mut R) -> SiegelPoint {
    let mut q = || frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    SiegelPoint::new(q(), q(), q())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilrep::{alpha, delta, gamma};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pfaffian_values() {
        assert_eq!(pfaffian(&AntisymMatrix::zero()), rat(0));
        assert_eq!(pfaffian(&j_matrix()), rat(-1));
        let x = AntisymMatrix::from_integers([1, 2, 3, 4, 5, 6]);
        assert_eq!(x.pfaffian(), rat(6 - 10 + 12));
        assert_eq!(AntisymMatrix::from_matrix(&x.to_matrix()).unwrap(), x);
    }

    #[test]
    fn bilinear_form_is_twice_pf_on_diagonal() {
        for v in lattice_basis() {
            assert_eq!(bilinear(&v, &v), rat(2) * v.pfaffian());
        }
    }

    #[test]
    fn embedding_is_isotropic() {
        assert!(embedding_pfaffian_polynomial().is_empty());
        let p = SiegelPoint::new(frac(1, 2), frac(-1, 3), rat(2));
        assert_eq!(phi_embed(&p).pfaffian(), rat(0));
        assert!(phi_embed(&p).in_complement_of_j());
        let origin = phi_embed(&SiegelPoint::new(rat(0), rat(0), rat(0)));
        assert_eq!(origin, AntisymMatrix::from_integers([1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn humbert_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let l0 = humbert_lambda0();
        for _ in 0..20 {
            let p = random_point(&mut rng);
            let lhs = humbert_pairing(&p, &l0);
            assert_eq!(lhs, humbert_equation(&p, &l0).unwrap());
            assert_eq!(lhs, p.det() - rat(1) + rat(5) * &p.z);
            let t = humbert_pairing(&p, &diagonal_twice_lambda());
            assert_eq!(t, rat(2) * &p.z - &p.tau);
        }
        assert!(l0.in_dual());
        assert_eq!(l0.pfaffian(), frac(21, 4));
        assert_eq!(l0.coset().unwrap(), alpha(1));
        assert_eq!(diagonal_twice_lambda().pfaffian(), rat(1));
        assert!(humbert_equation(&SiegelPoint::new(rat(0), rat(0), rat(0)), &j_matrix()).is_err());
    }

    #[test]
    fn epsilon_matrices() {
        let e2 = epsilon_u(2).unwrap();
        assert_eq!(e2, [[2, 0, 1, 0], [0, 1, 0, 0], [5, 0, 3, 0], [0, 0, 0, 1]]);
        for u in 1..5 {
            assert!(in_gamma0_5(&epsilon_u(u).unwrap()));
        }
        assert_eq!(epsilon_u(1).unwrap()[0], [1, 0, 0, 0]);
        assert_eq!(epsilon_u(10), Err(Error::NotAUnit(10)));
    }

    #[test]
    fn transform_identity() {
        let id = identity4();
        let p = SiegelPoint::new(rat(2), rat(1), rat(3));
        assert!(check_transform(&id, &p).unwrap().holds());
        assert!(check_transform(&epsilon_u(2).unwrap(), &p).unwrap().holds());
        let mut bad = id;
        bad[0][1] = 1;
        assert_eq!(check_transform(&bad, &p), Err(Error::NotSymplectic));
        // CZ + D is singular at this point.
        let m = from_blocks([[1, 0], [0, 1]], [[0, 0], [0, 0]], [[5, 0], [0, 0]], [[1, 0], [0, 1]]);
        let sing = SiegelPoint::new(frac(-1, 5), rat(0), rat(1));
        assert_eq!(check_transform(&m, &sing), Err(Error::SingularAutomorphy));
    }

    #[test]
    fn block_transpose_is_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let m = random_gamma0_5(&mut rng, 5);
            assert!(in_gamma0_5(&m));
            assert_eq!(block_transpose(&block_transpose(&m)), m);
            assert!(in_gamma0_5(&block_transpose(&m)));
        }
    }

    #[test]
    fn coset_actions() {
        let e2 = epsilon_u(2).unwrap();
        assert_eq!(coset_action(&e2, &gamma(1)).unwrap(), gamma(2));
        assert_eq!(coset_action(&e2, &delta(1)).unwrap(), delta(2));
        assert_eq!(coset_action(&epsilon_u(1).unwrap(), &gamma(3)).unwrap(), gamma(3));
    }

    #[test]
    fn gram_matrix() {
        let r = gram_of_l();
        assert_eq!(
            r.gram,
            vec![
                vec![0, 0, 0, 0, 5],
                vec![0, 2, 0, 0, 0],
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0],
                vec![5, 0, 0, 0, 0],
            ]
        );
        assert_eq!(r.determinant.abs(), 50);
        assert_eq!(r.signature, (3, 2));
        assert!(lattice_basis().iter().all(AntisymMatrix::in_lattice));
    }

    #[test]
    fn characteristic_polynomial_of_small_matrix() {
        // [[2,1],[1,2]]: x^2 - 4x + 3
        assert_eq!(
            characteristic_polynomial(&[vec![2, 1], vec![1, 2]]),
            vec![rat(3), rat(-4), rat(1)]
        );
        assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), (1, 1));
        assert_eq!(signature(&[vec![-2]]), (0, 1));
    }
}
