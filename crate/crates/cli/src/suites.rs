use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siegel5_core::gendata::{GENERATOR_TABLE_SHA256, TABLE_PRECISION};
use siegel5_core::hilbert::{bi_consistency, is_palindromic, siegel_series, NUMERATOR_FACTOR, DIMENSION_TABLE};
use siegel5_core::invariants::{
    free_dimension, minimal_generator_degrees, molien_by_reynolds, molien_series, CandidateOrder,
    Character, GroupAction,
};
use siegel5_core::jacobian::jacobian_square_check;
use siegel5_core::lattice::{
    check_transform, coset_action, det4, embedding_pfaffian_polynomial, epsilon_u, gram_of_l,
    humbert_equation, humbert_lambda0, humbert_pairing, in_gamma0_5, random_gamma0_5, random_point,
    AntisymMatrix, RatMat4,
};
use siegel5_core::polyring::{e2_poly, poly_divide, poly_eval, Gen, JACOBIAN_SQUARE_SHA256};
use siegel5_core::ranks::weight_rank;
use siegel5_core::weilrep::{
    alpha, beta, delta, eps_action, eps_intertwines, gamma, verify_mp2_relations, vvmf_dimension_report,
    DiscriminantForm,
};
use siegel5_core::{frac, rat, Error, GradedPoly};

use crate::data::{Dataset, GENERATOR_FILE, JACOBIAN_SQUARE_FILE};
use crate::report::{Check, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Data,
    Relations,
    Jacobian,
    Molien,
    Hilbert,
    Rank,
    Weilrep,
    Lattice,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Data,
        Suite::Relations,
        Suite::Jacobian,
        Suite::Molien,
        Suite::Hilbert,
        Suite::Rank,
        Suite::Weilrep,
        Suite::Lattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Data => "data",
            Suite::Relations => "relations",
            Suite::Jacobian => "jacobian",
            Suite::Molien => "molien",
            Suite::Hilbert => "hilbert",
            Suite::Rank => "rank",
            Suite::Weilrep => "weilrep",
            Suite::Lattice => "lattice",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }

    pub fn run(self, ds: &Dataset) -> SuiteReport {
        let checks = match self {
            Suite::All => unreachable!("expanded before running"),
            Suite::Data => data(ds),
            Suite::Relations => relations(ds),
            Suite::Jacobian => jacobian(ds),
            Suite::Molien => molien(),
            Suite::Hilbert => hilbert(),
            Suite::Rank => rank(ds),
            Suite::Weilrep => weilrep(),
            Suite::Lattice => lattice(),
        };
        SuiteReport {
            suite: self.name(),
            checks,
        }
    }
}

fn is_data_check(name: &str) -> bool {
    name.starts_with("b-symmetry") || (name.starts_with("swap(") && name.contains(") = "))
}

fn data(ds: &Dataset) -> Vec<Check> {
    let mut out = vec![
        Check::expect_eq(
            format!("checksum of {GENERATOR_FILE}"),
            ds.checksums[GENERATOR_FILE].as_str(),
            GENERATOR_TABLE_SHA256,
        ),
        Check::expect_eq(
            format!("checksum of {JACOBIAN_SQUARE_FILE}"),
            ds.checksums[JACOBIAN_SQUARE_FILE].as_str(),
            JACOBIAN_SQUARE_SHA256,
        ),
        Check::expect_eq("generator table has 112 rows", ds.generator_rows, 112),
        Check::expect_eq("J^2 polynomial has 116 terms", ds.jacobian_square.len(), 116),
        Check::expect_eq(
            "J^2 polynomial is homogeneous of weight 18",
            ds.jacobian_square.homogeneous_weight().ok().flatten(),
            Some(18),
        ),
    ];
    out.extend(
        ds.gens
            .relation_checks()
            .into_iter()
            .filter(|c| is_data_check(c.name))
            .map(|c| Check::from_witness(c.name, c.witness)),
    );
    out
}

fn relations(ds: &Dataset) -> Vec<Check> {
    let mut out: Vec<Check> = ds
        .gens
        .relation_checks()
        .into_iter()
        .filter(|c| !is_data_check(c.name))
        .map(|c| Check::from_witness(c.name, c.witness))
        .collect();
    let id = "e2 = F1^2 + F2^2 - 4 G1 - 4 G2 as a polynomial in the basic forms";
    out.push(match poly_eval(&e2_poly(), &ds.gens) {
        Ok(s) => Check::from_witness(id, s.truncate(TABLE_PRECISION).first_difference(&ds.gens.e2)),
        Err(e) => Check::error(id, e),
    });
    out
}

fn jacobian(ds: &Dataset) -> Vec<Check> {
    let j = &ds.gens.j;
    let mut out = vec![Check::from_witness(
        "J is nonzero",
        j.is_zero().then_some("every coefficient vanishes"),
    )];
    out.push(Check::expect_eq(
        "J(2,-1,2) = 1",
        j.coefficient(2, -1, 2).ok(),
        Some(rat(1)),
    ));
    let p = &ds.jacobian_square;
    match jacobian_square_check(j, p, &ds.gens) {
        Ok(r) => {
            let detail = format!(
                "compared through a+c <= {}, {} nonzero coefficients",
                r.compared_through, r.nonzero_coefficients
            );
            let witness = match (&r.lambda, r.witness) {
                (None, _) => Some("no nonzero coefficient determines lambda".to_string()),
                (_, Some(e)) => Some(e.to_string()),
                _ => None,
            };
            out.push(Check::from_witness("J^2 = lambda P_J", witness).with_detail(detail));
            out.push(Check::expect_eq(
                "lambda = 1",
                r.lambda.map(|l| l.to_string()),
                Some("1".to_string()),
            ));
        }
        Err(e) => out.push(Check::error("J^2 = lambda P_J", e)),
    }
    out.push(Check::from_witness(
        "P_J is fixed by eps2",
        (p.apply_eps2() != *p).then_some("eps2 moves P_J"),
    ));
    let divisor = GradedPoly::var(Gen::G1).add(&GradedPoly::var(Gen::G2));
    match poly_divide(p, &divisor) {
        Ok((q, exact)) => {
            out.push(Check::from_witness(
                "G1 + G2 divides P_J",
                (!exact || q.mul(&divisor) != *p).then_some("nonzero remainder"),
            ));
            out.push(Check::from_witness(
                "P_J / (G1 + G2) is fixed by eps2",
                (q.apply_eps2() != q).then_some("eps2 moves the quotient"),
            ));
        }
        Err(e) => out.push(Check::error("G1 + G2 divides P_J", e)),
    }
    out
}

const MOLIEN_WEIGHT: u32 = 15;

fn first_mismatch(x: &[u64], y: &[u64]) -> Option<String> {
    x.iter()
        .zip(y)
        .position(|(a, b)| a != b)
        .map(|k| format!("weight {k}: {} vs {}", x[k], y[k]))
}

fn molien() -> Vec<Check> {
    let mut out = Vec::new();
    let groups = [("eps2", GroupAction::eps2()), ("eps4", GroupAction::eps4())];
    for (gname, action) in &groups {
        for (cname, chi) in [("trivial", Character::Trivial), ("det J", Character::DetJ)] {
            let id = format!("Molien formula = Reynolds ranks through weight {MOLIEN_WEIGHT} ({gname}, {cname})");
            let check = match (
                molien_series(action, chi, MOLIEN_WEIGHT),
                molien_by_reynolds(action, chi, MOLIEN_WEIGHT),
            ) {
                (Ok(x), Ok(y)) => Check::from_witness(id, first_mismatch(&x, &y)),
                (Err(e), _) | (_, Err(e)) => Check::error(id, e),
            };
            out.push(check);
        }
    }
    let eps2 = &groups[0].1;
    let id = "isotypic parts of eps2 sum to the free dimension";
    out.push(
        match (0..4)
            .map(|j| molien_series(eps2, Character::Power(j), MOLIEN_WEIGHT))
            .collect::<Result<Vec<_>, Error>>()
        {
            Ok(parts) => Check::from_witness(
                id,
                (0..=MOLIEN_WEIGHT)
                    .find(|&d| parts.iter().map(|p| p[d as usize]).sum::<u64>() != free_dimension(d))
                    .map(|d| format!("weight {d}")),
            ),
            Err(e) => Check::error(id, e),
        },
    );
    for (gname, action, upto, want) in [
        ("eps2", &groups[0].1, 15, vec![2, 2, 4, 4, 4, 4, 4, 11, 11, 11]),
        ("eps4", &groups[1].1, 15, vec![2, 2, 2, 2, 2, 9]),
    ] {
        for order in [CandidateOrder::Canonical, CandidateOrder::Reversed] {
            let id = format!("minimal generator weights of the {gname}-invariants ({order:?} candidates)");
            out.push(match minimal_generator_degrees(action, upto, order) {
                Ok(d) => Check::expect_eq(id, d, want.clone()),
                Err(e) => Check::error(id, e),
            });
        }
    }
    out
}

fn hilbert() -> Vec<Check> {
    let mut out = Vec::new();
    match siegel_series().expand(19) {
        Ok(c) => {
            let bad = DIMENSION_TABLE
                .iter()
                .find(|(k, d)| c[*k as usize].to_u64() != Some(*d))
                .map(|(k, d)| format!("k = {k}: {} vs {d}", c[*k as usize]));
            out.push(Check::from_witness("series reproduces the dimension table for 1 <= k <= 19", bad));
        }
        Err(e) => out.push(Check::error("series reproduces the dimension table for 1 <= k <= 19", e)),
    }
    out.push(Check::from_witness(
        "numerator factor is palindromic of degree 14",
        (!is_palindromic(&NUMERATOR_FACTOR) || NUMERATOR_FACTOR.len() != 15).then_some("shape"),
    ));
    match bi_consistency(30) {
        Ok(rows) => {
            out.push(Check::from_witness(
                "implied Siegel cusp dimensions are >= 0 for even 4 <= k <= 30",
                rows.iter()
                    .find(|r| !r.consistent())
                    .map(|r| format!("k = {}: {}", r.k, r.implied_cusp_dim)),
            ));
            out.push(Check::expect_eq(
                "implied cusp dimension at k = 4 is 1",
                rows.first().map(|r| r.implied_cusp_dim),
                Some(1),
            ));
        }
        Err(e) => out.push(Check::error("Böcherer–Ibukiyama consistency", e)),
    }
    out
}

pub const RANK_WEIGHTS: [u32; 6] = [2, 4, 6, 8, 10, 11];

fn rank(ds: &Dataset) -> Vec<Check> {
    RANK_WEIGHTS
        .iter()
        .map(|&k| {
            let id = format!("rank of weight-{k} monomials equals dim M_{k}");
            match weight_rank(&ds.gens, k, TABLE_PRECISION) {
                Ok(r) => Check::expect_eq(id, r.certified_rank as u64, r.expected).with_detail(format!(
                    "{} monomials, plain rank {}, certified rank {}",
                    r.monomials, r.plain_rank, r.certified_rank
                )),
                Err(e) => Check::error(id, e),
            }
        })
        .collect()
}

fn weilrep() -> Vec<Check> {
    let df = DiscriminantForm::level_five();
    let mut out = vec![Check::expect_eq("L'/L has 50 elements", df.order(), 50)];
    out.push(match df.milgram_signature() {
        Ok(s) => Check::expect_eq("Milgram signature is 1 mod 8", s, 1),
        Err(e) => Check::error("Milgram signature is 1 mod 8", e),
    });
    for (family, f, q) in [
        ("gamma_n", gamma as fn(i64) -> _, frac(1, 20)),
        ("alpha_n", alpha, frac(1, 4)),
        ("beta_n", beta, frac(1, 4)),
        ("delta_n", delta, frac(1, 5)),
    ] {
        out.push(Check::from_witness(
            format!("Q({family}) = {q} for n = 1..4"),
            (1..5).find(|&n| df.q_value(&f(n)) != q).map(|n| format!("n = {n}")),
        ));
    }
    match verify_mp2_relations(&df) {
        Ok(r) => {
            let idx = |w: Option<(usize, usize)>| w.map(|(i, j)| format!("entry ({i}, {j})"));
            out.push(Check::from_witness("rho(S)^2 = (rho(S) rho(T))^3", idx(r.s_squared_equals_st_cubed)));
            out.push(Check::from_witness("rho(S)^8 = I", idx(r.s_eighth_power_is_identity)));
            out.push(Check::from_witness("rho(S) is unitary", idx(r.s_unitary)));
            out.push(Check::from_witness("rho(T) is unitary", idx(r.t_unitary)));
            out.push(Check::from_witness("rho(S)^2 = i^sig (gamma -> -gamma)", idx(r.s_squared_is_central)));
        }
        Err(e) => out.push(Check::error("metaplectic relations", e)),
    }
    out.push(Check::expect_eq("eps2(gamma1) = gamma2", eps_action(2, &gamma(1)).ok(), Some(gamma(2))));
    out.push(Check::from_witness(
        "eps_u preserves Q for u = 1..4",
        (1..5)
            .flat_map(|u| df.elements().iter().map(move |g| (u, g)))
            .find(|(u, g)| eps_action(*u, g).map(|h| df.q_value(&h)).ok() != Some(df.q_value(g)))
            .map(|(u, g)| format!("u = {u}, gamma = {g}")),
    ));
    for u in [2, 3] {
        let id = format!("eps{u} permutation commutes with rho(S) and rho(T)");
        out.push(match eps_intertwines(&df, u) {
            Ok(ok) => Check::from_witness(id, (!ok).then_some("matrices differ")),
            Err(e) => Check::error(id, e),
        });
    }
    match vvmf_dimension_report(&frac(7, 2), &[]) {
        Ok(r) => {
            out.push(Check::expect_eq("dim M_{7/2}(rho_L) = 7", r.modular, 7));
            out.push(Check::expect_eq("dim S_{7/2}(rho_L) = 2", r.cusp, 2));
        }
        Err(e) => out.push(Check::error("dim M_{7/2}(rho_L) = 7", e)),
    }
    out.push(match vvmf_dimension_report(&frac(7, 2), &[2]) {
        Ok(r) => Check::expect_eq("eps2-fixed part of M_{7/2}(rho_L) has dimension 4", r.modular, 4),
        Err(e) => Check::error("eps2-fixed part of M_{7/2}(rho_L) has dimension 4", e),
    });
    out
}

pub const LATTICE_SEED: u64 = 0x5_1e9e1;

fn lattice() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(LATTICE_SEED);
    let mut out = Vec::new();
    let bad = (0..50).find_map(|i| {
        let a: RatMat4 = std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.gen_range(-4..=4))));
        let x = AntisymMatrix::from_integers(std::array::from_fn(|_| rng.gen_range(-9..=9)));
        (x.conjugate(&a).pfaffian() != det4(&a) * x.pfaffian()).then(|| format!("sample {i}"))
    });
    out.push(Check::from_witness("pf(A^T X A) = det(A) pf(X) on 50 random A", bad));

    let mut witness = None;
    let mut checked = 0;
    while checked < 20 && witness.is_none() {
        let m = random_gamma0_5(&mut rng, 6);
        let p = random_point(&mut rng);
        if !in_gamma0_5(&m) {
            witness = Some(format!("{m:?} is not in Gamma0(5)"));
            break;
        }
        match check_transform(&m, &p) {
            Ok(r) if r.holds() => checked += 1,
            Ok(r) => witness = Some(format!("{m:?}: {} vs {}", r.lhs, r.rhs)),
            Err(Error::SingularAutomorphy) => {}
            Err(e) => witness = Some(e.to_string()),
        }
    }
    out.push(Check::from_witness(
        "M^T phi(Z) M = j phi(M.Z) at 20 random level-5 matrices",
        witness,
    ));

    let g = gram_of_l();
    out.push(Check::expect_eq("|det| of the Gram matrix of L is 50", g.determinant.abs(), 50));
    out.push(Check::expect_eq("signature of L is (3, 2)", g.signature, (3, 2)));
    out.push(Check::from_witness(
        "pf(phi(Z)) vanishes identically",
        embedding_pfaffian_polynomial().first().map(|(e, c)| format!("{c} tau^{} z^{} w^{}", e[0], e[1], e[2])),
    ));
    out.push(Check::from_witness(
        "eps_u is symplectic with lower-left block divisible by 5",
        (1..5).find(|&u| !epsilon_u(u).map(|m| in_gamma0_5(&m)).unwrap_or(false)).map(|u| format!("u = {u}")),
    ));
    let df = DiscriminantForm::level_five();
    out.push(Check::from_witness(
        "lattice action of eps_u induces the coset map (ux, u^-1 y)",
        (1..5)
            .flat_map(|u| df.elements().iter().map(move |g| (u, g)))
            .find(|(u, g)| {
                let m = epsilon_u(*u).expect("unit");
                coset_action(&m, g).ok() != eps_action(*u, g).ok()
            })
            .map(|(u, g)| format!("u = {u}, gamma = {g}")),
    ));
    let l0 = humbert_lambda0();
    let bad = (0..20).find_map(|i| {
        let p = random_point(&mut rng);
        let direct = p.det() - rat(1) + rat(5) * &p.z;
        let paired = humbert_pairing(&p, &l0);
        (paired != direct || humbert_equation(&p, &l0).ok() != Some(direct)).then(|| format!("sample {i}"))
    });
    out.push(Check::from_witness("<phi(Z), lambda0> = det(Z) - 1 + 5z", bad));
    out.push(Check::expect_eq("pf(lambda0) = 21/4", l0.pfaffian(), frac(21, 4)));
    out.push(Check::from_witness(
        "lambda0 lies in L'",
        (!l0.in_dual()).then_some("not in the dual lattice"),
    ));
    out
}
