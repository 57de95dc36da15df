//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use siegel5_core::fourier::cone_exponents;
use siegel5_core::invariants::monomials;
use siegel5_core::polyring::{poly_eval, Monomial};
use siegel5_core::{rat, FourierSeries, GeneratorSet, GradedPoly, Var};

/// Precision used for evaluating polynomials in the generators.
pub const EVAL_TRUNC: u32 = 3;

pub fn eval_gens() -> &'static GeneratorSet {
    static GENS: OnceLock<GeneratorSet> = OnceLock::new();
    GENS.get_or_init(|| GeneratorSet::embedded().truncated(EVAL_TRUNC).expect("truncation"))
}

/// A sparse series of the given weight with small integer coefficients.
pub fn series_at(weight: i64, trunc: u32) -> impl Strategy<Value = FourierSeries> {
    let exps = cone_exponents(trunc);
    let n = exps.len();
    prop::collection::vec((0..n, -4i64..=4), 0..10).prop_map(move |terms| {
        FourierSeries::from_terms(weight, trunc, terms.into_iter().map(|(i, c)| (exps[i], rat(c))))
            .expect("cone exponents")
    })
}

/// Series of weight 0 at a random truncation in `1..=4`.
pub fn series() -> impl Strategy<Value = FourierSeries> {
    (1u32..=4).prop_flat_map(|t| series_at(0, t))
}

/// A homogeneous polynomial of weight `d` in `F1, F2, G1, G2` (and `X_J`
/// when `with_j`).
pub fn poly_of_weight(d: u32, with_j: bool) -> impl Strategy<Value = GradedPoly> {
    let mons: Vec<Monomial> = monomials(d, with_j);
    let n = mons.len();
    prop::collection::vec((0..n, -3i64..=3), 1..6).prop_map(move |terms| {
        GradedPoly::from_terms(terms.into_iter().map(|(i, c)| (mons[i], rat(c))))
    })
    .prop_filter("nonzero polynomial", |p| !p.is_zero())
}

/// 100 cases, no regression files.
pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 100,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn any_poly() -> impl Strategy<Value = GradedPoly> {
    (1u32..=11).prop_flat_map(|d| poly_of_weight(d, true))
}

/// Two polynomials of weight `w1` and one of weight `w2`, without `X_J`.
pub fn eval_triple() -> impl Strategy<Value = (GradedPoly, GradedPoly, GradedPoly)> {
    (1u32..=3, 1u32..=3)
        .prop_flat_map(|(w1, w2)| (poly_of_weight(w1, false), poly_of_weight(w1, false), poly_of_weight(w2, false)))
}

fn agree(x: &FourierSeries, y: &FourierSeries, what: &str) -> Result<(), TestCaseError> {
    match x.first_difference(y) {
        None => Ok(()),
        Some(e) => Err(TestCaseError::fail(format!("{what}: differ at {e:?}"))),
    }
}

pub fn ring_axioms(x: &FourierSeries, y: &FourierSeries, z: &FourierSeries) -> Result<(), TestCaseError> {
    let sum = |p: &FourierSeries, q: &FourierSeries| p.add(q).expect("same weight");
    agree(&sum(&sum(x, y), z), &sum(x, &sum(y, z)), "additive associativity")?;
    agree(&sum(x, y), &sum(y, x), "additive commutativity")?;
    agree(&x.mul(y).mul(z), &x.mul(&y.mul(z)), "multiplicative associativity")?;
    agree(&x.mul(y), &y.mul(x), "multiplicative commutativity")?;
    agree(&x.mul(&sum(y, z)), &sum(&x.mul(y), &x.mul(z)), "distributivity")?;
    agree(&x.mul(&FourierSeries::one(x.trunc())), x, "unit")?;
    prop_assert!(sum(x, &x.neg()).is_zero(), "additive inverse");
    Ok(())
}

pub fn leibniz(x: &FourierSeries, y: &FourierSeries) -> Result<(), TestCaseError> {
    for v in Var::ALL {
        let lhs = x.mul(y).derive(v);
        let rhs = x.derive(v).mul(y).add(&x.mul(&y.derive(v))).expect("same weight");
        agree(&lhs, &rhs, &format!("Leibniz rule for {v:?}"))?;
    }
    Ok(())
}

pub fn swap_homomorphism(x: &FourierSeries, y: &FourierSeries) -> Result<(), TestCaseError> {
    agree(&x.mul(y).swap_qs(), &x.swap_qs().mul(&y.swap_qs()), "swap of a product")?;
    agree(
        &x.add(y).expect("same weight").swap_qs(),
        &x.swap_qs().add(&y.swap_qs()).expect("same weight"),
        "swap of a sum",
    )?;
    agree(&x.swap_qs().swap_qs(), x, "swap is an involution")
}

pub fn eval_homomorphism(p: &GradedPoly, p2: &GradedPoly, q: &GradedPoly) -> Result<(), TestCaseError> {
    let gens = eval_gens();
    let ev = |r: &GradedPoly| poly_eval(r, gens).expect("homogeneous");
    let (ep, ep2, eq) = (ev(p), ev(p2), ev(q));
    agree(&ev(&p.mul(q)), &ep.mul(&eq), "eval of a product")?;
    let sum = p.add(p2);
    if !sum.is_zero() {
        let lhs = ev(&sum);
        let rhs = ep.add(&ep2).expect("same weight");
        agree(&lhs, &rhs, "eval of a sum")?;
    }
    Ok(())
}

pub fn reynolds_idempotent(p: &GradedPoly) -> Result<(), TestCaseError> {
    let r = p.reynolds();
    prop_assert_eq!(r.reynolds(), r.clone(), "R(R(p)) = R(p)");
    prop_assert_eq!(r.apply_eps2(), r, "R(p) is fixed by eps2");
    Ok(())
}
