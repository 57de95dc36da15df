mod common;

use proptest::prelude::*;

use common::*;
use siegel5_core::cyclotomic::CyclotomicNumber;
use siegel5_core::jacobian::jacobian;
use siegel5_core::lattice::{bilinear, AntisymMatrix};
use siegel5_core::weilrep::{eps_action, DiscriminantForm};
use siegel5_core::{frac, rat, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn antisym() -> impl Strategy<Value = AntisymMatrix> {
    prop::array::uniform6(small_rational())
        .prop_map(|[a, b, c, d, e, f]| AntisymMatrix::new(a, b, c, d, e, f))
}

fn cyclotomic() -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((0i64..40, -3i64..=3), 1..5).prop_map(|terms| {
        terms.into_iter().fold(CyclotomicNumber::zero(), |acc, (k, c)| {
            acc.add(&CyclotomicNumber::zeta(k).scale(&rat(c)))
        })
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn series_ring_axioms(x in series(), y in series(), z in series()) {
        ring_axioms(&x, &y, &z)?;
    }

    #[test]
    fn derivatives_satisfy_leibniz(x in series(), y in series()) {
        leibniz(&x, &y)?;
    }

    #[test]
    fn swap_is_a_ring_involution(x in series(), y in series()) {
        swap_homomorphism(&x, &y)?;
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism((p, p2, q) in eval_triple()) {
        eval_homomorphism(&p, &p2, &q)?;
    }

    #[test]
    fn reynolds_is_a_projection(p in any_poly()) {
        reynolds_idempotent(&p)?;
    }

    #[test]
    fn products_stay_in_the_cone(x in series(), y in series()) {
        let p = x.mul(&y);
        prop_assert!(p.terms().all(|(e, _)| e.in_cone()));
        prop_assert!(p.trunc() >= x.trunc().min(y.trunc()));
    }

    #[test]
    fn jacobian_is_alternating_and_multilinear(
        (x, y, u, v, w) in (1u32..=3).prop_flat_map(|t| (
            series_at(1, t), series_at(1, t), series_at(1, t), series_at(2, t), series_at(2, t),
        ))
    ) {
        let j = jacobian([&x, &u, &v, &w], [1, 1, 2, 2]).unwrap();
        let swapped = jacobian([&u, &x, &v, &w], [1, 1, 2, 2]).unwrap();
        prop_assert!(j.agrees_with(&swapped.neg()));
        let xy = x.add(&y).unwrap();
        let lhs = jacobian([&xy, &u, &v, &w], [1, 1, 2, 2]).unwrap();
        let rhs = j.add(&jacobian([&y, &u, &v, &w], [1, 1, 2, 2]).unwrap()).unwrap();
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn pfaffian_polarizes(x in antisym(), y in antisym(), s in small_rational()) {
        prop_assert_eq!(bilinear(&x, &y), bilinear(&y, &x));
        prop_assert_eq!(bilinear(&x, &x), rat(2) * x.pfaffian());
        prop_assert_eq!(x.scale(&s).pfaffian(), &s * &s * x.pfaffian());
    }

    #[test]
    fn eps_action_is_an_isometry(u in 1i64..5, i in 0usize..50, j in 0usize..50) {
        let df = DiscriminantForm::level_five();
        let (g, h) = (&df.elements()[i], &df.elements()[j]);
        let (eg, eh) = (eps_action(u, g).unwrap(), eps_action(u, h).unwrap());
        prop_assert_eq!(df.q_value(&eg), df.q_value(g));
        prop_assert_eq!(df.pairing(&eg, &eh), df.pairing(g, h));
    }

    #[test]
    fn cyclotomic_field_laws(x in cyclotomic(), y in cyclotomic(), z in cyclotomic()) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert!(x.sub(&x).is_zero());
    }
}
