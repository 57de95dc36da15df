//! The Jacobian of four forms and the identity expressing `J^2` as a
//! polynomial in `f1, f2, g1, g2`.

use num_traits::Zero;

use crate::fourier::{Exponent, FourierSeries, Var};
use crate::gendata::GeneratorSet;
use crate::polyring::{poly_eval, GradedPoly};
use crate::{rat, Error, Rational, Result};

/// `det` of the 4×4 matrix with rows `(k_i ψ_i)`, `(D_τ ψ_i)`, `(D_z ψ_i)`,
/// `(D_w ψ_i)`, expanded along the first row. Weight `Σ k_i + 3`.
pub fn jacobian(forms: [&FourierSeries; 4], weights: [i64; 4]) -> Result<FourierSeries> {
    for (f, &k) in forms.iter().zip(&weights) {
        if f.weight() != k {
            return Err(Error::WeightMismatch {
                left: f.weight(),
                right: k,
            });
        }
    }
    let trunc = forms[0].trunc();
    if forms.iter().any(|f| f.trunc() != trunc) {
        return Err(Error::ArgumentMismatch(
            "jacobian arguments must share one truncation".into(),
        ));
    }
    let top: Vec<FourierSeries> = forms
        .iter()
        .zip(&weights)
        .map(|(f, &k)| f.scale(&rat(k)))
        .collect();
    let rows: Vec<Vec<FourierSeries>> = Var::ALL
        .iter()
        .map(|&v| forms.iter().map(|f| f.derive(v)).collect())
        .collect();

    let weight: i64 = weights.iter().sum::<i64>() + 3;
    let mut acc: Option<FourierSeries> = None;
    for i in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&j| j != i).collect();
        let minor = det3(&rows, [cols[0], cols[1], cols[2]]);
        let term = top[i].mul(&minor);
        acc = Some(match acc {
            None if i % 2 == 0 => term,
            None => term.neg(),
            Some(a) => a.combine(&term, i % 2 == 0),
        });
    }
    Ok(acc.expect("four columns").with_weight(weight))
}

fn det3(rows: &[Vec<FourierSeries>], [p, q, r]: [usize; 3]) -> FourierSeries {
    let m = |i: usize, j: usize| &rows[i][j];
    let cof = |x: usize, y: usize| m(1, x).mul(m(2, y)).combine(&m(1, y).mul(m(2, x)), false);
    let t0 = m(0, p).mul(&cof(q, r));
    let t1 = m(0, q).mul(&cof(p, r));
    let t2 = m(0, r).mul(&cof(p, q));
    t0.combine(&t1, false).combine(&t2, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianSquareReport {
    /// The scalar with `J^2 = λ P_J`, read off the first nonzero coefficient.
    pub lambda: Option<Rational>,
    /// Both sides are compared for all `a + c <= compared_through`.
    pub compared_through: u32,
    /// Number of nonzero coefficients of `J^2` inside the compared range.
    pub nonzero_coefficients: usize,
    /// First exponent where `J^2 != λ P_J`.
    pub witness: Option<Exponent>,
}

impl JacobianSquareReport {
    /// A pass needs a determined `λ` and no offending coefficient.
    pub fn passed(&self) -> bool {
        self.lambda.is_some() && self.witness.is_none()
    }
}

/// Checks `J^2 = λ · P_J(f1, f2, g1, g2)` on every coefficient both sides
/// know.
pub fn jacobian_square_check(
    j: &FourierSeries,
    p_j: &GradedPoly,
    gens: &GeneratorSet,
) -> Result<JacobianSquareReport> {
    let lhs = j.mul(j);
    let rhs = poly_eval(p_j, gens)?;
    let through = lhs.trunc().min(rhs.trunc());
    let lhs = lhs.truncate(through);
    let rhs = rhs.truncate(through);
    let nonzero_coefficients = lhs.len();
    let Some((e, v)) = rhs.leading_term() else {
        return Ok(JacobianSquareReport {
            lambda: None,
            compared_through: through,
            nonzero_coefficients,
            witness: lhs.leading_term().map(|(e, _)| e),
        });
    };
    let lambda = lhs.coeff(e)? / v;
    let witness = lhs.first_difference(&rhs.scale(&lambda));
    Ok(JacobianSquareReport {
        lambda: (!lambda.is_zero()).then_some(lambda),
        compared_through: through,
        nonzero_coefficients,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::jacobian_square_poly;

    #[test]
    fn repeated_argument_gives_zero() {
        let s = GeneratorSet::embedded();
        let j = jacobian([&s.f1, &s.f1, &s.g1, &s.g2], [1, 1, 2, 2]).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        let s = GeneratorSet::embedded();
        let r = jacobian([&s.f1, &s.f2, &s.g1, &s.g2], [1, 1, 2, 3]);
        assert!(matches!(r, Err(Error::WeightMismatch { .. })));
        let r = jacobian([&s.f1, &s.f2.truncate(5), &s.g1, &s.g2], [1, 1, 2, 2]);
        assert!(matches!(r, Err(Error::ArgumentMismatch(_))));
    }

    #[test]
    fn j_regression_values() {
        let j = &GeneratorSet::embedded().j;
        assert_eq!(j.weight(), 9);
        assert_eq!(j.valuation(), 4);
        assert_eq!(j.trunc(), 9);
        assert_eq!(j.leading_term(), Some((Exponent::new(2, -1, 2), rat(1))));
        assert_eq!(j.coefficient(2, 1, 2).unwrap(), rat(-1));
        assert_eq!(j.coefficient(2, -1, 3).unwrap(), rat(-13));
        assert_eq!(j.coefficient(3, 1, 2).unwrap(), rat(13));
    }

    #[test]
    fn square_identity_with_lambda_one() {
        let s = GeneratorSet::embedded();
        let p = jacobian_square_poly();
        let r = jacobian_square_check(&s.j, &p, s).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lambda, Some(rat(1)));
        assert_eq!(r.compared_through, 12);

        let doubled = s.j.scale(&rat(2));
        let r2 = jacobian_square_check(&doubled, &p, s).unwrap();
        assert_eq!(r2.lambda, Some(rat(4)));
    }
}
