//! Lower bounds for `dim M_k` from exact ranks of truncated Fourier
//! expansions of monomials in the eighteen holomorphic generators.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::fourier::{cone_exponents, Exponent, FourierSeries};
use crate::gendata::GeneratorSet;
use crate::hilbert::siegel_dim;
use crate::linalg::rank_rational;
use crate::polyring::{holomorphic_generators, poly_eval};
use crate::{Error, Rational, Result};

/// Exponent vectors `e` with `Σ e_i w_i = k`, in lexicographic order.
pub fn monomials_of_weight(weights: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some((&w, rest)) = weights.split_first() else {
            if k == 0 {
                out.push(prefix.clone());
            }
            return;
        };
        for e in 0..=k / w {
            prefix.push(e);
            go(rest, k - e * w, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weights.iter().all(|&w| w > 0) {
        go(weights, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Coefficients of several series on all cone exponents with `a + c <= trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub columns: Vec<Exponent>,
    pub rows: Vec<Vec<Rational>>,
}

impl CoefficientMatrix {
    pub fn new(forms: &[FourierSeries], trunc: u32) -> Result<Self> {
        let columns = cone_exponents(trunc);
        let index: HashMap<Exponent, usize> =
            columns.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let rows = forms
            .iter()
            .map(|f| {
                if f.trunc() < trunc {
                    return Err(Error::Precision {
                        a: trunc,
                        b: 0,
                        c: 0,
                        trunc: f.trunc(),
                    });
                }
                let mut row = vec![Rational::zero(); columns.len()];
                for (e, v) in f.terms().filter(|(e, _)| e.order() <= trunc) {
                    row[index[e]] = v.clone();
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoefficientMatrix { columns, rows })
    }

    pub fn rank(&self) -> usize {
        rank_rational(&self.rows)
    }
}

/// Rank of the coefficient matrix at the common precision of the forms.
pub fn span_rank(forms: &[FourierSeries]) -> Result<usize> {
    let Some(trunc) = forms.iter().map(FourierSeries::trunc).min() else {
        return Ok(0);
    };
    Ok(CoefficientMatrix::new(forms, trunc)?.rank())
}

/// A lower bound for the dimension of the span that also uses coefficients
/// beyond the common precision.
///
/// With precision levels `n_0 < n_1 < …` and `S_i` the forms known through
/// `n_i`, the bound is `rank(all, n_0) + Σ_i [rank(S_i, n_i) - rank(S_i,
/// n_{i-1})]`. The `i`-th summand counts independent combinations of `S_i`
/// that vanish through order `n_{i-1}` but not through `n_i`; these live in
/// disjoint layers of the order filtration.
pub fn certified_rank(forms: &[FourierSeries]) -> Result<usize> {
    let levels: Vec<u32> = forms
        .iter()
        .map(FourierSeries::trunc)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let Some(&n0) = levels.first() else {
        return Ok(0);
    };
    let mut total = CoefficientMatrix::new(forms, n0)?.rank();
    for pair in levels.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let subset: Vec<FourierSeries> = forms.iter().filter(|f| f.trunc() >= hi).cloned().collect();
        let upper = CoefficientMatrix::new(&subset, hi)?.rank();
        let lower = CoefficientMatrix::new(&subset, lo)?.rank();
        total += upper - lower;
    }
    Ok(total)
}

/// The eighteen holomorphic generators evaluated as Fourier series.
pub fn holomorphic_generator_series(gens: &GeneratorSet) -> Result<Vec<FourierSeries>> {
    holomorphic_generators()
        .iter()
        .map(|g| poly_eval(&g.poly, gens))
        .collect()
}

/// Every monomial of weight `k` in the given forms, evaluated.
pub fn monomial_series(forms: &[FourierSeries], k: u32) -> Vec<FourierSeries> {
    let weights: Vec<u32> = forms.iter().map(|f| f.weight() as u32).collect();
    let mut powers: HashMap<(usize, u32), FourierSeries> = HashMap::new();
    monomials_of_weight(&weights, k)
        .into_iter()
        .map(|exps| {
            let mut acc: Option<FourierSeries> = None;
            for (i, &e) in exps.iter().enumerate().filter(|(_, e)| **e > 0) {
                let p = powers.entry((i, e)).or_insert_with(|| forms[i].pow(e));
                acc = Some(match acc {
                    None => p.clone(),
                    Some(a) => a.mul(p),
                });
            }
            acc.unwrap_or_else(|| FourierSeries::one(forms[0].trunc()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub weight: u32,
    /// Precision of the basic forms the monomials were built from.
    pub input_trunc: u32,
    pub monomials: usize,
    /// Rank at the common precision of the monomials.
    pub plain_rank: usize,
    pub certified_rank: usize,
    /// `dim M_k` from the Hilbert–Poincaré series.
    pub expected: u64,
}

impl RankReport {
    pub fn matches(&self) -> bool {
        self.certified_rank as u64 == self.expected
    }
}

/// Ranks of the weight-`k` monomials in the eighteen generators, with the
/// basic forms cut to `a + c <= input_trunc`.
pub fn weight_rank(gens: &GeneratorSet, k: u32, input_trunc: u32) -> Result<RankReport> {
    let gens = gens.truncated(input_trunc)?;
    let series = holomorphic_generator_series(&gens)?;
    let forms = monomial_series(&series, k);
    Ok(RankReport {
        weight: k,
        input_trunc,
        monomials: forms.len(),
        plain_rank: span_rank(&forms)?,
        certified_rank: certified_rank(&forms)?,
        expected: siegel_dim(k)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankVerdict {
    Match,
    /// Rank falls short but grows with precision.
    PossibleTruncationArtifact,
    /// Rank exceeds the dimension, or shrinks as precision grows.
    IdentityFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDiagnosis {
    pub verdict: RankVerdict,
    /// The report at full precision first, then any retries at lower precision.
    pub reports: Vec<RankReport>,
}

/// Rank at precision 7; when it falls short, retries at 6 and 5 and
/// classifies the shortfall by monotonicity.
pub fn diagnose_weight(gens: &GeneratorSet, k: u32) -> Result<RankDiagnosis> {
    let full = weight_rank(gens, k, 7)?;
    let expected = full.expected as usize;
    if full.certified_rank == expected {
        return Ok(RankDiagnosis {
            verdict: RankVerdict::Match,
            reports: vec![full],
        });
    }
    if full.certified_rank > expected {
        return Ok(RankDiagnosis {
            verdict: RankVerdict::IdentityFailure,
            reports: vec![full],
        });
    }
    let mut reports = vec![full];
    for t in [6, 5] {
        reports.push(weight_rank(gens, k, t)?);
    }
    let monotone = reports
        .windows(2)
        .all(|w| w[0].certified_rank >= w[1].certified_rank);
    Ok(RankDiagnosis {
        verdict: if monotone {
            RankVerdict::PossibleTruncationArtifact
        } else {
            RankVerdict::IdentityFailure
        },
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    const GEN_WEIGHTS: [u32; 18] = [2, 4, 4, 4, 4, 4, 6, 6, 6, 6, 10, 11, 11, 11, 13, 13, 13, 15];

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_weight(&GEN_WEIGHTS, 2).len(), 1);
        assert_eq!(monomials_of_weight(&GEN_WEIGHTS, 6).len(), 10);
        assert_eq!(monomials_of_weight(&GEN_WEIGHTS, 8).len(), 25);
        assert_eq!(monomials_of_weight(&GEN_WEIGHTS, 1).len(), 0);
        assert_eq!(monomials_of_weight(&GEN_WEIGHTS, 0), vec![vec![0; 18]]);
    }

    #[test]
    fn duplicate_and_scaled_rows() {
        let s = GeneratorSet::embedded();
        let forms = vec![s.e2.clone(), s.e2.clone(), s.g1.scale(&rat(3))];
        assert_eq!(span_rank(&forms).unwrap(), 2);
        let permuted = vec![s.g1.clone(), s.e2.scale(&rat(-2))];
        assert_eq!(span_rank(&permuted).unwrap(), 2);
        assert_eq!(span_rank(&[]).unwrap(), 0);
    }

    #[test]
    fn low_weights_match_table() {
        let s = GeneratorSet::embedded();
        for (k, d) in [(2, 1), (4, 6), (6, 10)] {
            let r = weight_rank(s, k, 7).unwrap();
            assert_eq!(r.certified_rank, d, "k = {k}");
            assert_eq!(r.plain_rank, d, "k = {k}");
        }
    }

    #[test]
    fn certified_rank_sees_higher_precision() {
        // Two forms agreeing through order 1; one of them is known further.
        let x = FourierSeries::from_terms(0, 3, [(Exponent::new(0, 0, 0), rat(1))]).unwrap();
        let y = FourierSeries::from_terms(
            0,
            3,
            [(Exponent::new(0, 0, 0), rat(1)), (Exponent::new(2, 0, 0), rat(1))],
        )
        .unwrap();
        let x1 = x.truncate(1);
        assert_eq!(span_rank(&[x1.clone(), y.clone()]).unwrap(), 1);
        assert_eq!(certified_rank(&[x1.clone(), y.clone()]).unwrap(), 1);
        assert_eq!(certified_rank(&[x, y]).unwrap(), 2);
    }
}
