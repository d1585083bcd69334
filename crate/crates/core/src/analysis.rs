//! Triangular-number survey, the descent cutoff, square-triangular
//! detection, brute-force search for rational square roots, and
//! continued-fraction convergents used as test inputs.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::descent::DescentMap;
use crate::exact::{isqrt, perfect_square_root, rat, QuadExt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("T_{n} = {t_n} is a perfect square; the descent question is ill-posed")]
    SquareTriangular { n: u32, t_n: u64 },
    #[error("{0} is a perfect square; √{0} has no continued-fraction period")]
    SquareRadicand(u64),
    #[error("index must be ≥ 2, got {0}")]
    IndexTooSmall(u32),
}

/// `T_n = n(n+1)/2`.
pub fn triangular_number(n: u32) -> u64 {
    let n = u64::from(n);
    n * (n + 1) / 2
}

/// Integer root of `T_n` when it is a perfect square (n = 1, 8, 49, …).
pub fn square_triangular(n: u32) -> Option<u64> {
    perfect_square_root(triangular_number(n))
}

/// Whether the triangular descent map shrinks `b`, i.e. whether
/// `n − √T_n < 1`. Both sides of the equivalent `n − 1 < √T_n` are
/// nonnegative, so squaring gives the pure-integer test
/// `2(n−1)² < n(n+1)`, which holds exactly for `n ≤ 4`.
pub fn descent_applicable(n: u32) -> Result<bool, AnalysisError> {
    if n < 2 {
        return Err(AnalysisError::IndexTooSmall(n));
    }
    let t_n = triangular_number(n);
    if perfect_square_root(t_n).is_some() {
        return Err(AnalysisError::SquareTriangular { n, t_n });
    }
    let n = u64::from(n);
    Ok(2 * (n - 1) * (n - 1) < n * (n + 1))
}

/// Searches `1 ≤ b ≤ b_max` for an integer `a` with `a² = k·b²` and
/// returns the first witness. Nonsquare `k` can never produce one;
/// square `k` yields `(√k, 1)` immediately.
pub fn square_ratio_witness(k: u64, b_max: u64) -> Option<(u64, u64)> {
    use num_integer::Roots;
    for b in 1..=b_max {
        let target = u128::from(k) * u128::from(b) * u128::from(b);
        let root = target.sqrt();
        if root * root == target {
            return Some((root as u64, b));
        }
    }
    None
}

/// True when no `1 ≤ b ≤ b_max` admits an integer `a` with `a² = k·b²`.
pub fn brute_force_no_solution(k: u64, b_max: u64) -> bool {
    square_ratio_witness(k, b_max).is_none()
}

/// One row of the triangular-number survey.
#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub n: u32,
    pub t_n: u64,
    /// Integer root when `T_n` is a perfect square.
    pub is_square: Option<u64>,
    /// Whether the descent map for `T_n` shrinks `b`; false for square
    /// rows, where the question does not arise.
    pub descent_applicable: bool,
    /// `n(n−1)/2`, the form multiplier of the triangular map.
    pub multiplier_c: Rational,
    /// `n − √T_n` when `T_n` is nonsquare.
    pub lambda: Option<QuadExt>,
}

/// Rows for `n = 2..=n_max`. The multiplier column is cross-checked
/// against the symbolic expansion carried by the map itself.
pub fn run_survey(n_max: u32) -> Vec<SurveyRow> {
    assert!(n_max >= 2, "survey needs n_max ≥ 2");
    (2..=n_max)
        .map(|n| {
            let t_n = triangular_number(n);
            let is_square = perfect_square_root(t_n);
            let multiplier_c = rat(i64::from(n) * (i64::from(n) - 1), 2);
            let (descent, lambda) = if is_square.is_some() {
                (false, None)
            } else {
                let map = DescentMap::triangular(n).expect("nonsquare T_n");
                assert_eq!(
                    *map.form_multiplier(),
                    multiplier_c,
                    "multiplier mismatch at n = {n}"
                );
                let lambda = map.decrease_factor();
                (descent_applicable(n).expect("nonsquare T_n"), Some(lambda))
            };
            SurveyRow {
                n,
                t_n,
                is_square,
                descent_applicable: descent,
                multiplier_c,
                lambda,
            }
        })
        .collect()
}

/// JSON-facing form of a survey row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurveyRowReport {
    pub n: u32,
    pub t_n: u64,
    pub is_square: Option<u64>,
    pub descent_applicable: bool,
    pub multiplier_c: String,
    pub lambda: Option<String>,
}

impl SurveyRowReport {
    pub fn for_row(row: &SurveyRow) -> Self {
        SurveyRowReport {
            n: row.n,
            t_n: row.t_n,
            is_square: row.is_square,
            descent_applicable: row.descent_applicable,
            multiplier_c: row.multiplier_c.to_string(),
            lambda: row.lambda.as_ref().map(|l| l.to_decimal(10)),
        }
    }
}

/// Continued-fraction convergents of `√k`: the best rational
/// approximations `a/b`, each with small form value `a² − k·b²`.
#[derive(Debug, Clone)]
pub struct ConvergentSeq {
    pub k: u64,
    pub pairs: Vec<(BigInt, BigInt)>,
}

/// First `count` convergents of `√k` by the periodic continued-fraction
/// recurrence for quadratic irrationals, in exact integer arithmetic.
pub fn convergents(k: u64, count: usize) -> Result<ConvergentSeq, AnalysisError> {
    assert!(count >= 1, "need at least one convergent");
    if perfect_square_root(k).is_some() {
        return Err(AnalysisError::SquareRadicand(k));
    }
    let a0 = isqrt(k);
    let mut m = 0u64;
    let mut d = 1u64;
    let mut a = a0;
    let (mut h_prev, mut h) = (BigInt::from(1), BigInt::from(a0));
    let (mut k_prev, mut k_cur) = (BigInt::from(0), BigInt::from(1));
    let mut pairs = vec![(h.clone(), k_cur.clone())];
    while pairs.len() < count {
        m = d * a - m;
        d = (k - m * m) / d;
        a = (a0 + m) / d;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k_cur + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k_cur, k_next);
        // when the continued fraction starts 1, the second convergent
        // repeats denominator 1 and supersedes ⌊√k⌋/1 as the best
        // approximation with that denominator
        if pairs.len() == 1 && pairs[0].1 == k_cur {
            pairs.clear();
        }
        pairs.push((h.clone(), k_cur.clone()));
    }
    Ok(ConvergentSeq { k, pairs })
}

impl ConvergentSeq {
    /// `|a² − k·b²|` for each pair; convergents keep this below `2√k + 1`.
    pub fn form_values(&self) -> Vec<BigInt> {
        let k = BigInt::from(self.k);
        self.pairs.iter().map(|(a, b)| a * a - &k * b * b).collect()
    }
}
