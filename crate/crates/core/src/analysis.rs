//! Diagnostics for coefficient sequences and standalone exact evaluations.
//!
//! Unimodality and concavity checks run on exact integers; the standalone
//! numeric evaluations (`alpha5`, `alternating_sum_t`, `finite_difference_sum`,
//! `quasipoly_leading`) use exact rational or big-integer arithmetic
//! throughout — no floating point anywhere.

use num_bigint::BigInt;
use num_integer::{binomial, gcd};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::Partition;
use crate::series::CoeffSeq;
use crate::Error;

/// Exact rational number (numerator over positive denominator, reduced).
pub type RationalValue = BigRational;

/// Verdict on a coefficient sequence: unimodal means weakly increasing and
/// then weakly decreasing (plateaus allowed on both slopes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodalityReport {
    pub unimodal: bool,
    /// Smallest index attaining the maximum entry.
    pub peak_index: usize,
    /// Present iff nonunimodal: the smallest index `j` such that some
    /// earlier entry and some later entry both strictly exceed entry `j`.
    pub first_dip_index: Option<usize>,
}

/// Classifies a coefficient sequence as unimodal or not, locating the peak
/// and, when nonunimodal, the leftmost dip.
pub fn unimodality_report(seq: &CoeffSeq) -> UnimodalityReport {
    report_from_slice(seq.coeffs())
}

pub(crate) fn report_from_slice<T: Ord>(values: &[T]) -> UnimodalityReport {
    assert!(!values.is_empty(), "sequence may not be empty");
    let peak_index = values
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("nonempty");
    // entry j dips iff strictly larger entries exist on both sides
    let mut best_left: Option<&T> = None;
    let mut first_dip_index = None;
    let mut suffix_max: Vec<&T> = Vec::with_capacity(values.len());
    let mut running: Option<&T> = None;
    for v in values.iter().rev() {
        suffix_max.push(running.unwrap_or(v));
        running = Some(match running {
            Some(m) if m > v => m,
            _ => v,
        });
    }
    suffix_max.reverse();
    for (j, v) in values.iter().enumerate() {
        if let Some(left) = best_left {
            if left > v && j + 1 < values.len() && suffix_max[j] > v {
                first_dip_index = Some(j);
                break;
            }
        }
        best_left = Some(match best_left {
            Some(m) if m > v => m,
            _ => v,
        });
    }
    UnimodalityReport {
        unimodal: first_dip_index.is_none(),
        peak_index,
        first_dip_index,
    }
}

/// True iff `a_{n+1} − 2a_n + a_{n−1} ≤ 0` for every `lo ≤ n ≤ hi`
/// (concavity of the window). Requires `1 ≤ lo ≤ hi ≤ truncation−1`.
pub fn second_difference_window(seq: &CoeffSeq, lo: usize, hi: usize) -> Result<bool, Error> {
    let truncation = seq.truncation();
    if lo < 1 || lo > hi || hi + 1 > truncation {
        return Err(Error::WindowOutOfRange {
            lo,
            hi,
            truncation,
        });
    }
    let a = seq.coeffs();
    for n in lo..=hi {
        let second = &a[n + 1] - &a[n] - &a[n] + &a[n - 1];
        if second.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the coefficients weakly increase through the given index
/// (clamped to the truncation).
pub fn weakly_increasing_through(seq: &CoeffSeq, index: usize) -> bool {
    let a = seq.coeffs();
    let end = index.min(a.len() - 1);
    (1..=end).all(|n| a[n - 1] <= a[n])
}

/// True iff the coefficients weakly decrease from the given index onward.
pub fn weakly_decreasing_from(seq: &CoeffSeq, index: usize) -> bool {
    let a = seq.coeffs();
    if index >= a.len() {
        return true;
    }
    (index + 1..a.len()).all(|n| a[n - 1] >= a[n])
}

/// Index through which the coefficients of `G_λ` are guaranteed weakly
/// increasing: `max_k ⌈k·λ_k/2⌉`. The guarantee comes from the unimodality
/// of the largest rectangle inside the diagram; use
/// [`weakly_increasing_through`] to check a computed series against it.
pub fn increasing_prefix_bound(lambda: &Partition) -> usize {
    assert!(!lambda.is_empty(), "partition may not be empty");
    (1..=lambda.len())
        .map(|k| {
            let prod = k as u64 * u64::from(lambda.part(k));
            prod.div_ceil(2) as usize
        })
        .max()
        .expect("nonempty")
}

/// Index from which the coefficients of `G_λ` are guaranteed weakly
/// decreasing, `N = ⌊b·λ₁/2⌋`, valid under two exact hypotheses:
/// `(2b−4)·λ_{b−1} ≥ (2b−5)·λ₁` and `(b+1)·λ_b ≥ |λ|`, for `b ≥ 3`.
///
/// Hypothesis violations are reported distinctly from computation errors.
pub fn decreasing_tail_start(lambda: &Partition) -> Result<usize, Error> {
    let b = lambda.len();
    if b < 3 {
        return Err(Error::HypothesisNotSatisfied(format!(
            "need at least 3 parts, got {b}"
        )));
    }
    let b64 = b as u64;
    let first = u64::from(lambda.part(1));
    let second_last = u64::from(lambda.part(b - 1));
    let last = u64::from(lambda.part(b));
    if (2 * b64 - 4) * second_last < (2 * b64 - 5) * first {
        return Err(Error::HypothesisNotSatisfied(format!(
            "λ_{} = {} is below (2b−5)/(2b−4) of λ₁ = {}",
            b - 1,
            second_last,
            first
        )));
    }
    if (b64 + 1) * last < lambda.size() {
        return Err(Error::HypothesisNotSatisfied(format!(
            "λ_{b} = {last} is below |λ|/(b+1) = {}/{}",
            lambda.size(),
            b64 + 1
        )));
    }
    Ok((b * first as usize) / 2)
}

/// The concavity indicator for five near-equal rows, evaluated exactly:
/// `α(x, y) = y²/240 − (y−2x)²/24 − (y−1)²/48 + (y−x−1)²/12`.
pub fn alpha5(x: &RationalValue, y: &RationalValue) -> RationalValue {
    let sq = |r: RationalValue| -> RationalValue { r.clone() * r };
    let one = RationalValue::one();
    sq(y.clone()) / BigRational::from_integer(240.into())
        - sq(y - x - x) / BigRational::from_integer(24.into())
        - sq(y - &one) / BigRational::from_integer(48.into())
        + sq(y - x - &one) / BigRational::from_integer(12.into())
}

/// The alternating binomial sum `Σ_{i=0}^{⌊b/2⌋} (−1)^i (b−2i)^{b−3} C(b,i)`,
/// the leading-term discriminant for mid-series concavity of rectangles.
/// Nonzero for every `b ≥ 5` (the test suite checks a long prefix).
pub fn alternating_sum_t(b: u32) -> Result<BigInt, Error> {
    if b < 5 {
        return Err(Error::OutOfDomain(format!(
            "alternating sum defined for b ≥ 5, got {b}"
        )));
    }
    let mut total = BigInt::zero();
    for i in 0..=(b / 2) {
        let base = BigInt::from(b as i64 - 2 * i as i64);
        let term = base.pow(b - 3) * binomial(BigInt::from(b), BigInt::from(i));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The k-th partial difference of `(k−2x)^k` sampled at the integers:
/// `Σ_{j=0}^k (−1)^j (k−2j)^k C(k,j)`. Its absolute value is `2^k · k!`.
pub fn finite_difference_sum(k: u32) -> BigInt {
    assert!(k >= 1, "k must be positive");
    let mut total = BigInt::zero();
    for j in 0..=k {
        let base = BigInt::from(k as i64 - 2 * j as i64);
        let term = base.pow(k) * binomial(BigInt::from(k), BigInt::from(j));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Compares the exact coefficient `[qⁿ] Π_{c∈C} 1/(1−q^c)` with the leading
/// quasipolynomial approximation `(Π_{c∈C} 1/c) · C(n, |C|−1)`.
///
/// Requires nonempty `C` with `gcd(C) = 1`.
pub fn quasipoly_leading(
    periods: &[usize],
    n: usize,
) -> Result<(BigInt, RationalValue), Error> {
    if periods.is_empty() {
        return Err(Error::OutOfDomain("period multiset may not be empty".into()));
    }
    if periods.contains(&0) {
        return Err(Error::ZeroPeriod);
    }
    let g = periods
        .iter()
        .fold(0u64, |acc, &c| gcd(acc, c as u64));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let mut series = CoeffSeq::one(n);
    for &c in periods {
        series = series.geometric_accumulate(c)?;
    }
    let actual = series.coeff(n).clone();
    let mut denom = BigInt::one();
    for &c in periods {
        denom *= BigInt::from(c);
    }
    let lead = RationalValue::new(
        binomial(BigInt::from(n), BigInt::from(periods.len() - 1)),
        denom,
    );
    Ok((actual, lead))
}
