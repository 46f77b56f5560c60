//! Rank generating functions of subpartitions, by four independent routes.
//!
//! For a partition `λ` with `b` parts, `rank_gf_formula` expands the sum of
//! `2^b` signed terms `±q^e · Π 1/(1−q^c)` indexed by subsets `A ⊆ [b]`;
//! `rank_gf_recursive` peels off the largest part; `rank_gf_dp` runs a
//! first-part-bounded dynamic program; `enumerate_subpartitions` brute-forces
//! every `μ ⊆ λ`. All four agree coefficient-for-coefficient, which the test
//! suite exercises heavily.
//!
//! The weighted variant counts each subpartition `μ` with its first part
//! contributing `weight` times its value, so `weight = 1` is the plain size
//! generating function.

use std::collections::HashMap;
use std::ops::{AddAssign, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::series::{CoeffSeq, Sign};
use crate::Error;

/// Default cap on `|λ|` for brute-force enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 30;

/// One fully evaluated term of the subset expansion: the data of
/// `sign · q^exponent · Π_d 1/(1−q^d)` for a subset `A ⊆ [b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTerm {
    /// Bitmask encoding of `A`: bit `k−1` set iff `k ∈ A`.
    pub subset: u64,
    /// `(−1)^{|A|}`.
    pub sign: Sign,
    /// Exponent of the monomial numerator.
    pub exponent: u64,
    /// The `b` geometric-factor periods, in position order `k = 1..=b`.
    pub denominators: Vec<usize>,
}

/// Evaluates the subset term for `A` given as a list of 1-based positions.
///
/// Conventions: `max(∅) = 1` and `min(∅) = +∞` (so an empty subset
/// contributes exponent 0 over the plain product of geometric factors).
pub fn subset_term(subset: &[usize], lambda: &Partition, weight: u32) -> Result<SubsetTerm, Error> {
    assert!(weight >= 1, "weight must be positive");
    let b = lambda.len();
    let mut mask = 0u64;
    for &element in subset {
        if element < 1 || element > b {
            return Err(Error::SubsetElementOutOfRange { element, bound: b });
        }
        mask |= 1 << (element - 1);
    }
    Ok(subset_term_from_mask(mask, lambda, weight))
}

pub(crate) fn subset_term_from_mask(mask: u64, lambda: &Partition, weight: u32) -> SubsetTerm {
    let b = lambda.len();
    SubsetTerm {
        subset: mask,
        sign: Sign::from_parity(mask.count_ones()),
        exponent: subset_exponent(mask, lambda.parts(), weight),
        denominators: DenominatorScan::new(mask, b, weight).collect(),
    }
}

/// Exponent `Σ_{k<b} f_A(k) + weight·f_A(b)` where `f_A(k)` is
/// `λ_{b+1−max(A∩[k])} + 1` once `k` reaches `min(A)` and 0 before.
fn subset_exponent(mask: u64, parts: &[u32], weight: u32) -> u64 {
    let b = parts.len();
    let mut running_max = 0usize; // max(A ∩ [k]); 0 encodes the empty intersection
    let mut total = 0u64;
    for k in 1..=b {
        if (mask >> (k - 1)) & 1 == 1 {
            running_max = k;
        }
        if running_max >= 1 {
            let f = u64::from(parts[b - running_max]) + 1;
            total += if k == b { u64::from(weight) * f } else { f };
        }
    }
    total
}

/// Streams the geometric-factor periods for `k = 1..=b`:
/// `g_A(k) = k − max(A∩[k]) + 1` (with `max(∅) = 1`), raised by
/// `weight − 1` for positions at or past `max(A)`.
struct DenominatorScan {
    mask: u64,
    b: usize,
    weight: usize,
    max_a: usize,
    k: usize,
    running_max: usize,
}

impl DenominatorScan {
    fn new(mask: u64, b: usize, weight: u32) -> Self {
        let max_a = if mask == 0 {
            1
        } else {
            64 - mask.leading_zeros() as usize
        };
        DenominatorScan {
            mask,
            b,
            weight: weight as usize,
            max_a,
            k: 0,
            running_max: 0,
        }
    }
}

impl Iterator for DenominatorScan {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.k == self.b {
            return None;
        }
        self.k += 1;
        let k = self.k;
        if (self.mask >> (k - 1)) & 1 == 1 {
            self.running_max = k;
        }
        let g = k - self.running_max.max(1) + 1;
        Some(if k >= self.max_a { g + self.weight - 1 } else { g })
    }
}

/// Degree of the weighted generating function: `weight·λ₁ + Σ_{j≥2} λ_j`.
pub fn full_degree(lambda: &Partition, weight: u32) -> usize {
    let first = u64::from(lambda.first());
    let total = u64::from(weight) * first + (lambda.size() - first);
    usize::try_from(total).expect("degree exceeds address space")
}

/// Weighted size of a subpartition: its size plus `(weight−1)` extra copies
/// of the first part.
pub fn weighted_size(mu: &Partition, weight: u32) -> u64 {
    mu.size() + u64::from(weight - 1) * u64::from(mu.first())
}

/// The weighted rank generating function via the subset expansion, truncated
/// at degree `truncate`. Terms whose monomial exponent exceeds the
/// truncation are skipped outright, so truncating well below the full degree
/// costs proportionally less.
pub fn rank_gf_formula(lambda: &Partition, weight: u32, truncate: usize) -> CoeffSeq {
    assert!(weight >= 1, "weight must be positive");
    let b = lambda.len();
    assert!(b < 64, "subset expansion limited to fewer than 64 parts");
    if fits_fixed_width(b, truncate) {
        let coeffs = formula_eval::<i128>(lambda.parts(), weight, truncate);
        CoeffSeq::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
            .expect("truncate+1 entries")
    } else {
        CoeffSeq::from_coeffs(formula_eval::<BigInt>(lambda.parts(), weight, truncate))
            .expect("truncate+1 entries")
    }
}

/// Decides whether every intermediate of the subset expansion provably fits
/// in an `i128`. Each term's coefficients are bounded by `C(T+b−1, b−1)`
/// (the all-ones-denominator case) and the accumulator sums at most `2^b`
/// of them, so `2^{b+1} · C(T+b−1, b−1) ≤ i128::MAX` suffices.
fn fits_fixed_width(b: usize, truncate: usize) -> bool {
    if b == 0 {
        return true;
    }
    if b + 1 >= 127 {
        return false;
    }
    let bound = num_integer::binomial(BigInt::from(truncate + b - 1), BigInt::from(b - 1));
    bound <= (BigInt::from(i128::MAX) >> (b as u32 + 1))
}

fn formula_eval<T>(parts: &[u32], weight: u32, truncate: usize) -> Vec<T>
where
    T: Zero + One + Clone + Neg<Output = T> + for<'a> AddAssign<&'a T>,
{
    let b = parts.len();
    let mut acc = vec![T::zero(); truncate + 1];
    let mut scratch = vec![T::zero(); truncate + 1];
    for mask in 0..(1u64 << b) {
        let exponent = subset_exponent(mask, parts, weight);
        if exponent > truncate as u64 {
            continue;
        }
        let e = exponent as usize;
        for entry in scratch.iter_mut() {
            entry.set_zero();
        }
        scratch[e] = match Sign::from_parity(mask.count_ones()) {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        };
        for c in DenominatorScan::new(mask, b, weight) {
            for n in (e + c)..=truncate {
                let (lo, hi) = scratch.split_at_mut(n);
                hi[0] += &lo[n - c];
            }
        }
        for n in e..=truncate {
            acc[n] += &scratch[n];
        }
    }
    acc
}

/// The weighted rank generating function by peeling the largest part:
/// remove `λ₁`, combine the tail evaluated at weight `weight+1` with the
/// tail at weight 1 shifted by `weight·(λ₁+1)` and negated, and accumulate
/// the geometric factor of period `weight`. Memoized on (suffix, weight).
///
/// Agrees with [`rank_gf_formula`] on every input.
pub fn rank_gf_recursive(lambda: &Partition, weight: u32, truncate: usize) -> CoeffSeq {
    assert!(weight >= 1, "weight must be positive");
    let mut memo = HashMap::new();
    recursive_inner(lambda.parts(), 0, weight, truncate, &mut memo)
}

fn recursive_inner(
    parts: &[u32],
    start: usize,
    weight: u32,
    truncate: usize,
    memo: &mut HashMap<(usize, u32), CoeffSeq>,
) -> CoeffSeq {
    if start == parts.len() {
        return CoeffSeq::one(truncate);
    }
    if let Some(hit) = memo.get(&(start, weight)) {
        return hit.clone();
    }
    let first = u64::from(parts[start]);
    let tail_raised = recursive_inner(parts, start + 1, weight + 1, truncate, memo);
    let tail_plain = recursive_inner(parts, start + 1, 1, truncate, memo);
    let shift = u64::from(weight) * (first + 1);
    let combined = tail_raised
        .add_shifted(Sign::Minus, shift, &tail_plain)
        .expect("shared truncation")
        .geometric_accumulate(weight as usize)
        .expect("positive weight");
    memo.insert((start, weight), combined.clone());
    combined
}

/// The rank generating function by dynamic programming over rows.
///
/// `E_j(v)` is the series for subpartitions of `(λ_j, …, λ_b)` whose first
/// part is at most `v`; then `E_j(v) = Σ_{u ≤ min(v, λ_j)} q^u E_{j+1}(u)`
/// with `E_{b+1} ≡ 1`, and the answer is `E_1(λ₁)`. Levels are tabulated
/// bottom-up with the incremental identity `E_j(v) = E_j(v−1) + q^v E_{j+1}(v)`.
pub fn rank_gf_dp(lambda: &Partition, truncate: usize) -> CoeffSeq {
    let parts = lambda.parts();
    if parts.is_empty() {
        return CoeffSeq::one(truncate);
    }
    // E_j is constant in v beyond λ_j, so each level stores v = 0..=λ_j and
    // lookups clamp the index.
    let mut level: Vec<CoeffSeq> = vec![CoeffSeq::one(truncate)];
    for j in (0..parts.len()).rev() {
        let cap = parts[j] as usize;
        let mut next = Vec::with_capacity(cap + 1);
        let mut run = level[0].clone();
        next.push(run.clone());
        for v in 1..=cap {
            let below = &level[v.min(level.len() - 1)];
            run = run
                .add_shifted(Sign::Plus, v as u64, below)
                .expect("shared truncation");
            next.push(run.clone());
        }
        level = next;
    }
    level.last().expect("at least one entry").clone()
}

/// Iterator over every subpartition `μ ⊆ λ`, each exactly once, in
/// lexicographically increasing order of the zero-padded part tuple.
pub struct Subpartitions {
    lambda: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl Iterator for Subpartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.as_mut()?;
        let nonzero = cur.iter().take_while(|&&p| p > 0).count();
        let emit = Partition::new(&cur[..nonzero]).expect("odometer stays weakly decreasing");
        // Odometer step: bump the rightmost position below its cap
        // (cap = min(λ_j, previous entry)) and reset everything after it.
        let b = self.lambda.len();
        let mut advanced = false;
        for j in (0..b).rev() {
            let cap = if j == 0 {
                self.lambda[0]
            } else {
                self.lambda[j].min(cur[j - 1])
            };
            if cur[j] < cap {
                cur[j] += 1;
                for later in cur[j + 1..].iter_mut() {
                    *later = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(emit)
    }
}

/// Enumerates all `μ ⊆ λ` with the default size bound of
/// [`DEFAULT_ENUMERATION_BOUND`] on `|λ|`.
pub fn enumerate_subpartitions(lambda: &Partition) -> Result<Subpartitions, Error> {
    enumerate_subpartitions_with_bound(lambda, DEFAULT_ENUMERATION_BOUND)
}

/// Enumerates all `μ ⊆ λ`, rejecting `|λ|` beyond the given bound.
pub fn enumerate_subpartitions_with_bound(
    lambda: &Partition,
    bound: u64,
) -> Result<Subpartitions, Error> {
    if lambda.size() > bound {
        return Err(Error::SizeBoundExceeded {
            size: lambda.size(),
            bound,
        });
    }
    Ok(Subpartitions {
        lambda: lambda.parts().to_vec(),
        current: Some(vec![0; lambda.len()]),
    })
}

/// Ground-truth histogram: coefficient `n` counts enumerated subpartitions
/// of weighted size `n`. Sizes past the truncation are dropped.
pub fn enumeration_histogram(
    lambda: &Partition,
    weight: u32,
    truncate: usize,
    bound: u64,
) -> Result<CoeffSeq, Error> {
    assert!(weight >= 1, "weight must be positive");
    let mut coeffs = vec![BigInt::zero(); truncate + 1];
    for mu in enumerate_subpartitions_with_bound(lambda, bound)? {
        let w = weighted_size(&mu, weight);
        if w <= truncate as u64 {
            coeffs[w as usize] += 1;
        }
    }
    CoeffSeq::from_coeffs(coeffs)
}

/// Enumeration histogram restricted to subpartitions with distinct parts;
/// the ground truth for [`distinct_rank_gf`].
pub fn enumeration_histogram_distinct(
    lambda: &Partition,
    truncate: usize,
    bound: u64,
) -> Result<CoeffSeq, Error> {
    let mut coeffs = vec![BigInt::zero(); truncate + 1];
    for mu in enumerate_subpartitions_with_bound(lambda, bound)? {
        if !mu.is_strict() {
            continue;
        }
        let w = mu.size();
        if w <= truncate as u64 {
            coeffs[w as usize] += 1;
        }
    }
    CoeffSeq::from_coeffs(coeffs)
}

/// Generating function for subpartitions with distinct nonzero parts, for a
/// strictly decreasing `λ`. Decomposes by the number of nonzero parts `c`:
/// subtracting the staircase `(c, c−1, …, 1)` from the first `c` parts puts
/// the `c`-part subpartitions in bijection with ordinary subpartitions of
/// the reduced shape, weighted by `q^{c(c+1)/2}`.
pub fn distinct_rank_gf(lambda: &Partition, truncate: usize) -> Result<CoeffSeq, Error> {
    if !lambda.is_strict() {
        return Err(Error::NotStrictlyDecreasing);
    }
    let mut acc = CoeffSeq::one(truncate);
    for c in 1..=lambda.len() {
        let shift = (c as u64) * (c as u64 + 1) / 2;
        if shift > truncate as u64 {
            break;
        }
        let reduced: Vec<u32> = (0..c)
            .map(|j| lambda.parts()[j] - (c - j) as u32)
            .collect();
        let nu = Partition::new(&reduced).expect("staircase subtraction keeps order");
        let g = rank_gf_formula(&nu, 1, truncate);
        acc = acc.add_shifted(Sign::Plus, shift, &g)?;
    }
    Ok(acc)
}

/// Distinct-parts generating function for a 4-part `μ`, grouped as
/// "1 or 2 nonzero parts" plus "3 or 4 nonzero parts":
/// `F_μ = 1 + q·G_{(μ₁−1, μ₂)} + q⁶·G_{(μ₁−3, μ₂−2, μ₃−1, μ₄)}`.
///
/// Matches [`distinct_rank_gf`] coefficient-for-coefficient; the two-way
/// grouping keeps the low-degree part entirely inside the `q`-term, which
/// is what makes coefficient transfer to the `q⁶`-term exact at high degree.
pub fn distinct_rank_gf_4part(mu: &Partition, truncate: usize) -> Result<CoeffSeq, Error> {
    if mu.len() != 4 {
        return Err(Error::WrongLength {
            expected: 4,
            got: mu.len(),
        });
    }
    if !mu.is_strict() {
        return Err(Error::NotStrictlyDecreasing);
    }
    let p = mu.parts();
    let pairs = Partition::new(&[p[0] - 1, p[1]])?;
    let triples_and_quads = Partition::new(&[p[0] - 3, p[1] - 2, p[2] - 1, p[3]])?;
    let acc = CoeffSeq::one(truncate)
        .add_shifted(Sign::Plus, 1, &rank_gf_formula(&pairs, 1, truncate))?
        .add_shifted(Sign::Plus, 6, &rank_gf_formula(&triples_and_quads, 1, truncate))?;
    Ok(acc)
}
