//! Dense truncated power series with exact big-integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Sign of an additive contribution, `(−1)^{|A|}` in subset-sum expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Plus` for even `n`, `Minus` for odd `n`.
    pub fn from_parity(n: u32) -> Sign {
        if n.is_multiple_of(2) { Sign::Plus } else { Sign::Minus }
    }

    pub fn unit(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Coefficients of a polynomial (or truncated series) in `q`: entry `n` is
/// the coefficient of `qⁿ`. The representation is dense — a sequence with
/// truncation `T` stores exactly `T + 1` exact integers, zeros included.
///
/// All arithmetic here is exact; operations act in the quotient ring of
/// power series modulo `q^{T+1}`, so identities that hold for full series
/// hold coefficient-for-coefficient under truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq {
    coeffs: Vec<BigInt>,
}

impl CoeffSeq {
    /// The zero series truncated at degree `truncation`.
    pub fn zeros(truncation: usize) -> Self {
        CoeffSeq {
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    /// The constant series 1 truncated at degree `truncation`.
    pub fn one(truncation: usize) -> Self {
        let mut s = CoeffSeq::zeros(truncation);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Wraps an explicit coefficient vector; must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(CoeffSeq { coeffs })
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(coeffs: &[i64]) -> Result<Self, Error> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Maximum represented degree (inclusive).
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `qⁿ`. Panics beyond the truncation.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Value at `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Degree of the highest nonzero coefficient, or `None` for the zero
    /// series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Multiplies by the geometric factor `1/(1−q^c)` under truncation:
    /// `out[n] = seq[n] + out[n−c]` for `n ≥ c`.
    ///
    /// Rejects `c = 0` (a divergent factor).
    pub fn geometric_accumulate(&self, c: usize) -> Result<CoeffSeq, Error> {
        if c == 0 {
            return Err(Error::ZeroPeriod);
        }
        let mut out = self.coeffs.clone();
        accumulate_in_place(&mut out, c, 0);
        Ok(CoeffSeq { coeffs: out })
    }

    /// Multiplies by `(1−q^c)`: `out[n] = seq[n] − seq[n−c]`, with entries
    /// at negative index treated as zero. Exact inverse of
    /// [`geometric_accumulate`](Self::geometric_accumulate) at the same
    /// truncation. Requires `c ≥ 1`.
    pub fn difference(&self, c: usize) -> CoeffSeq {
        assert!(c >= 1, "difference period must be positive");
        let mut out = self.coeffs.clone();
        for n in (c..out.len()).rev() {
            let sub = self.coeffs[n - c].clone();
            out[n] -= sub;
        }
        CoeffSeq { coeffs: out }
    }

    /// Adds `sign · q^exponent · term` into `self`, dropping whatever shifts
    /// past the truncation. Both series must share a truncation.
    pub fn add_shifted(
        mut self,
        sign: Sign,
        exponent: u64,
        term: &CoeffSeq,
    ) -> Result<CoeffSeq, Error> {
        if self.truncation() != term.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: term.truncation(),
            });
        }
        let t = self.truncation() as u64;
        if exponent > t {
            return Ok(self);
        }
        let e = exponent as usize;
        for n in e..self.coeffs.len() {
            match sign {
                Sign::Plus => self.coeffs[n] += &term.coeffs[n - e],
                Sign::Minus => self.coeffs[n] -= &term.coeffs[n - e],
            }
        }
        Ok(self)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// In-place multiplication of a dense coefficient slice by `1/(1−q^c)`.
/// Entries below `start` are assumed (and left) untouched as zeros only
/// when the caller knows the slice is zero there; `start` merely skips work.
pub(crate) fn accumulate_in_place(coeffs: &mut [BigInt], c: usize, start: usize) {
    for n in (start + c).max(c)..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(n);
        hi[0] += &lo[n - c];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> CoeffSeq {
        CoeffSeq::from_i64(v).unwrap()
    }

    #[test]
    fn geometric_accumulate_examples() {
        assert_eq!(
            seq(&[1, 0, 0, 0, 0]).geometric_accumulate(1).unwrap(),
            seq(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            seq(&[1, 0, 0, 0, 0]).geometric_accumulate(2).unwrap(),
            seq(&[1, 0, 1, 0, 1])
        );
        // (1+q)/(1−q²) = 1/(1−q)
        assert_eq!(
            seq(&[1, 1, 0, 0]).geometric_accumulate(2).unwrap(),
            seq(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn geometric_accumulate_rejects_zero_period() {
        assert!(matches!(
            seq(&[1, 0]).geometric_accumulate(0),
            Err(Error::ZeroPeriod)
        ));
    }

    #[test]
    fn difference_examples() {
        assert_eq!(seq(&[1, 1, 1]).difference(1), seq(&[1, 0, 0]));
        assert_eq!(seq(&[1, 1, 2, 1]).difference(1), seq(&[1, 0, 1, -1]));
    }

    #[test]
    fn add_shifted_examples() {
        let acc = seq(&[0, 0, 0]);
        let out = acc.add_shifted(Sign::Plus, 1, &seq(&[1, 1, 1])).unwrap();
        assert_eq!(out, seq(&[0, 1, 1]));

        let acc = seq(&[1, 1, 1]);
        let out = acc.add_shifted(Sign::Minus, 0, &seq(&[1, 1, 1])).unwrap();
        assert_eq!(out, seq(&[0, 0, 0]));

        let acc = seq(&[1, 0, 0, 0]);
        let out = acc.add_shifted(Sign::Minus, 3, &seq(&[1, 9, 9, 9])).unwrap();
        assert_eq!(out, seq(&[1, 0, 0, -1]));

        // shifting past the truncation is a no-op
        let acc = seq(&[1, 0]);
        let out = acc.add_shifted(Sign::Plus, 5, &seq(&[1, 1])).unwrap();
        assert_eq!(out, seq(&[1, 0]));
    }

    #[test]
    fn add_shifted_requires_shared_truncation() {
        let acc = seq(&[1, 0]);
        assert!(matches!(
            acc.add_shifted(Sign::Plus, 0, &seq(&[1, 0, 0])),
            Err(Error::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn from_coeffs_rejects_empty() {
        assert!(matches!(
            CoeffSeq::from_coeffs(Vec::new()),
            Err(Error::EmptySequence)
        ));
    }

    #[test]
    fn eval_at_one_sums_coefficients() {
        assert_eq!(seq(&[1, 1, 2, 1]).eval_at_one(), BigInt::from(5));
    }

    #[test]
    fn degree_skips_trailing_zeros() {
        assert_eq!(seq(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(seq(&[0, 0]).degree(), None);
    }
}
