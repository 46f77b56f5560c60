//! Integer partitions with weakly decreasing positive parts.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A partition `λ = (λ₁, λ₂, …, λ_b)` with `λ₁ ≥ λ₂ ≥ … ≥ λ_b > 0`.
///
/// Parts are 1-indexed in the API (`part(1)` is the largest), matching the
/// usual convention. The empty partition has no parts. Values are immutable
/// after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from raw nonnegative entries.
    ///
    /// The input must be weakly decreasing (zeros may only trail); trailing
    /// zeros are stripped. Anything else is rejected, e.g. `[3, 4]` or
    /// `[2, 0, 1]`.
    pub fn new(raw: &[u32]) -> Result<Self, Error> {
        for w in raw.windows(2) {
            if w[1] > w[0] {
                return Err(Error::NotWeaklyDecreasing {
                    prev: w[0],
                    found: w[1],
                });
            }
        }
        let nonzero = raw.iter().take_while(|&&p| p > 0).count();
        Ok(Partition {
            parts: raw[..nonzero].to_vec(),
        })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Number of parts, written `b`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The `k`-th part, 1-indexed: `part(1) = λ₁` is the largest.
    ///
    /// Panics if `k` is 0 or exceeds the length.
    pub fn part(&self, k: usize) -> u32 {
        assert!(k >= 1 && k <= self.parts.len(), "part index {k} out of range");
        self.parts[k - 1]
    }

    /// The largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The smallest part, or 0 for the empty partition.
    pub fn last(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Containment of Ferrers diagrams: true iff `μ ⊆ self`, i.e. `μ` has
    /// no more parts than `self` and `μ_j ≤ λ_j` for every `j`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.parts.len() <= self.parts.len()
            && mu.parts.iter().zip(&self.parts).all(|(&m, &l)| m <= l)
    }

    /// True iff the parts are strictly decreasing (vacuously true when empty).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate (transpose) partition `λ'`: the diagram flipped across
    /// its main diagonal. Conjugation preserves size and containment.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols {
            let height = self.parts.iter().take_while(|&&p| p as usize >= c).count();
            parts.push(height as u32);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `10,9,9,9,9,9`; empty string for the
    /// empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut raw = Vec::new();
        for tok in s.split(',') {
            let part: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::BadCheckpoint(format!("invalid part {tok:?}")))?;
            raw.push(part);
        }
        Partition::new(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_accepts_valid_sequences() {
        let p = Partition::new(&[4, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[4, 3, 2]);
        assert_eq!(p.len(), 3);
        assert_eq!(p.size(), 9);
    }

    #[test]
    fn new_strips_trailing_zeros() {
        let p = Partition::new(&[2, 1, 0]).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        let q = Partition::new(&[3, 0, 0, 0]).unwrap();
        assert_eq!(q.parts(), &[3]);
    }

    #[test]
    fn new_rejects_increases() {
        assert!(matches!(
            Partition::new(&[3, 4]),
            Err(Error::NotWeaklyDecreasing { prev: 3, found: 4 })
        ));
        // zero followed by a positive part is an increase
        assert!(Partition::new(&[2, 0, 1]).is_err());
    }

    #[test]
    fn empty_partition() {
        let e = Partition::new(&[]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e, Partition::empty());
        assert_eq!(e.size(), 0);
        assert_eq!(e.first(), 0);
    }

    #[test]
    fn part_is_one_indexed() {
        let p = Partition::new(&[5, 3, 1]).unwrap();
        assert_eq!(p.part(1), 5);
        assert_eq!(p.part(3), 1);
    }

    #[test]
    fn containment_examples() {
        let lam = Partition::new(&[2, 2]).unwrap();
        assert!(lam.contains(&Partition::new(&[2, 1]).unwrap()));
        assert!(!lam.contains(&Partition::new(&[3]).unwrap()));
        assert!(lam.contains(&Partition::empty()));
        // more parts than the container
        assert!(!lam.contains(&Partition::new(&[1, 1, 1]).unwrap()));
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(&[4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p = Partition::new(&[10, 9, 9]).unwrap();
        assert_eq!(p.to_string(), "10,9,9");
        assert_eq!("10,9,9".parse::<Partition>().unwrap(), p);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!(" 3 , 2 ".parse::<Partition>().is_ok());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
