//! Exact combinatorics of subpartitions in Ferrers diagrams.
//!
//! Given a partition `λ = (λ₁ ≥ … ≥ λ_b)`, the rank generating function
//! `G_λ(q) = Σ aₙ qⁿ` counts the partitions `μ ⊆ λ` (diagram containment)
//! of each size `n`; `F_λ` is the analogue restricted to partitions with
//! distinct nonzero parts. This crate computes both with exact integer
//! coefficients by several independent methods, analyzes the coefficient
//! sequences (unimodality, concavity, increasing/decreasing segments),
//! constructs certified nonunimodal 4-part witnesses, and runs
//! deterministic exhaustive scans.
//!
//! Entry points:
//! - [`Partition`] and [`CoeffSeq`] — the exact data types.
//! - [`genfunc`] — `G`, its weighted variant, and `F`, by subset formula,
//!   recursion, dynamic programming, or brute enumeration.
//! - [`analysis`] — unimodality reports, concavity windows, and exact
//!   numeric tables (alternating sums, quasipolynomial leading terms).
//! - [`search`] — witness construction/verification and checkpointed scans.

pub mod analysis;
pub mod genfunc;
pub mod partition;
pub mod search;
pub mod series;

pub use analysis::{RationalValue, UnimodalityReport};
pub use genfunc::SubsetTerm;
pub use partition::Partition;
pub use search::{GfKind, ScanResult, Witness4};
pub use series::{CoeffSeq, Sign};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not weakly decreasing: part {found} follows part {prev}")]
    NotWeaklyDecreasing { prev: u32, found: u32 },
    #[error("parts must be strictly decreasing (repeated or increasing part)")]
    NotStrictlyDecreasing,
    #[error("expected exactly {expected} parts, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("geometric factor with period 0 diverges")]
    ZeroPeriod,
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("coefficient sequence may not be empty")]
    EmptySequence,
    #[error("subset element {element} outside [{bound}]")]
    SubsetElementOutOfRange { element: usize, bound: usize },
    #[error("partition size {size} exceeds enumeration bound {bound}")]
    SizeBoundExceeded { size: u64, bound: u64 },
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("window [{lo}, {hi}] out of range for truncation {truncation}")]
    WindowOutOfRange { lo: usize, hi: usize, truncation: usize },
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("periods must have gcd 1, found gcd {0}")]
    GcdNotOne(u64),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("bad checkpoint: {0}")]
    BadCheckpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
