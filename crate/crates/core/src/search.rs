//! Nonunimodal witness construction and deterministic exhaustive scans.
//!
//! The 4-part witness family fixes `λ = (12m−1, 12n−1, 12n−1, 12n−1)` and a
//! 12-divisible base index `N = 12(ℓ−1)`. Two explicit quadratics in
//! `(m, ℓ, n)` give the exact coefficients of `(1−q)G_λ` at `N+1` and `N+2`
//! whenever a set of exact side conditions holds; a negative value followed
//! by a positive one certifies a dip at `N+1`. Every constructed witness is
//! re-verified against the truncated series before it is returned.

use std::collections::VecDeque;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::analysis::{self, UnimodalityReport};
use crate::genfunc;
use crate::partition::Partition;
use crate::Error;

/// Which generating function a scan or a record refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfKind {
    /// Rank generating function over all subpartitions.
    G,
    /// Distinct-parts variant (defined for strictly decreasing partitions).
    F,
}

/// Parity of an index, reported for dips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) { Parity::Even } else { Parity::Odd }
    }
}

/// A verified nonunimodal 4-part witness: the coefficients of `(1−q)G_λ`
/// at `n_base+1` and `n_base+2` are negative and positive respectively,
/// so `G_λ` dips at index `n_base+1`.
#[derive(Debug, Clone)]
pub struct Witness4 {
    pub lambda: Partition,
    /// The 12-divisible base index `N`; the dip sits at `n_base + 1`.
    pub n_base: usize,
    /// Parameters: `λ₁ = 12m−1`, `λ₂ = λ₃ = λ₄ = 12n−1`, `n_base = 12(ℓ−1)`.
    pub m: u64,
    pub ell: u64,
    pub n: u64,
    /// `[q^{n_base+1}] (1−q)G_λ`, strictly negative; equals the first
    /// quadratic and is re-verified against the series.
    pub f_value: BigInt,
    /// `[q^{n_base+2}] (1−q)G_λ`, strictly positive.
    pub g_value: BigInt,
}

/// Exact values of the two coefficient quadratics:
/// `f = 9ℓ² − (48m+15)ℓ + 24m² + 72mn − 36n² + 38m + 6` and
/// `g = 9ℓ² − (48m+15)ℓ + 24m² + 72mn − 36n² + 34m + 6n + 6`.
pub fn coefficient_quadratics(m: i64, ell: i64, n: i64) -> (BigInt, BigInt) {
    let mb = BigInt::from(m);
    let lb = BigInt::from(ell);
    let nb = BigInt::from(n);
    let shared = BigInt::from(9) * &lb * &lb - (BigInt::from(48) * &mb + 15) * &lb
        + BigInt::from(24) * &mb * &mb
        + BigInt::from(72) * &mb * &nb
        - BigInt::from(36) * &nb * &nb;
    let f = &shared + BigInt::from(38) * &mb + 6;
    let g = shared + BigInt::from(34) * &mb + BigInt::from(6) * &nb + 6;
    (f, g)
}

/// The numerator exponents of the subset expansion at `b = 4` that must lie
/// beyond `N+2` for the quadratics to describe the series exactly. The kept
/// exponents are 0, `λ₁+1`, `λ₁+λ₂+2`, and `2λ₂+2`.
fn dropped_exponents(l1: u64, l2: u64, l3: u64, l4: u64) -> [u64; 12] {
    [
        4 * l4 + 4,
        3 * l3 + l4 + 4,
        l1 + 3 * l4 + 4,
        3 * l3 + 3,
        2 * l2 + l3 + 3,
        l1 + 2 * l3 + 3,
        2 * l2 + l3 + l4 + 4,
        l1 + 2 * l3 + l4 + 4,
        l1 + l2 + 2 * l4 + 4,
        l1 + l2 + l3 + 3,
        l1 + l2 + l3 + l4 + 4,
        2 * l2 + 2 * l4 + 4,
    ]
}

/// Exact validity of a parameter triple, independent of the signs of the
/// quadratics: the constructed `λ` is weakly decreasing, the base index
/// satisfies `λ₁+λ₂+14 ≤ N < 2λ₁+2`, the last part clears `(9/10)λ₁` and
/// `3λ₄ > N+2`, and every dropped numerator exponent exceeds `N+2`.
/// All comparisons are integer-exact.
pub fn witness_parameters_valid(m: u64, ell: u64, n: u64) -> bool {
    if m < 1 || ell < 1 || n < 1 || n > m {
        return false;
    }
    let l1 = 12 * m - 1;
    let l2 = 12 * n - 1;
    let (l3, l4) = (l2, l2);
    let n_base = 12 * (ell - 1);
    if l1 + l2 + 14 > n_base || n_base >= 2 * l1 + 2 {
        return false;
    }
    if 10 * l4 <= 9 * l1 {
        return false;
    }
    if 3 * l4 <= n_base + 2 {
        return false;
    }
    dropped_exponents(l1, l2, l3, l4)
        .iter()
        .all(|&e| e > n_base + 2)
}

/// Extracts `[q^{at+1}]` and `[q^{at+2}]` of `(1−q)·G_λ` by direct truncated
/// series computation — the oracle every witness is checked against.
pub fn rank_gf_difference_pair(lambda: &Partition, at: usize) -> (BigInt, BigInt) {
    let g = genfunc::rank_gf_formula(lambda, 1, at + 2);
    let d = g.difference(1);
    (d.coeff(at + 1).clone(), d.coeff(at + 2).clone())
}

/// Searches the quadratic family at a fixed `m`: for each integer `ℓ` with
/// `1.999m < ℓ < 1.9999m` (exact cross-multiplied comparisons), scans `n`
/// upward and takes the least `n` whose parameters are exactly valid with
/// `f < 0 < g`. The candidate is then re-verified by extracting both
/// coefficients from the truncated series; a mismatch is an internal error,
/// not a miss. Returns `None` when the window holds no integer or no `n`
/// qualifies.
pub fn find_witness(m: u64) -> Result<Option<Witness4>, Error> {
    assert!(m >= 1, "m must be positive");
    let wide = m as u128;
    let ell_lo = (1999 * wide) / 1000 + 1;
    let ell_hi = (19999 * wide).div_ceil(10000).saturating_sub(1);
    for ell in ell_lo..=ell_hi {
        let ell = ell as u64;
        for n in 1..=m {
            if !witness_parameters_valid(m, ell, n) {
                continue;
            }
            let (f, g) = coefficient_quadratics(m as i64, ell as i64, n as i64);
            if !(f.is_negative() && g.is_positive()) {
                continue;
            }
            return verify_witness(m, ell, n, f, g).map(Some);
        }
    }
    Ok(None)
}

fn verify_witness(m: u64, ell: u64, n: u64, f: BigInt, g: BigInt) -> Result<Witness4, Error> {
    let l1 = (12 * m - 1) as u32;
    let l2 = (12 * n - 1) as u32;
    let lambda = Partition::new(&[l1, l2, l2, l2])?;
    let n_base = (12 * (ell - 1)) as usize;
    let (f_series, g_series) = rank_gf_difference_pair(&lambda, n_base);
    if f_series != f || g_series != g {
        return Err(Error::VerificationFailed(format!(
            "quadratics ({f}, {g}) disagree with series coefficients \
             ({f_series}, {g_series}) for λ = {lambda} at {n_base}+1, {n_base}+2"
        )));
    }
    if !f_series.is_negative() || !g_series.is_positive() {
        return Err(Error::VerificationFailed(format!(
            "series signs do not certify a dip for λ = {lambda} at {}",
            n_base + 1
        )));
    }
    Ok(Witness4 {
        lambda,
        n_base,
        m,
        ell,
        n,
        f_value: f,
        g_value: g,
    })
}

/// Lifts a verified witness to the distinct-parts problem:
/// `μ = (λ₁+3, λ₂+2, λ₃+1, λ₄)` has strictly decreasing parts and
/// `(1−q)F_μ` carries the witness coefficients at `n_base+7` and `n_base+8`.
/// Both transfers are verified by direct series computation; failure
/// indicates an implementation bug and is reported as an error.
pub fn lift_to_distinct(witness: &Witness4) -> Result<Partition, Error> {
    let p = witness.lambda.parts();
    let mu = Partition::new(&[p[0] + 3, p[1] + 2, p[2] + 1, p[3]])?;
    let f_mu = genfunc::distinct_rank_gf_4part(&mu, witness.n_base + 8)?;
    let d = f_mu.difference(1);
    let at_7 = d.coeff(witness.n_base + 7);
    let at_8 = d.coeff(witness.n_base + 8);
    if *at_7 != witness.f_value || *at_8 != witness.g_value {
        return Err(Error::VerificationFailed(format!(
            "lifted μ = {mu} transfers ({at_7}, {at_8}) instead of ({}, {}) \
             at indices {}+7, {}+8",
            witness.f_value, witness.g_value, witness.n_base, witness.n_base
        )));
    }
    Ok(mu)
}

/// One scanned partition: the verdict is regenerable from `(lambda, kind)`.
#[derive(Debug, Clone)]
pub struct ScanResult {
    pub lambda: Partition,
    pub kind: GfKind,
    pub report: UnimodalityReport,
    /// Parity of the first dip index, present iff nonunimodal.
    pub dip_parity: Option<Parity>,
}

/// Configuration of an exhaustive scan over partitions with exactly
/// `parts` parts and first part at most `max_first`.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub parts: usize,
    pub max_first: u32,
    pub kind: GfKind,
    /// Restrict to strictly decreasing parts; forced on for kind `F`
    /// (and forces kind `F` when set).
    pub distinct: bool,
    /// Worker threads; 0 picks the runtime default.
    pub jobs: usize,
    /// Optional checkpoint file for resumable scans.
    pub checkpoint: Option<PathBuf>,
    /// Partitions evaluated per parallel batch; also the checkpoint cadence.
    pub chunk: usize,
}

impl ScanConfig {
    pub fn new(parts: usize, max_first: u32, kind: GfKind) -> Self {
        ScanConfig {
            parts,
            max_first,
            kind,
            distinct: kind == GfKind::F,
            jobs: 0,
            checkpoint: None,
            chunk: 512,
        }
    }

    fn effective_kind(&self) -> GfKind {
        if self.distinct { GfKind::F } else { self.kind }
    }
}

/// Lexicographically decreasing stream of part tuples: weakly decreasing
/// `b`-tuples in `[1, max_first]`, or strictly decreasing ones for
/// distinct-parts scans.
struct TupleStream {
    current: Option<Vec<u32>>,
    strict: bool,
}

impl TupleStream {
    fn start(parts: usize, max_first: u32, strict: bool) -> TupleStream {
        let current = if strict {
            if (max_first as usize) < parts {
                None
            } else {
                Some((0..parts).map(|i| max_first - i as u32).collect())
            }
        } else {
            Some(vec![max_first; parts])
        };
        TupleStream { current, strict }
    }

    fn resume_after(
        parts: usize,
        max_first: u32,
        strict: bool,
        last: &[u32],
    ) -> Result<TupleStream, Error> {
        let ordered = if strict {
            last.windows(2).all(|w| w[0] > w[1])
        } else {
            last.windows(2).all(|w| w[0] >= w[1])
        };
        if last.len() != parts
            || !ordered
            || last.first().is_some_and(|&p| p > max_first)
            || last.last().is_some_and(|&p| p < 1)
        {
            return Err(Error::BadCheckpoint(format!(
                "partition {:?} does not belong to this scan",
                last
            )));
        }
        let mut stream = TupleStream {
            current: Some(last.to_vec()),
            strict,
        };
        stream.advance();
        Ok(stream)
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let b = cur.len();
        for j in (0..b).rev() {
            // smallest value position j may take while a valid tail exists
            let floor = if self.strict { (b - j) as u32 } else { 1 };
            if cur[j] > floor {
                cur[j] -= 1;
                let v = cur[j];
                for (offset, later) in cur[j + 1..].iter_mut().enumerate() {
                    *later = if self.strict {
                        v - (offset + 1) as u32
                    } else {
                        v
                    };
                }
                return;
            }
        }
        self.current = None;
    }

    fn next_tuple(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        self.advance();
        Some(out)
    }
}

fn evaluate(parts: &[u32], kind: GfKind) -> ScanResult {
    let lambda = Partition::new(parts).expect("enumerated tuples are valid partitions");
    let series = match kind {
        GfKind::G => genfunc::rank_gf_formula(&lambda, 1, genfunc::full_degree(&lambda, 1)),
        GfKind::F => genfunc::distinct_rank_gf(&lambda, lambda.size() as usize)
            .expect("distinct scans enumerate strict partitions"),
    };
    let report = analysis::unimodality_report(&series);
    let dip_parity = report.first_dip_index.map(Parity::of);
    ScanResult {
        lambda,
        kind,
        report,
        dip_parity,
    }
}

/// Deterministic scan iterator. Work is evaluated in order-preserving
/// parallel chunks, so the emitted stream is identical for any job count.
/// When a checkpoint path is configured, the last partition of a chunk is
/// recorded (atomically, write-then-rename) only after every result of the
/// chunk has been handed out; a checkpoint write failure panics.
pub struct Scan {
    stream: TupleStream,
    kind: GfKind,
    pool: rayon::ThreadPool,
    chunk: usize,
    buffer: VecDeque<ScanResult>,
    checkpoint: Option<PathBuf>,
    delivered: Option<Vec<u32>>,
}

impl Iterator for Scan {
    type Item = ScanResult;

    fn next(&mut self) -> Option<ScanResult> {
        if let Some(out) = self.buffer.pop_front() {
            return Some(out);
        }
        // previous chunk fully delivered — persist before fetching more
        if let (Some(path), Some(last)) = (&self.checkpoint, self.delivered.take()) {
            write_checkpoint(path, &last).expect("checkpoint write failed");
        }
        let mut tuples = Vec::with_capacity(self.chunk);
        while tuples.len() < self.chunk {
            match self.stream.next_tuple() {
                Some(t) => tuples.push(t),
                None => break,
            }
        }
        if tuples.is_empty() {
            return None;
        }
        self.delivered = tuples.last().cloned();
        let kind = self.kind;
        let results: Vec<ScanResult> = self
            .pool
            .install(|| tuples.par_iter().map(|t| evaluate(t, kind)).collect());
        self.buffer.extend(results);
        self.buffer.pop_front()
    }
}

/// Starts a scan. Emits one result per partition with exactly
/// `config.parts` parts and first part at most `config.max_first`, in
/// lexicographically decreasing part order. Resumes past the partition
/// recorded in the checkpoint file when one is present and readable.
pub fn scan_partitions(config: &ScanConfig) -> Result<Scan, Error> {
    assert!(config.parts >= 1, "scans need at least one part");
    assert!(config.max_first >= 1, "max_first must be positive");
    assert!(config.chunk >= 1, "chunk size must be positive");
    let kind = config.effective_kind();
    let strict = kind == GfKind::F;
    let resume = match &config.checkpoint {
        Some(path) => read_checkpoint(path)?,
        None => None,
    };
    let stream = match resume {
        Some(last) => TupleStream::resume_after(config.parts, config.max_first, strict, &last)?,
        None => TupleStream::start(config.parts, config.max_first, strict),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::VerificationFailed(format!("worker pool: {e}")))?;
    Ok(Scan {
        stream,
        kind,
        pool,
        chunk: config.chunk,
        buffer: VecDeque::new(),
        checkpoint: config.checkpoint.clone(),
        delivered: None,
    })
}

/// Counts nonunimodal and total 4-part partitions with `λ₁ ≤ max_first`
/// for the plain rank generating function.
pub fn density_counts(max_first: u32) -> (u64, u64) {
    let config = ScanConfig::new(4, max_first, GfKind::G);
    let mut nonunimodal = 0;
    let mut total = 0;
    for result in scan_partitions(&config).expect("scan without checkpoint cannot fail") {
        total += 1;
        if !result.report.unimodal {
            nonunimodal += 1;
        }
    }
    (nonunimodal, total)
}

/// Reads a checkpoint file: a single line `last_completed = p₁,p₂,…`.
/// A missing file means a fresh start; anything unparsable is an error.
pub fn read_checkpoint(path: &Path) -> Result<Option<Vec<u32>>, Error> {
    let text = match fs::read_to_string(path) {
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
        Ok(text) => text,
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::BadCheckpoint("file is empty".into()))?;
    let (key, value) = line
        .split_once('=')
        .ok_or_else(|| Error::BadCheckpoint(format!("malformed line {line:?}")))?;
    if key.trim() != "last_completed" {
        return Err(Error::BadCheckpoint(format!("unknown key {:?}", key.trim())));
    }
    let partition: Partition = value
        .trim()
        .parse()
        .map_err(|e| Error::BadCheckpoint(format!("{e}")))?;
    Ok(Some(partition.parts().to_vec()))
}

/// Atomically records the last completed partition: the line is written to
/// a sibling temporary file and renamed over the target.
pub fn write_checkpoint(path: &Path, last: &[u32]) -> Result<(), Error> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let parts = last
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");
    fs::write(&tmp, format!("last_completed = {parts}\n"))?;
    fs::rename(&tmp, path)?;
    Ok(())
}
