//! Shared generators for the integration test suites.
#![allow(dead_code)] // each test binary uses its own subset

use ferrers::Partition;
use rand::Rng;

/// Every partition (including the empty one) with size at most `max`.
pub fn all_partitions_up_to_size(max: u64) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<Vec<u32>> = (1..=max as u32).map(|p| vec![p]).collect();
    while let Some(parts) = stack.pop() {
        let used: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        let cap = u64::from(*parts.last().expect("nonempty")).min(max - used);
        for next in 1..=cap as u32 {
            let mut longer = parts.clone();
            longer.push(next);
            stack.push(longer);
        }
        out.push(Partition::new(&parts).expect("constructed weakly decreasing"));
    }
    out
}

/// Every partition with exactly `parts` parts and first part at most
/// `max_first`, optionally strictly decreasing.
pub fn all_partitions_shaped(parts: usize, max_first: u32, strict: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    fn descend(
        prefix: &mut Vec<u32>,
        parts: usize,
        max_first: u32,
        strict: bool,
        out: &mut Vec<Partition>,
    ) {
        if prefix.len() == parts {
            out.push(Partition::new(prefix).expect("weakly decreasing"));
            return;
        }
        let cap = match prefix.last() {
            None => max_first,
            Some(&prev) if strict => prev.saturating_sub(1),
            Some(&prev) => prev,
        };
        let needed_below = if strict { (parts - prefix.len() - 1) as u32 } else { 0 };
        for next in (1 + needed_below..=cap).rev() {
            prefix.push(next);
            descend(prefix, parts, max_first, strict, out);
            prefix.pop();
        }
    }
    descend(&mut prefix, parts, max_first, strict, &mut out);
    out
}

/// Random nonempty partition with at most `max_len` parts and total size at
/// most `max_size`.
pub fn random_partition(rng: &mut impl Rng, max_len: usize, max_size: u64) -> Partition {
    let len = rng.random_range(1..=max_len);
    let mut parts: Vec<u32> = Vec::with_capacity(len);
    let mut budget = max_size;
    let mut cap = max_size;
    for _ in 0..len {
        if budget == 0 || cap == 0 {
            break;
        }
        let hi = cap.min(budget);
        let p = rng.random_range(1..=hi) as u32;
        parts.push(p);
        budget -= u64::from(p);
        cap = u64::from(p);
    }
    if parts.is_empty() {
        parts.push(1);
    }
    Partition::new(&parts).expect("generated weakly decreasing")
}

/// Random strictly decreasing partition with at most `max_len` parts, first
/// part at most `max_first`.
pub fn random_strict_partition(rng: &mut impl Rng, max_len: usize, max_first: u32) -> Partition {
    let len = rng.random_range(1..=max_len);
    let mut parts: Vec<u32> = Vec::with_capacity(len);
    let mut cap = max_first;
    for remaining in (0..len).rev() {
        let lo = remaining as u32 + 1;
        if cap < lo {
            break;
        }
        let p = rng.random_range(lo..=cap);
        parts.push(p);
        cap = p.saturating_sub(1);
    }
    if parts.is_empty() {
        parts.push(1);
    }
    Partition::new(&parts).expect("generated strictly decreasing")
}

/// Random partition whose first part carries at least half the size
/// (`2λ₁ ≥ |λ|`), the first-part-dominant regime.
pub fn random_first_dominant(rng: &mut impl Rng, max_len: usize, max_first: u32) -> Partition {
    let first = rng.random_range(1..=max_first);
    let mut parts = vec![first];
    let mut budget = u64::from(first);
    let mut cap = first;
    for _ in 1..max_len {
        if budget == 0 || cap == 0 {
            break;
        }
        let hi = u64::from(cap).min(budget);
        let p = rng.random_range(0..=hi) as u32;
        if p == 0 {
            break;
        }
        parts.push(p);
        budget -= u64::from(p);
        cap = p;
    }
    Partition::new(&parts).expect("generated weakly decreasing")
}

/// Random strictly decreasing partition with `2λ₁ ≥ |λ|`.
pub fn random_first_dominant_strict(
    rng: &mut impl Rng,
    max_len: usize,
    max_first: u32,
) -> Partition {
    loop {
        let p = random_strict_partition(rng, max_len, max_first);
        if 2 * u64::from(p.first()) >= p.size() {
            return p;
        }
    }
}
