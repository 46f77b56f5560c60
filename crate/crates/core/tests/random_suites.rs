//! Exhaustive and seeded-random cross-checks of the generating-function
//! routes beyond what the per-module unit tests cover.

mod common;

use common::all_partitions_up_to_size;
use ferrers::analysis::quasipoly_leading;
use ferrers::genfunc::{
    distinct_rank_gf, distinct_rank_gf_4part, enumeration_histogram,
    enumeration_histogram_distinct, full_degree, rank_gf_dp, rank_gf_formula, rank_gf_recursive,
};
use ferrers::CoeffSeq;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn four_routes_agree_exhaustively_to_size_18() {
    for lambda in all_partitions_up_to_size(18) {
        let t = lambda.size() as usize;
        let formula = rank_gf_formula(&lambda, 1, t);
        assert_eq!(formula, rank_gf_recursive(&lambda, 1, t), "recursion, λ = {lambda}");
        assert_eq!(formula, rank_gf_dp(&lambda, t), "dp, λ = {lambda}");
        assert_eq!(
            formula,
            enumeration_histogram(&lambda, 1, t, 18).expect("within bound"),
            "enumeration, λ = {lambda}"
        );
    }
}

#[test]
fn distinct_matches_enumeration_exhaustively_to_size_18() {
    for lambda in all_partitions_up_to_size(18) {
        if !lambda.is_strict() {
            continue;
        }
        let t = lambda.size() as usize;
        assert_eq!(
            distinct_rank_gf(&lambda, t).expect("strict"),
            enumeration_histogram_distinct(&lambda, t, 18).expect("within bound"),
            "λ = {lambda}"
        );
    }
}

#[test]
fn distinct_4part_grouping_matches_general_on_random_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a41);
    let mut checked = 0;
    while checked < 200 {
        let mu = common::random_strict_partition(&mut rng, 4, 40);
        if mu.len() != 4 {
            continue;
        }
        let t = mu.size() as usize;
        assert_eq!(
            distinct_rank_gf_4part(&mu, t).expect("4 strict parts"),
            distinct_rank_gf(&mu, t).expect("strict"),
            "μ = {mu}"
        );
        checked += 1;
    }
}

#[test]
fn weighted_routes_agree_on_random_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x77e1);
    for _ in 0..150 {
        let lambda = common::random_partition(&mut rng, 5, 20);
        for weight in 2..=3 {
            let t = full_degree(&lambda, weight);
            let formula = rank_gf_formula(&lambda, weight, t);
            assert_eq!(
                formula,
                rank_gf_recursive(&lambda, weight, t),
                "λ = {lambda}, weight {weight}"
            );
            assert_eq!(
                formula,
                enumeration_histogram(&lambda, weight, t, 20).expect("small"),
                "λ = {lambda}, weight {weight}"
            );
        }
    }
}

#[test]
fn five_row_rectangles_are_concave_around_the_middle() {
    use ferrers::analysis::second_difference_window;
    use ferrers::Partition;

    for side in [40u32, 60] {
        let lambda = Partition::new(&[side; 5]).expect("rectangle");
        let g = rank_gf_formula(&lambda, 1, full_degree(&lambda, 1));
        let center = 5 * side as usize / 2;
        let half = side as usize / 4;
        assert!(
            second_difference_window(&g, center - half, center + half).expect("window in range"),
            "rectangle {side}^5 must be concave on the middle window"
        );
    }
}

#[test]
fn quasipoly_leading_tracks_actual_for_periods_one_two_three() {
    // one series evaluation covers the whole index range
    let top = 10_000usize;
    let series = CoeffSeq::one(top)
        .geometric_accumulate(1)
        .and_then(|s| s.geometric_accumulate(2))
        .and_then(|s| s.geometric_accumulate(3))
        .expect("positive periods");
    let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
    for n in 100..=top {
        let actual = BigRational::from_integer(series.coeff(n).clone());
        let lead = &sixth
            * BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(2)));
        let gap = (&actual - &lead).abs();
        assert!(
            gap <= BigRational::from_integer(BigInt::from(2 * n)),
            "|actual − leading| ≤ 2n fails at n = {n}: gap = {gap}"
        );
        if n == top {
            let ratio_gap = (actual / &lead - BigRational::one()).abs();
            assert!(
                ratio_gap <= BigRational::new(BigInt::one(), BigInt::from(100)),
                "actual/leading must be within 1% at n = {top}"
            );
        }
    }
    // the public entry point agrees with the shared series at anchor points
    for n in [100usize, 3_333, 10_000] {
        let (actual, lead) = quasipoly_leading(&[1, 2, 3], n).expect("gcd 1");
        assert_eq!(&actual, series.coeff(n));
        assert_eq!(
            lead,
            &sixth
                * BigRational::from_integer(num_integer::binomial(
                    BigInt::from(n),
                    BigInt::from(2)
                ))
        );
    }
}
