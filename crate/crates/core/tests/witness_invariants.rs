//! Full direct verification of every witness emitted over a sample range:
//! coefficient signs at the dip, transfer to the lifted distinct-parts
//! partition, and the global nonunimodal verdicts of both series.

use ferrers::analysis::unimodality_report;
use ferrers::genfunc::{distinct_rank_gf_4part, full_degree, rank_gf_formula};
use ferrers::search::{find_witness, lift_to_distinct, rank_gf_difference_pair, Parity};
use num_traits::Signed;

#[test]
fn every_emitted_witness_fully_verifies() {
    let mut seen = 0;
    for m in 1195..=1205 {
        let Some(witness) = find_witness(m).expect("search runs") else {
            continue;
        };
        seen += 1;

        // independent re-extraction of the two signed coefficients
        let (f, g) = rank_gf_difference_pair(&witness.lambda, witness.n_base);
        assert_eq!(f, witness.f_value, "m = {m}");
        assert_eq!(g, witness.g_value, "m = {m}");
        assert!(f.is_negative() && g.is_positive(), "m = {m}");

        // global verdict on the full-degree series
        let g_full = rank_gf_formula(&witness.lambda, 1, full_degree(&witness.lambda, 1));
        let report = unimodality_report(&g_full);
        assert!(!report.unimodal, "G of {} must be nonunimodal", witness.lambda);
        assert_eq!(
            report.first_dip_index,
            Some(witness.n_base + 1),
            "the leftmost dip sits right after the base index"
        );
        // the base index is divisible by 12, so the dip index is odd
        assert_eq!(Parity::of(witness.n_base + 1), Parity::Odd);

        let mu = lift_to_distinct(&witness).expect("transfer verified");
        let f_full = distinct_rank_gf_4part(&mu, mu.size() as usize).expect("strict 4 parts");
        assert!(
            !unimodality_report(&f_full).unimodal,
            "lifted F of {mu} must be nonunimodal"
        );
    }
    assert!(seen >= 5, "expected witnesses across most of the range, saw {seen}");
}
