//! Differential gate: the dynamic program against the brute-force oracles,
//! exhaustively on tiny hosts and on seeded random families beyond that.
//! This is the primary correctness evidence for the subproblem recurrence.

use cfc_core::cfdp::{max_cfc, min_cfc};
use cfc_core::gen::{all_intervals, interval_subsets, random_hypergraph};
use cfc_core::hypergraph::{verify_cf_colouring, IntervalHypergraph};
use cfc_core::oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_family(h: &IntervalHypergraph, max_colours: usize) {
    for n_colours in 1..=max_colours {
        let want = oracle::brute_max_cfc(h, n_colours).unwrap();
        let (got, witness) = max_cfc(h, n_colours);
        assert_eq!(
            got, want,
            "max_cfc mismatch on {h} with {n_colours} colours (witness {witness:?})"
        );
    }
    let want_k = oracle::brute_cfc_number(h).unwrap();
    let (got_k, c) = min_cfc(h);
    assert_eq!(got_k, want_k, "min_cfc mismatch on {h}");
    if h.m() > 0 {
        assert!(verify_cf_colouring(h, &c), "invalid colouring on {h}");
        assert_eq!(c.palette_size(), got_k);
    }
}

#[test]
fn exhaustive_all_families_n4() {
    for h in interval_subsets(4) {
        check_family(&h, 3);
    }
}

#[test]
fn exhaustive_families_n5_up_to_seven_intervals() {
    let all = all_intervals(5);
    for mask in 0u32..(1 << all.len()) {
        if mask.count_ones() > 7 {
            continue;
        }
        let ivs: Vec<_> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &iv)| iv)
            .collect();
        let h = IntervalHypergraph::new(5, ivs).unwrap();
        check_family(&h, 3);
    }
}

#[test]
fn random_families_wide() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFEED_5EED);
    for _ in 0..6000 {
        let n = rng.gen_range(4..=8);
        let m = rng.gen_range(1..=10);
        let h = random_hypergraph(n, m, &mut rng);
        check_family(&h, 4);
    }
}

#[test]
fn random_families_with_duplicates() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0B1_E5);
    for _ in 0..2500 {
        let n = rng.gen_range(3..=6);
        let base = rng.gen_range(1..=5);
        let mut pairs = Vec::new();
        for _ in 0..base {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            for _ in 0..rng.gen_range(1..=3) {
                pairs.push((a.min(b), a.max(b)));
            }
        }
        pairs.truncate(9);
        let h = IntervalHypergraph::from_pairs(n, &pairs);
        check_family(&h, 3);
    }
}

#[test]
fn random_families_n9_n10_minimum_only() {
    // The colouring-number oracle reaches n = 10; the subset oracle does not.
    let mut rng = ChaCha8Rng::seed_from_u64(0xA5A5);
    for _ in 0..800 {
        let n = rng.gen_range(9..=10);
        let m = rng.gen_range(1..=12);
        let h = random_hypergraph(n, m, &mut rng);
        let (got_k, c) = min_cfc(&h);
        assert_eq!(
            got_k,
            oracle::brute_cfc_number(&h).unwrap(),
            "min_cfc mismatch on {h}"
        );
        assert!(verify_cf_colouring(&h, &c));
    }
}
