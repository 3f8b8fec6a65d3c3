//! Seeded instance generators for tests, sweeps and the CLI.

use rand::Rng;

use crate::hypergraph::{Interval, IntervalHypergraph};

/// Uniform random interval family: `m` intervals with endpoints drawn
/// uniformly from `1..=n` (ordered).
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> IntervalHypergraph {
    assert!(n >= 1);
    let intervals = (0..m)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            Interval::new(a.min(b), a.max(b))
        })
        .collect();
    IntervalHypergraph::new(n, intervals).expect("generated intervals are in bounds")
}

/// Random proper interval family: `m` intervals with strictly increasing
/// left endpoints and strictly increasing right endpoints, so none contains
/// another. Requires `m <= n`.
pub fn random_proper_hypergraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> IntervalHypergraph {
    assert!(m <= n, "a proper family on n points has at most n intervals");
    // Distinct sorted left endpoints.
    let mut lefts: Vec<usize> = sample_distinct(n, m, rng);
    lefts.sort_unstable();
    // Right endpoints chosen left to right within their feasible window.
    let mut rights = Vec::with_capacity(m);
    let mut prev: usize = 0;
    for (i, &l) in lefts.iter().enumerate() {
        let lo = l.max(prev + 1);
        let hi = n - (m - i - 1);
        debug_assert!(lo <= hi);
        let r = rng.gen_range(lo..=hi);
        rights.push(r);
        prev = r;
    }
    let intervals = lefts
        .into_iter()
        .zip(rights)
        .map(|(l, r)| Interval::new(l, r))
        .collect();
    IntervalHypergraph::new(n, intervals).expect("generated intervals are in bounds")
}

fn sample_distinct<R: Rng>(n: usize, m: usize, rng: &mut R) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    for i in 0..m {
        let j = rng.gen_range(i..n);
        pool.swap(i, j);
    }
    pool.truncate(m);
    pool
}

/// All intervals over `1..=n` in increasing `(l, r)` order.
pub fn all_intervals(n: usize) -> Vec<Interval> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for l in 1..=n {
        for r in l..=n {
            out.push(Interval::new(l, r));
        }
    }
    out
}

/// Every subset of the discrete interval hypergraph on `n` points, in mask
/// order; `2^(n(n+1)/2)` families, so keep `n` at 4 or below.
pub fn interval_subsets(n: usize) -> impl Iterator<Item = IntervalHypergraph> {
    let all = all_intervals(n);
    assert!(all.len() <= 20, "exhaustive subsets only make sense for tiny n");
    (0u64..(1 << all.len())).map(move |mask| {
        let ivs: Vec<Interval> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &iv)| iv)
            .collect();
        IntervalHypergraph::new(n, ivs).expect("subsets of valid intervals are valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::is_proper;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn proper_generator_is_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let m = rng.gen_range(1..=n);
            let h = random_proper_hypergraph(n, m, &mut rng);
            assert!(is_proper(&h), "{h}");
            assert_eq!(h.m(), m);
        }
    }

    #[test]
    fn subsets_count() {
        assert_eq!(interval_subsets(2).count(), 8);
        assert_eq!(interval_subsets(4).count(), 1024);
    }

    #[test]
    fn random_hypergraph_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = random_hypergraph(6, 40, &mut rng);
        assert_eq!(h.m(), 40);
        assert!(h.intervals().iter().all(|iv| iv.l >= 1 && iv.r <= 6));
    }
}
