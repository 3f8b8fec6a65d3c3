//! Brute-force reference implementations. All of these are exponential and
//! guarded by hard size bounds; their only job is to be obviously correct so
//! the polynomial algorithms can be tested against them.

use thiserror::Error;

use crate::cooccurrence::{build_cooccurrence, chromatic_number, RepresentativeFunction};
use crate::hypergraph::{CfColouring, IntervalHypergraph};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("oracle scale exceeded: {oracle} refuses {detail}")]
pub struct ScaleExceeded {
    pub oracle: &'static str,
    pub detail: String,
}

fn guard(ok: bool, oracle: &'static str, detail: String) -> Result<(), ScaleExceeded> {
    if ok {
        Ok(())
    } else {
        Err(ScaleExceeded { oracle, detail })
    }
}

/// Number of intervals of `h` conflict-free coloured by `c` (some positive
/// colour occurs exactly once inside them).
fn covered_count(h: &IntervalHypergraph, c: &CfColouring) -> usize {
    h.intervals()
        .iter()
        .filter(|iv| crate::hypergraph::interval_conflict_free(iv, c))
        .count()
}

/// Enumerate colourings `points -> {0..=k}` in canonical colour order (the
/// first use of colour j precedes the first use of j + 1) and fold the
/// covered-interval count. Stops early when `stop_at` intervals are covered.
fn best_covered(h: &IntervalHypergraph, k: usize, stop_at: usize) -> usize {
    fn go(
        h: &IntervalHypergraph,
        k: usize,
        stop_at: usize,
        c: &mut CfColouring,
        p: usize,
        max_used: usize,
        best: &mut usize,
    ) {
        if *best >= stop_at {
            return;
        }
        if p > h.n() {
            *best = (*best).max(covered_count(h, c));
            return;
        }
        for col in 0..=k.min(max_used + 1) {
            c.set_colour(p, col);
            go(h, k, stop_at, c, p + 1, max_used.max(col), best);
        }
        c.set_colour(p, 0);
    }
    let mut c = CfColouring::all_zero(h.n());
    let mut best = 0;
    go(h, k, stop_at, &mut c, 1, 0, &mut best);
    best
}

/// Smallest k such that some colouring with colours `{0..=k}` is
/// conflict-free for every interval; 0 for an empty interval list.
pub fn brute_cfc_number(h: &IntervalHypergraph) -> Result<usize, ScaleExceeded> {
    guard(
        h.n() <= 10,
        "brute_cfc_number",
        format!("n = {} (max 10)", h.n()),
    )?;
    if h.m() == 0 {
        return Ok(0);
    }
    let mut k = 1;
    loop {
        if best_covered(h, k, h.m()) == h.m() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Maximum number of intervals that can be conflict-free coloured with at
/// most `n_colours` non-zero colours: the best covered-interval count over
/// all colourings, since the optimal subfamily for a fixed colouring is
/// exactly the set of intervals it covers.
pub fn brute_max_cfc(h: &IntervalHypergraph, n_colours: usize) -> Result<usize, ScaleExceeded> {
    let work = (n_colours as u64 + 1).saturating_pow(h.n() as u32);
    guard(
        work <= 200_000_000,
        "brute_max_cfc",
        format!("(colours + 1)^n = {work} exceeds 2e8"),
    )?;
    assert!(n_colours >= 1);
    Ok(best_covered(h, n_colours, h.m()))
}

/// Some subset of points hitting every interval exactly once, or `None`.
/// Deterministic: the subsets are scanned in ascending mask order.
pub fn brute_exact_hitting_set(
    h: &IntervalHypergraph,
) -> Result<Option<Vec<usize>>, ScaleExceeded> {
    guard(
        h.n() <= 20 && h.m() <= 64,
        "brute_exact_hitting_set",
        format!("n = {}, m = {} (max 20, 64)", h.n(), h.m()),
    )?;
    let masks = exact_hit_masks(h);
    let full: u64 = if h.m() >= 64 { u64::MAX } else { (1 << h.m()) - 1 };
    for (s, hits) in masks.iter().enumerate() {
        if *hits == full {
            return Ok(Some((1..=h.n()).filter(|&p| s >> (p - 1) & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// For every point subset S (as a mask over points), the mask of intervals
/// hit by S exactly once.
fn exact_hit_masks(h: &IntervalHypergraph) -> Vec<u64> {
    assert!(h.n() <= 20 && h.m() <= 64);
    let mut out = Vec::with_capacity(1 << h.n());
    for s in 0..(1u64 << h.n()) {
        let mut mask = 0u64;
        for (i, iv) in h.intervals().iter().enumerate() {
            let span = ((1u64 << iv.r) - 1) & !((1u64 << (iv.l - 1)) - 1);
            if (s & span).count_ones() == 1 {
                mask |= 1 << i;
            }
        }
        out.push(mask);
    }
    out
}

/// Minimum chromatic number over all total representative functions,
/// enumerated exhaustively; equals the conflict-free colouring number.
pub fn brute_min_over_cooccurrence(h: &IntervalHypergraph) -> Result<usize, ScaleExceeded> {
    let mut work: u64 = 1;
    for iv in h.intervals() {
        work = work.saturating_mul(iv.len() as u64);
        guard(
            work <= 4_000_000,
            "brute_min_over_cooccurrence",
            "product of interval lengths exceeds 4e6".to_string(),
        )?;
    }
    if h.m() == 0 {
        return Ok(0);
    }
    let mut choice: Vec<usize> = h.intervals().iter().map(|iv| iv.l).collect();
    let mut best = usize::MAX;
    loop {
        let t = RepresentativeFunction::from_pairs(
            &choice.iter().enumerate().map(|(i, &p)| (i, p)).collect::<Vec<_>>(),
        );
        let g = build_cooccurrence(h, &t).expect("representatives lie inside their intervals");
        best = best.min(chromatic_number(&g));
        if best == 1 {
            return Ok(1);
        }
        // next mixed-radix choice
        let mut i = 0;
        loop {
            if i == h.m() {
                return Ok(best);
            }
            if choice[i] < h.interval(i).r {
                choice[i] += 1;
                break;
            }
            choice[i] = h.interval(i).l;
            i += 1;
        }
    }
}

/// Minimum number of parts over set partitions of the interval list such
/// that every part has an exact hitting set. Plain first-element partition
/// recursion with a per-subset feasibility table.
pub fn brute_min_eh_partition(h: &IntervalHypergraph) -> Result<usize, ScaleExceeded> {
    guard(
        h.m() <= 10 && h.n() <= 20,
        "brute_min_eh_partition",
        format!("n = {}, m = {} (max 20, 10)", h.n(), h.m()),
    )?;
    if h.m() == 0 {
        return Ok(0);
    }
    let hit_masks = exact_hit_masks(h);
    let m = h.m();
    let feasible = |part: u64| hit_masks.iter().any(|&hm| hm & part == part);

    // Recursive refinement: the lowest unplaced interval either joins an
    // existing part or opens a new one.
    fn go(
        m: usize,
        parts: &mut Vec<u64>,
        placed: u64,
        best: &mut usize,
        feasible: &dyn Fn(u64) -> bool,
    ) {
        if parts.len() >= *best {
            return;
        }
        let next = (0..m).find(|&i| placed >> i & 1 == 0);
        let i = match next {
            None => {
                if parts.iter().all(|&p| feasible(p)) {
                    *best = parts.len();
                }
                return;
            }
            Some(i) => i,
        };
        for k in 0..parts.len() {
            parts[k] |= 1 << i;
            go(m, parts, placed | 1 << i, best, feasible);
            parts[k] &= !(1 << i);
        }
        parts.push(1 << i);
        go(m, parts, placed | 1 << i, best, feasible);
        parts.pop();
    }

    let mut best = m + 1;
    let mut parts = Vec::new();
    go(m, &mut parts, 0, &mut best, &feasible);
    assert!(best <= m, "singleton parts are always exactly hittable");
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{discrete_hypergraph, parse_hypergraph};

    fn h10() -> IntervalHypergraph {
        parse_hypergraph("10 6\n1 5\n5 10\n2 3\n4 5\n6 7\n8 9").unwrap()
    }

    fn chain() -> IntervalHypergraph {
        IntervalHypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)])
    }

    #[test]
    fn cfc_number_examples() {
        assert_eq!(brute_cfc_number(&h10()).unwrap(), 2);
        assert_eq!(brute_cfc_number(&discrete_hypergraph(3).unwrap()).unwrap(), 2);
        assert_eq!(brute_cfc_number(&chain()).unwrap(), 1);
    }

    #[test]
    fn exact_hitting_set_examples() {
        assert_eq!(brute_exact_hitting_set(&h10()).unwrap(), None);
        let h = IntervalHypergraph::from_pairs(3, &[(1, 3), (2, 2)]);
        assert_eq!(brute_exact_hitting_set(&h).unwrap(), Some(vec![2]));
        let empty = IntervalHypergraph::from_pairs(2, &[]);
        assert_eq!(brute_exact_hitting_set(&empty).unwrap(), Some(vec![]));
    }

    #[test]
    fn max_cfc_examples() {
        assert_eq!(brute_max_cfc(&h10(), 1).unwrap(), 4);
        assert_eq!(brute_max_cfc(&h10(), 2).unwrap(), 6);
        let h3 = discrete_hypergraph(3).unwrap();
        assert_eq!(brute_max_cfc(&h3, 1).unwrap(), 4);
        assert_eq!(brute_max_cfc(&h3, 2).unwrap(), 6);
    }

    #[test]
    fn min_over_cooccurrence_examples() {
        assert_eq!(brute_min_over_cooccurrence(&h10()).unwrap(), 2);
        let single = IntervalHypergraph::from_pairs(1, &[(1, 1)]);
        assert_eq!(brute_min_over_cooccurrence(&single).unwrap(), 1);
        assert_eq!(brute_min_over_cooccurrence(&chain()).unwrap(), 1);
    }

    #[test]
    fn min_eh_partition_examples() {
        assert_eq!(brute_min_eh_partition(&h10()).unwrap(), 2);
        assert_eq!(brute_min_eh_partition(&chain()).unwrap(), 1);
        assert_eq!(
            brute_min_eh_partition(&discrete_hypergraph(3).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn scale_guards_fire() {
        let big = discrete_hypergraph(11).unwrap();
        assert!(brute_cfc_number(&big).is_err());
        assert!(brute_max_cfc(&discrete_hypergraph(15).unwrap(), 8).is_err());
        assert!(brute_min_eh_partition(&h10()).is_ok());
        assert!(brute_min_eh_partition(&discrete_hypergraph(5).unwrap()).is_err());
    }

    #[test]
    fn max_cfc_one_colour_is_max_hittable_subfamily() {
        // Double check against subset enumeration with a per-subset exact
        // hitting set test.
        let h3 = discrete_hypergraph(3).unwrap();
        for mask in 0u32..(1 << h3.m()) {
            let ivs: Vec<_> = (0..h3.m())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| h3.interval(i))
                .collect();
            let h = IntervalHypergraph::new(3, ivs).unwrap();
            let mut best = 0;
            for sub in 0u32..(1 << h.m()) {
                let subset: Vec<_> = (0..h.m())
                    .filter(|&i| sub >> i & 1 == 1)
                    .map(|i| h.interval(i))
                    .collect();
                let size = subset.len();
                let hsub = IntervalHypergraph::new(3, subset).unwrap();
                if brute_exact_hitting_set(&hsub).unwrap().is_some() {
                    best = best.max(size);
                }
            }
            if h.m() > 0 {
                assert_eq!(brute_max_cfc(&h, 1).unwrap(), best, "mask {mask:#b}");
            }
        }
    }

    #[test]
    fn ehs_existence_matches_cfc_one() {
        // On all subsets of the discrete hypergraph on 3 points.
        let h3 = discrete_hypergraph(3).unwrap();
        for mask in 0u32..(1 << h3.m()) {
            let ivs: Vec<_> = (0..h3.m())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| h3.interval(i))
                .collect();
            let m = ivs.len();
            let h = IntervalHypergraph::new(3, ivs).unwrap();
            let has_ehs = brute_exact_hitting_set(&h).unwrap().is_some();
            let k = brute_cfc_number(&h).unwrap();
            if m == 0 {
                assert_eq!(k, 0);
            } else {
                assert_eq!(has_ehs, k <= 1);
            }
        }
    }
}
