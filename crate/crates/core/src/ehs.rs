//! Exactly hittable interval hypergraphs: recognition via iterated
//! blackening, exact hitting sets for proper families, and the two-way
//! conversion between conflict-free colourings and partitions of the
//! intervals into exactly hittable sets.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cooccurrence::{build_cooccurrence, colour_graph, lift_colouring, RepresentativeFunction};
use crate::hypergraph::{
    is_proper, verify_cf_colouring, CfColouring, Interval, IntervalHypergraph,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EhsError {
    #[error("hypergraph is not proper: some interval contains another")]
    NotProper,
    #[error("colouring is not conflict-free for this hypergraph")]
    NotConflictFree,
    #[error("parts do not partition the interval indices")]
    NotAPartition,
    #[error("part {part} is not exactly hit by its point set")]
    PartNotExactlyHit { part: usize },
}

/// Point marks for one blackening pass: B means the point cannot belong to
/// any exact hitting set. Within a pass a mark never reverts to W.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMark {
    black: Vec<bool>,
}

impl PointMark {
    pub fn all_white(n: usize) -> Self {
        PointMark {
            black: vec![false; n],
        }
    }

    pub fn is_black(&self, p: usize) -> bool {
        self.black[p - 1]
    }

    pub fn set_black(&mut self, p: usize) {
        self.black[p - 1] = true;
    }

    /// Derived per-interval verdict: N iff every point of the interval is B.
    pub fn interval_dead(&self, iv: &Interval) -> bool {
        iv.points().all(|p| self.is_black(p))
    }
}

/// Outcome of one blackening pass.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BlackenOutcome {
    /// Some interval lost all of its points: no exact hitting set exists.
    Reject,
    /// The surviving hypergraph, plus the map from its points back to the
    /// points of the input (1-based on both sides).
    Continue {
        shrunk: IntervalHypergraph,
        point_labels: Vec<usize>,
    },
}

/// One pass of the recogniser: for every containment pair `I ⊇ J`, blacken
/// the points of `I \ J`; reject if some interval goes all black; otherwise
/// restrict every interval to the white points, collapse duplicates (one
/// representative of each endpoint pair is retained, the rest discarded) and
/// renumber the points left to right.
pub fn blacken_step(h: &IntervalHypergraph, marks: &mut PointMark) -> BlackenOutcome {
    let ivs = h.intervals();
    for (i, a) in ivs.iter().enumerate() {
        for (j, b) in ivs.iter().enumerate() {
            if i != j && a.contains_interval(b) {
                for p in a.points() {
                    if !b.contains(p) {
                        marks.set_black(p);
                    }
                }
            }
        }
    }
    if ivs.iter().any(|iv| marks.interval_dead(iv)) {
        return BlackenOutcome::Reject;
    }

    let point_labels: Vec<usize> = h.points().filter(|&p| !marks.is_black(p)).collect();
    let new_index: Vec<Option<usize>> = {
        let mut idx = vec![None; h.n() + 1];
        for (new, &old) in point_labels.iter().enumerate() {
            idx[old] = Some(new + 1);
        }
        idx
    };
    // Restricting an interval to the white points keeps a consecutive run in
    // the renumbering, so the result is again an interval hypergraph.
    let mut seen = BTreeSet::new();
    let mut new_intervals = Vec::new();
    for iv in ivs {
        let pts: Vec<usize> = iv.points().filter_map(|p| new_index[p]).collect();
        let (l, r) = (pts[0], *pts.last().unwrap());
        debug_assert_eq!(pts.len(), r - l + 1);
        if seen.insert((l, r)) {
            new_intervals.push(Interval::new(l, r));
        }
    }
    let shrunk = IntervalHypergraph::new(point_labels.len(), new_intervals)
        .expect("renumbered intervals are in bounds");
    BlackenOutcome::Continue {
        shrunk,
        point_labels,
    }
}

/// Exact hitting set of a proper interval hypergraph: repeatedly take the
/// smallest right endpoint among the intervals not yet hit.
pub fn greedy_proper_ehs(h: &IntervalHypergraph) -> Result<BTreeSet<usize>, EhsError> {
    if !is_proper(h) {
        return Err(EhsError::NotProper);
    }
    let mut order: Vec<&Interval> = h.intervals().iter().collect();
    order.sort_by_key(|iv| iv.r);
    let mut hits = BTreeSet::new();
    let mut last: usize = 0;
    for iv in order {
        if iv.l > last {
            hits.insert(iv.r);
            last = iv.r;
        }
    }
    debug_assert!(is_exact_hitting_set(h, &hits));
    Ok(hits)
}

/// Does `set` hit every interval of `h` exactly once?
pub fn is_exact_hitting_set(h: &IntervalHypergraph, set: &BTreeSet<usize>) -> bool {
    h.intervals()
        .iter()
        .all(|iv| set.range(iv.l..=iv.r).count() == 1)
}

/// Decide whether `h` has an exact hitting set; on success return one,
/// obtained from the greedy certificate of the proper base case threaded
/// back through the shrinking recursion.
pub fn is_ehs(h: &IntervalHypergraph) -> (bool, Option<BTreeSet<usize>>) {
    if h.m() == 0 {
        return (true, Some(BTreeSet::new()));
    }
    let mut labels: Vec<usize> = h.points().collect();
    let mut cur = h.clone();
    loop {
        if is_proper(&cur) {
            let local = greedy_proper_ehs(&cur).expect("checked proper");
            let set: BTreeSet<usize> = local.into_iter().map(|p| labels[p - 1]).collect();
            assert!(
                is_exact_hitting_set(h, &set),
                "base-case certificate must be exact for the input"
            );
            return (true, Some(set));
        }
        let mut marks = PointMark::all_white(cur.n());
        match blacken_step(&cur, &mut marks) {
            BlackenOutcome::Reject => return (false, None),
            BlackenOutcome::Continue {
                shrunk,
                point_labels,
            } => {
                labels = point_labels.iter().map(|&p| labels[p - 1]).collect();
                debug_assert!(shrunk.m() < cur.m(), "each pass removes an interval");
                cur = shrunk;
            }
        }
    }
}

/// Partition of the interval indices into exactly hittable parts, each with
/// an exact hitting set for its intervals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EhPartition {
    pub parts: Vec<(Vec<usize>, BTreeSet<usize>)>,
}

impl EhPartition {
    /// Check that the parts partition `0..m` and that each part's point set
    /// hits each of its intervals exactly once.
    pub fn validate(&self, h: &IntervalHypergraph) -> Result<(), EhsError> {
        let mut seen = vec![false; h.m()];
        for (intervals, _) in &self.parts {
            for &i in intervals {
                if i >= h.m() || seen[i] {
                    return Err(EhsError::NotAPartition);
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(EhsError::NotAPartition);
        }
        for (k, (intervals, hits)) in self.parts.iter().enumerate() {
            for &i in intervals {
                let iv = h.interval(i);
                if hits.range(iv.l..=iv.r).count() != 1 {
                    return Err(EhsError::PartNotExactlyHit { part: k + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Split the intervals of `h` by the smallest positive colour that occurs
/// exactly once in them; part `i`'s hitting set is the colour class
/// restricted to the points that actually hit the part.
pub fn colouring_to_partition(
    h: &IntervalHypergraph,
    c: &CfColouring,
) -> Result<EhPartition, EhsError> {
    if !verify_cf_colouring(h, c) {
        return Err(EhsError::NotConflictFree);
    }
    let max_colour = h.points().map(|p| c.colour(p)).max().unwrap_or(0);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); max_colour + 1];
    for (i, iv) in h.intervals().iter().enumerate() {
        let colour = (1..=max_colour)
            .find(|&col| iv.points().filter(|&p| c.colour(p) == col).count() == 1)
            .expect("colouring verified conflict-free");
        members[colour].push(i);
    }
    let mut parts = Vec::new();
    for (colour, intervals) in members.into_iter().enumerate() {
        if intervals.is_empty() {
            continue;
        }
        let hits: BTreeSet<usize> = h
            .points()
            .filter(|&p| {
                c.colour(p) == colour && intervals.iter().any(|&i| h.interval(i).contains(p))
            })
            .collect();
        parts.push((intervals, hits));
    }
    let partition = EhPartition { parts };
    partition
        .validate(h)
        .expect("parts built from a conflict-free colouring are exact");
    Ok(partition)
}

/// Convert a partition into exactly hittable parts into a conflict-free
/// colouring with at most `parts.len()` non-zero colours: each interval is
/// represented by its unique hitting point, and the resulting co-occurrence
/// graph is coloured exactly (its clique number is at most the part count).
pub fn partition_to_colouring(
    h: &IntervalHypergraph,
    partition: &EhPartition,
) -> Result<CfColouring, EhsError> {
    partition.validate(h)?;
    let mut t = RepresentativeFunction::new();
    for (intervals, hits) in &partition.parts {
        for &i in intervals {
            let iv = h.interval(i);
            let rep = hits
                .range(iv.l..=iv.r)
                .next()
                .expect("validated: exactly one hit");
            t.assign(i, *rep);
        }
    }
    // Hitting-set points that hit nothing in their part are dropped here;
    // exactness of every part is unaffected and the clique bound only
    // involves points that represent an interval.
    let g = build_cooccurrence(h, &t).expect("hitting points lie inside their intervals");
    let k = partition.parts.len().max(1);
    let gc = colour_graph(&g, k)
        .expect("clique number is at most the part count and the graph is perfect");
    let c = lift_colouring(h, &g, &gc).expect("total representative function lifts");
    debug_assert!(c.palette_size() <= partition.parts.len());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;
    use crate::oracle;

    fn h10() -> IntervalHypergraph {
        parse_hypergraph("10 6\n1 5\n5 10\n2 3\n4 5\n6 7\n8 9").unwrap()
    }

    #[test]
    fn greedy_examples() {
        let chain = IntervalHypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(greedy_proper_ehs(&chain).unwrap(), BTreeSet::from([2, 4]));
        let single = IntervalHypergraph::from_pairs(1, &[(1, 1)]);
        assert_eq!(greedy_proper_ehs(&single).unwrap(), BTreeSet::from([1]));
        let disjoint = IntervalHypergraph::from_pairs(5, &[(1, 2), (4, 5)]);
        assert_eq!(
            greedy_proper_ehs(&disjoint).unwrap(),
            BTreeSet::from([2, 5])
        );
        let improper = IntervalHypergraph::from_pairs(3, &[(1, 3), (2, 2)]);
        assert_eq!(greedy_proper_ehs(&improper), Err(EhsError::NotProper));
    }

    #[test]
    fn blacken_examples() {
        // {[1,3],[2,2]}: 1 and 3 blackened, both intervals collapse to one.
        let h = IntervalHypergraph::from_pairs(3, &[(1, 3), (2, 2)]);
        let mut marks = PointMark::all_white(3);
        match blacken_step(&h, &mut marks) {
            BlackenOutcome::Continue {
                shrunk,
                point_labels,
            } => {
                assert_eq!(shrunk.n(), 1);
                assert_eq!(shrunk.m(), 1);
                assert_eq!(point_labels, vec![2]);
            }
            BlackenOutcome::Reject => panic!("should continue"),
        }

        // {[1,5],[1,1],[2,2]}: the two containments blacken all of [1,5].
        let h = IntervalHypergraph::from_pairs(5, &[(1, 5), (1, 1), (2, 2)]);
        let mut marks = PointMark::all_white(5);
        assert_eq!(blacken_step(&h, &mut marks), BlackenOutcome::Reject);

        // A proper hypergraph passes through unchanged.
        let h = IntervalHypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]);
        let mut marks = PointMark::all_white(4);
        match blacken_step(&h, &mut marks) {
            BlackenOutcome::Continue { shrunk, .. } => assert_eq!(shrunk, h),
            BlackenOutcome::Reject => panic!("should continue"),
        }
    }

    #[test]
    fn is_ehs_examples() {
        let (verdict, set) = is_ehs(&h10());
        assert!(!verdict);
        assert!(set.is_none());

        let chain = IntervalHypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]);
        let (verdict, set) = is_ehs(&chain);
        assert!(verdict);
        assert_eq!(set.unwrap(), BTreeSet::from([2, 4]));

        let nested = IntervalHypergraph::from_pairs(3, &[(1, 3), (2, 2)]);
        let (verdict, set) = is_ehs(&nested);
        assert!(verdict);
        assert_eq!(set.unwrap(), BTreeSet::from([2]));
    }

    #[test]
    fn is_ehs_handles_duplicates() {
        let h = IntervalHypergraph::from_pairs(2, &[(1, 2), (1, 2)]);
        let (verdict, set) = is_ehs(&h);
        assert!(verdict);
        assert!(is_exact_hitting_set(&h, &set.unwrap()));
    }

    #[test]
    fn is_ehs_agrees_with_brute_small() {
        use crate::gen::interval_subsets;
        for h in interval_subsets(4) {
            let want = oracle::brute_exact_hitting_set(&h).unwrap().is_some();
            let (got, set) = is_ehs(&h);
            assert_eq!(got, want, "{h}");
            if let Some(set) = set {
                assert!(is_exact_hitting_set(&h, &set));
            }
        }
    }

    #[test]
    fn partition_of_h10_colouring() {
        let h = h10();
        let c = CfColouring::new(vec![0, 0, 1, 0, 2, 0, 2, 0, 1, 0]);
        let partition = colouring_to_partition(&h, &c).unwrap();
        assert_eq!(partition.len(), 2);
        assert_eq!(partition.parts[0].0, vec![0, 1, 2, 5]);
        assert_eq!(partition.parts[0].1, BTreeSet::from([3, 9]));
        assert_eq!(partition.parts[1].0, vec![3, 4]);
        assert_eq!(partition.parts[1].1, BTreeSet::from([5, 7]));

        let back = partition_to_colouring(&h, &partition).unwrap();
        assert!(verify_cf_colouring(&h, &back));
        assert!(back.palette_size() <= 2);
    }

    #[test]
    fn partition_single_interval() {
        let h = IntervalHypergraph::from_pairs(1, &[(1, 1)]);
        let c = CfColouring::new(vec![1]);
        let partition = colouring_to_partition(&h, &c).unwrap();
        assert_eq!(partition.len(), 1);
        let back = partition_to_colouring(&h, &partition).unwrap();
        assert_eq!(back.palette_size(), 1);
    }

    #[test]
    fn partition_rejects_invalid() {
        let h = IntervalHypergraph::from_pairs(3, &[(1, 1), (2, 3)]);
        let c = CfColouring::new(vec![1, 1, 1]);
        assert_eq!(
            colouring_to_partition(&h, &c),
            Err(EhsError::NotConflictFree)
        );

        let missing = EhPartition {
            parts: vec![(vec![0], BTreeSet::from([1]))],
        };
        assert_eq!(
            partition_to_colouring(&h, &missing),
            Err(EhsError::NotAPartition)
        );
        let doubled = EhPartition {
            parts: vec![(vec![0, 1], BTreeSet::from([1, 2, 3]))],
        };
        assert_eq!(
            partition_to_colouring(&h, &doubled),
            Err(EhsError::PartNotExactlyHit { part: 1 })
        );
    }

    #[test]
    fn disjoint_parts_can_share_one_colour() {
        // Parts that never interact give an edgeless graph: one colour.
        let h = IntervalHypergraph::from_pairs(6, &[(1, 2), (5, 6)]);
        let partition = EhPartition {
            parts: vec![
                (vec![0], BTreeSet::from([1])),
                (vec![1], BTreeSet::from([5])),
            ],
        };
        let c = partition_to_colouring(&h, &partition).unwrap();
        assert!(verify_cf_colouring(&h, &c));
        assert_eq!(c.palette_size(), 1);
    }
}
