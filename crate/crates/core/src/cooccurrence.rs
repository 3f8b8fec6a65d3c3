//! Co-occurrence graphs of representative assignments, their clique numbers,
//! and exact colouring.
//!
//! Fixing, for each interval, one of its points (its representative) induces
//! a simple graph on the chosen points: `(u, v)` is an edge whenever some
//! interval contains both and has its representative among them. A proper
//! colouring of that graph lifts to a conflict-free colouring of the
//! hypergraph, which is why everything downstream cares about colouring
//! these graphs with as few colours as possible.
//!
//! Co-occurrence graphs of interval hypergraphs are perfect (no induced odd
//! hole or antihole), so the chromatic number always equals the clique
//! number; the exact backtracking colourer here is guaranteed to succeed
//! when handed the clique number as its bound. `scan_perfectness` is the
//! desk-scale sanity check of that structural fact.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bits::{self, BitSet};
use crate::hypergraph::{CfColouring, IntervalHypergraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoOccurrenceError {
    #[error("interval {index} has representative {point} outside [{l}, {r}]")]
    RepresentativeOutside {
        index: usize,
        point: usize,
        l: usize,
        r: usize,
    },
    #[error("no proper colouring with {bound} colours exists")]
    BoundInfeasible { bound: usize },
    #[error("colouring is not proper on the co-occurrence graph")]
    NotProper,
    #[error("lifted colouring is not conflict-free (representative function not total?)")]
    LiftNotConflictFree,
}

/// Partial map interval index -> representative point. Partial functions
/// describe solutions that accept only a subset of the intervals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RepresentativeFunction {
    assignment: BTreeMap<usize, usize>,
}

impl RepresentativeFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        RepresentativeFunction {
            assignment: pairs.iter().copied().collect(),
        }
    }

    pub fn assign(&mut self, interval: usize, point: usize) {
        self.assignment.insert(interval, point);
    }

    pub fn unassign(&mut self, interval: usize) {
        self.assignment.remove(&interval);
    }

    pub fn get(&self, interval: usize) -> Option<usize> {
        self.assignment.get(&interval).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().map(|(&i, &p)| (i, p))
    }

    /// Image of the assignment: the representative points, ascending.
    pub fn image(&self) -> BTreeSet<usize> {
        self.assignment.values().copied().collect()
    }

    pub fn is_total_for(&self, h: &IntervalHypergraph) -> bool {
        (0..h.m()).all(|i| self.assignment.contains_key(&i))
    }

    /// Check `t(I) in I` for every assigned interval.
    pub fn validate(&self, h: &IntervalHypergraph) -> Result<(), CoOccurrenceError> {
        for (&i, &p) in &self.assignment {
            let iv = h.interval(i);
            if !iv.contains(p) {
                return Err(CoOccurrenceError::RepresentativeOutside {
                    index: i,
                    point: p,
                    l: iv.l,
                    r: iv.r,
                });
            }
        }
        Ok(())
    }
}

/// Simple graph on representative points.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CoOccurrenceGraph {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl CoOccurrenceGraph {
    /// Hand-built graph, mostly for tests of graph-level utilities.
    pub fn from_parts(vertices: &[usize], edges: &[(usize, usize)]) -> Self {
        let vertices: BTreeSet<usize> = vertices.iter().copied().collect();
        let edges = edges
            .iter()
            .map(|&(u, v)| {
                assert!(u != v && vertices.contains(&u) && vertices.contains(&v));
                (u.min(v), u.max(v))
            })
            .collect();
        CoOccurrenceGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.vertices
            .iter()
            .filter(|&&v| v != u && self.has_edge(u, v))
            .count()
    }

    fn max_point(&self) -> usize {
        self.vertices.iter().next_back().copied().unwrap_or(0)
    }

    /// Adjacency as bit sets indexed by point value.
    pub(crate) fn adjacency(&self) -> Vec<BitSet> {
        let cap = self.max_point() + 1;
        let mut adj = vec![BitSet::new(cap); cap];
        for &(u, v) in &self.edges {
            adj[u].set(v);
            adj[v].set(u);
        }
        adj
    }

    pub(crate) fn vertex_set(&self) -> BitSet {
        let mut s = BitSet::new(self.max_point() + 1);
        for &v in &self.vertices {
            s.set(v);
        }
        s
    }
}

/// Build the co-occurrence graph of `t` over `h`: vertices are the image of
/// `t`, and `(u, v)` is an edge iff some assigned interval contains both `u`
/// and `v` and has its representative among them.
pub fn build_cooccurrence(
    h: &IntervalHypergraph,
    t: &RepresentativeFunction,
) -> Result<CoOccurrenceGraph, CoOccurrenceError> {
    t.validate(h)?;
    let vertices = t.image();
    let mut edges = BTreeSet::new();
    for (i, rep) in t.iter() {
        let iv = h.interval(i);
        for &u in vertices.range(iv.l..=iv.r) {
            if u != rep {
                edges.insert((u.min(rep), u.max(rep)));
            }
        }
    }
    Ok(CoOccurrenceGraph { vertices, edges })
}

/// Clique number of a co-occurrence graph built from `h`. Every clique of
/// such a graph lies inside one of the intervals, so the search decomposes
/// into one branch-and-bound run per interval.
pub fn clique_number(g: &CoOccurrenceGraph, h: &IntervalHypergraph) -> usize {
    clique_number_with_witness(g, h).0
}

/// Clique number together with a witness clique (empty for an empty graph).
pub fn clique_number_with_witness(
    g: &CoOccurrenceGraph,
    h: &IntervalHypergraph,
) -> (usize, Vec<usize>) {
    if g.vertices.is_empty() {
        return (0, Vec::new());
    }
    let adj = g.adjacency();
    let verts = g.vertex_set();
    let cap = adj.len();
    let mut best: Vec<usize> = vec![*g.vertices.iter().next().unwrap()];
    for iv in h.intervals() {
        let cand = verts.and(&BitSet::range(cap, iv.l, iv.r.min(cap - 1)));
        if cand.count() <= best.len() {
            continue;
        }
        let clique = bits::max_clique(&adj, &cand);
        if clique.count() > best.len() {
            best = clique.iter().collect();
        }
    }
    (best.len(), best)
}

/// Proper colouring of a co-occurrence graph; colours are `1..=k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphColouring {
    colour: BTreeMap<usize, usize>,
}

impl GraphColouring {
    pub fn colour(&self, v: usize) -> Option<usize> {
        self.colour.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colour.iter().map(|(&v, &c)| (v, c))
    }

    pub fn palette_size(&self) -> usize {
        self.colour.values().collect::<BTreeSet<_>>().len()
    }

    pub fn is_proper(&self, g: &CoOccurrenceGraph) -> bool {
        g.vertices.iter().all(|v| self.colour.contains_key(v))
            && g.edges
                .iter()
                .all(|&(u, v)| self.colour[&u] != self.colour[&v])
    }
}

/// Exact backtracking colouring with at most `bound` colours, visiting
/// vertices in saturation order (ties to the lowest point). Errors if no
/// such colouring exists, which signals a caller bug whenever the bound is
/// at least the clique number: these graphs are perfect.
pub fn colour_graph(
    g: &CoOccurrenceGraph,
    bound: usize,
) -> Result<GraphColouring, CoOccurrenceError> {
    let verts: Vec<usize> = g.vertices.iter().copied().collect();
    if verts.is_empty() {
        return Ok(GraphColouring {
            colour: BTreeMap::new(),
        });
    }
    if bound == 0 {
        return Err(CoOccurrenceError::BoundInfeasible { bound });
    }
    let idx: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<usize>> = verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .filter(|&&v| v != u && g.has_edge(u, v))
                .map(|&v| idx[&v])
                .collect()
        })
        .collect();

    fn next_vertex(colour: &[usize], nbrs: &[Vec<usize>]) -> Option<usize> {
        let mut pick = None;
        let mut best_sat = 0;
        for v in 0..colour.len() {
            if colour[v] != 0 {
                continue;
            }
            let sat = {
                let mut seen: Vec<usize> = nbrs[v]
                    .iter()
                    .map(|&u| colour[u])
                    .filter(|&c| c != 0)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            };
            if pick.is_none() || sat > best_sat {
                pick = Some(v);
                best_sat = sat;
            }
        }
        pick
    }

    fn go(colour: &mut [usize], nbrs: &[Vec<usize>], bound: usize, used: usize) -> bool {
        let v = match next_vertex(colour, nbrs) {
            Some(v) => v,
            None => return true,
        };
        // Trying one fresh colour beyond those in use suffices; higher fresh
        // colours are symmetric.
        let limit = bound.min(used + 1);
        for c in 1..=limit {
            if nbrs[v].iter().any(|&u| colour[u] == c) {
                continue;
            }
            colour[v] = c;
            if go(colour, nbrs, bound, used.max(c)) {
                return true;
            }
            colour[v] = 0;
        }
        false
    }

    let mut colour = vec![0usize; verts.len()];
    if !go(&mut colour, &nbrs, bound, 0) {
        return Err(CoOccurrenceError::BoundInfeasible { bound });
    }
    Ok(GraphColouring {
        colour: verts.iter().copied().zip(colour).collect(),
    })
}

/// Exact chromatic number via the backtracking colourer.
pub fn chromatic_number(g: &CoOccurrenceGraph) -> usize {
    if g.vertices.is_empty() {
        return 0;
    }
    let mut k = 1;
    loop {
        if colour_graph(g, k).is_ok() {
            return k;
        }
        k += 1;
    }
}

/// Lift a proper graph colouring to a point colouring of `h`: representative
/// points keep their graph colours, every other point gets 0. When the graph
/// came from a total representative function the result is conflict-free.
pub fn lift_colouring(
    h: &IntervalHypergraph,
    g: &CoOccurrenceGraph,
    gc: &GraphColouring,
) -> Result<CfColouring, CoOccurrenceError> {
    if !gc.is_proper(g) {
        return Err(CoOccurrenceError::NotProper);
    }
    let mut c = CfColouring::all_zero(h.n());
    for (v, col) in gc.iter() {
        c.set_colour(v, col);
    }
    if !crate::hypergraph::verify_cf_colouring(h, &c) {
        return Err(CoOccurrenceError::LiftNotConflictFree);
    }
    Ok(c)
}

/// True iff `g` has no induced odd hole and no induced odd antihole of size
/// `5..=max_hole`. Exhaustive over vertex subsets; desk scale only.
pub fn scan_perfectness(g: &CoOccurrenceGraph, max_hole: usize) -> bool {
    assert!(max_hole >= 5, "max_hole must be at least 5");
    let verts: Vec<usize> = g.vertices.iter().copied().collect();
    let mut size = 5;
    while size <= max_hole {
        if verts.len() >= size {
            let mut subset = Vec::with_capacity(size);
            if find_odd_structure(g, &verts, size, 0, &mut subset) {
                return false;
            }
        }
        size += 2;
    }
    true
}

fn find_odd_structure(
    g: &CoOccurrenceGraph,
    verts: &[usize],
    size: usize,
    from: usize,
    subset: &mut Vec<usize>,
) -> bool {
    if subset.len() == size {
        return induced_is_cycle(g, subset) || induced_is_antihole(g, subset);
    }
    let need = size - subset.len();
    for i in from..verts.len() {
        if verts.len() - i < need {
            break;
        }
        subset.push(verts[i]);
        if find_odd_structure(g, verts, size, i + 1, subset) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

fn induced_degrees(g: &CoOccurrenceGraph, set: &[usize]) -> Vec<usize> {
    set.iter()
        .map(|&u| set.iter().filter(|&&v| v != u && g.has_edge(u, v)).count())
        .collect()
}

fn connected_under<F: Fn(usize, usize) -> bool>(set: &[usize], adj: F) -> bool {
    let mut seen = vec![false; set.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..set.len() {
            if !seen[j] && adj(set[i], set[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Is the induced subgraph on `set` a chordless cycle?
fn induced_is_cycle(g: &CoOccurrenceGraph, set: &[usize]) -> bool {
    induced_degrees(g, set).iter().all(|&d| d == 2) && connected_under(set, |u, v| g.has_edge(u, v))
}

/// Is the induced subgraph on `set` the complement of a chordless cycle?
fn induced_is_antihole(g: &CoOccurrenceGraph, set: &[usize]) -> bool {
    let k = set.len();
    induced_degrees(g, set).iter().all(|&d| d == k - 3)
        && connected_under(set, |u, v| !g.has_edge(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;

    fn h10() -> IntervalHypergraph {
        parse_hypergraph("10 6\n1 5\n5 10\n2 3\n4 5\n6 7\n8 9").unwrap()
    }

    fn figure_t() -> RepresentativeFunction {
        RepresentativeFunction::from_pairs(&[(0, 5), (1, 9), (2, 3), (3, 5), (4, 7), (5, 9)])
    }

    #[test]
    fn h10_figure_graph() {
        let g = build_cooccurrence(&h10(), &figure_t()).unwrap();
        assert_eq!(
            g.vertices().iter().copied().collect::<Vec<_>>(),
            vec![3, 5, 7, 9]
        );
        assert_eq!(
            g.edges().iter().copied().collect::<Vec<_>>(),
            vec![(3, 5), (5, 9), (7, 9)]
        );
    }

    #[test]
    fn single_interval_graph() {
        let h = IntervalHypergraph::from_pairs(1, &[(1, 1)]);
        let t = RepresentativeFunction::from_pairs(&[(0, 1)]);
        let g = build_cooccurrence(&h, &t).unwrap();
        assert_eq!(g.vertices().len(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(clique_number(&g, &h), 1);
    }

    #[test]
    fn triangle_example() {
        let h = IntervalHypergraph::from_pairs(3, &[(1, 3), (2, 2), (3, 3), (2, 3)]);
        let t = RepresentativeFunction::from_pairs(&[(0, 1), (1, 2), (2, 3), (3, 3)]);
        let g = build_cooccurrence(&h, &t).unwrap();
        assert_eq!(
            g.edges().iter().copied().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(clique_number(&g, &h), 3);
        let gc = colour_graph(&g, 3).unwrap();
        assert_eq!(gc.palette_size(), 3);
        let c = lift_colouring(&h, &g, &gc).unwrap();
        assert_eq!(c.palette_size(), 3);
    }

    #[test]
    fn rejects_bad_representative() {
        let h = IntervalHypergraph::from_pairs(3, &[(1, 2)]);
        let t = RepresentativeFunction::from_pairs(&[(0, 3)]);
        assert!(matches!(
            build_cooccurrence(&h, &t),
            Err(CoOccurrenceError::RepresentativeOutside { .. })
        ));
    }

    #[test]
    fn figure_graph_colouring_and_lift() {
        let h = h10();
        let g = build_cooccurrence(&h, &figure_t()).unwrap();
        assert_eq!(clique_number(&g, &h), 2);
        let gc = colour_graph(&g, 2).unwrap();
        assert!(gc.is_proper(&g));
        assert_eq!(gc.palette_size(), 2);
        let c = lift_colouring(&h, &g, &gc).unwrap();
        assert!(crate::hypergraph::verify_cf_colouring(&h, &c));
        // Non-representative points carry colour 0.
        for p in [1, 2, 4, 6, 8, 10] {
            assert_eq!(c.colour(p), 0);
        }
    }

    #[test]
    fn edgeless_one_colour() {
        let g = CoOccurrenceGraph::from_parts(&[1, 4, 6], &[]);
        let gc = colour_graph(&g, 1).unwrap();
        assert_eq!(gc.palette_size(), 1);
    }

    #[test]
    fn infeasible_bound_reported() {
        let g = CoOccurrenceGraph::from_parts(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(
            colour_graph(&g, 2),
            Err(CoOccurrenceError::BoundInfeasible { bound: 2 })
        );
        assert_eq!(chromatic_number(&g), 3);
    }

    #[test]
    fn perfectness_scan_examples() {
        let h = h10();
        let g = build_cooccurrence(&h, &figure_t()).unwrap();
        assert!(scan_perfectness(&g, 9));

        let c5 = CoOccurrenceGraph::from_parts(
            &[1, 2, 3, 4, 5],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
        );
        assert!(!scan_perfectness(&c5, 9));

        let small = CoOccurrenceGraph::from_parts(&[1, 2, 3, 4], &[(1, 2), (3, 4)]);
        assert!(scan_perfectness(&small, 9));
    }

    #[test]
    fn antihole_detected() {
        // Complement of C7 on vertices 1..=7.
        let mut edges = Vec::new();
        for u in 1..=7usize {
            for v in (u + 1)..=7 {
                let diff = (v - u) % 7;
                if diff != 1 && diff != 6 {
                    edges.push((u, v));
                }
            }
        }
        let g = CoOccurrenceGraph::from_parts(&[1, 2, 3, 4, 5, 6, 7], &edges);
        assert!(!scan_perfectness(&g, 9));
        assert!(scan_perfectness(&g, 5));
    }
}
