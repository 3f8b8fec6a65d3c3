//! The interval-graph layer: recognition through maximal clique orderings,
//! the canonical gadget-stretched interval model, recognition of exactly
//! hittable interval graphs with certificates in both directions, and the
//! brute-force forbidden-pattern search used as its oracle.
//!
//! An interval graph is exactly hittable iff some interval model of it has
//! an exact hitting set; equivalently, iff it has no induced path P on k
//! vertices with an independent set of k + 3 or more vertices in the open
//! neighbourhood of P. The polynomial route builds the canonical model and
//! runs the hypergraph recogniser on it; `find_forbidden` enumerates the
//! pattern directly and is exponential, for desk-scale cross-checking.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ehs::is_ehs;
use crate::hypergraph::{Interval, IntervalHypergraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: expected an integer")]
    NonInteger { line: usize },
    #[error("line {line}: vertex out of range")]
    VertexRange { line: usize },
    #[error("line {line}: self-loops are not allowed")]
    SelfLoop { line: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph is not chordal: no perfect elimination ordering exists")]
    NotChordal,
    #[error("graph is chordal but its maximal cliques admit no consecutive ordering")]
    NotConsecutive,
    #[error("clique ordering search supports at most {max} maximal cliques, got {got}")]
    TooManyCliques { max: usize, got: usize },
    #[error("canonical labelling supports at most {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![BTreeSet::new(); n + 1],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, u: usize) -> &BTreeSet<usize> {
        &self.adj[u]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

impl std::fmt::Display for SimpleGraph {
    /// The graph file format: `n m`, then one `u v` line per edge.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges = self.edges();
        writeln!(f, "{} {}", self.n, edges.len())?;
        for (u, v) in edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parse the graph file format: `n m`, then `m` lines `u v` (1-based).
/// Duplicate edges collapse; self-loops are rejected.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::MalformedHeader { line: 1 })?;
    let mut toks = header.split_whitespace();
    let parse_tok = |tok: Option<&str>, line: usize| -> Result<usize, GraphError> {
        tok.ok_or(GraphError::MalformedHeader { line })?
            .parse::<usize>()
            .map_err(|_| GraphError::NonInteger { line })
    };
    let n = parse_tok(toks.next(), hline)?;
    let m = parse_tok(toks.next(), hline)?;
    if toks.next().is_some() || n == 0 {
        return Err(GraphError::MalformedHeader { line: hline });
    }
    let mut g = SimpleGraph::new(n);
    let mut count = 0;
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let u = toks
            .next()
            .ok_or(GraphError::MalformedEdge { line })?
            .parse::<usize>()
            .map_err(|_| GraphError::NonInteger { line })?;
        let v = toks
            .next()
            .ok_or(GraphError::MalformedEdge { line })?
            .parse::<usize>()
            .map_err(|_| GraphError::NonInteger { line })?;
        if toks.next().is_some() {
            return Err(GraphError::MalformedEdge { line });
        }
        if u < 1 || v < 1 || u > n || v > n {
            return Err(GraphError::VertexRange { line });
        }
        if u == v {
            return Err(GraphError::SelfLoop { line });
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(GraphError::EdgeCount {
            expected: m,
            found: count,
        });
    }
    Ok(g)
}

/// Intersection graph of an interval hypergraph: one vertex per interval
/// index (vertex `i + 1` for index `i`), edges between intersecting
/// intervals.
pub fn intersection_graph(h: &IntervalHypergraph) -> SimpleGraph {
    let m = h.m();
    let mut g = SimpleGraph::new(m);
    for i in 0..m {
        for j in (i + 1)..m {
            if h.interval(i).overlaps(&h.interval(j)) {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    g
}

/// Ordered list of the maximal cliques of an interval graph such that the
/// cliques containing any fixed vertex are consecutive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueOrdering {
    pub cliques: Vec<BTreeSet<usize>>,
}

impl CliqueOrdering {
    /// Every vertex's cliques form a contiguous run.
    pub fn is_consecutive(&self) -> bool {
        let verts: BTreeSet<usize> = self.cliques.iter().flatten().copied().collect();
        verts.iter().all(|&x| {
            let pos: Vec<usize> = self
                .cliques
                .iter()
                .enumerate()
                .filter(|(_, q)| q.contains(&x))
                .map(|(i, _)| i)
                .collect();
            !pos.is_empty() && pos[pos.len() - 1] - pos[0] + 1 == pos.len()
        })
    }
}

/// Maximum cardinality search: returns an elimination order that is perfect
/// iff the graph is chordal.
fn mcs_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut picked = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (1..=n)
            .filter(|&u| !picked[u])
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .expect("vertices remain");
        picked[u] = true;
        order.push(u);
        for &v in g.neighbours(u) {
            if !picked[v] {
                weight[v] += 1;
            }
        }
    }
    order.reverse(); // elimination order: order[0] eliminated first
    order
}

/// Maximal cliques of a chordal graph via a perfect elimination ordering;
/// errors if the graph is not chordal.
fn chordal_maximal_cliques(g: &SimpleGraph) -> Result<Vec<BTreeSet<usize>>, GraphError> {
    let order = mcs_order(g);
    let mut pos = vec![0usize; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<BTreeSet<usize>> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: BTreeSet<usize> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > i)
            .collect();
        // Perfect elimination check: the later neighbours of v must form a
        // clique; it suffices that they all touch the earliest of them.
        if let Some(&u) = later.iter().min_by_key(|&&u| pos[u]) {
            for &w in &later {
                if w != u && !g.has_edge(u, w) {
                    return Err(GraphError::NotChordal);
                }
            }
        }
        let mut clique = later;
        clique.insert(v);
        candidates.push(clique);
    }
    // Keep the inclusion-maximal candidate sets.
    let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
    for c in candidates {
        if maximal.iter().any(|d| c.is_subset(d)) {
            continue;
        }
        maximal.retain(|d| !d.is_subset(&c));
        maximal.push(c);
    }
    maximal.sort();
    Ok(maximal)
}

const MAX_CLIQUES_FOR_ORDERING: usize = 20;

/// A consecutive linear ordering of the maximal cliques of an interval
/// graph. Errors report which check failed: chordality, or the consecutive
/// arrangement of the clique-vertex incidence.
pub fn maximal_clique_ordering(g: &SimpleGraph) -> Result<CliqueOrdering, GraphError> {
    let cliques = chordal_maximal_cliques(g)?;
    let r = cliques.len();
    if r > MAX_CLIQUES_FOR_ORDERING {
        return Err(GraphError::TooManyCliques {
            max: MAX_CLIQUES_FOR_ORDERING,
            got: r,
        });
    }
    if r <= 1 {
        return Ok(CliqueOrdering { cliques });
    }
    // Subset dynamic program: can the cliques in `mask` be arranged with
    // `last` at the end so that every vertex's run so far is contiguous?
    // Appending q after (mask, last) is allowed iff every vertex of q that
    // already appeared is also in `last`.
    let full: u32 = (1 << r) - 1;
    let mut reach = vec![vec![false; r]; 1 << r];
    let mut parent: Vec<Vec<Option<usize>>> = vec![vec![None; r]; 1 << r];
    for q in 0..r {
        reach[1 << q][q] = true;
    }
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        for last in 0..r {
            if mask >> last & 1 == 0 || !reach[mask as usize][last] {
                continue;
            }
            for q in 0..r {
                if mask >> q & 1 == 1 || reach[(mask | 1 << q) as usize][q] {
                    continue;
                }
                let ok = cliques[q].iter().all(|x| {
                    let appeared = (0..r).any(|j| mask >> j & 1 == 1 && cliques[j].contains(x));
                    !appeared || cliques[last].contains(x)
                });
                if ok {
                    reach[(mask | 1 << q) as usize][q] = true;
                    parent[(mask | 1 << q) as usize][q] = Some(last);
                }
            }
        }
    }
    let mut last = (0..r)
        .find(|&q| reach[full as usize][q])
        .ok_or(GraphError::NotConsecutive)?;
    let mut mask = full;
    let mut seq = vec![last];
    while mask.count_ones() > 1 {
        let prev = parent[mask as usize][last].expect("reachable state has a parent");
        mask &= !(1 << last);
        last = prev;
        seq.push(last);
    }
    seq.reverse();
    let forward: Vec<BTreeSet<usize>> = seq.iter().map(|&q| cliques[q].clone()).collect();
    // A consecutive ordering read backwards is also consecutive; pick the
    // lexicographically smaller direction so the output is canonical.
    let backward: Vec<BTreeSet<usize>> = forward.iter().rev().cloned().collect();
    let ordering = CliqueOrdering {
        cliques: forward.min(backward),
    };
    debug_assert!(ordering.is_consecutive());
    Ok(ordering)
}

/// The canonical gadget-stretched interval model of an interval graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalRepresentation {
    /// The stretched-interval hypergraph, points renumbered `1..=n'`.
    pub hypergraph: IntervalHypergraph,
    /// Retained vertex of each interval index.
    pub retained: Vec<usize>,
    /// Interval index of every original vertex (merged vertices share one).
    pub interval_of_vertex: BTreeMap<usize, usize>,
    /// Vertices merged away, mapped to their retained representative.
    pub merged_into: BTreeMap<usize, usize>,
    /// Anchor point of each gadget: every stretched interval whose clique
    /// range covers the gadget's clique passes through it.
    pub anchors: Vec<usize>,
    /// Point span of each gadget.
    pub gadget_spans: Vec<(usize, usize)>,
    pub ordering: CliqueOrdering,
}

/// Build the canonical interval model of an interval graph: vertices with
/// identical maximal-clique sets collapse to one, each retained vertex spans
/// its clique range `[l(v), r(v)]` in the ordering, and per clique a gadget
/// stretches the left-starting intervals leftwards (by descending right
/// endpoint) and the right-ending intervals rightwards (by ascending left
/// endpoint), with one separator point between consecutive gadgets.
pub fn build_canonical(g: &SimpleGraph) -> Result<CanonicalRepresentation, GraphError> {
    let ordering = maximal_clique_ordering(g)?;
    let r = ordering.cliques.len();

    // Clique range per vertex; contiguity is guaranteed by the ordering.
    let mut range: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (i, q) in ordering.cliques.iter().enumerate() {
        for &v in q {
            let e = range.entry(v).or_insert((i + 1, i + 1));
            e.0 = e.0.min(i + 1);
            e.1 = e.1.max(i + 1);
        }
    }

    // Deduplicate by clique range, keeping the lowest vertex id.
    let mut rep_of_range: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut merged_into = BTreeMap::new();
    for (&v, &rng) in &range {
        match rep_of_range.get(&rng) {
            None => {
                rep_of_range.insert(rng, v);
            }
            Some(&keep) => {
                merged_into.insert(v, keep);
            }
        }
    }
    let retained: Vec<usize> = rep_of_range
        .values()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // Gadget layout. Left starters at clique i: retained v with l(v) = i, in
    // descending r(v); the k-th gets left offset k - 1. Right enders:
    // retained v with r(v) = i, ascending l(v); the k-th gets right offset
    // k - 1. Offsets are relative to the anchor z_i.
    let mut left_offset: BTreeMap<usize, usize> = BTreeMap::new();
    let mut right_offset: BTreeMap<usize, usize> = BTreeMap::new();
    let mut left_width = vec![0usize; r + 1];
    let mut right_width = vec![0usize; r + 1];
    for i in 1..=r {
        let mut starters: Vec<usize> = retained
            .iter()
            .copied()
            .filter(|v| range[v].0 == i)
            .collect();
        starters.sort_by(|&a, &b| range[&b].1.cmp(&range[&a].1).then(a.cmp(&b)));
        for (k, &v) in starters.iter().enumerate() {
            left_offset.insert(v, k);
        }
        left_width[i] = starters.len().saturating_sub(1);

        let mut enders: Vec<usize> = retained
            .iter()
            .copied()
            .filter(|v| range[v].1 == i)
            .collect();
        enders.sort_by(|&a, &b| range[&a].0.cmp(&range[&b].0).then(a.cmp(&b)));
        for (k, &v) in enders.iter().enumerate() {
            right_offset.insert(v, k);
        }
        right_width[i] = enders.len().saturating_sub(1);
    }

    // Global positions: gadget i spans anchor - left_width ..= anchor +
    // right_width, with one separator point between consecutive gadgets.
    let mut anchors = vec![0usize; r + 1];
    let mut spans = Vec::with_capacity(r);
    let mut next = 1usize;
    for i in 1..=r {
        let start = next;
        anchors[i] = start + left_width[i];
        next = anchors[i] + right_width[i] + 1;
        spans.push((start, next - 1));
        if i < r {
            next += 1; // separator point
        }
    }
    let total_points = next - 1;

    let mut intervals = Vec::with_capacity(retained.len());
    for &v in &retained {
        let (lv, rv) = range[&v];
        let l = anchors[lv] - left_offset[&v];
        let rr = anchors[rv] + right_offset[&v];
        intervals.push(Interval::new(l, rr));
    }
    let hypergraph = IntervalHypergraph::new(total_points, intervals)
        .expect("gadget layout stays within the point range");

    let mut interval_of_vertex = BTreeMap::new();
    for v in g.vertices() {
        let keep = *merged_into.get(&v).unwrap_or(&v);
        let idx = retained
            .iter()
            .position(|&u| u == keep)
            .expect("every vertex maps to a retained representative");
        interval_of_vertex.insert(v, idx);
    }

    let result = CanonicalRepresentation {
        hypergraph,
        retained,
        interval_of_vertex,
        merged_into,
        anchors: anchors[1..].to_vec(),
        gadget_spans: spans,
        ordering,
    };
    debug_assert!(result.intersection_matches(g));
    Ok(result)
}

impl CanonicalRepresentation {
    /// The stretched intervals intersect exactly as the (deduplicated) input
    /// graph dictates, checked through the explicit vertex-interval map.
    pub fn intersection_matches(&self, g: &SimpleGraph) -> bool {
        for u in g.vertices() {
            for v in g.vertices() {
                if u >= v {
                    continue;
                }
                let iu = self.interval_of_vertex[&u];
                let iv = self.interval_of_vertex[&v];
                if iu == iv {
                    // Merged vertices had identical clique sets, hence were
                    // adjacent in the input.
                    if !g.has_edge(u, v) {
                        return false;
                    }
                    continue;
                }
                let overlap = self
                    .hypergraph
                    .interval(iu)
                    .overlaps(&self.hypergraph.interval(iv));
                if overlap != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// A forbidden-pattern witness: an induced path P and an independent set of
/// at least `|P| + 3` vertices in the open neighbourhood of P.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForbiddenWitness {
    pub path: Vec<usize>,
    pub independents: BTreeSet<usize>,
}

impl ForbiddenWitness {
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let k = self.path.len();
        if k == 0 || self.independents.len() < k + 3 {
            return false;
        }
        let path_set: BTreeSet<usize> = self.path.iter().copied().collect();
        if path_set.len() != k {
            return false;
        }
        // Induced path: consecutive vertices adjacent, nothing else.
        for (i, &u) in self.path.iter().enumerate() {
            for (j, &v) in self.path.iter().enumerate() {
                if i < j && g.has_edge(u, v) != (j == i + 1) {
                    return false;
                }
            }
        }
        for &x in &self.independents {
            if path_set.contains(&x) {
                return false;
            }
            if !self.path.iter().any(|&p| g.has_edge(p, x)) {
                return false;
            }
            for &y in &self.independents {
                if x < y && g.has_edge(x, y) {
                    return false;
                }
            }
        }
        true
    }
}

/// Brute-force search for the forbidden pattern: every induced path, with a
/// maximum independent set computed in its open neighbourhood. Exponential;
/// intended for small graphs.
pub fn find_forbidden(g: &SimpleGraph) -> Option<ForbiddenWitness> {
    let n = g.n();
    let mut path = Vec::new();
    let mut result = None;
    // Paths enumerated by increasing length, so the reported witness has the
    // shortest possible path.
    for k in 1..=n {
        for start in 1..=n {
            path.push(start);
            if extend_path(g, k, &mut path, &mut result) {
                return result;
            }
            path.pop();
        }
    }
    None
}

fn extend_path(
    g: &SimpleGraph,
    k: usize,
    path: &mut Vec<usize>,
    result: &mut Option<ForbiddenWitness>,
) -> bool {
    if path.len() == k {
        // Canonical direction for paths of length two or more.
        if k >= 2 && path[0] > path[k - 1] {
            return false;
        }
        let path_set: BTreeSet<usize> = path.iter().copied().collect();
        let hood: BTreeSet<usize> = path
            .iter()
            .flat_map(|&p| g.neighbours(p).iter().copied())
            .filter(|x| !path_set.contains(x))
            .collect();
        if hood.len() < k + 3 {
            return false;
        }
        let hood: Vec<usize> = hood.into_iter().collect();
        let mut best = Vec::new();
        let mut cur = Vec::new();
        max_independent(g, &hood, 0, &mut cur, &mut best);
        if best.len() >= k + 3 {
            *result = Some(ForbiddenWitness {
                path: path.clone(),
                independents: best.into_iter().collect(),
            });
            return true;
        }
        return false;
    }
    let last = *path.last().expect("path is non-empty");
    for &v in g.neighbours(last) {
        // v must be adjacent only to the last path vertex.
        if path.contains(&v) || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, v)) {
            continue;
        }
        path.push(v);
        if extend_path(g, k, path, result) {
            return true;
        }
        path.pop();
    }
    false
}

fn max_independent(
    g: &SimpleGraph,
    pool: &[usize],
    from: usize,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if cur.len() + (pool.len() - from) <= best.len() {
        return;
    }
    if from == pool.len() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    let v = pool[from];
    if !cur.iter().any(|&u| g.has_edge(u, v)) {
        cur.push(v);
        max_independent(g, pool, from + 1, cur, best);
        cur.pop();
    }
    max_independent(g, pool, from + 1, cur, best);
}

/// Certificate returned by [`is_ehig`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EhigCertificate {
    /// Exact hitting set of the canonical model.
    HittingSet {
        model: CanonicalRepresentation,
        points: BTreeSet<usize>,
    },
    /// Forbidden pattern present in the graph.
    Forbidden(ForbiddenWitness),
}

/// Is the interval graph exactly hittable? The verdict is the hypergraph
/// recogniser run on the canonical model (sound and complete: the canonical
/// model is exactly hittable iff the graph has no forbidden pattern). On
/// failure a forbidden-pattern witness is produced by the brute-force
/// search, which is guaranteed to find one.
pub fn is_ehig(g: &SimpleGraph) -> Result<(bool, EhigCertificate), GraphError> {
    let model = build_canonical(g)?;
    let (verdict, set) = is_ehs(&model.hypergraph);
    if verdict {
        Ok((
            true,
            EhigCertificate::HittingSet {
                model,
                points: set.expect("accepting recogniser returns a certificate"),
            },
        ))
    } else {
        let witness = find_forbidden(g)
            .expect("a non-exactly-hittable interval graph contains the forbidden pattern");
        debug_assert!(witness.validate(g));
        Ok((false, EhigCertificate::Forbidden(witness)))
    }
}

/// Proper interval graph test: an interval graph with no induced claw.
pub fn is_proper_interval_graph(g: &SimpleGraph) -> bool {
    if maximal_clique_ordering(g).is_err() {
        return false;
    }
    // Claw scan: a centre with three pairwise non-adjacent neighbours.
    for u in g.vertices() {
        let nbrs: Vec<usize> = g.neighbours(u).iter().copied().collect();
        for i in 0..nbrs.len() {
            for j in (i + 1)..nbrs.len() {
                if g.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in (j + 1)..nbrs.len() {
                    if !g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// General (non-interval) exactly hittable representation of an arbitrary
/// simple graph: the universe is the vertices plus the edges, the hyperedge
/// of a vertex holds the vertex element and its incident edge elements, and
/// the vertex elements form an exact hitting set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralHypergraph {
    /// Element names: `v<i>` for vertices, then `e<u>-<v>` for edges.
    pub universe: Vec<String>,
    /// One hyperedge per vertex, as sorted element indices into `universe`.
    pub hyperedges: Vec<BTreeSet<usize>>,
    /// Indices of the vertex elements: an exact hitting set.
    pub exact_hitting_set: BTreeSet<usize>,
}

pub fn ehs_representation(g: &SimpleGraph) -> GeneralHypergraph {
    let n = g.n();
    let edges = g.edges();
    let mut universe: Vec<String> = g.vertices().map(|v| format!("v{v}")).collect();
    let mut edge_elem = BTreeMap::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        edge_elem.insert((u, v), n + k);
        universe.push(format!("e{u}-{v}"));
    }
    let hyperedges: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| {
            let mut e: BTreeSet<usize> = BTreeSet::from([v - 1]);
            for &u in g.neighbours(v) {
                e.insert(edge_elem[&(u.min(v), u.max(v))]);
            }
            e
        })
        .collect();
    let rep = GeneralHypergraph {
        universe,
        hyperedges,
        exact_hitting_set: (0..n).collect(),
    };
    debug_assert!(rep.validate(g));
    rep
}

impl GeneralHypergraph {
    /// The vertex elements hit every hyperedge exactly once, and the
    /// intersection graph of the hyperedges is the input graph under the
    /// identity vertex map.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        if self.hyperedges.len() != g.n() {
            return false;
        }
        for e in &self.hyperedges {
            if e.intersection(&self.exact_hitting_set).count() != 1 {
                return false;
            }
        }
        for u in 1..=g.n() {
            for v in (u + 1)..=g.n() {
                let meets = self.hyperedges[u - 1]
                    .intersection(&self.hyperedges[v - 1])
                    .next()
                    .is_some();
                if meets != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

const MAX_CANONICAL_VERTICES: usize = 8;

/// Canonical form of a graph on at most eight vertices: the minimum
/// adjacency bit string over all vertex permutations. Two graphs are
/// isomorphic iff their canonical forms agree.
pub fn canonical_form(g: &SimpleGraph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::TooManyVertices {
            max: MAX_CANONICAL_VERTICES,
            got: n,
        });
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut bits: u64 = 0;
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if g.has_edge(p[i], p[j]) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        if bits < best {
            best = bits;
        }
    });
    Ok(best)
}

fn permute<F: FnMut(&[usize])>(perm: &mut Vec<usize>, from: usize, f: &mut F) {
    if from == perm.len() {
        f(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute(perm, from + 1, f);
        perm.swap(from, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw() -> SimpleGraph {
        // K_{1,3}: centre 1, leaves 2..4.
        SimpleGraph::from_edges(4, &[(1, 2), (1, 3), (1, 4)])
    }

    fn k14() -> SimpleGraph {
        SimpleGraph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (1, 5)])
    }

    /// Vertices u,a,b,c,d,e = 1..6; cliques Q1={u,a,d}, Q2={u,b,d},
    /// Q3={u,b,e}, Q4={u,c,e}.
    fn figure_graph() -> SimpleGraph {
        let (u, a, b, c, d, e) = (1, 2, 3, 4, 5, 6);
        SimpleGraph::from_edges(
            6,
            &[
                (a, u),
                (a, d),
                (u, b),
                (u, c),
                (u, e),
                (u, d),
                (b, d),
                (b, e),
                (e, c),
            ],
        )
    }

    #[test]
    fn intersection_graph_examples() {
        let h = IntervalHypergraph::from_pairs(5, &[(1, 2), (2, 3), (4, 5)]);
        let g = intersection_graph(&h);
        assert_eq!(g.edges(), vec![(1, 2)]);

        // Exactly hittable model of the claw: a=[2,4], b=[1,2], c=[3,3], d=[4,5].
        let h = IntervalHypergraph::from_pairs(5, &[(2, 4), (1, 2), (3, 3), (4, 5)]);
        let g = intersection_graph(&h);
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (1, 4)]);

        let single = IntervalHypergraph::from_pairs(1, &[(1, 1)]);
        assert_eq!(intersection_graph(&single).edges(), vec![]);
    }

    #[test]
    fn clique_ordering_figure() {
        let g = figure_graph();
        let ordering = maximal_clique_ordering(&g).unwrap();
        let want: Vec<BTreeSet<usize>> = vec![
            BTreeSet::from([1, 2, 5]),
            BTreeSet::from([1, 3, 5]),
            BTreeSet::from([1, 3, 6]),
            BTreeSet::from([1, 4, 6]),
        ];
        let reversed: Vec<BTreeSet<usize>> = want.iter().rev().cloned().collect();
        assert!(
            ordering.cliques == want || ordering.cliques == reversed,
            "got {:?}",
            ordering.cliques
        );
        assert!(ordering.is_consecutive());
    }

    #[test]
    fn clique_ordering_small() {
        let k3 = SimpleGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]);
        let ordering = maximal_clique_ordering(&k3).unwrap();
        assert_eq!(ordering.cliques.len(), 1);

        let c4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(maximal_clique_ordering(&c4), Err(GraphError::NotChordal));
    }

    #[test]
    fn non_interval_chordal_rejected() {
        // The net: triangle 1-2-3 with pendants 4,5,6. Chordal, not interval.
        let net = SimpleGraph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]);
        assert_eq!(
            maximal_clique_ordering(&net),
            Err(GraphError::NotConsecutive)
        );
    }

    #[test]
    fn canonical_figure_model() {
        let g = figure_graph();
        let model = build_canonical(&g).unwrap();
        assert_eq!(model.hypergraph.n(), 11);
        // Intervals by vertex: a=[1,3], d=[2,5], u=[3,9], b=[5,7], e=[7,10],
        // c=[9,11] (or the left-right mirror under the reversed ordering).
        let (u, a, b, c, d, e) = (1, 2, 3, 4, 5, 6);
        let by_vertex = |v: usize| model.hypergraph.interval(model.interval_of_vertex[&v]);
        let fwd = [
            (a, (1, 3)),
            (d, (2, 5)),
            (u, (3, 9)),
            (b, (5, 7)),
            (e, (7, 10)),
            (c, (9, 11)),
        ];
        let matches_fwd = fwd
            .iter()
            .all(|&(v, (l, r))| by_vertex(v) == Interval::new(l, r));
        let rev = [
            (c, (1, 3)),
            (e, (2, 5)),
            (u, (3, 9)),
            (b, (5, 7)),
            (d, (7, 10)),
            (a, (9, 11)),
        ];
        let matches_rev = rev
            .iter()
            .all(|&(v, (l, r))| by_vertex(v) == Interval::new(l, r));
        assert!(
            matches_fwd || matches_rev,
            "model {:?}",
            model.hypergraph.intervals()
        );
        assert_eq!(model.anchors, vec![3, 5, 7, 9]);
        assert!(model.intersection_matches(&g));
    }

    #[test]
    fn canonical_trivial_graphs() {
        let k1 = SimpleGraph::new(1);
        let model = build_canonical(&k1).unwrap();
        assert_eq!(model.hypergraph.m(), 1);
        assert_eq!(model.anchors.len(), 1);

        let model = build_canonical(&claw()).unwrap();
        assert!(model.intersection_matches(&claw()));
        assert_eq!(model.hypergraph.m(), 4);
    }

    #[test]
    fn ehig_fixtures() {
        let (verdict, cert) = is_ehig(&claw()).unwrap();
        assert!(verdict);
        match cert {
            EhigCertificate::HittingSet { model, points } => {
                assert!(crate::ehs::is_exact_hitting_set(&model.hypergraph, &points));
            }
            EhigCertificate::Forbidden(_) => panic!("claw is exactly hittable"),
        }

        let (verdict, cert) = is_ehig(&k14()).unwrap();
        assert!(!verdict);
        match cert {
            EhigCertificate::Forbidden(w) => {
                assert!(w.validate(&k14()));
                assert_eq!(w.path, vec![1]);
                assert_eq!(w.independents.len(), 4);
            }
            EhigCertificate::HittingSet { .. } => panic!("K_{{1,4}} is not exactly hittable"),
        }

        let g = figure_graph();
        let (verdict, cert) = is_ehig(&g).unwrap();
        assert!(verdict);
        if let EhigCertificate::HittingSet { model, points } = cert {
            assert!(crate::ehs::is_exact_hitting_set(&model.hypergraph, &points));
        }

        let c4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(is_ehig(&c4).is_err());
    }

    #[test]
    fn forbidden_fixtures() {
        assert!(find_forbidden(&claw()).is_none());
        let w = find_forbidden(&k14()).unwrap();
        assert!(w.validate(&k14()));
        assert_eq!(w.path.len(), 1);

        // Path a-b with independents c,d,u,e,f hanging off it.
        let (a, b, c, d, u, e, f) = (1, 2, 3, 4, 5, 6, 7);
        let g = SimpleGraph::from_edges(
            7,
            &[(a, b), (c, a), (d, a), (u, a), (u, b), (e, b), (f, b)],
        );
        let w = find_forbidden(&g).unwrap();
        assert!(w.validate(&g));
        assert_eq!(w.path.len(), 2);
        assert_eq!(w.independents.len(), 5);

        // Proper interval graphs never contain the pattern.
        let p5 = SimpleGraph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(find_forbidden(&p5).is_none());
    }

    #[test]
    fn proper_interval_examples() {
        let p4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]);
        assert!(is_proper_interval_graph(&p4));
        assert!(!is_proper_interval_graph(&claw()));
        let c4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(!is_proper_interval_graph(&c4));
    }

    #[test]
    fn ehs_representation_examples() {
        let k3 = SimpleGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]);
        let rep = ehs_representation(&k3);
        assert!(rep.validate(&k3));
        assert!(rep.hyperedges.iter().all(|e| e.len() == 3));

        let edgeless = SimpleGraph::new(3);
        let rep = ehs_representation(&edgeless);
        assert!(rep.validate(&edgeless));
        assert!(rep.hyperedges.iter().all(|e| e.len() == 1));

        let p3 = SimpleGraph::from_edges(3, &[(1, 2), (2, 3)]);
        let rep = ehs_representation(&p3);
        assert!(rep.validate(&p3));
        assert_eq!(rep.exact_hitting_set, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn parse_graph_examples() {
        let g = parse_graph("4 3\n1 2\n1 3\n1 4").unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (1, 4)]);
        assert!(matches!(
            parse_graph("2 1\n1 1"),
            Err(GraphError::SelfLoop { .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n1 3"),
            Err(GraphError::VertexRange { .. })
        ));
        assert!(matches!(
            parse_graph("2 2\n1 2"),
            Err(GraphError::EdgeCount { .. })
        ));
    }

    #[test]
    fn canonical_form_distinguishes() {
        let p4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]);
        let p4b = SimpleGraph::from_edges(4, &[(2, 4), (4, 1), (1, 3)]);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&p4b).unwrap());
        let star = claw();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
        let big = SimpleGraph::new(9);
        assert!(canonical_form(&big).is_err());
    }
}
