//! Interval hypergraphs on host points `1..=n`: the data model, text
//! serialisation, validation and the basic structural queries everything
//! else in the crate is built on.
//!
//! An interval hypergraph keeps its intervals in file order; the position of
//! an interval in that list is its stable identity and is what witnesses,
//! partitions and CLI output refer to.

use std::fmt;

use thiserror::Error;

/// Closed interval `[l, r]` of host points, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Interval {
    pub l: usize,
    pub r: usize,
}

impl Interval {
    pub fn new(l: usize, r: usize) -> Self {
        assert!(l >= 1 && l <= r, "invalid interval [{l}, {r}]");
        Interval { l, r }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.l <= p && p <= self.r
    }

    /// `self` contains `other` as a set of points (equality counts).
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.l <= other.r && other.l <= self.r
    }

    /// Number of points; an interval is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.r - self.l + 1
    }

    pub fn points(&self) -> impl Iterator<Item = usize> {
        self.l..=self.r
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.l, self.r)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed interval, expected \"l r\"")]
    MalformedInterval { line: usize },
    #[error("line {line}: expected an integer")]
    NonInteger { line: usize },
    #[error("line {line}: interval endpoints out of order (l > r)")]
    EndpointOrder { line: usize },
    #[error("line {line}: endpoint exceeds n")]
    EndpointRange { line: usize },
    #[error("expected {expected} intervals, found {found}")]
    IntervalCount { expected: usize, found: usize },
    #[error("interval [{l}, {r}] out of bounds for host size {n}")]
    IntervalOutOfBounds { l: usize, r: usize, n: usize },
    #[error("point {point} out of range 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("colouring has {found} entries, expected {expected}")]
    ColouringLength { expected: usize, found: usize },
}

/// Hypergraph whose vertices are the points `1..=n` and whose hyperedges are
/// intervals of consecutive points. Duplicate intervals are allowed and kept;
/// interval indices (0-based positions in `intervals`) are stable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalHypergraph {
    n: usize,
    intervals: Vec<Interval>,
}

impl IntervalHypergraph {
    pub fn new(n: usize, intervals: Vec<Interval>) -> Result<Self, HypergraphError> {
        if n == 0 {
            return Err(HypergraphError::PointOutOfRange { point: 0, n });
        }
        for iv in &intervals {
            if iv.l < 1 || iv.r > n {
                return Err(HypergraphError::IntervalOutOfBounds {
                    l: iv.l,
                    r: iv.r,
                    n,
                });
            }
        }
        Ok(IntervalHypergraph { n, intervals })
    }

    /// Convenience constructor from `(l, r)` pairs; panics on invalid input.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let intervals = pairs.iter().map(|&(l, r)| Interval::new(l, r)).collect();
        IntervalHypergraph::new(n, intervals).expect("intervals within bounds")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, idx: usize) -> Interval {
        self.intervals[idx]
    }

    pub fn points(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    fn check_point(&self, p: usize) -> Result<(), HypergraphError> {
        if p < 1 || p > self.n {
            Err(HypergraphError::PointOutOfRange { point: p, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for IntervalHypergraph {
    /// The hypergraph file format: `n m`, then one `l r` line per interval.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.intervals.len())?;
        for iv in &self.intervals {
            writeln!(f, "{} {}", iv.l, iv.r)?;
        }
        Ok(())
    }
}

fn parse_uint(tok: &str, line: usize) -> Result<usize, HypergraphError> {
    tok.parse::<usize>()
        .map_err(|_| HypergraphError::NonInteger { line })
}

/// Parse the hypergraph file format: first line `n m`, then `m` lines `l r`
/// with `1 <= l <= r <= n`. Blank lines and `#` comment lines are skipped.
pub fn parse_hypergraph(text: &str) -> Result<IntervalHypergraph, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or(HypergraphError::MalformedHeader { line: 1 })?;
    let mut toks = header.split_whitespace();
    let n = parse_uint(
        toks.next()
            .ok_or(HypergraphError::MalformedHeader { line: hline })?,
        hline,
    )?;
    let m = parse_uint(
        toks.next()
            .ok_or(HypergraphError::MalformedHeader { line: hline })?,
        hline,
    )?;
    if toks.next().is_some() || n == 0 {
        return Err(HypergraphError::MalformedHeader { line: hline });
    }

    let mut intervals = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let l = parse_uint(
            toks.next()
                .ok_or(HypergraphError::MalformedInterval { line })?,
            line,
        )?;
        let r = parse_uint(
            toks.next()
                .ok_or(HypergraphError::MalformedInterval { line })?,
            line,
        )?;
        if toks.next().is_some() {
            return Err(HypergraphError::MalformedInterval { line });
        }
        if l > r {
            return Err(HypergraphError::EndpointOrder { line });
        }
        if l < 1 || r > n {
            return Err(HypergraphError::EndpointRange { line });
        }
        intervals.push(Interval { l, r });
    }
    if intervals.len() != m {
        return Err(HypergraphError::IntervalCount {
            expected: m,
            found: intervals.len(),
        });
    }
    IntervalHypergraph::new(n, intervals)
}

/// The discrete (complete) interval hypergraph on `n` points: all
/// `n (n + 1) / 2` intervals `[i, j]`, `i <= j`, in increasing `(l, r)` order.
pub fn discrete_hypergraph(n: usize) -> Result<IntervalHypergraph, HypergraphError> {
    if n == 0 {
        return Err(HypergraphError::PointOutOfRange { point: 0, n });
    }
    let mut intervals = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            intervals.push(Interval { l: i, r: j });
        }
    }
    IntervalHypergraph::new(n, intervals)
}

/// True iff no interval is contained in another. Identical duplicates count
/// as containment, so a hypergraph with repeated intervals is never proper.
pub fn is_proper(h: &IntervalHypergraph) -> bool {
    let ivs = h.intervals();
    for (i, a) in ivs.iter().enumerate() {
        for (j, b) in ivs.iter().enumerate() {
            if i != j && a.contains_interval(b) {
                return false;
            }
        }
    }
    true
}

/// Indices of all intervals with `l(I) <= b`, in stable order.
pub fn j_set(h: &IntervalHypergraph, b: usize) -> Result<Vec<usize>, HypergraphError> {
    h.check_point(b)?;
    Ok((0..h.m()).filter(|&i| h.interval(i).l <= b).collect())
}

/// True iff `set` (interval indices) is nested at `b`: every member contains
/// `b`, and membership is upward closed under the left endpoint among the
/// intervals containing `b`.
pub fn is_nested_at(h: &IntervalHypergraph, b: usize, set: &[usize]) -> bool {
    if set.iter().any(|&i| !h.interval(i).contains(b)) {
        return false;
    }
    for &i in set {
        for j in 0..h.m() {
            if h.interval(j).contains(b)
                && h.interval(j).l > h.interval(i).l
                && !set.contains(&j)
            {
                return false;
            }
        }
    }
    true
}

/// The order in which the dynamic program peels intervals through `b`:
/// decreasing left endpoint, then increasing right endpoint, then index.
pub(crate) fn containing_order(h: &IntervalHypergraph, b: usize) -> Vec<usize> {
    let mut containing: Vec<usize> = (0..h.m()).filter(|&i| h.interval(i).contains(b)).collect();
    containing.sort_by(|&i, &j| {
        h.interval(j)
            .l
            .cmp(&h.interval(i).l)
            .then(h.interval(i).r.cmp(&h.interval(j).r))
            .then(i.cmp(&j))
    });
    containing
}

/// The nested sets at `b` used by the dynamic program: all prefixes of the
/// intervals containing `b` sorted by decreasing left endpoint (ties by
/// increasing right endpoint), starting from the empty set. With `d`
/// intervals through `b` there are exactly `d + 1` of them, so the count is
/// linear, and each passes [`is_nested_at`].
pub fn nested_sets_at(
    h: &IntervalHypergraph,
    b: usize,
) -> Result<Vec<Vec<usize>>, HypergraphError> {
    h.check_point(b)?;
    let containing = containing_order(h, b);
    let mut out = vec![Vec::new()];
    for k in 1..=containing.len() {
        let mut set: Vec<usize> = containing[..k].to_vec();
        set.sort_unstable();
        out.push(set);
    }
    Ok(out)
}

/// Total colouring of the points; colour 0 means "no colour".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CfColouring {
    colours: Vec<usize>,
}

impl CfColouring {
    /// `colours[i]` is the colour of point `i + 1`.
    pub fn new(colours: Vec<usize>) -> Self {
        CfColouring { colours }
    }

    pub fn all_zero(n: usize) -> Self {
        CfColouring {
            colours: vec![0; n],
        }
    }

    pub fn colour(&self, p: usize) -> usize {
        self.colours[p - 1]
    }

    pub fn set_colour(&mut self, p: usize, c: usize) {
        self.colours[p - 1] = c;
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colours
    }

    /// Number of distinct non-zero colours in use.
    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<usize> = self.colours.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl fmt::Display for CfColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.colours.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Parse the colouring file format: one line of `n` space-separated
/// non-negative integers.
pub fn parse_colouring(text: &str, n: usize) -> Result<CfColouring, HypergraphError> {
    let mut colours = Vec::with_capacity(n);
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            colours.push(parse_uint(tok, i + 1)?);
        }
    }
    if colours.len() != n {
        return Err(HypergraphError::ColouringLength {
            expected: n,
            found: colours.len(),
        });
    }
    Ok(CfColouring::new(colours))
}

/// Does `iv` see some positive colour exactly once under `c`?
pub fn interval_conflict_free(iv: &Interval, c: &CfColouring) -> bool {
    // Counting per colour beats allocating a map at this scale.
    for p in iv.points() {
        let col = c.colour(p);
        if col == 0 {
            continue;
        }
        let mut count = 0;
        for q in iv.points() {
            if c.colour(q) == col {
                count += 1;
            }
        }
        if count == 1 {
            return true;
        }
    }
    false
}

/// True iff every interval of `h` has some positive colour occurring on
/// exactly one of its points.
pub fn verify_cf_colouring(h: &IntervalHypergraph, c: &CfColouring) -> bool {
    c.len() == h.n() && h.intervals().iter().all(|iv| interval_conflict_free(iv, c))
}
