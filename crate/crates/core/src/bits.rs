//! Small dynamic bit sets over point indices, plus exact clique search on
//! bitset adjacency. Shared by the co-occurrence layer, the dynamic program
//! and the oracles.

/// Bit set over `0..cap`. Points are 1-based throughout the crate, so bit 0
/// is simply never used when a set ranges over points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(cap: usize) -> Self {
        BitSet {
            words: vec![0; (cap + 64) / 64],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn or_assign(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn first(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Bits set in the inclusive range `lo..=hi`.
    pub fn range(cap: usize, lo: usize, hi: usize) -> BitSet {
        let mut s = BitSet::new(cap);
        for i in lo..=hi.min(cap.saturating_sub(1)) {
            s.set(i);
        }
        s
    }
}

/// True iff the graph given by `adj` has a clique of size at least `target`
/// inside the candidate set. Plain branch and bound; the candidate sets this
/// crate feeds in are tiny (bounded by the points of one interval).
pub(crate) fn has_clique(adj: &[BitSet], cand: &BitSet, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    if cand.count() < target {
        return false;
    }
    let v = cand.first().expect("candidate set is non-empty");
    // v in the clique:
    if has_clique(adj, &cand.and(&adj[v]), target - 1) {
        return true;
    }
    // v skipped:
    let mut rest = cand.clone();
    rest.clear(v);
    has_clique(adj, &rest, target)
}

/// Largest clique inside `cand`, returned as a bit set.
pub(crate) fn max_clique(adj: &[BitSet], cand: &BitSet) -> BitSet {
    let mut best = BitSet::new(adj.len().max(1));
    let mut cur = BitSet::new(adj.len().max(1));
    fn go(adj: &[BitSet], cand: &BitSet, cur: &mut BitSet, best: &mut BitSet) {
        if cur.count() + cand.count() <= best.count() {
            return;
        }
        match cand.first() {
            None => {
                if cur.count() > best.count() {
                    *best = cur.clone();
                }
            }
            Some(v) => {
                cur.set(v);
                go(adj, &cand.and(&adj[v]), cur, best);
                cur.clear(v);
                let mut rest = cand.clone();
                rest.clear(v);
                go(adj, &rest, cur, best);
            }
        }
    }
    go(adj, cand, &mut cur, &mut best);
    best
}
