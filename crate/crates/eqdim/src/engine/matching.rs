//! Maximum matching in general graphs (blossom contraction) and the
//! forced-pair lower bound built on it.
//!
//! Forced pairs may chain or share vertices, so counting them is not sound;
//! a maximum matching picks a largest vertex-disjoint subfamily, and each
//! matched pair forces one distinct member into any equalizer set.

const NONE: usize = usize::MAX;

/// Maximum matching over `n` vertices; `edges` are unordered pairs.
/// Returns the mate array.
pub fn maximum_matching(n: usize, edges: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        debug_assert!(u != v && u < n && v < n);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut m = Matcher {
        adj,
        mate: vec![NONE; n],
        p: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    for v in 0..n {
        if m.mate[v] == NONE {
            if let Some(end) = m.find_path(v) {
                m.augment(end);
            }
        }
    }
    m.mate
        .into_iter()
        .map(|x| if x == NONE { None } else { Some(x) })
        .collect()
}

struct Matcher {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    p: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl Matcher {
    /// Nearest common ancestor of the alternating-tree bases of a and b.
    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut v = a;
        loop {
            let bv = self.base[v];
            seen[bv] = true;
            if self.mate[bv] == NONE {
                break;
            }
            v = self.p[self.mate[bv]];
        }
        let mut v = b;
        loop {
            let bv = self.base[v];
            if seen[bv] {
                return bv;
            }
            v = self.p[self.mate[bv]];
        }
    }

    /// Walks tree edges from v up to blossom base b, flagging passed bases
    /// and re-rooting parents through `child` so the stem stays alternating.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.p[v] = child;
            child = self.mate[v];
            v = self.p[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from an exposed root. Returns its far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.p.iter_mut().for_each(|x| *x = NONE);
        self.base = (0..n).collect();
        self.used[root] = true;
        let mut q = std::collections::VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.p[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom to its base.
                    let curbase = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, curbase, to);
                    self.mark_path(to, curbase, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.p[to] == NONE {
                    self.p[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    q.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    /// Flips matched/unmatched edges along the found path.
    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.p[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }
}

pub fn matching_size(mate: &[Option<usize>]) -> usize {
    mate.iter().flatten().count() / 2
}

/// Largest number of vertex-disjoint forced pairs; a valid lower bound on
/// the equidistant dimension since each matched pair forces a distinct
/// member into any equalizer set.
pub fn forced_pair_lower_bound(n: usize, pairs: &[(usize, usize)]) -> usize {
    matching_size(&maximum_matching(n, pairs))
}
