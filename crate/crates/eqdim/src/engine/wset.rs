//! W-sets and the hitting-set reformulation.
//!
//! For a pair u,v the W-set is every vertex equidistant from both. A set S
//! equalizes the graph exactly when S meets H(u,v) = {u,v} ∪ W(u,v) for every
//! pair, which turns the minimum equalizer problem into minimum hitting set.

use crate::bits::VertexSet;
use crate::dist::DistanceMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WSetError {
    #[error("w-set of a vertex with itself is undefined")]
    SameVertex,
}

/// Vertices equidistant from a fixed pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSet {
    pub u: usize,
    pub v: usize,
    /// Ascending; never contains u or v.
    pub members: Vec<usize>,
}

/// Exact pointwise scan of the distance matrix.
pub fn w_set(d: &DistanceMatrix, u: usize, v: usize) -> Result<WSet, WSetError> {
    if u == v {
        return Err(WSetError::SameVertex);
    }
    let members = (0..d.n()).filter(|&w| d.get(u, w) == d.get(v, w)).collect();
    Ok(WSet { u, v, members })
}

/// Index of unordered pair {u,v}, u < v, in row-major upper-triangle order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// All hit-sets H(u,v) = {u,v} ∪ W(u,v), one bit-set per unordered pair.
#[derive(Debug, Clone)]
pub struct WitnessFamily {
    n: usize,
    hit_sets: Vec<VertexSet>,
}

impl WitnessFamily {
    pub fn build(d: &DistanceMatrix) -> Self {
        let n = d.n();
        let mut hit_sets = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let mut h = VertexSet::new(n);
                h.insert(u);
                h.insert(v);
                for w in 0..n {
                    if d.get(u, w) == d.get(v, w) {
                        h.insert(w);
                    }
                }
                hit_sets.push(h);
            }
        }
        WitnessFamily { n, hit_sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.hit_sets.len()
    }

    pub fn hit_set(&self, u: usize, v: usize) -> &VertexSet {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        &self.hit_sets[pair_index(self.n, a, b)]
    }

    pub fn hit_set_by_index(&self, idx: usize) -> &VertexSet {
        &self.hit_sets[idx]
    }

    /// Unordered pairs in lexicographic order, aligned with hit-set indices.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub fn pair_at(&self, idx: usize) -> (usize, usize) {
        // Inverse of pair_index by row scan; fine for the sizes involved.
        let mut rem = idx;
        for u in 0..self.n {
            let row = self.n - u - 1;
            if rem < row {
                return (u, u + 1 + rem);
            }
            rem -= row;
        }
        unreachable!("pair index out of range")
    }
}

/// Pairs whose W-set is empty (|H| = 2); both live outside every witness, so
/// any equalizer set must contain one endpoint. Lexicographically sorted.
pub fn forced_pairs(fam: &WitnessFamily) -> Vec<(usize, usize)> {
    fam.pairs()
        .zip(&fam.hit_sets)
        .filter(|(_, h)| h.len() == 2)
        .map(|(p, _)| p)
        .collect()
}
