//! All-pairs shortest-path distances by breadth-first search.
//!
//! Distances live in an explicit dense symmetric matrix: the target instances
//! stay in the low hundreds of vertices, so O(n^2) memory buys O(1) lookups
//! in the solver's inner loops.

use rayon::prelude::*;

use crate::graph::Graph;

/// Dense matrix of hop counts for a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    fn from_rows(rows: Vec<Vec<u16>>) -> Self {
        let n = rows.len();
        let mut d = Vec::with_capacity(n * n);
        for row in rows {
            d.extend_from_slice(&row);
        }
        DistanceMatrix { n, d }
    }
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u16> {
    let n = g.vertex_count();
    let mut dist = vec![u16::MAX; n];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in g.neighbors(u) {
            if dist[v] == u16::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    debug_assert!(dist.iter().all(|&x| x != u16::MAX), "graph not connected");
    dist
}

/// BFS from every source. The matrix is symmetric with a zero diagonal.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let rows = (0..g.vertex_count()).map(|s| bfs_row(g, s)).collect();
    DistanceMatrix::from_rows(rows)
}

/// Same result as [`all_pairs_distances`]; sources run on the rayon pool.
/// The output is identical regardless of schedule.
pub fn all_pairs_distances_parallel(g: &Graph) -> DistanceMatrix {
    let rows = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| bfs_row(g, s))
        .collect();
    DistanceMatrix::from_rows(rows)
}
