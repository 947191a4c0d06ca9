//! Shared test support: an independent BFS distance oracle that deliberately
//! avoids the library's matrix type, so distance cross-checks do not share
//! code with what they check.

use eqdim::graph::Graph;
use std::collections::VecDeque;

pub const UNREACHED: usize = usize::MAX;

/// Plain BFS over the adjacency lists, one row per source.
pub fn bfs_oracle(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist = vec![UNREACHED; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        rows.push(dist);
    }
    rows
}
