//! Degree, diameter, clique and independence numbers.
//!
//! ω and α are exact, found by branch-and-bound with a greedy-coloring
//! bound. The search is gated by a vertex-count cap: callers get None
//! instead of a runaway search on oversized inputs.

use crate::bits::VertexSet;
use crate::dist::DistanceMatrix;
use crate::graph::Graph;

pub const DEFAULT_STATS_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: usize,
    /// None when the graph exceeds the exact-search cap.
    pub clique_number: Option<usize>,
    pub independence_number: Option<usize>,
}

pub fn graph_stats(g: &Graph, d: &DistanceMatrix, exact_cap: usize) -> GraphStats {
    let n = g.vertex_count();
    let (mut max_degree, mut min_degree) = (0, usize::MAX);
    for v in 0..n {
        max_degree = max_degree.max(g.degree(v));
        min_degree = min_degree.min(g.degree(v));
    }
    let within_cap = n <= exact_cap;
    let adj = adjacency_bitsets(g);
    GraphStats {
        max_degree,
        min_degree,
        diameter: d.diameter(),
        clique_number: within_cap.then(|| max_clique(&adj).len()),
        independence_number: within_cap.then(|| max_clique(&complement_bitsets(&adj)).len()),
    }
}

fn adjacency_bitsets(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| VertexSet::from_ids(n, g.neighbors(v)))
        .collect()
}

fn complement_bitsets(adj: &[VertexSet]) -> Vec<VertexSet> {
    let n = adj.len();
    (0..n)
        .map(|v| {
            let mut row = VertexSet::new(n);
            for u in 0..n {
                if u != v && !adj[v].contains(u) {
                    row.insert(u);
                }
            }
            row
        })
        .collect()
}

/// Exact maximum clique, deterministic: candidates colored greedily in
/// ascending id order, branched highest color first.
pub fn max_clique(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all = VertexSet::from_ids(n, &(0..n).collect::<Vec<_>>());
    expand(adj, &all, &mut current, &mut best);
    best
}

fn expand(adj: &[VertexSet], cands: &VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    // Greedy coloring: vertices in one class are pairwise non-adjacent, so a
    // clique takes at most one per class; class count bounds the extension.
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut colored: Vec<(usize, usize)> = Vec::new(); // (vertex, color)
    for v in cands.iter() {
        let c = match classes.iter().position(|cl| cl.is_disjoint(&adj[v])) {
            Some(c) => c,
            None => {
                classes.push(VertexSet::new(adj.len()));
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        colored.push((v, c + 1));
    }
    colored.sort_by_key(|&(v, c)| (c, v));

    let mut remaining = cands.clone();
    while let Some((v, c)) = colored.pop() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        let inter = remaining.intersection(&adj[v]);
        if current.len() > best.len() && inter.is_empty() {
            *best = current.clone();
        }
        if !inter.is_empty() {
            expand(adj, &inter, current, best);
        }
        current.pop();
        remaining.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;
    use crate::polytope::{gen_r2, gen_s, gen_s2, gen_t};

    /// Reference: largest clique by subset enumeration.
    fn brute_clique(adj: &[VertexSet]) -> usize {
        let n = adj.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let ids: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if ids.len() > best
                && ids
                    .iter()
                    .all(|&u| ids.iter().all(|&v| u == v || adj[u].contains(v)))
            {
                best = ids.len();
            }
        }
        best
    }

    #[test]
    fn clique_matches_brute_force_on_arithmetic_samples() {
        let mut state: u64 = 0x243f6a8885a308d3;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for n in 3..=9 {
            for _ in 0..20 {
                let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 100 < 50 {
                            adj[u].insert(v);
                            adj[v].insert(u);
                        }
                    }
                }
                let found = max_clique(&adj);
                // Returned set really is a clique of the claimed size
                for &u in &found {
                    for &v in &found {
                        assert!(u == v || adj[u].contains(v));
                    }
                }
                assert_eq!(found.len(), brute_clique(&adj));
            }
        }
    }

    #[test]
    fn polytope_clique_numbers() {
        for (g, omega) in [
            (gen_r2(6).unwrap(), 2),
            (gen_s(5).unwrap(), 3),
            (gen_s2(6).unwrap(), 3),
            (gen_t(5).unwrap(), 3),
        ] {
            let d = all_pairs_distances(&g);
            let st = graph_stats(&g, &d, DEFAULT_STATS_CAP);
            assert_eq!(st.clique_number, Some(omega), "on {}", g.name());
        }
    }

    #[test]
    fn cap_disables_exact_search() {
        let g = gen_t(5).unwrap();
        let d = all_pairs_distances(&g);
        let st = graph_stats(&g, &d, 10);
        assert_eq!(st.clique_number, None);
        assert_eq!(st.independence_number, None);
        assert_eq!(st.max_degree, 5);
        assert_eq!(st.min_degree, 4);
    }

    #[test]
    fn independence_of_cycle() {
        let names: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..7)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % 7)))
            .collect();
        let g = Graph::new("c7", &names, &edges).unwrap();
        let d = all_pairs_distances(&g);
        let st = graph_stats(&g, &d, DEFAULT_STATS_CAP);
        assert_eq!(st.independence_number, Some(3));
        assert_eq!(st.clique_number, Some(2));
        assert_eq!(st.diameter, 3);
    }
}
