//! Isomorphism testing for small graphs by degree-pruned backtracking.
//!
//! Used to match an input against a handful of fixed graphs (short paths
//! and cycles), so the exponential worst case never materializes.

use crate::graph::Graph;

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(a, b, 0, &mut map, &mut used)
}

#[allow(clippy::needless_range_loop)] // u is a vertex id on both sides
fn assign(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.vertex_count();
    if v == n {
        return true;
    }
    'cand: for w in 0..n {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        for u in 0..v {
            if a.has_edge(u, v) != b.has_edge(map[u], w) {
                continue 'cand;
            }
        }
        map[v] = w;
        used[w] = true;
        if assign(a, b, v + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// P2..P6, C3, C4, C5: the graphs whose equidistant dimension is pinned to
/// |V|-1 or |V|-2 by the published characterization.
pub fn small_characterized_graphs() -> Vec<Graph> {
    let path = |n: usize| {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n - 1)
            .map(|i| (format!("v{i}"), format!("v{}", i + 1)))
            .collect();
        Graph::new(&format!("p{n}"), &names, &edges).unwrap()
    };
    let cycle = |n: usize| {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n)))
            .collect();
        Graph::new(&format!("c{n}"), &names, &edges).unwrap()
    };
    vec![
        path(2),
        path(3),
        path(4),
        path(5),
        path(6),
        cycle(3),
        cycle(4),
        cycle(5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c4a = Graph::new(
            "a",
            &["w", "x", "y", "z"],
            &[("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")],
        )
        .unwrap();
        let c4b = Graph::new(
            "b",
            &["p", "q", "r", "s"],
            &[("p", "r"), ("r", "q"), ("q", "s"), ("s", "p")],
        )
        .unwrap();
        assert!(is_isomorphic(&c4a, &c4b));
    }

    #[test]
    fn same_degree_sequence_different_shape() {
        // Two trees with degree sequence [1,1,1,2,2,2,3]: legs 3+2+1 vs 2+2+2.
        let spider321 = Graph::new(
            "s321",
            &["c", "a1", "a2", "a3", "b1", "b2", "d1"],
            &[
                ("c", "a1"),
                ("a1", "a2"),
                ("a2", "a3"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
            ],
        )
        .unwrap();
        let spider222 = Graph::new(
            "s222",
            &["c", "a1", "a2", "b1", "b2", "d1", "d2"],
            &[
                ("c", "a1"),
                ("a1", "a2"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
                ("d1", "d2"),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&spider321, &spider222));
        assert!(is_isomorphic(&spider321, &spider321));
    }

    #[test]
    fn characterized_family_is_pairwise_distinct() {
        let fam = small_characterized_graphs();
        assert_eq!(fam.len(), 8);
        for (i, a) in fam.iter().enumerate() {
            for b in fam.iter().skip(i + 1) {
                assert!(!is_isomorphic(a, b), "{} vs {}", a.name(), b.name());
            }
        }
    }
}
