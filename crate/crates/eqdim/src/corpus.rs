//! Deterministic graph corpora for cross-checking the solver against the
//! brute-force oracle: named small families, exhaustive labeled connected
//! graphs, and seed-free arithmetic samples. No RNG state anywhere; every
//! function returns the same graphs on every run and platform.

use crate::graph::Graph;

/// Path P_k on vertices p0..p{k-1}.
pub fn path(k: usize) -> Graph {
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    let edges: Vec<(String, String)> = (1..k)
        .map(|i| (names[i - 1].clone(), names[i].clone()))
        .collect();
    Graph::new(&format!("p{k}"), &names, &edges).expect("paths are connected")
}

/// Cycle C_k on vertices c0..c{k-1}.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "a cycle needs at least 3 vertices");
    let names: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
    let edges: Vec<(String, String)> = (0..k)
        .map(|i| (names[i].clone(), names[(i + 1) % k].clone()))
        .collect();
    Graph::new(&format!("c{k}"), &names, &edges).expect("cycles are connected")
}

/// Star K_{1,leaves}: hub h adjacent to l0..l{leaves-1}.
pub fn star(leaves: usize) -> Graph {
    assert!(leaves >= 1);
    let mut names = vec!["h".to_string()];
    names.extend((0..leaves).map(|i| format!("l{i}")));
    let edges: Vec<(String, String)> = (0..leaves)
        .map(|i| ("h".to_string(), format!("l{i}")))
        .collect();
    Graph::new(&format!("k1_{leaves}"), &names, &edges).expect("stars are connected")
}

/// Complete graph K_k.
pub fn complete(k: usize) -> Graph {
    let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((names[u].clone(), names[v].clone()));
        }
    }
    Graph::new(&format!("k{k}"), &names, &edges).expect("complete graphs are connected")
}

fn graph_from_mask(name: &str, n: usize, mask: u64) -> Option<Graph> {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((names[u].clone(), names[v].clone()));
            }
            bit += 1;
        }
    }
    Graph::new(name, &names, &edges).ok()
}

/// Every labeled connected graph on n vertices, by ascending edge bitmask
/// over the C(n,2) vertex pairs in lexicographic order. Sized for n <= 6.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=6).contains(&n),
        "exhaustive enumeration is sized for n <= 6"
    );
    let bits = n * (n - 1) / 2;
    (0..1u64 << bits)
        .filter_map(|mask| graph_from_mask(&format!("g{n}_{mask}"), n, mask))
        .collect()
}

/// Splitmix-style bit mixer; plain arithmetic, no RNG state.
fn mix(a: u64, b: u64, c: u64) -> u64 {
    let mut x = a
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(b.wrapping_mul(0xbf58_476d_1ce4_e5b9))
        .wrapping_add(c.wrapping_mul(0x94d0_49bb_1331_11eb));
    x ^= x >> 30;
    x = x.wrapping_mul(0x2545_f491_4f6c_dd1d);
    x ^= x >> 27;
    x
}

/// The first `count` connected graphs from a fixed arithmetic sequence of
/// half-density edge sets on n vertices. Deterministic by construction:
/// edge {u,v} of sample s is present iff one mixed bit of (s,u,v) is set.
pub fn arithmetic_samples(n: usize, count: usize) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut sample = 0u64;
    while out.len() < count {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mix(sample, u as u64, v as u64) >> 63 == 1 {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        if let Some(g) = graph_from_mask(&format!("r{n}_{sample}"), n, mask) {
            out.push(g);
        }
        sample += 1;
    }
    out
}
