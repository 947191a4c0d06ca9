//! Brute-force oracle: smallest equalizer set by direct subset enumeration.
//!
//! Deliberately shares nothing with the branch-and-bound solver beyond the
//! definition-level verifier, so the two can cross-check each other.

use crate::dist::{all_pairs_distances, DistanceMatrix};
use crate::engine::verify::is_distance_equalizer;
use crate::graph::Graph;
use thiserror::Error;

pub const DEFAULT_BRUTE_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph has {n} vertices, above the brute-force cap of {cap}")]
pub struct SizeCapExceeded {
    pub n: usize,
    pub cap: usize,
}

/// Advances `c` to the next k-combination of 0..n in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + n - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest equalizer set: subsets tried in increasing cardinality,
/// lexicographic within a cardinality, first success returned.
pub fn brute_force_eqdim(g: &Graph) -> Result<(usize, Vec<usize>), SizeCapExceeded> {
    brute_force_eqdim_with_cap(g, DEFAULT_BRUTE_CAP)
}

pub fn brute_force_eqdim_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<(usize, Vec<usize>), SizeCapExceeded> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SizeCapExceeded { n, cap });
    }
    let d = all_pairs_distances(g);
    Ok(brute_force_on_matrix(&d))
}

pub(crate) fn brute_force_on_matrix(d: &DistanceMatrix) -> (usize, Vec<usize>) {
    let n = d.n();
    for k in 0..=n {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            if is_distance_equalizer(d, &c).is_ok() {
                return (k, c);
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always equalizes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n)))
            .collect();
        Graph::new(&format!("c{n}"), &names, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n - 1)
            .map(|i| (format!("v{i}"), format!("v{}", i + 1)))
            .collect();
        Graph::new(&format!("p{n}"), &names, &edges).unwrap()
    }

    #[test]
    fn small_fixed_points() {
        assert_eq!(brute_force_eqdim(&path(2)).unwrap().0, 1);
        assert_eq!(brute_force_eqdim(&cycle(4)).unwrap().0, 2);
        assert_eq!(brute_force_eqdim(&path(6)).unwrap().0, 4);
        assert_eq!(brute_force_eqdim(&cycle(5)).unwrap().0, 3);
    }

    #[test]
    fn first_optimum_is_lexicographic() {
        let (k, s) = brute_force_eqdim(&cycle(4)).unwrap();
        assert_eq!((k, s), (2, vec![0, 2]));
    }

    #[test]
    fn star_center_equalizes() {
        let g = Graph::new(
            "k13",
            &["c", "l0", "l1", "l2"],
            &[("c", "l0"), ("c", "l1"), ("c", "l2")],
        )
        .unwrap();
        assert_eq!(brute_force_eqdim(&g).unwrap(), (1, vec![0]));
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(17);
        assert_eq!(
            brute_force_eqdim(&g),
            Err(SizeCapExceeded { n: 17, cap: 16 })
        );
        assert!(brute_force_eqdim_with_cap(&g, 17).is_ok());
    }

    #[test]
    fn combination_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
