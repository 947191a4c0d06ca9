//! Distance-equalizer verification with re-checkable certificates.

use crate::bits::VertexSet;
use crate::dist::DistanceMatrix;

/// One verified witness: x is equidistant from u and v.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    pub x: usize,
}

/// Proof that a set equalizes a graph: one witness per outside pair.
///
/// Witness selection is canonical (smallest valid id per pair, pairs in
/// lexicographic order), so certificates are diffable across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualizerCertificate {
    /// Ascending vertex ids.
    pub set: Vec<usize>,
    pub witnesses: Vec<Witness>,
}

/// Lexicographically first pair outside S with no equidistant member of S.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailingPair {
    pub u: usize,
    pub v: usize,
}

/// Checks whether S is a distance-equalizer set.
///
/// Every pair u < v outside S needs some x in S with d(u,x) = d(v,x); the
/// smallest such x is recorded. Duplicate ids in `set` are tolerated.
pub fn is_distance_equalizer(
    d: &DistanceMatrix,
    set: &[usize],
) -> Result<EqualizerCertificate, FailingPair> {
    let n = d.n();
    let mut members = VertexSet::new(n);
    for &s in set {
        members.insert(s);
    }
    let sorted: Vec<usize> = members.iter().collect();
    let mut witnesses = Vec::new();
    for u in 0..n {
        if members.contains(u) {
            continue;
        }
        for v in u + 1..n {
            if members.contains(v) {
                continue;
            }
            match sorted.iter().find(|&&x| d.get(u, x) == d.get(v, x)) {
                Some(&x) => witnesses.push(Witness { u, v, x }),
                None => return Err(FailingPair { u, v }),
            }
        }
    }
    Ok(EqualizerCertificate {
        set: sorted,
        witnesses,
    })
}

impl EqualizerCertificate {
    pub fn value(&self) -> usize {
        self.set.len()
    }

    /// Full re-validation against a distance matrix: the witness list covers
    /// exactly the pairs outside the set and every entry holds numerically.
    pub fn validate(&self, d: &DistanceMatrix) -> Result<(), String> {
        let n = d.n();
        let mut members = VertexSet::new(n);
        for &s in &self.set {
            if s >= n {
                return Err(format!("set member {s} out of range"));
            }
            members.insert(s);
        }
        if members.len() != self.set.len() {
            return Err("set contains duplicates".into());
        }
        let mut expected = Vec::new();
        for u in 0..n {
            if members.contains(u) {
                continue;
            }
            for v in u + 1..n {
                if !members.contains(v) {
                    expected.push((u, v));
                }
            }
        }
        if expected.len() != self.witnesses.len() {
            return Err(format!(
                "witness count {} does not match outside-pair count {}",
                self.witnesses.len(),
                expected.len()
            ));
        }
        for (w, &(u, v)) in self.witnesses.iter().zip(&expected) {
            if (w.u, w.v) != (u, v) {
                return Err(format!(
                    "witness order broken: expected pair ({u},{v}), found ({},{})",
                    w.u, w.v
                ));
            }
            if !members.contains(w.x) {
                return Err(format!("witness {} for ({u},{v}) is outside the set", w.x));
            }
            if d.get(u, w.x) != d.get(v, w.x) {
                return Err(format!(
                    "witness {} for ({u},{v}) fails: d={} vs d={}",
                    w.x,
                    d.get(u, w.x),
                    d.get(v, w.x)
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;
    use crate::graph::Graph;
    use crate::polytope::gen_t;

    fn p2() -> Graph {
        Graph::new("p2", &["u", "v"], &[("u", "v")]).unwrap()
    }

    #[test]
    fn whole_vertex_set_is_trivially_valid() {
        let d = all_pairs_distances(&p2());
        let cert = is_distance_equalizer(&d, &[0, 1]).unwrap();
        assert!(cert.witnesses.is_empty());
        assert_eq!(cert.value(), 2);
        assert!(cert.validate(&d).is_ok());
    }

    #[test]
    fn empty_set_fails_on_p2() {
        let d = all_pairs_distances(&p2());
        assert_eq!(
            is_distance_equalizer(&d, &[]),
            Err(FailingPair { u: 0, v: 1 })
        );
    }

    #[test]
    fn t5_published_set_verifies() {
        let g = gen_t(5).unwrap();
        let d = all_pairs_distances(&g);
        let set: Vec<usize> = (0..10).collect(); // blocks a and b
        let cert = is_distance_equalizer(&d, &set).unwrap();
        assert_eq!(cert.value(), 10);
        assert!(cert.validate(&d).is_ok());
        // 10 outside vertices -> 45 pairs, each with a witness
        assert_eq!(cert.witnesses.len(), 45);
    }

    #[test]
    fn validate_rejects_tampering() {
        let g = gen_t(5).unwrap();
        let d = all_pairs_distances(&g);
        let mut cert = is_distance_equalizer(&d, &(0..10).collect::<Vec<_>>()).unwrap();
        let w = &mut cert.witnesses[0];
        w.x = 19; // outside the set
        assert!(cert.validate(&d).is_err());
    }

    #[test]
    fn witnesses_are_smallest_valid() {
        let g = gen_t(5).unwrap();
        let d = all_pairs_distances(&g);
        let cert = is_distance_equalizer(&d, &(0..10).collect::<Vec<_>>()).unwrap();
        for w in &cert.witnesses {
            for x in 0..w.x {
                assert_ne!(
                    d.get(w.u, x),
                    d.get(w.v, x),
                    "witness for ({},{}) is not minimal",
                    w.u,
                    w.v
                );
            }
        }
    }
}
