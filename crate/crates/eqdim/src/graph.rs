//! Immutable simple undirected graphs with symbolic vertex names.
//!
//! Vertices carry text names (`"a0"`, `"b3"`, ...) and are assigned dense ids
//! `0..n` in the order of the name list, so identical input always yields the
//! same id layout. Construction validates simplicity and connectivity; every
//! algorithm downstream may assume both.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex name {0:?} in edge list")]
    UnknownVertex(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("graph is disconnected: vertex {0:?} is not reachable from {1:?}")]
    Disconnected(String, String),
    #[error("graph has no vertices")]
    Empty,
}

/// An immutable, connected, simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    vertex_names: Vec<String>,
    ids: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from named vertices and an edge list of name pairs.
    ///
    /// Duplicate edges are merged after canonical ordering of endpoints.
    /// Self-loops, unknown endpoint names, duplicate vertex names, and
    /// disconnected input are rejected.
    pub fn new<S: AsRef<str>>(
        name: &str,
        vertex_names: &[S],
        edges: &[(S, S)],
    ) -> Result<Self, GraphError> {
        if vertex_names.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut ids = HashMap::with_capacity(vertex_names.len());
        let mut names = Vec::with_capacity(vertex_names.len());
        for v in vertex_names {
            let v = v.as_ref();
            if ids.insert(v.to_string(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }

        let n = names.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        let mut edge_count = 0;
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *ids
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let v = *ids
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if u == v {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key) {
                adjacency[u].push(v);
                adjacency[v].push(u);
                edge_count += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let g = Graph {
            name: name.to_string(),
            vertex_names: names,
            ids,
            adjacency,
            edge_count,
        };
        g.check_connected()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        let mut reached = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        reached[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !reached[v] {
                    reached[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count < n {
            let stranded = reached.iter().position(|&r| !r).unwrap();
            return Err(GraphError::Disconnected(
                self.vertex_names[stranded].clone(),
                self.vertex_names[0].clone(),
            ));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.vertex_names[id]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as id pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Checks whether the id permutation `perm` (vertex `i` maps to
    /// `perm[i]`) is a graph automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.vertex_count() {
            return false;
        }
        let mut hit = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        self.edges()
            .iter()
            .all(|&(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (n={}, m={})",
            self.name,
            self.vertex_count(),
            self.edge_count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_builds() {
        let g = Graph::new("P2", &["u", "v"], &[("u", "v")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn c5_is_2_regular() {
        let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..5)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % 5)))
            .collect();
        let g = Graph::new("C5", &names, &edges).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn disconnected_rejected() {
        let err = Graph::new("2K2", &["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap_err();
        assert!(matches!(err, GraphError::Disconnected(..)));
    }

    #[test]
    fn self_loop_rejected() {
        let err = Graph::new("loop", &["a", "b"], &[("a", "a"), ("a", "b")]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop("a".into()));
    }

    #[test]
    fn unknown_vertex_rejected() {
        let err = Graph::new("bad", &["a", "b"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex("z".into()));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::new("P2", &["a", "b"], &[("a", "b"), ("b", "a"), ("a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let err = Graph::new("dup", &["a", "a"], &[("a", "a")]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateVertex("a".into()));
    }

    #[test]
    fn id_order_follows_input() {
        let g = Graph::new("P3", &["x", "m", "k"], &[("x", "m"), ("m", "k")]).unwrap();
        assert_eq!(g.vertex_id("x"), Some(0));
        assert_eq!(g.vertex_id("m"), Some(1));
        assert_eq!(g.vertex_id("k"), Some(2));
        assert_eq!(g.vertex_name(2), "k");
    }
}
