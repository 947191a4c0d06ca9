//! Generators for four convex-polytope graph families.
//!
//! Each family is built from n-vertex block cycles joined by ring faces; all
//! index arithmetic is mod n. Blocks are ordered a,b,c,d(,e,f) and vertex ids
//! are `block·n + i`, so instances are reproducible across runs.
//!
//! The structural claims shipped with this crate are proven for n ≥ 5.
//! Generation accepts n ≥ 3 (mod-n arithmetic stays well-defined); callers
//! that need the proven range check [`below_proven_range`].

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Smallest n for which the shipped structural claims are proven.
pub const PROVEN_MIN_N: usize = 5;

/// Smallest n the generators accept at all.
pub const GEN_MIN_N: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("n = {n} is too small for family {class}: need n >= {min}")]
    NTooSmall {
        class: PolytopeClass,
        n: usize,
        min: usize,
    },
}

/// The four generated families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolytopeClass {
    /// 6n vertices in blocks a..f, 9n edges, 3-regular.
    R2,
    /// 4n vertices in blocks a..d, 8n edges.
    S,
    /// 4n vertices in blocks a..d, 8n edges.
    S2,
    /// 4n vertices in blocks a..d, 9n edges.
    T,
}

impl PolytopeClass {
    pub const ALL: [PolytopeClass; 4] = [
        PolytopeClass::R2,
        PolytopeClass::S,
        PolytopeClass::S2,
        PolytopeClass::T,
    ];

    /// Parses the CLI spelling: "r2", "s", "s2", "t" (case-insensitive).
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r2" => Some(PolytopeClass::R2),
            "s" => Some(PolytopeClass::S),
            "s2" => Some(PolytopeClass::S2),
            "t" => Some(PolytopeClass::T),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            PolytopeClass::R2 => "r2",
            PolytopeClass::S => "s",
            PolytopeClass::S2 => "s2",
            PolytopeClass::T => "t",
        }
    }

    pub fn blocks(self) -> &'static [char] {
        match self {
            PolytopeClass::R2 => &['a', 'b', 'c', 'd', 'e', 'f'],
            _ => &['a', 'b', 'c', 'd'],
        }
    }

    pub fn vertex_count(self, n: usize) -> usize {
        self.blocks().len() * n
    }

    pub fn edge_count(self, n: usize) -> usize {
        match self {
            PolytopeClass::R2 | PolytopeClass::T => 9 * n,
            PolytopeClass::S | PolytopeClass::S2 => 8 * n,
        }
    }

    pub fn generate(self, n: usize) -> Result<Graph, PolytopeError> {
        match self {
            PolytopeClass::R2 => gen_r2(n),
            PolytopeClass::S => gen_s(n),
            PolytopeClass::S2 => gen_s2(n),
            PolytopeClass::T => gen_t(n),
        }
    }
}

impl std::fmt::Display for PolytopeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// True when n is accepted by the generators but outside the proven range.
pub fn below_proven_range(n: usize) -> bool {
    n < PROVEN_MIN_N
}

/// Vertex name for block `b`, index `i`: "a0", "f4", ...
pub fn vertex_name(block: char, i: usize) -> String {
    format!("{block}{i}")
}

fn block_vertex_names(blocks: &[char], n: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(blocks.len() * n);
    for &b in blocks {
        for i in 0..n {
            names.push(vertex_name(b, i));
        }
    }
    names
}

/// Edge rule ((block, index-offset), (block, index-offset)); offsets are
/// added to i and reduced mod n.
type EdgeRule = ((char, usize), (char, usize));

/// Builds a family instance from per-i edge rules.
fn build(class: PolytopeClass, n: usize, rules: &[EdgeRule]) -> Result<Graph, PolytopeError> {
    if n < GEN_MIN_N {
        return Err(PolytopeError::NTooSmall {
            class,
            n,
            min: GEN_MIN_N,
        });
    }
    let names = block_vertex_names(class.blocks(), n);
    let mut edges = Vec::with_capacity(rules.len() * n);
    for i in 0..n {
        for &((bu, du), (bv, dv)) in rules {
            edges.push((vertex_name(bu, (i + du) % n), vertex_name(bv, (i + dv) % n)));
        }
    }
    let g = Graph::new(&format!("{}_{n}", class.tag()), &names, &edges)
        .unwrap_or_else(|e: GraphError| unreachable!("family edge rules are fixed: {e}"));
    debug_assert_eq!(g.edge_count(), class.edge_count(n));
    Ok(g)
}

/// Outer cycle a, inner cycle f, and three ring layers b, c/d, e between them.
pub fn gen_r2(n: usize) -> Result<Graph, PolytopeError> {
    build(
        PolytopeClass::R2,
        n,
        &[
            (('a', 0), ('a', 1)),
            (('f', 0), ('f', 1)),
            (('a', 0), ('b', 0)),
            (('c', 0), ('d', 0)),
            (('e', 0), ('f', 0)),
            (('b', 0), ('c', 0)),
            (('b', 1), ('c', 0)),
            (('d', 0), ('e', 0)),
            (('d', 1), ('e', 0)),
        ],
    )
}

/// Four block cycles plus spokes a-b, b-c, c-d and the skewed spoke a_{i+1}-b_i.
pub fn gen_s(n: usize) -> Result<Graph, PolytopeError> {
    build(
        PolytopeClass::S,
        n,
        &[
            (('a', 0), ('a', 1)),
            (('b', 0), ('b', 1)),
            (('c', 0), ('c', 1)),
            (('d', 0), ('d', 1)),
            (('a', 0), ('b', 0)),
            (('b', 0), ('c', 0)),
            (('c', 0), ('d', 0)),
            (('a', 1), ('b', 0)),
        ],
    )
}

/// Like S but the skewed spoke sits one layer lower: b_{i+1}-c_i.
pub fn gen_s2(n: usize) -> Result<Graph, PolytopeError> {
    build(
        PolytopeClass::S2,
        n,
        &[
            (('a', 0), ('a', 1)),
            (('b', 0), ('b', 1)),
            (('c', 0), ('c', 1)),
            (('d', 0), ('d', 1)),
            (('a', 0), ('b', 0)),
            (('b', 0), ('c', 0)),
            (('c', 0), ('d', 0)),
            (('b', 1), ('c', 0)),
        ],
    )
}

/// S plus a second skewed layer c_i-d_{i+1}.
pub fn gen_t(n: usize) -> Result<Graph, PolytopeError> {
    build(
        PolytopeClass::T,
        n,
        &[
            (('a', 0), ('a', 1)),
            (('b', 0), ('b', 1)),
            (('c', 0), ('c', 1)),
            (('d', 0), ('d', 1)),
            (('a', 0), ('b', 0)),
            (('b', 0), ('c', 0)),
            (('c', 0), ('d', 0)),
            (('a', 1), ('b', 0)),
            (('c', 0), ('d', 1)),
        ],
    )
}
