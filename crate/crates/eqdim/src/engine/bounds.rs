//! Bounds on the equidistant dimension from published characterizations,
//! plus the forced-pair matching lower bound.

use crate::engine::matching::forced_pair_lower_bound;
use crate::engine::wset::{forced_pairs, WitnessFamily};
use crate::graph::Graph;
use crate::iso::{is_isomorphic, small_characterized_graphs};
use crate::stats::GraphStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Exact => "exact",
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: usize,
    /// Human-readable origin of the bound.
    pub source: String,
}

/// Bound entries: at most one exact entry; otherwise lower bounds sorted
/// best (largest) first, then upper bounds best (smallest) first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundsReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn exact(&self) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.kind == BoundKind::Exact)
            .map(|e| e.value)
    }

    pub fn best_lower(&self) -> usize {
        self.exact().unwrap_or_else(|| {
            self.entries
                .iter()
                .filter(|e| e.kind == BoundKind::Lower)
                .map(|e| e.value)
                .max()
                .unwrap_or(0)
        })
    }

    pub fn best_upper(&self) -> usize {
        self.exact().unwrap_or_else(|| {
            self.entries
                .iter()
                .filter(|e| e.kind == BoundKind::Upper)
                .map(|e| e.value)
                .min()
                .unwrap_or(usize::MAX)
        })
    }
}

/// Every applicable published bound for g. When a characterization pins the
/// exact value (dominant-degree graphs, the eight small path/cycle cases),
/// a single exact entry is returned instead of a bound list.
pub fn literature_bounds(g: &Graph, stats: &GraphStats, fam: &WitnessFamily) -> BoundsReport {
    let n = g.vertex_count();
    let exact_one = |value: usize, source: &str| BoundsReport {
        entries: vec![BoundEntry {
            kind: BoundKind::Exact,
            value,
            source: source.to_string(),
        }],
    };

    if n == 1 {
        return exact_one(0, "single vertex: the empty set equalizes vacuously");
    }
    if stats.max_degree == n - 1 {
        return exact_one(1, "a vertex adjacent to all others characterizes value 1");
    }
    if stats.max_degree == n - 2 {
        return exact_one(2, "maximum degree |V|-2 characterizes value 2");
    }
    for fixed in small_characterized_graphs() {
        if is_isomorphic(g, &fixed) {
            // P2 is caught by the degree rule above; the remaining seven
            // all sit at |V|-2.
            let source = if fixed.name().starts_with('p') {
                "one of the five short paths pinned at |V|-2"
            } else {
                "one of the three short cycles pinned at |V|-2"
            };
            return exact_one(n - 2, source);
        }
    }

    let mut lowers = vec![BoundEntry {
        kind: BoundKind::Lower,
        value: 1,
        source: "any graph on two or more vertices needs a nonempty set".into(),
    }];
    // The degree characterizations above failed, so values 1 and 2 are out.
    lowers.push(BoundEntry {
        kind: BoundKind::Lower,
        value: 3,
        source: "maximum degree below |V|-2 rules out values 1 and 2".into(),
    });
    let fp = forced_pair_lower_bound(n, &forced_pairs(fam));
    if fp > 0 {
        lowers.push(BoundEntry {
            kind: BoundKind::Lower,
            value: fp,
            source: "maximum matching over pairs with empty equidistant set".into(),
        });
    }

    let mut uppers = vec![BoundEntry {
        kind: BoundKind::Upper,
        value: n - stats.max_degree,
        source: "everything outside a maximum-degree vertex's neighborhood".into(),
    }];
    if let Some(omega) = stats.clique_number {
        if omega < n {
            uppers.push(BoundEntry {
                kind: BoundKind::Upper,
                value: n - omega,
                source: "complement of a maximum clique".into(),
            });
        }
    }
    let diam = stats.diameter;
    uppers.push(BoundEntry {
        kind: BoundKind::Upper,
        value: (n * (diam - 1) + 1) / diam,
        source: "diameter pigeonhole cap".into(),
    });
    if diam == 2 {
        if let Some(alpha) = stats.independence_number {
            uppers.push(BoundEntry {
                kind: BoundKind::Upper,
                value: n - alpha,
                source: "complement of a maximum independent set at diameter 2".into(),
            });
        }
    }
    if n >= 7 {
        uppers.push(BoundEntry {
            kind: BoundKind::Upper,
            value: n - 3,
            source: "order at least 7 caps the value at |V|-3".into(),
        });
    }

    lowers.sort_by(|a, b| b.value.cmp(&a.value).then(a.source.cmp(&b.source)));
    uppers.sort_by(|a, b| a.value.cmp(&b.value).then(a.source.cmp(&b.source)));
    lowers.extend(uppers);
    BoundsReport { entries: lowers }
}
