//! Exact equidistant-dimension toolkit.
//!
//! A set S of vertices is a distance-equalizer set when every pair of
//! vertices outside S has some x in S equidistant from both. The equidistant
//! dimension of a connected graph is the minimum size of such a set. This
//! crate computes it exactly with certificates: a forced-pair matching lower
//! bound and an independently verifiable equalizer set.
//!
//! The crate also generates four convex-polytope graph families and ships a
//! claim harness (`repro`) that checks the published structural results for
//! those families instance by instance.

pub mod bits;
pub mod corpus;
pub mod dist;
pub mod engine;
pub mod format;
pub mod graph;
pub mod iso;
pub mod polytope;
pub mod repro;
pub mod stats;

pub use dist::{all_pairs_distances, all_pairs_distances_parallel, DistanceMatrix};
pub use engine::{
    brute_force_eqdim, eqdim_exact, forced_pair_lower_bound, forced_pairs, is_distance_equalizer,
    literature_bounds, w_set, BoundsReport, BudgetExceeded, EqualizerCertificate, FailingPair,
    Solution, SolveOptions, WitnessFamily,
};
pub use graph::{Graph, GraphError};
pub use polytope::{gen_r2, gen_s, gen_s2, gen_t, PolytopeClass, PolytopeError};
pub use stats::{graph_stats, GraphStats, DEFAULT_STATS_CAP};
