//! Equidistant-dimension engine: W-sets, verification, bounds, exact
//! solver, and the brute-force cross-check oracle.

pub mod bounds;
pub mod brute;
pub mod matching;
pub mod solve;
pub mod verify;
pub mod wset;

pub use bounds::{literature_bounds, BoundEntry, BoundKind, BoundsReport};
pub use brute::{brute_force_eqdim, brute_force_eqdim_with_cap, SizeCapExceeded};
pub use matching::{forced_pair_lower_bound, matching_size, maximum_matching};
pub use solve::{eqdim_exact, BudgetExceeded, Solution, SolveOptions};
pub use verify::{is_distance_equalizer, EqualizerCertificate, FailingPair, Witness};
pub use wset::{forced_pairs, w_set, WSet, WSetError, WitnessFamily};
