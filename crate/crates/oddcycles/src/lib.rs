//! Counting workbench for k-cycles in graphs without shorter odd cycles.
//!
//! The crate bundles:
//!
//! - an immutable bit-row [`Graph`] with graph6 / edge-list I/O, distances,
//!   odd girth and blow-up constructions ([`graph`], [`format`]);
//! - exact enumeration of k-cycles and induced k-cycles with an independent
//!   brute-force oracle ([`cycles`]);
//! - the weight-certificate machinery that bounds the number of k-cycles in
//!   a graph of odd girth at least k by (n/k)^k, checked step by step in
//!   exact rational arithmetic ([`proof`]);
//! - exhaustive isomorph-free generation and seeded hill-climb search over
//!   constrained graph classes, plus conjecture probes ([`search`]);
//! - a command-line front end ([`cli`]).
//!
//! ```
//! use oddcycles::{BlowupSpec, Graph};
//!
//! let g = BlowupSpec::balanced(Graph::cycle(7)?, 14)?.build()?;
//! assert_eq!(oddcycles::count_cycles(&g, 7)?, 128u32.into());
//! # Ok::<(), oddcycles::Error>(())
//! ```

pub mod bitset;
pub mod canon;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod format;
pub mod graph;
pub mod proof;
pub mod search;
pub mod ser;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use canon::{canonical_form, certificate, CanonicalForm, Certificate};
pub use cycles::{
    brute_force_cycle_count, count_cycles, count_induced_cycles, enumerate_cycles,
    has_induced_c6_with_diagonals, observation_class_check, CycleInstance,
};
pub use error::{Error, Result};
pub use format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{balanced_blobs, BlowupSpec, Distance, Graph, OddGirth};
pub use proof::{
    a_sets, claim1_prefix_bound, claim1_report, claim2_report, cycle_bound, good_sequences,
    size_matrix, star_property, verify_theorem, vertex_contribution, weight, GoodSequence,
};
pub use search::{
    blowup_leading_fit, conjecture2_coefficient, conjecture_probe, exhaustive_search,
    generate_constrained_graphs, hill_climb, Constraint, CountMode, ProbeSpec, SearchReport,
};
