//! Discrete-time electric quantum walks on the edge space of weighted
//! bipartite graphs.
//!
//! The walk state lives in `C^{E ∪ E'}`, the span of the oriented edges of a
//! graph extended with two dangling edges `ss'` and `t't`. One step of the
//! walk is `U = R_B R_A`, the product of the reflections about the spans of
//! the star states of the two bipartition classes. Viewed as a transducer
//! with public space `span{|ss'>, |t't>}`, the walk maps `|ss'>` to `|t't>`
//! exactly, with a catalyst vector whose squared norm governs how many
//! iterations an approximate implementation needs.
//!
//! The crate provides:
//!
//! * [`graph`] — weighted bipartite graphs, the dangling-edge extension,
//!   star states, electrical flows and effective resistance, the `G x K_2`
//!   doubling construction, and re-weighting;
//! * [`walk`] — the reflection operators, the walk step with either global
//!   phase, the generic electric catalysts, and the two-register
//!   diffuse-and-shift realization;
//! * [`transducer`] — exact transduction solving (minimum-norm catalysts),
//!   the counter-register iterative runner with its `2 sqrt(W/K)` error
//!   guarantee, and the re-weighting helper;
//! * [`welded`] — welded tree graphs with random welds, the opaque-label
//!   neighbor oracle, and the phase-flipped catalysts that make the far
//!   root reachable in a linear number of steps;
//! * [`hierarchical`] — 1-D hierarchical graph specifications, the
//!   alternating weight profile, flattening to a weighted path, and random
//!   biregular instantiation;
//! * [`verify`] — the identity suites behind the `verify` CLI command;
//! * [`classical`] — the classical random-walk baseline.
//!
//! Batch helpers (classical trials, sweeps over iteration counts, dense
//! operator assembly) run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential loops without it.

pub mod classical;
pub mod error;
pub mod graph;
pub mod hierarchical;
pub mod io;
pub mod linalg;
pub mod par;
pub mod transducer;
pub mod verify;
pub mod walk;
pub mod welded;

pub use error::Error;
pub use graph::{BipartiteGraph, Doubled, EdgeVector, ExtendedGraph, Flow, Graph, Part};
pub use hierarchical::{CProfile, Family, FlattenedLine, HierarchicalSpec, LayeredGraph};
pub use transducer::{SplitUnitary, Transducer, TransductionResult, WalkTransducer};
pub use walk::{DiffuseShift, PairStateVector, Phase, WalkOperator};
pub use welded::{WeldOracle, WeldedTree};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
