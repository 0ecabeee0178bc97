// `!(x > 0.0)` is used deliberately throughout: unlike `x <= 0.0` it also
// rejects NaN, which every validation site here must do.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Floating point single-source shortest paths over monotone integer
//! priority queues.
//!
//! Dijkstra's algorithm normally needs a full ordering over tentative
//! distances. On graphs whose edge weights are all at least some delta > 0,
//! a partial ordering with slack delta is enough, and such an ordering can
//! be produced by any monotone *integer* priority queue: position each node
//! by the companion key `floor(D(v) / delta)` and let the float value ride
//! along. This crate provides that construction end to end:
//!
//! - [`graph`]: compressed adjacency graphs, DIMACS I/O, generators,
//!   including the zero-edge ladder family on which the construction
//!   provably cannot work.
//! - [`queue`]: the monotone integer queue contract with Dial, radix-heap,
//!   two-level-bucket and binary-heap implementations.
//! - [`adapter`]: the float-to-integer key facade.
//! - [`dijkstra`]: both solver variants, a Bellman-Ford oracle, and the
//!   adversarial zero-edge demonstration.
//! - [`ordering`]: trace validators for full and delta-partial orderings
//!   and the zero-subpath processing condition.

pub mod adapter;
pub mod dijkstra;
pub mod graph;
pub mod ordering;
pub mod queue;

pub use adapter::{int_key, AdapterError, DeltaAdapter};
pub use dijkstra::{
    adversarial_zero_delta_run, bellman_ford_oracle, dijkstra_float_via_int, dijkstra_standard,
    distances_agree, forced_delta_run, AdversarialOutcome, QueueKind, SolverError, SsspResult,
    SsspRun,
};
pub use graph::{build_ladder, generate_random, LadderParams, Graph, GraphError, ProblemVariant};
pub use ordering::{check_zero_edge_order, check_delta_po, check_fo, ZeroEdgeOrderViolation};
pub use queue::{
    BinaryHeapQueue, DialBucketQueue, MonotoneIntQueue, QueueError, QueueStats, RadixHeap,
    TieBreak, TwoLevelBucketQueue,
};
