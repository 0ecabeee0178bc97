//! Shortest-path solvers: the float-heap baseline, the integer-queue
//! variant behind the delta adapter, and an independent Bellman-Ford
//! oracle that shares no queue code with either.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::adapter::{AdapterError, DeltaAdapter};
use crate::graph::Graph;
use crate::queue::{
    BinaryHeapQueue, DialBucketQueue, MonotoneIntQueue, QueueError, QueueStats, RadixHeap,
    TieBreak, TwoLevelBucketQueue,
};

/// Relative tolerance for comparing distances computed along different
/// relaxation orders.
pub const REL_TOLERANCE: f64 = 1e-9;
/// Absolute floor for the tolerance near zero.
pub const ABS_TOLERANCE: f64 = 1e-12;

/// True when two distances agree within the solver tolerance.
pub fn distances_agree(a: f64, b: f64) -> bool {
    if a == b {
        return true; // covers equal infinities and exact matches
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= (REL_TOLERANCE * scale).max(ABS_TOLERANCE)
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("source node {node} out of range for {node_count} nodes")]
    InvalidSource { node: usize, node_count: usize },
    #[error("graph contains a zero-weight edge; the integer-queue adapter requires strictly positive weights")]
    ZeroDeltaRefused,
    #[error("graph contains no zero-weight edge; nothing to demonstrate")]
    NoZeroEdge,
    #[error("supplied delta {supplied} exceeds the true minimum edge weight {min}")]
    DeltaTooLarge { supplied: f64, min: f64 },
    #[error("key range floor(n*C/delta) = {0:e} does not fit in 63 bits")]
    KeyRangeOverflow(f64),
    #[error("internal error: relaxation succeeded on settled node {0}")]
    SettledNodeRelaxed(usize),
    #[error(transparent)]
    Adapter(#[from] AdapterError),
    #[error(transparent)]
    Queue(#[from] QueueError),
}

fn serialize_dist<S: Serializer>(dist: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(dist.len()))?;
    for &d in dist {
        if d.is_infinite() {
            seq.serialize_element("inf")?;
        } else {
            seq.serialize_element(&d)?;
        }
    }
    seq.end()
}

/// Distances, parent pointers and the extraction trace of one solver run.
#[derive(Debug, Clone, Serialize)]
pub struct SsspResult {
    pub source: usize,
    /// Shortest distance per node, infinity when unreachable.
    #[serde(serialize_with = "serialize_dist")]
    pub dist: Vec<f64>,
    /// Shortest-path-tree parent per node, absent for the source and for
    /// unreachable nodes.
    pub parent: Vec<Option<usize>>,
    /// Processing order: (node, tentative distance at extraction).
    pub trace: Vec<(usize, f64)>,
}

impl SsspResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serialization cannot fail")
    }
}

/// Result of a run through the integer-queue path, with the inner queue's
/// operation counters attached.
#[derive(Debug)]
pub struct SsspRun {
    pub result: SsspResult,
    pub queue_stats: QueueStats,
    pub delta: f64,
    /// Successful relaxations that targeted an already-settled node. Zero
    /// on every valid positive-weights run; nonzero only under the forced
    /// zero-edge demonstration.
    pub settled_violations: u64,
}

/// Which queue backs a solver run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueueKind {
    /// Float-keyed comparison heap (the standard algorithm).
    BinaryHeapFloat,
    /// Integer binary heap behind the delta adapter.
    BinaryHeapViaAdapter,
    DialViaAdapter,
    RadixViaAdapter,
    TwoLevelViaAdapter { b: u64 },
}

impl QueueKind {
    pub fn uses_adapter(self) -> bool {
        !matches!(self, QueueKind::BinaryHeapFloat)
    }

    fn build(self, span: u64, tie: TieBreak) -> Result<Box<dyn MonotoneIntQueue>, QueueError> {
        Ok(match self {
            QueueKind::BinaryHeapFloat | QueueKind::BinaryHeapViaAdapter => {
                Box::new(BinaryHeapQueue::new(tie))
            }
            QueueKind::DialViaAdapter => Box::new(DialBucketQueue::new(span, tie)?),
            QueueKind::RadixViaAdapter => Box::new(RadixHeap::new(span, tie)?),
            QueueKind::TwoLevelViaAdapter { b } => Box::new(TwoLevelBucketQueue::new(span, b, tie)?),
        })
    }
}

fn check_source(g: &Graph, s: usize) -> Result<(), SolverError> {
    if s >= g.node_count() {
        return Err(SolverError::InvalidSource {
            node: s,
            node_count: g.node_count(),
        });
    }
    Ok(())
}

/// f64 ordered by total order; only ever holds finite non-negative keys.
#[derive(PartialEq)]
struct FloatKey(f64);

impl Eq for FloatKey {}
impl PartialOrd for FloatKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FloatKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Standard Dijkstra with a float-keyed full-ordering heap (lazy deletion).
pub fn dijkstra_standard(g: &Graph, s: usize) -> Result<SsspResult, SolverError> {
    check_source(g, s)?;
    let n = g.node_count();
    let mut tentative = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut extracted = vec![false; n];
    let mut trace = Vec::new();
    let mut heap: BinaryHeap<Reverse<(FloatKey, usize)>> = BinaryHeap::new();
    tentative[s] = 0.0;
    heap.push(Reverse((FloatKey(0.0), s)));
    while let Some(Reverse((FloatKey(d), v))) = heap.pop() {
        if extracted[v] || d > tentative[v] {
            continue; // stale entry
        }
        extracted[v] = true;
        trace.push((v, d));
        for (u, w) in g.out_edges(v) {
            let nd = d + w;
            if nd < tentative[u] {
                tentative[u] = nd;
                parent[u] = Some(v);
                heap.push(Reverse((FloatKey(nd), u)));
            }
        }
    }
    Ok(SsspResult {
        source: s,
        dist: tentative,
        parent,
        trace,
    })
}

/// Independent oracle: rounds of full edge relaxation until a fixed point
/// (at most n-1 rounds). No queue machinery in common with the solvers.
pub fn bellman_ford_oracle(g: &Graph, s: usize) -> Result<SsspResult, SolverError> {
    check_source(g, s)?;
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    dist[s] = 0.0;
    for _ in 0..n.saturating_sub(1) {
        let mut changed = false;
        for (v, u, w) in g.edges() {
            if dist[v].is_finite() {
                let nd = dist[v] + w;
                if nd < dist[u] {
                    dist[u] = nd;
                    parent[u] = Some(v);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(SsspResult {
        source: s,
        dist,
        parent,
        trace: Vec::new(),
    })
}

struct EngineConfig {
    delta: f64,
    tie: TieBreak,
    // when set, a successful relaxation into a settled node is skipped and
    // counted instead of being treated as an internal error
    tolerate_settled_relaxations: bool,
}

fn run_via_adapter(
    g: &Graph,
    s: usize,
    kind: QueueKind,
    cfg: EngineConfig,
) -> Result<SsspRun, SolverError> {
    check_source(g, s)?;
    let n = g.node_count();
    let delta = cfg.delta;
    let max_w = g.max_weight().unwrap_or(0.0);
    // live integer keys never spread wider than floor(C/delta) + 1
    let span = {
        let q = max_w / delta;
        if q >= 9.0e18 {
            return Err(SolverError::KeyRangeOverflow(q));
        }
        q as u64 + 1
    };
    let total_range = (n as f64) * max_w / delta;
    if total_range >= 9_223_372_036_854_775_808.0 {
        return Err(SolverError::KeyRangeOverflow(total_range));
    }
    let inner = kind.build(span, cfg.tie)?;
    let mut queue = DeltaAdapter::new(inner, delta)?;
    let mut tentative = vec![f64::INFINITY; n];
    let mut dist = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut extracted = vec![false; n];
    let mut trace = Vec::new();
    let mut settled_violations = 0u64;
    tentative[s] = 0.0;
    queue.update(s, 0.0)?;
    while let Some((v, dv)) = queue.extract() {
        if extracted[v] {
            return Err(SolverError::SettledNodeRelaxed(v));
        }
        extracted[v] = true;
        dist[v] = dv;
        trace.push((v, dv));
        for (u, w) in g.out_edges(v) {
            let nd = dv + w;
            if nd < tentative[u] {
                if extracted[u] {
                    if cfg.tolerate_settled_relaxations {
                        settled_violations += 1;
                        continue;
                    }
                    return Err(SolverError::SettledNodeRelaxed(u));
                }
                tentative[u] = nd;
                parent[u] = Some(v);
                queue.update(u, nd)?;
            }
        }
    }
    let queue_stats = queue.inner().stats();
    Ok(SsspRun {
        result: SsspResult {
            source: s,
            dist,
            parent,
            trace,
        },
        queue_stats,
        delta,
        settled_violations,
    })
}

/// Floating point shortest paths over an integer queue. The minimum edge
/// weight is found by a full edge scan unless `supplied_delta` is given, in
/// which case it must not exceed the true minimum.
pub fn dijkstra_float_via_int(
    g: &Graph,
    s: usize,
    kind: QueueKind,
    supplied_delta: Option<f64>,
) -> Result<SsspRun, SolverError> {
    check_source(g, s)?;
    let scanned = g.min_weight();
    if scanned == Some(0.0) {
        return Err(SolverError::ZeroDeltaRefused);
    }
    let delta = match (supplied_delta, scanned) {
        (Some(d), _) if !(d > 0.0) => return Err(SolverError::Adapter(AdapterError::NonPositiveDelta(d))),
        (Some(d), Some(min)) if d > min => {
            return Err(SolverError::DeltaTooLarge { supplied: d, min })
        }
        (Some(d), _) => d,
        // edgeless graph: only the source is ever queued, any delta works
        (None, None) => 1.0,
        (None, Some(min)) => min,
    };
    run_via_adapter(
        g,
        s,
        kind,
        EngineConfig {
            delta,
            tie: TieBreak::Fifo,
            tolerate_settled_relaxations: false,
        },
    )
}

/// Outcome of the forced zero-edge run: the (possibly wrong) result and
/// the nodes whose distances disagree with the oracle.
#[derive(Debug)]
pub struct AdversarialOutcome {
    pub run: SsspRun,
    pub oracle: SsspResult,
    pub mismatch: Vec<usize>,
}

/// Run the integer-queue algorithm on a graph with zero-weight edges,
/// forcing a surrogate delta and a largest-float-key-first tie break. This
/// is an adversarial but contract-respecting schedule; on these graphs it
/// can settle nodes too early, and the mismatch list records where.
pub fn adversarial_zero_delta_run(
    g: &Graph,
    s: usize,
    surrogate_delta: f64,
) -> Result<AdversarialOutcome, SolverError> {
    check_source(g, s)?;
    if !g.has_zero_edge() {
        return Err(SolverError::NoZeroEdge);
    }
    if !(surrogate_delta > 0.0) {
        return Err(SolverError::Adapter(AdapterError::NonPositiveDelta(
            surrogate_delta,
        )));
    }
    let run = run_via_adapter(
        g,
        s,
        QueueKind::DialViaAdapter,
        EngineConfig {
            delta: surrogate_delta,
            tie: TieBreak::MaxHintFirst,
            tolerate_settled_relaxations: true,
        },
    )?;
    let oracle = bellman_ford_oracle(g, s)?;
    let mismatch: Vec<usize> = (0..g.node_count())
        .filter(|&v| !distances_agree(run.result.dist[v], oracle.dist[v]))
        .collect();
    Ok(AdversarialOutcome {
        run,
        oracle,
        mismatch,
    })
}

/// Same schedule control as [`adversarial_zero_delta_run`] but with a
/// caller-chosen tie break, used to show the failure is schedule-dependent.
pub fn forced_delta_run(
    g: &Graph,
    s: usize,
    surrogate_delta: f64,
    tie: TieBreak,
) -> Result<SsspRun, SolverError> {
    check_source(g, s)?;
    if !(surrogate_delta > 0.0) {
        return Err(SolverError::Adapter(AdapterError::NonPositiveDelta(
            surrogate_delta,
        )));
    }
    run_via_adapter(
        g,
        s,
        QueueKind::DialViaAdapter,
        EngineConfig {
            delta: surrogate_delta,
            tie,
            tolerate_settled_relaxations: true,
        },
    )
}
