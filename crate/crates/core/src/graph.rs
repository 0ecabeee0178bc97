//! Directed weighted graphs in compressed out-adjacency form, DIMACS I/O,
//! and instance generators (random graphs and the zero-edge ladder family).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("malformed line {line}: {msg}")]
    MalformedLine { line: usize, msg: String },
    #[error("declared {declared} arcs but found {actual}")]
    CountMismatch { declared: usize, actual: usize },
    #[error("negative edge weight {weight}")]
    NegativeWeight { weight: f64 },
    #[error("edge weight must be finite, got {weight}")]
    NonFiniteWeight { weight: f64 },
    #[error("node id {id} out of range for {node_count} nodes")]
    NodeOutOfRange { id: usize, node_count: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("invalid weight bounds: need 0 < min <= max, got min={min}, max={max}")]
    InvalidBounds { min: f64, max: f64 },
    #[error("invalid ladder parameters: {0}")]
    InvalidParams(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Problem variant by admissible weight range. The strictly-positive case is
/// the one the integer-queue adapter can solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ProblemVariant {
    PositiveWeights,
    NonNegativeWeights,
}

/// Immutable directed graph with non-negative finite f64 weights, stored as
/// a compressed out-adjacency array.
#[derive(Debug)]
pub struct Graph {
    node_count: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    // (min, max) over edge weights, None for an empty edge set
    min_max: OnceLock<Option<(f64, f64)>>,
}

impl Graph {
    /// Build from an edge list. Rejects out-of-range endpoints and
    /// negative / NaN / infinite weights.
    pub fn new(node_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        for &(src, dst, w) in edges {
            if src >= node_count {
                return Err(GraphError::NodeOutOfRange { id: src, node_count });
            }
            if dst >= node_count {
                return Err(GraphError::NodeOutOfRange { id: dst, node_count });
            }
            if w.is_nan() || w.is_infinite() {
                return Err(GraphError::NonFiniteWeight { weight: w });
            }
            if w < 0.0 {
                return Err(GraphError::NegativeWeight { weight: w });
            }
        }
        let mut offsets = vec![0usize; node_count + 1];
        for &(src, _, _) in edges {
            offsets[src + 1] += 1;
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0usize; edges.len()];
        let mut weights = vec![0f64; edges.len()];
        for &(src, dst, w) in edges {
            let at = cursor[src];
            targets[at] = dst;
            weights[at] = w;
            cursor[src] += 1;
        }
        Ok(Graph {
            node_count,
            offsets,
            targets,
            weights,
            min_max: OnceLock::new(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    /// Out-edges of `v` as (target, weight) pairs.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        range.map(move |i| (self.targets[i], self.weights[i]))
    }

    /// All edges as (source, target, weight) triples, in adjacency order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.node_count).flat_map(move |v| self.out_edges(v).map(move |(u, w)| (v, u, w)))
    }

    fn cached_min_max(&self) -> Option<(f64, f64)> {
        *self.min_max.get_or_init(|| {
            let mut it = self.weights.iter();
            let first = *it.next()?;
            let mut lo = first;
            let mut hi = first;
            for &w in it {
                if w < lo {
                    lo = w;
                }
                if w > hi {
                    hi = w;
                }
            }
            Some((lo, hi))
        })
    }

    /// Minimum and maximum edge weight, one O(m) scan, cached afterwards.
    pub fn min_max_edge_weight(&self) -> Result<(f64, f64), GraphError> {
        self.cached_min_max().ok_or(GraphError::EmptyEdgeSet)
    }

    /// Minimum edge weight, if the graph has any edges.
    pub fn min_weight(&self) -> Option<f64> {
        self.cached_min_max().map(|(lo, _)| lo)
    }

    /// Maximum edge weight, if the graph has any edges.
    pub fn max_weight(&self) -> Option<f64> {
        self.cached_min_max().map(|(_, hi)| hi)
    }

    /// A graph with no edges classifies as `PositiveWeights` vacuously.
    pub fn classify(&self) -> ProblemVariant {
        match self.cached_min_max() {
            Some((lo, _)) if lo <= 0.0 => ProblemVariant::NonNegativeWeights,
            _ => ProblemVariant::PositiveWeights,
        }
    }

    pub fn has_zero_edge(&self) -> bool {
        matches!(self.cached_min_max(), Some((lo, _)) if lo == 0.0)
    }

    /// Parse the DIMACS `.gr` shortest-path format, extended so that arc
    /// weights may be decimal float literals. Node ids are shifted to
    /// 0-based on load.
    pub fn load_dimacs(path: &Path) -> Result<Self, GraphError> {
        let text = fs::read_to_string(path)?;
        Self::parse_dimacs(&text)
    }

    pub fn parse_dimacs(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize, f64)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            let malformed = |msg: &str| GraphError::MalformedLine {
                line: lineno,
                msg: msg.to_string(),
            };
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("p ") {
                if header.is_some() {
                    return Err(malformed("duplicate problem line"));
                }
                let mut parts = rest.split_whitespace();
                if parts.next() != Some("sp") {
                    return Err(malformed("expected `p sp <n> <m>`"));
                }
                let n = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| malformed("bad node count"))?;
                let m = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| malformed("bad arc count"))?;
                if parts.next().is_some() {
                    return Err(malformed("trailing tokens on problem line"));
                }
                header = Some((n, m));
            } else if let Some(rest) = line.strip_prefix("a ") {
                let (n, _) = header.ok_or_else(|| malformed("arc before problem line"))?;
                let mut parts = rest.split_whitespace();
                let src = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| malformed("bad source id"))?;
                let dst = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| malformed("bad target id"))?;
                let w = parts
                    .next()
                    .and_then(|s| s.parse::<f64>().ok())
                    .ok_or_else(|| malformed("bad weight"))?;
                if parts.next().is_some() {
                    return Err(malformed("trailing tokens on arc line"));
                }
                if src == 0 || src > n || dst == 0 || dst > n {
                    return Err(malformed("node id out of declared range"));
                }
                if w.is_nan() || w.is_infinite() {
                    return Err(GraphError::NonFiniteWeight { weight: w });
                }
                if w < 0.0 {
                    return Err(GraphError::NegativeWeight { weight: w });
                }
                edges.push((src - 1, dst - 1, w));
            } else {
                return Err(malformed("unrecognized line"));
            }
        }
        let (n, m) = header.ok_or(GraphError::MalformedLine {
            line: 0,
            msg: "missing problem line".to_string(),
        })?;
        if edges.len() != m {
            return Err(GraphError::CountMismatch {
                declared: m,
                actual: edges.len(),
            });
        }
        Self::new(n, &edges)
    }

    /// Serialize as DIMACS `.gr` with 1-based ids. Weights are written with
    /// 17 significant digits so a load/store cycle preserves them bit-exactly.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p sp {} {}", self.node_count, self.edge_count());
        for (src, dst, w) in self.edges() {
            let _ = writeln!(out, "a {} {} {:.16e}", src + 1, dst + 1, w);
        }
        out
    }

    pub fn write_dimacs(&self, path: &Path) -> Result<(), GraphError> {
        fs::write(path, self.to_dimacs())?;
        Ok(())
    }
}

/// Deterministic random instance: `m` directed edges with endpoints uniform
/// over nodes and weights uniform in `[min_w, max_w]`. One edge is pinned to
/// exactly `min_w` so a min-weight scan recovers the intended bound.
pub fn generate_random(
    n: usize,
    m: usize,
    min_w: f64,
    max_w: f64,
    seed: u64,
) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParams("need at least one node".into()));
    }
    if !(min_w > 0.0) || !(min_w <= max_w) || !max_w.is_finite() {
        return Err(GraphError::InvalidBounds {
            min: min_w,
            max: max_w,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let src = rng.gen_range(0..n);
        let dst = rng.gen_range(0..n);
        let w = rng.gen_range(min_w..=max_w);
        edges.push((src, dst, w));
    }
    if let Some(first) = edges.first_mut() {
        first.2 = min_w;
    }
    Graph::new(n, &edges)
}

/// Parameters for the zero-edge ladder: one hub fanning out over solid edges
/// whose weights all lie within `epsilon` of each other, plus zero-length
/// edges between every pair of rim nodes (low index to high).
#[derive(Debug, Clone, Copy)]
pub struct LadderParams {
    pub n: usize,
    pub epsilon: f64,
    pub base: f64,
}

impl LadderParams {
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.n < 3 {
            return Err(GraphError::InvalidParams(format!(
                "need at least 3 nodes, got {}",
                self.n
            )));
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return Err(GraphError::InvalidParams(format!(
                "epsilon must be positive and finite, got {}",
                self.epsilon
            )));
        }
        if !(self.base > 0.0) || !self.base.is_finite() {
            return Err(GraphError::InvalidParams(format!(
                "base must be positive and finite, got {}",
                self.base
            )));
        }
        Ok(())
    }
}

/// Build the ladder counterexample graph. Node 0 is the source; node `i-1`
/// carries the i-th solid edge weight `base + (i-2)*epsilon/(n-1)`, which is
/// strictly increasing with total span below `epsilon`. Every shortest
/// distance on the rim equals `base` because of the zero edges.
pub fn build_ladder(p: LadderParams) -> Result<Graph, GraphError> {
    p.validate()?;
    let n = p.n;
    let step = p.epsilon / (n as f64 - 1.0);
    let mut edges = Vec::new();
    for i in 2..=n {
        let w = p.base + (i as f64 - 2.0) * step;
        edges.push((0, i - 1, w));
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            edges.push((i - 1, j - 1, 0.0));
        }
    }
    Graph::new(n, &edges)
}
