//! JSON / CSV report schema for solver runs.

use serde::Serialize;
use sssp_core::{ProblemVariant, QueueStats};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub min_weight: Option<f64>,
    pub max_weight: Option<f64>,
    /// max_weight / min_weight, the live integer key range driver.
    pub weight_ratio: Option<f64>,
    pub variant: ProblemVariant,
}

#[derive(Debug, Serialize)]
pub struct SolverReport {
    pub queue: String,
    /// Monotonic-clock wall time. Informational only; never part of any
    /// pass/fail decision.
    pub wall_time_ns: u128,
    pub delta: Option<f64>,
    pub queue_stats: Option<QueueStats>,
    pub fo: bool,
    pub delta_po: Option<bool>,
    pub oracle_max_rel_error: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub format_version: u32,
    pub graph: GraphSummary,
    pub source: usize,
    pub solvers: Vec<SolverReport>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.solvers.iter().all(|s| s.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Flat per-solver stats table.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "queue,inserts,decrease_keys,extract_mins,bucket_scans,wall_time_ns,oracle_max_rel_error,pass\n",
        );
        for s in &self.solvers {
            let stats = s.queue_stats.unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{:e},{}\n",
                s.queue,
                stats.inserts,
                stats.decrease_keys,
                stats.extract_mins,
                stats.bucket_scans,
                s.wall_time_ns,
                s.oracle_max_rel_error,
                s.pass
            ));
        }
        out
    }
}
