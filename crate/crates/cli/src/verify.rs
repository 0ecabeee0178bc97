//! Randomized batch verification: oracle equivalence, ordering invariants
//! and the Dial scan bound over seeded generated instances.

use clap::Args;

use sssp_core::{
    bellman_ford_oracle, check_delta_po, check_fo, dijkstra_float_via_int, dijkstra_standard,
    distances_agree, generate_random, QueueKind,
};

use crate::{CmdError, EXIT_VERIFY};

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 256)]
    max_n: usize,
    #[arg(long, default_value_t = 2048)]
    max_m: usize,
    /// Comma-separated min/max weight ratios cycled across trials
    #[arg(long, default_value = "1,0.1,0.001")]
    ratios: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct TrialOutcome {
    seed: u64,
    ratio: f64,
    dial_scans: u64,
    radix_scans: u64,
    failures: Vec<String>,
}

fn run_trial(seed: u64, ratio: f64, max_n: usize, max_m: usize) -> TrialOutcome {
    let mut state = seed;
    let n = 1 + (splitmix64(&mut state) as usize) % max_n;
    let m = (splitmix64(&mut state) as usize) % (max_m + 1);
    let cmax = 10.0;
    let delta = cmax * ratio;
    let mut out = TrialOutcome {
        seed,
        ratio,
        dial_scans: 0,
        radix_scans: 0,
        failures: Vec::new(),
    };
    let graph = match generate_random(n, m, delta, cmax, seed) {
        Ok(g) => g,
        Err(e) => {
            out.failures.push(format!("generate: {e}"));
            return out;
        }
    };
    let true_delta = graph.min_weight();
    let oracle = match bellman_ford_oracle(&graph, 0) {
        Ok(r) => r,
        Err(e) => {
            out.failures.push(format!("oracle: {e}"));
            return out;
        }
    };
    for (name, kind) in [
        ("dial", QueueKind::DialViaAdapter),
        ("radix", QueueKind::RadixViaAdapter),
        ("twolevel", QueueKind::TwoLevelViaAdapter { b: 16 }),
    ] {
        let run = match dijkstra_float_via_int(&graph, 0, kind, None) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        for v in 0..graph.node_count() {
            if !distances_agree(run.result.dist[v], oracle.dist[v]) {
                out.failures.push(format!(
                    "{name}: dist[{v}] = {} vs oracle {}",
                    run.result.dist[v], oracle.dist[v]
                ));
                break;
            }
        }
        if let Some(d) = true_delta {
            if !check_delta_po(&run.result.trace, d) {
                out.failures.push(format!("{name}: trace violates the delta partial order"));
            }
        }
        if run.settled_violations != 0 {
            out.failures
                .push(format!("{name}: {} settled-node relaxations", run.settled_violations));
        }
        match kind {
            QueueKind::DialViaAdapter => {
                out.dial_scans = run.queue_stats.bucket_scans;
                let d_max = run
                    .result
                    .dist
                    .iter()
                    .copied()
                    .filter(|d| d.is_finite())
                    .fold(0.0, f64::max);
                let bound = (d_max / run.delta) as u64 + run.queue_stats.extract_mins + 1;
                if run.queue_stats.bucket_scans > bound {
                    out.failures.push(format!(
                        "dial: {} bucket scans exceed the bound {bound}",
                        run.queue_stats.bucket_scans
                    ));
                }
            }
            QueueKind::RadixViaAdapter => out.radix_scans = run.queue_stats.bucket_scans,
            _ => {}
        }
    }
    match dijkstra_standard(&graph, 0) {
        Ok(r) => {
            if !check_fo(&r.trace) {
                out.failures.push("standard: trace is not a full ordering".into());
            }
        }
        Err(e) => out.failures.push(format!("standard: {e}")),
    }
    out
}

fn worker_count() -> usize {
    std::env::var("SSSP_VERIFY_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        })
}

pub fn cmd_verify(args: VerifyArgs) -> Result<(), CmdError> {
    if args.trials == 0 {
        return Err(CmdError::new(2, "trial count must be positive"));
    }
    let ratios: Vec<f64> = args
        .ratios
        .split(',')
        .map(|r| r.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CmdError::new(2, "bad --ratios list"))?;
    if ratios.is_empty() || ratios.iter().any(|&r| !(r > 0.0 && r <= 1.0)) {
        return Err(CmdError::new(2, "ratios must lie in (0, 1]"));
    }
    let workers = worker_count().min(args.trials);
    let mut outcomes: Vec<TrialOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let ratios = &ratios;
                scope.spawn(move || {
                    (w..args.trials)
                        .step_by(workers)
                        .map(|t| {
                            run_trial(
                                args.seed + t as u64,
                                ratios[t % ratios.len()],
                                args.max_n,
                                args.max_m,
                            )
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    outcomes.sort_by_key(|o| o.seed);
    let failed: Vec<&TrialOutcome> = outcomes.iter().filter(|o| !o.failures.is_empty()).collect();
    println!(
        "verify: {} passed, {} failed of {} trials",
        outcomes.len() - failed.len(),
        failed.len(),
        outcomes.len()
    );
    for ratio in &ratios {
        let (mut dial, mut radix, mut count) = (0u64, 0u64, 0u64);
        for o in outcomes.iter().filter(|o| o.ratio == *ratio) {
            dial += o.dial_scans;
            radix += o.radix_scans;
            count += 1;
        }
        if count > 0 {
            println!(
                "  ratio {:>7}: avg bucket scans per trial — dial {:.0}, radix {:.0}",
                ratio,
                dial as f64 / count as f64,
                radix as f64 / count as f64
            );
        }
    }
    for o in failed.iter().take(10) {
        for f in &o.failures {
            println!("  seed {}: {f}", o.seed);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CmdError::new(EXIT_VERIFY, format!("{} trials failed", failed.len())))
    }
}
