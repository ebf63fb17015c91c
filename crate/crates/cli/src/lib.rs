//! Batch driver for the `taft-core` checks: the `taftcheck` binary is a thin
//! wrapper around [`run`] and [`table::emit_identity_table`].
//!
//! Reports come out in a fixed order (`n`, then root exponent, then suite,
//! then case generation order) regardless of `--jobs`, and only
//! `summary.elapsed_ms` varies between identical runs.

pub mod config;
pub mod report;
pub mod suites;
pub mod table;

use std::time::Instant;

use rayon::prelude::*;
use taft_core::cyclotomic::primitive_exponents;
use taft_core::CycContext;

use config::{NRange, RootPolicy, Suite};
use report::{CaseRecord, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: NRange,
    pub suite: Suite,
    pub roots: RootPolicy,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub reports: Vec<VerificationReport>,
    pub exit_code: i32,
}

pub fn root_exponents(n: usize, policy: RootPolicy) -> Vec<usize> {
    match policy {
        RootPolicy::Canonical => vec![1],
        RootPolicy::All => primitive_exponents(n),
    }
}

/// Runs `f` on a pool of `jobs` threads, or the global pool when `None`.
pub fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Executes every `(n, root, suite)` combination. One report per
/// combination; with `--suite all` the five suites are separate reports.
pub fn run(config: &RunConfig) -> RunOutcome {
    struct Slot {
        n: usize,
        t: usize,
        suite: Suite,
    }
    let mut slots = Vec::new();
    let mut tasks = Vec::new();
    for n in config.n.iter() {
        for t in root_exponents(n, config.roots) {
            for suite in config.suite.parts() {
                for check in suites::checks(suite, n) {
                    tasks.push((slots.len(), n, t, check));
                }
                slots.push(Slot { n, t, suite });
            }
        }
    }

    let results: Vec<(usize, Vec<CaseRecord>, u64)> = with_pool(config.jobs, || {
        tasks
            .par_iter()
            .map(|&(slot, n, t, check)| {
                let start = Instant::now();
                let ctx = CycContext::with_root(n, t).expect("validated order and exponent");
                let cases = (check.run)(&ctx).into_iter().map(CaseRecord::from).collect();
                (slot, cases, start.elapsed().as_millis() as u64)
            })
            .collect()
    });

    let mut grouped: Vec<(Vec<CaseRecord>, u64)> = slots.iter().map(|_| (Vec::new(), 0)).collect();
    for (slot, cases, ms) in results {
        grouped[slot].0.extend(cases);
        grouped[slot].1 += ms;
    }
    let reports: Vec<VerificationReport> = slots
        .iter()
        .zip(grouped)
        .map(|(s, (cases, ms))| VerificationReport::new(s.n, s.t, s.suite.name(), cases, ms))
        .collect();
    let exit_code = if reports.iter().all(VerificationReport::all_pass) { EXIT_OK } else { EXIT_FAILURE };
    RunOutcome { reports, exit_code }
}
