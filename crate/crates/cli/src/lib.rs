//! Driver library behind the `qk-eigenlab` binary: config handling, the
//! suite registry, a deterministic parallel runner and report writers.

pub mod config;
pub mod output;
pub mod suites;

use rayon::prelude::*;

use qk_eigenlab_core::Report;

pub use config::{ConfigError, Format, Plan, SuiteConfig};

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "QK_EIGENLAB_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Run every job of every requested suite. Jobs run on a worker pool; the
/// merge follows job order, so the result does not depend on scheduling.
pub fn run_plan(plan: &Plan) -> anyhow::Result<Report> {
    let jobs: Vec<suites::Job> = plan
        .suites
        .iter()
        .flat_map(|s| suites::jobs_for(s, plan))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    let parts: Vec<Report> = pool.install(|| jobs.par_iter().map(|job| job()).collect());
    Ok(parts.into_iter().collect())
}
