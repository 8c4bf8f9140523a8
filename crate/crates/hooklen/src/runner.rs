use std::time::Instant;

use hooklen_core::verify::{run_check, CheckParams, CheckReport};
use hooklen_core::Error;
use rayon::prelude::*;

/// A report with its wall-clock time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimedReport {
    pub report: CheckReport,
    pub elapsed_ms: u64,
}

pub fn run_timed(id: &str, params: &CheckParams) -> Result<TimedReport, Error> {
    let start = Instant::now();
    let report = run_check(id, params)?;
    Ok(TimedReport {
        report,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs the jobs on `threads` workers (all cores when `None`). Results come
/// back in job order.
pub fn run_jobs(jobs: &[(String, CheckParams)], threads: Option<usize>) -> Vec<Result<TimedReport, Error>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| jobs.par_iter().map(|(id, p)| run_timed(id, p)).collect())
}
