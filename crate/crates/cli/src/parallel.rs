//! Parallel exact search over the fixed task split of a [`SearchPlan`].

use extremal_core::search::TaskResult;
use extremal_core::{ExtremalReport, SearchError, SearchPlan};
use rayon::prelude::*;

/// Runs every task of `plan` on `jobs` threads and merges the results.
///
/// The merge is commutative and associative, so the report does not depend
/// on `jobs` or on scheduling.
pub fn run_plan(plan: &SearchPlan, jobs: usize) -> Result<ExtremalReport, SearchError> {
    let tasks = plan.task_count();
    let merged = if jobs <= 1 {
        (0..tasks).map(|t| plan.run_task(t)).fold(TaskResult::default(), TaskResult::merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..tasks)
                .into_par_iter()
                .map(|t| plan.run_task(t))
                .reduce(TaskResult::default, TaskResult::merge)
        })
    };
    plan.finish(merged)
}
