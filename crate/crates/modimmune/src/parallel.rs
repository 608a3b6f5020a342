//! Multi-threaded ensembles and betweenness whose results do not depend on
//! the number of worker threads.

use modimmune_core::centrality::{betweenness_block, betweenness_block_count, ScoreMap};
use modimmune_core::epidemic::{sir_run_indexed, InitialState, SirConfig, SirOutcome};
use modimmune_core::{Graph, Partition, Result, Strategy};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

/// A pool with `threads` workers; 0 lets rayon pick.
pub fn pool(threads: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} worker threads: {e}")))
}

/// SIR ensemble with runs spread over the current pool. Run `i` always uses
/// stream `i` of the master seed and results are summarized in run order.
pub fn ensemble(g: &Graph, initial: &InitialState, cfg: &SirConfig) -> Result<SirOutcome> {
    cfg.validate()?;
    let runs = (0..cfg.runs)
        .into_par_iter()
        .map(|i| sir_run_indexed(g, initial, cfg, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(SirOutcome::from_runs(&runs))
}

/// Betweenness with source blocks computed in parallel and added in block
/// order, matching the sequential result bit for bit.
pub fn betweenness(g: &Graph) -> ScoreMap {
    let blocks: Vec<Vec<f64>> = (0..betweenness_block_count(g))
        .into_par_iter()
        .map(|b| betweenness_block(g, b))
        .collect();
    let mut total = vec![0.0; g.node_count()];
    for block in blocks {
        for (t, b) in total.iter_mut().zip(block) {
            *t += b;
        }
    }
    for t in &mut total {
        *t /= 2.0;
    }
    ScoreMap::new("betweenness", total)
}

/// Scores of a deterministic strategy, with betweenness in parallel.
pub fn scores(strategy: Strategy, g: &Graph, p: &Partition) -> Option<Result<ScoreMap>> {
    match strategy {
        Strategy::Betweenness => Some(Ok(betweenness(g))),
        other => other.scores(g, p),
    }
}
