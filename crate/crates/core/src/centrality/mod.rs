//! Node influence scores and the rankings immunization is driven by.

mod classic;
mod measures;
mod ranking;

pub use classic::{
    betweenness_block, betweenness_block_count, betweenness_centrality, degree_centrality,
    BETWEENNESS_BLOCK,
};
pub use measures::{
    comm_measure, comm_scores, community_hub_bridge, community_hub_bridge_scores,
    neighboring_communities, neighboring_community_counts, weighted_community_hub_bridge,
    weighted_community_hub_bridge_scores,
};
pub use ranking::{rank, Ranking, TieRule};

use alloc::string::String;
use alloc::vec::Vec;

/// One strategy's score for every node, indexed by node.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMap {
    pub strategy: String,
    pub scores: Vec<f64>,
}

impl ScoreMap {
    pub fn new(strategy: impl Into<String>, scores: Vec<f64>) -> ScoreMap {
        debug_assert!(scores.iter().all(|s| s.is_finite()));
        ScoreMap { strategy: strategy.into(), scores }
    }

    /// Builds a map from `(node, score)` pairs given in any order. Nodes
    /// that never appear score 0.
    pub fn from_pairs<I>(strategy: impl Into<String>, node_count: usize, pairs: I) -> ScoreMap
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut scores = alloc::vec![0.0; node_count];
        for (node, score) in pairs {
            scores[node] = score;
        }
        ScoreMap::new(strategy, scores)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn get(&self, node: usize) -> f64 {
        self.scores[node]
    }
}
