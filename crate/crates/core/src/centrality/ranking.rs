use alloc::vec::Vec;
use rand::RngCore;

use super::ScoreMap;
use crate::rng;

/// How nodes with equal scores are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieRule {
    /// Lower node index first.
    #[default]
    LowerIndex,
    /// A seeded random permutation decides; used to measure how much an
    /// outcome depends on tie order.
    SeededShuffle(u64),
}

/// Nodes ordered from most to least influential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    pub order: Vec<usize>,
    pub tie_rule: TieRule,
}

impl Ranking {
    /// The first `count` nodes, i.e. the immunization targets.
    pub fn top(&self, count: usize) -> &[usize] {
        &self.order[..count.min(self.order.len())]
    }

    /// 1-based position of every node.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = alloc::vec![0; self.order.len()];
        for (r, &node) in self.order.iter().enumerate() {
            pos[node] = r + 1;
        }
        pos
    }
}

pub fn rank(scores: &ScoreMap, tie_rule: TieRule) -> Ranking {
    let n = scores.len();
    let keys: Vec<u64> = match tie_rule {
        TieRule::LowerIndex => (0..n as u64).collect(),
        TieRule::SeededShuffle(seed) => {
            let mut rng = rng::seeded(seed);
            (0..n).map(|_| rng.next_u64()).collect()
        }
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        scores.scores[b]
            .total_cmp(&scores.scores[a])
            .then(keys[a].cmp(&keys[b]))
            .then(a.cmp(&b))
    });
    Ranking { order, tie_rule }
}
