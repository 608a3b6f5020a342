//! Community-agnostic baselines: degree and shortest-path betweenness.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::ScoreMap;
use crate::Graph;

pub fn degree_centrality(g: &Graph) -> ScoreMap {
    ScoreMap::new("degree", g.degrees().into_iter().map(|d| d as f64).collect())
}

/// Sources per accumulation block. Blocks are summed in index order, so the
/// result is bit-identical however the blocks are scheduled.
pub const BETWEENNESS_BLOCK: usize = 64;

pub fn betweenness_block_count(g: &Graph) -> usize {
    g.node_count().div_ceil(BETWEENNESS_BLOCK)
}

/// Brandes dependency accumulation over the sources of one block, summed
/// over ordered (source, target) pairs.
pub fn betweenness_block(g: &Graph, block: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut acc = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut stack = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    let start = block * BETWEENNESS_BLOCK;
    for s in start..(start + BETWEENNESS_BLOCK).min(n) {
        sigma.fill(0.0);
        dist.fill(usize::MAX);
        delta.fill(0.0);
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        // Predecessors of w are exactly its neighbors one level closer.
        while let Some(w) = stack.pop() {
            for &v in g.neighbors(w) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                acc[w] += delta[w];
            }
        }
    }
    acc
}

/// Unnormalized betweenness over unordered node pairs, endpoints excluded;
/// disconnected pairs contribute nothing.
pub fn betweenness_centrality(g: &Graph) -> ScoreMap {
    let mut total = vec![0.0; g.node_count()];
    for block in 0..betweenness_block_count(g) {
        for (t, b) in total.iter_mut().zip(betweenness_block(g, block)) {
            *t += b;
        }
    }
    for t in &mut total {
        *t /= 2.0;
    }
    ScoreMap::new("betweenness", total)
}
