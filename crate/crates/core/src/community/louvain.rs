//! Two-phase Louvain modularity maximization.
//!
//! Phase one moves single nodes to the neighboring community with the best
//! modularity gain; phase two collapses every community into a weighted
//! super-node. The node sweep order of each level is a seeded shuffle, ties
//! between equally good communities go to the lowest community index, and a
//! node only leaves its community for a strictly better one. A level ends when
//! a full sweep gains less than [`SWEEP_TOLERANCE`]; detection ends at the
//! first level where no node moves.

use alloc::vec;
use alloc::vec::Vec;
use rand::seq::SliceRandom;

use crate::{rng, Graph, Partition};

pub const SWEEP_TOLERANCE: f64 = 1e-9;
const TIE_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct LouvainOutcome {
    pub partition: Partition,
    /// Modularity tracked incrementally through the moves.
    pub modularity: f64,
    /// Modularity at the end of each level; never decreases.
    pub level_modularity: Vec<f64>,
}

pub fn louvain(g: &Graph, seed: u64) -> Partition {
    louvain_detailed(g, seed).partition
}

pub fn louvain_detailed(g: &Graph, seed: u64) -> LouvainOutcome {
    let n = g.node_count();
    let mut level = LevelGraph::from_graph(g);
    let mut membership: Vec<usize> = (0..n).collect();
    let mut rng = rng::seeded(seed);
    let mut level_modularity = Vec::new();
    let mut q = level.singleton_modularity();

    if level.two_m == 0.0 {
        return LouvainOutcome { partition: Partition::singletons(n), modularity: 0.0, level_modularity };
    }

    loop {
        let mut order: Vec<usize> = (0..level.len()).collect();
        order.shuffle(&mut rng);
        let (communities, gained, moved) = level.local_moves(&order);
        q += gained;
        if let Some(&last) = level_modularity.last() {
            debug_assert!(q >= last - 1e-12, "modularity decreased across a level");
        }
        level_modularity.push(q);
        if !moved {
            break;
        }
        let (compact, count) = compact_labels(&communities);
        for m in membership.iter_mut() {
            *m = compact[*m];
        }
        level = level.aggregate(&compact, count);
    }

    LouvainOutcome { partition: Partition::from_assignment(&membership), modularity: q, level_modularity }
}

/// Renumbers labels `0..count` by first appearance.
fn compact_labels(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = vec![usize::MAX; labels.len()];
    let mut next = 0;
    let compact = labels
        .iter()
        .map(|&l| {
            if map[l] == usize::MAX {
                map[l] = next;
                next += 1;
            }
            map[l]
        })
        .collect();
    (compact, next)
}

/// Weighted graph of one Louvain level. `self_weight[i]` is `A_ii`, which
/// counts every internal edge of a collapsed community twice, so weighted
/// degrees and the total `2m` are preserved by aggregation.
struct LevelGraph {
    adjacency: Vec<Vec<(usize, f64)>>,
    self_weight: Vec<f64>,
    degree: Vec<f64>,
    two_m: f64,
}

impl LevelGraph {
    fn from_graph(g: &Graph) -> LevelGraph {
        let adjacency: Vec<Vec<(usize, f64)>> = (0..g.node_count())
            .map(|i| g.neighbors(i).iter().map(|&j| (j, 1.0)).collect())
            .collect();
        let degree: Vec<f64> = adjacency.iter().map(|a| a.len() as f64).collect();
        let two_m = degree.iter().sum();
        LevelGraph { self_weight: vec![0.0; adjacency.len()], adjacency, degree, two_m }
    }

    fn len(&self) -> usize {
        self.adjacency.len()
    }

    fn singleton_modularity(&self) -> f64 {
        if self.two_m == 0.0 {
            return 0.0;
        }
        (0..self.len())
            .map(|i| {
                let share = self.degree[i] / self.two_m;
                self.self_weight[i] / self.two_m - share * share
            })
            .sum()
    }

    /// Runs local-move sweeps from singletons. Returns the community labels,
    /// the total modularity gain and whether any node moved.
    fn local_moves(&self, order: &[usize]) -> (Vec<usize>, f64, bool) {
        let n = self.len();
        let m = self.two_m / 2.0;
        let mut community: Vec<usize> = (0..n).collect();
        let mut total: Vec<f64> = self.degree.clone();
        let mut link = vec![0.0f64; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut gained = 0.0;
        let mut moved_any = false;

        loop {
            let mut sweep_gain = 0.0;
            for &i in order {
                let current = community[i];
                let ki = self.degree[i];
                for &(j, w) in &self.adjacency[i] {
                    let c = community[j];
                    if link[c] == 0.0 {
                        touched.push(c);
                    }
                    link[c] += w;
                }
                total[current] -= ki;
                let gain = |c: usize, link: &[f64], total: &[f64]| link[c] - ki * total[c] / self.two_m;

                let stay = gain(current, &link, &total);
                let mut best = current;
                let mut best_gain = stay;
                touched.sort_unstable();
                for &c in &touched {
                    if c != current {
                        let g = gain(c, &link, &total);
                        if g > best_gain + TIE_EPSILON {
                            best = c;
                            best_gain = g;
                        }
                    }
                }
                total[best] += ki;
                community[i] = best;
                if best != current {
                    let delta = (best_gain - stay) / m;
                    sweep_gain += delta;
                    moved_any = true;
                }
                for &c in &touched {
                    link[c] = 0.0;
                }
                touched.clear();
            }
            gained += sweep_gain;
            if sweep_gain < SWEEP_TOLERANCE {
                break;
            }
        }
        (community, gained, moved_any)
    }

    fn aggregate(&self, community: &[usize], count: usize) -> LevelGraph {
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (i, &c) in community.iter().enumerate() {
            members[c].push(i);
        }
        let mut adjacency = Vec::with_capacity(count);
        let mut self_weight = vec![0.0; count];
        let mut degree = vec![0.0; count];
        let mut scratch = vec![0.0f64; count];
        let mut touched: Vec<usize> = Vec::new();
        for (c, nodes) in members.iter().enumerate() {
            for &i in nodes {
                self_weight[c] += self.self_weight[i];
                degree[c] += self.degree[i];
                for &(j, w) in &self.adjacency[i] {
                    let d = community[j];
                    if d == c {
                        self_weight[c] += w;
                    } else {
                        if scratch[d] == 0.0 {
                            touched.push(d);
                        }
                        scratch[d] += w;
                    }
                }
            }
            touched.sort_unstable();
            adjacency.push(touched.iter().map(|&d| (d, scratch[d])).collect());
            for &d in &touched {
                scratch[d] = 0.0;
            }
            touched.clear();
        }
        LevelGraph { adjacency, self_weight, degree, two_m: self.two_m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::community::modularity;
    use crate::fixtures;
    use rand::Rng;

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = rng::seeded(seed);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Best two-block partition by exhaustive enumeration.
    fn best_bipartition(g: &Graph) -> (f64, Partition) {
        let n = g.node_count();
        let mut best = (f64::NEG_INFINITY, Partition::whole(n));
        for mask in 1u32..(1 << (n - 1)) {
            let labels: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
            let p = Partition::from_assignment(&labels);
            let q = modularity(g, &p).unwrap();
            if q > best.0 {
                best = (q, p);
            }
        }
        best
    }

    #[test]
    fn two_five_cliques_are_recovered() {
        let (g, truth) = fixtures::two_cliques(5);
        let (_, best) = best_bipartition(&g);
        assert_eq!(best, truth);
        for seed in 0..10 {
            assert_eq!(louvain(&g, seed), truth, "seed {seed}");
        }
    }

    #[test]
    fn edgeless_graph_gives_singletons() {
        let p = louvain(&Graph::empty(4), 1);
        assert_eq!(p, Partition::singletons(4));
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = random_graph(60, 0.08, 3);
        assert_eq!(louvain(&g, 11), louvain(&g, 11));
    }

    #[test]
    fn incremental_modularity_matches_direct_evaluation() {
        for seed in 0..20 {
            let g = random_graph(40, 0.1, seed);
            if g.edge_count() == 0 {
                continue;
            }
            let out = louvain_detailed(&g, seed);
            let direct = modularity(&g, &out.partition).unwrap();
            assert!((out.modularity - direct).abs() < 1e-9, "seed {seed}");
            assert!(out.level_modularity.windows(2).all(|w| w[1] >= w[0]));
            let singleton = modularity(&g, &Partition::singletons(40)).unwrap();
            assert!(direct >= singleton);
            assert!(direct >= 0.0);
        }
    }

    #[test]
    fn two_triangles() {
        let (g, truth) = fixtures::two_triangles();
        assert_eq!(louvain(&g, 5), truth);
    }
}
