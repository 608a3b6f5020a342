//! The community-aware measures.
//!
//! For a node `i` in community `C_k`, with `k_intra`/`k_inter` its neighbors
//! inside/outside `C_k`:
//!
//! * number of neighboring communities `β1(i)`: distinct foreign communities
//!   holding at least one neighbor of `i`;
//! * community hub-bridge `β2(i) = h_i + b_i` with hub term
//!   `h_i = |C_k|·k_intra` and bridge term `b_i = β1(i)·k_inter`;
//! * weighted community hub-bridge `β3(i) = ρ_k·h_i + (1 − ρ_k)·b_i`, where
//!   `ρ_k` is the interconnection density of `C_k`;
//! * Comm `= k_intra + k_inter²`.
//!
//! Per-node functions answer single queries; the `*_scores` functions compute
//! every node in one `O(N + E)` pass.

use alloc::vec;
use alloc::vec::Vec;

use super::ScoreMap;
use crate::community::interconnection_densities;
use crate::partition::DegreeSplit;
use crate::{Graph, Partition, Result};

pub fn neighboring_communities(g: &Graph, p: &Partition, node: usize) -> Result<usize> {
    p.check_covers(g)?;
    g.check(node)?;
    let own = p.community_of(node);
    let mut seen: Vec<usize> = g
        .neighbors(node)
        .iter()
        .map(|&j| p.community_of(j))
        .filter(|&c| c != own)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    Ok(seen.len())
}

pub fn neighboring_community_counts(g: &Graph, p: &Partition) -> Result<Vec<usize>> {
    p.check_covers(g)?;
    // stamp[c] == i + 1 once community c has been counted for node i
    let mut stamp = vec![0usize; p.community_count()];
    Ok((0..g.node_count())
        .map(|i| {
            let own = p.community_of(i);
            let mut count = 0;
            for &j in g.neighbors(i) {
                let c = p.community_of(j);
                if c != own && stamp[c] != i + 1 {
                    stamp[c] = i + 1;
                    count += 1;
                }
            }
            count
        })
        .collect())
}

struct Terms {
    hub: Vec<f64>,
    bridge: Vec<f64>,
}

fn terms(g: &Graph, p: &Partition) -> Result<Terms> {
    let split = DegreeSplit::new(g, p)?;
    let nnc = neighboring_community_counts(g, p)?;
    let hub = (0..g.node_count())
        .map(|i| (p.size(p.community_of(i)) * split.intra[i]) as f64)
        .collect();
    let bridge = (0..g.node_count()).map(|i| (nnc[i] * split.inter[i]) as f64).collect();
    Ok(Terms { hub, bridge })
}

pub fn community_hub_bridge(g: &Graph, p: &Partition, node: usize) -> Result<f64> {
    g.check(node)?;
    community_hub_bridge_scores(g, p).map(|s| s.get(node))
}

pub fn community_hub_bridge_scores(g: &Graph, p: &Partition) -> Result<ScoreMap> {
    let t = terms(g, p)?;
    Ok(ScoreMap::new("chb", t.hub.iter().zip(&t.bridge).map(|(h, b)| h + b).collect()))
}

pub fn weighted_community_hub_bridge(g: &Graph, p: &Partition, node: usize) -> Result<f64> {
    g.check(node)?;
    weighted_community_hub_bridge_scores(g, p).map(|s| s.get(node))
}

pub fn weighted_community_hub_bridge_scores(g: &Graph, p: &Partition) -> Result<ScoreMap> {
    let t = terms(g, p)?;
    let rho = interconnection_densities(g, p)?;
    let scores = (0..g.node_count())
        .map(|i| {
            let r = rho[p.community_of(i)];
            r * t.hub[i] + (1.0 - r) * t.bridge[i]
        })
        .collect();
    Ok(ScoreMap::new("wchb", scores))
}

pub fn comm_measure(g: &Graph, p: &Partition, node: usize) -> Result<f64> {
    g.check(node)?;
    comm_scores(g, p).map(|s| s.get(node))
}

pub fn comm_scores(g: &Graph, p: &Partition) -> Result<ScoreMap> {
    let split = DegreeSplit::new(g, p)?;
    let scores = split
        .intra
        .iter()
        .zip(&split.inter)
        .map(|(&intra, &inter)| (intra + inter * inter) as f64)
        .collect();
    Ok(ScoreMap::new("comm", scores))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, toy, A, C};

    #[test]
    fn fixture_values() {
        let (g, p) = fixtures::two_triangles();
        assert_eq!(neighboring_communities(&g, &p, C).unwrap(), 1);
        assert_eq!(neighboring_communities(&g, &p, A).unwrap(), 0);
        assert_eq!(community_hub_bridge(&g, &p, C).unwrap(), 7.0);
        let wchb = weighted_community_hub_bridge(&g, &p, C).unwrap();
        assert!((wchb - 14.0 / 9.0).abs() < 1e-12);
        assert_eq!(comm_measure(&g, &p, C).unwrap(), 3.0);
    }

    #[test]
    fn chb_without_external_links_is_the_hub_term() {
        let (g, p) = fixtures::two_triangles();
        // a: community size 3, intra-degree 2
        assert_eq!(community_hub_bridge(&g, &p, A).unwrap(), 6.0);
        let g = Graph::empty(3);
        assert_eq!(community_hub_bridge(&g, &Partition::whole(3), 1).unwrap(), 0.0);
    }

    #[test]
    fn closed_community_weighting_collapses_to_bridge_term() {
        // Community {0,1,2} has no external link, so ρ = 0 and β3 = b = 0;
        // community {3} has ρ = 1 and β3 = h = 1·0 = 0 for its isolated member.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let p = Partition::from_assignment(&[0, 0, 0, 1]);
        let w = weighted_community_hub_bridge_scores(&g, &p).unwrap();
        assert_eq!(w.scores, [0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn fully_external_community_collapses_to_hub_term() {
        // Star center alone in its community: ρ = 1, so β3 = h = 1·0.
        // Leaves in one community of size 4 with k_intra = 0: ρ = 1, β3 = 0.
        // Compare with β2, which keeps the bridge term.
        let g = fixtures::star(4);
        let p = Partition::from_assignment(&[0, 1, 1, 1, 1]);
        let w = weighted_community_hub_bridge_scores(&g, &p).unwrap();
        assert!(w.scores.iter().all(|&s| s == 0.0));
        let chb = community_hub_bridge_scores(&g, &p).unwrap();
        assert_eq!(chb.get(0), 4.0);
    }

    #[test]
    fn comm_examples() {
        let g = fixtures::star(3);
        let p = Partition::from_assignment(&[0, 1, 2, 3]);
        assert_eq!(comm_measure(&g, &p, 0).unwrap(), 9.0);
        let (g, p) = fixtures::two_triangles();
        assert_eq!(comm_measure(&g, &p, A).unwrap(), 2.0);
    }

    #[test]
    fn single_community_reductions() {
        let (g, _) = fixtures::two_cliques(4);
        let p = Partition::whole(8);
        assert!(neighboring_community_counts(&g, &p).unwrap().iter().all(|&c| c == 0));
        let chb = community_hub_bridge_scores(&g, &p).unwrap();
        let comm = comm_scores(&g, &p).unwrap();
        for i in 0..8 {
            let d = g.neighbors(i).len() as f64;
            assert_eq!(chb.get(i), 8.0 * d);
            assert_eq!(comm.get(i), d);
        }
    }

    #[test]
    fn toy_network_textual_facts() {
        let (g, p) = fixtures::toy_network();
        assert_eq!(neighboring_communities(&g, &p, toy(5)).unwrap(), 3);
        assert_eq!(neighboring_communities(&g, &p, toy(10)).unwrap(), 1);
        assert_eq!(neighboring_communities(&g, &p, toy(12)).unwrap(), 1);
        let chb = community_hub_bridge_scores(&g, &p).unwrap();
        assert!(chb.get(toy(6)) > chb.get(toy(16)));
        assert!(chb.get(toy(10)) > chb.get(toy(12)));
        // every C1 bridge outranks every other C1 member under β3
        let wchb = weighted_community_hub_bridge_scores(&g, &p).unwrap();
        let weakest_bridge = [2, 4, 5].iter().map(|&n| wchb.get(toy(n))).fold(f64::MAX, f64::min);
        for n in [1, 3, 6, 7, 8] {
            assert!(wchb.get(toy(n)) < weakest_bridge, "n{n}");
        }
    }
}
