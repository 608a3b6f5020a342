use alloc::vec;
use alloc::vec::Vec;

use crate::partition::DegreeSplit;
use crate::{Error, Graph, Partition, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CommunityStats {
    pub community: usize,
    pub size: usize,
    pub internal_edge_count: usize,
    /// ρ_Ck, the mean external-link ratio of the members.
    pub interconnection_density: f64,
}

/// Interconnection density of community `k`: the mean, over its members, of
/// `k_inter / (k_inter + k_intra)`. Isolated members contribute 0.
pub fn interconnection_density(g: &Graph, p: &Partition, k: usize) -> Result<f64> {
    p.check_covers(g)?;
    if k >= p.community_count() || p.size(k) == 0 {
        return Err(Error::EmptyCommunity(k));
    }
    let split = DegreeSplit::new(g, p)?;
    Ok(density_of(p.members(k), &split))
}

/// [`interconnection_density`] for every community at once.
pub fn interconnection_densities(g: &Graph, p: &Partition) -> Result<Vec<f64>> {
    let split = DegreeSplit::new(g, p)?;
    Ok(p.communities().map(|members| density_of(members, &split)).collect())
}

pub(crate) fn density_of(members: &[usize], split: &DegreeSplit) -> f64 {
    let ratio_sum: f64 = members
        .iter()
        .map(|&i| match split.degree(i) {
            0 => 0.0,
            k => split.inter[i] as f64 / k as f64,
        })
        .sum();
    ratio_sum / members.len() as f64
}

pub fn community_stats(g: &Graph, p: &Partition) -> Result<Vec<CommunityStats>> {
    let split = DegreeSplit::new(g, p)?;
    let mut internal = vec![0usize; p.community_count()];
    for (u, v) in g.edges() {
        if p.community_of(u) == p.community_of(v) {
            internal[p.community_of(u)] += 1;
        }
    }
    Ok(p
        .communities()
        .enumerate()
        .map(|(k, members)| CommunityStats {
            community: k,
            size: members.len(),
            internal_edge_count: internal[k],
            interconnection_density: density_of(members, &split),
        })
        .collect())
}

/// How the mixing parameter μ̂ of a partitioned graph is aggregated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MixingEstimator {
    /// `Σ_i k_inter(i) / Σ_i k(i)`: the fraction of edge endpoints whose edge
    /// leaves the community.
    #[default]
    EdgeFraction,
    /// Mean over non-isolated nodes of `k_inter(i) / k(i)`.
    NodeMean,
}

pub fn estimate_mixing(g: &Graph, p: &Partition) -> Result<f64> {
    estimate_mixing_with(g, p, MixingEstimator::EdgeFraction)
}

pub fn estimate_mixing_with(g: &Graph, p: &Partition, estimator: MixingEstimator) -> Result<f64> {
    let split = DegreeSplit::new(g, p)?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(match estimator {
        MixingEstimator::EdgeFraction => {
            let inter: usize = split.inter.iter().sum();
            inter as f64 / (2 * g.edge_count()) as f64
        }
        MixingEstimator::NodeMean => {
            let (sum, count) = (0..g.node_count())
                .filter(|&i| split.degree(i) > 0)
                .map(|i| split.inter[i] as f64 / split.degree(i) as f64)
                .fold((0.0, 0usize), |(s, c), r| (s + r, c + 1));
            sum / count as f64
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, toy};

    #[test]
    fn fixture_density() {
        let (g, p) = fixtures::two_triangles();
        let rho = interconnection_density(&g, &p, 0).unwrap();
        assert!((rho - 1.0 / 9.0).abs() < 1e-15);
        assert_eq!(interconnection_densities(&g, &p).unwrap(), vec![rho, rho]);
    }

    #[test]
    fn closed_community_has_zero_density() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let p = Partition::from_assignment(&[0, 0, 0, 1, 1]);
        assert_eq!(interconnection_density(&g, &p, 0).unwrap(), 0.0);
    }

    #[test]
    fn isolated_members_contribute_zero() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let p = Partition::from_assignment(&[0, 1, 0]);
        assert_eq!(interconnection_density(&g, &p, 0).unwrap(), 0.5);
    }

    #[test]
    fn missing_community_is_an_error() {
        let (g, p) = fixtures::two_triangles();
        assert_eq!(interconnection_density(&g, &p, 2), Err(Error::EmptyCommunity(2)));
    }

    #[test]
    fn toy_network_density_of_largest_community() {
        let (g, p) = fixtures::toy_network();
        let c1 = p.community_of(toy(1));
        let rho = interconnection_density(&g, &p, c1).unwrap();
        assert!((rho - 1.225 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn fixture_mixing() {
        let (g, p) = fixtures::two_triangles();
        assert_eq!(estimate_mixing(&g, &p).unwrap(), 2.0 / 14.0);
        assert_eq!(estimate_mixing(&g, &Partition::whole(6)).unwrap(), 0.0);
        // NodeMean: only c and d have an external link, 1/3 each, over 6 nodes.
        let node_mean = estimate_mixing_with(&g, &p, MixingEstimator::NodeMean).unwrap();
        assert!((node_mean - 2.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn singleton_partition_mixing_is_one() {
        let (g, _) = fixtures::two_cliques(4);
        assert_eq!(estimate_mixing(&g, &Partition::singletons(8)).unwrap(), 1.0);
    }

    #[test]
    fn mixing_needs_edges() {
        assert_eq!(estimate_mixing(&Graph::empty(2), &Partition::whole(2)), Err(Error::NoEdges));
    }

    #[test]
    fn stats() {
        let (g, p) = fixtures::two_triangles();
        let stats = community_stats(&g, &p).unwrap();
        assert_eq!(stats.len(), 2);
        assert_eq!(stats[1].size, 3);
        assert_eq!(stats[1].internal_edge_count, 3);
    }
}
