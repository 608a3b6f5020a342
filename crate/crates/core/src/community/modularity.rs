use alloc::vec;

use crate::{Error, Graph, Partition, Result};

/// Newman–Girvan modularity `Σ_c [e_c/E − (d_c/2E)²]`, where `e_c` counts
/// edges inside community `c` and `d_c` sums its members' degrees.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    p.check_covers(g)?;
    let edges = g.edge_count();
    if edges == 0 {
        return Err(Error::NoEdges);
    }
    let mut internal = vec![0usize; p.community_count()];
    let mut degree_sum = vec![0usize; p.community_count()];
    for i in 0..g.node_count() {
        let c = p.community_of(i);
        degree_sum[c] += g.neighbors(i).len();
        internal[c] += g.neighbors(i).iter().filter(|&&j| j > i && p.community_of(j) == c).count();
    }
    let e = edges as f64;
    Ok(internal
        .iter()
        .zip(&degree_sum)
        .map(|(&ec, &dc)| {
            let share = dc as f64 / (2.0 * e);
            ec as f64 / e - share * share
        })
        .sum())
}
