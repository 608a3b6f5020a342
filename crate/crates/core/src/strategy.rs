//! The immunization strategies behind one name-addressable interface.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::centrality::{self, rank, ScoreMap, TieRule};
use crate::walks::{self, StallPolicy};
use crate::{rng, Error, Graph, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    /// Number of neighboring communities.
    Nnc,
    /// Community hub-bridge.
    Chb,
    /// Weighted community hub-bridge.
    Wchb,
    Degree,
    Betweenness,
    Comm,
    Acquaintance,
    Cbf,
    Bhd,
}

impl Strategy {
    pub const ALL: [Strategy; 9] = [
        Strategy::Nnc,
        Strategy::Chb,
        Strategy::Wchb,
        Strategy::Degree,
        Strategy::Betweenness,
        Strategy::Comm,
        Strategy::Acquaintance,
        Strategy::Cbf,
        Strategy::Bhd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Nnc => "nnc",
            Strategy::Chb => "chb",
            Strategy::Wchb => "wchb",
            Strategy::Degree => "degree",
            Strategy::Betweenness => "betweenness",
            Strategy::Comm => "comm",
            Strategy::Acquaintance => "acquaintance",
            Strategy::Cbf => "cbf",
            Strategy::Bhd => "bhd",
        }
    }

    /// Random-walk strategies; they need a seed.
    pub fn is_stochastic(self) -> bool {
        matches!(self, Strategy::Acquaintance | Strategy::Cbf | Strategy::Bhd)
    }

    pub fn needs_partition(self) -> bool {
        matches!(self, Strategy::Nnc | Strategy::Chb | Strategy::Wchb | Strategy::Comm)
    }

    /// Scores of a deterministic strategy; `None` for the stochastic ones.
    pub fn scores(self, g: &Graph, p: &Partition) -> Option<Result<ScoreMap>> {
        let as_scores = |name: &str, counts: Vec<usize>| {
            ScoreMap::new(name, counts.into_iter().map(|c| c as f64).collect())
        };
        Some(match self {
            Strategy::Nnc => centrality::neighboring_community_counts(g, p).map(|c| as_scores("nnc", c)),
            Strategy::Chb => centrality::community_hub_bridge_scores(g, p),
            Strategy::Wchb => centrality::weighted_community_hub_bridge_scores(g, p),
            Strategy::Comm => centrality::comm_scores(g, p),
            Strategy::Degree => Ok(centrality::degree_centrality(g)),
            Strategy::Betweenness => Ok(centrality::betweenness_centrality(g)),
            Strategy::Acquaintance | Strategy::Cbf | Strategy::Bhd => return None,
        })
    }

    /// The first `count` immunization targets, most important first.
    ///
    /// For a fixed seed the output for a smaller `count` is a prefix of the
    /// output for a larger one, so a whole coverage sweep can be served from
    /// a single call with the largest count.
    pub fn targets(self, g: &Graph, p: &Partition, count: usize, seed: u64, stall: StallPolicy) -> Result<Vec<usize>> {
        if count > g.node_count() {
            return Err(Error::Infeasible(format!("{count} targets requested from {} nodes", g.node_count())));
        }
        let mut rng = rng::seeded(seed);
        match self {
            Strategy::Acquaintance => walks::acquaintance_count(g, count, &mut rng),
            Strategy::Cbf => walks::cbf_count(g, count, &mut rng, stall),
            Strategy::Bhd => walks::bhd_count(g, count, &mut rng, stall),
            _ => {
                let scores = self.scores(g, p).expect("deterministic strategy")?;
                Ok(rank(&scores, TieRule::LowerIndex).top(count).to_vec())
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy `{s}`")))
    }
}

/// Number of nodes immunized at coverage `f`: `⌈f·N⌉`.
///
/// The product is nudged down by 1e-9 before rounding up so that coverages
/// such as 0.1 of 2000 give 200 rather than 201.
pub fn coverage_count(node_count: usize, coverage: f64) -> Result<usize> {
    if !(coverage > 0.0 && coverage <= 1.0) {
        return Err(Error::InvalidParameter(format!("coverage {coverage} outside (0, 1]")));
    }
    let raw = libm::ceil(coverage * node_count as f64 - 1e-9);
    Ok((raw.max(0.0) as usize).min(node_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("pagerank".parse::<Strategy>().is_err());
    }

    #[test]
    fn coverage_counts() {
        assert_eq!(coverage_count(2000, 0.1).unwrap(), 200);
        assert_eq!(coverage_count(2000, 0.3).unwrap(), 600);
        assert_eq!(coverage_count(24, 0.05).unwrap(), 2);
        assert_eq!(coverage_count(10, 1.0).unwrap(), 10);
        assert!(coverage_count(10, 0.0).is_err());
        assert!(coverage_count(10, 1.2).is_err());
        assert!(coverage_count(10, f64::NAN).is_err());
    }

    #[test]
    fn smaller_counts_are_prefixes() {
        let (g, p) = fixtures::toy_network();
        for s in Strategy::ALL {
            let long = s.targets(&g, &p, 10, 4, StallPolicy::RandomNode).unwrap();
            let short = s.targets(&g, &p, 4, 4, StallPolicy::RandomNode).unwrap();
            assert_eq!(&long[..4], &short[..], "{s}");
        }
    }

    #[test]
    fn fixture_chb_order() {
        let (g, p) = fixtures::two_triangles();
        // c and d score 7, the others 6
        let t = Strategy::Chb.targets(&g, &p, 2, 0, StallPolicy::Error).unwrap();
        assert_eq!(t, [fixtures::C, fixtures::D]);
    }
}
