//! Non-overlapping node → community assignments and the intra/inter degree
//! split every community-aware measure is built on.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{Error, Graph, Result};

/// Every node belongs to exactly one community; communities are non-empty.
///
/// Community indices are canonical: they are numbered `0, 1, ...` in order of
/// first appearance when scanning nodes by index, so two partitions grouping
/// nodes identically compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from arbitrary per-node community labels.
    pub fn from_assignment<T: Ord + Clone>(labels: &[T]) -> Partition {
        let mut ids: BTreeMap<T, usize> = BTreeMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let assignment = labels
            .iter()
            .enumerate()
            .map(|(node, label)| {
                let next = ids.len();
                let k = *ids.entry(label.clone()).or_insert(next);
                if k == members.len() {
                    members.push(Vec::new());
                }
                members[k].push(node);
                k
            })
            .collect();
        Partition { assignment, members }
    }

    /// Every node in its own community.
    pub fn singletons(node_count: usize) -> Partition {
        Partition {
            assignment: (0..node_count).collect(),
            members: (0..node_count).map(|i| vec![i]).collect(),
        }
    }

    /// All nodes in one community.
    pub fn whole(node_count: usize) -> Partition {
        if node_count == 0 {
            return Partition { assignment: Vec::new(), members: Vec::new() };
        }
        Partition {
            assignment: vec![0; node_count],
            members: vec![(0..node_count).collect()],
        }
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_count(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn community_of(&self, node: usize) -> usize {
        self.assignment[node]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn members(&self, community: usize) -> &[usize] {
        &self.members[community]
    }

    pub fn communities(&self) -> impl Iterator<Item = &[usize]> {
        self.members.iter().map(Vec::as_slice)
    }

    /// Card(C_k).
    pub fn size(&self, community: usize) -> usize {
        self.members[community].len()
    }

    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.node_count() == g.node_count() {
            Ok(())
        } else {
            Err(Error::PartitionMismatch { expected: g.node_count(), found: self.node_count() })
        }
    }
}

/// Neighbors of `node` inside its own community.
pub fn intra_degree(g: &Graph, p: &Partition, node: usize) -> Result<usize> {
    p.check_covers(g)?;
    g.check(node)?;
    let own = p.community_of(node);
    Ok(g.neighbors(node).iter().filter(|&&j| p.community_of(j) == own).count())
}

/// Neighbors of `node` outside its own community.
pub fn inter_degree(g: &Graph, p: &Partition, node: usize) -> Result<usize> {
    Ok(g.degree(node)? - intra_degree(g, p, node)?)
}

/// Per-node intra- and inter-community degrees for a whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSplit {
    pub intra: Vec<usize>,
    pub inter: Vec<usize>,
}

impl DegreeSplit {
    pub fn new(g: &Graph, p: &Partition) -> Result<DegreeSplit> {
        p.check_covers(g)?;
        let n = g.node_count();
        let mut intra = vec![0; n];
        let mut inter = vec![0; n];
        for i in 0..n {
            let own = p.community_of(i);
            for &j in g.neighbors(i) {
                if p.community_of(j) == own {
                    intra[i] += 1;
                } else {
                    inter[i] += 1;
                }
            }
        }
        Ok(DegreeSplit { intra, inter })
    }

    pub fn degree(&self, node: usize) -> usize {
        self.intra[node] + self.inter[node]
    }
}

/// Parses `node community` lines against the labels of `g`.
///
/// Blank lines and `#` comments are skipped. Community identifiers are
/// arbitrary tokens; every node of `g` must appear exactly once.
pub fn parse_partition(text: &str, g: &Graph) -> Result<Partition> {
    let index = g.label_index();
    let mut labels: Vec<Option<String>> = vec![None; g.node_count()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (node, community) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(node), Some(community), None) => (node, community),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `node community`, got `{line}`"),
                })
            }
        };
        let &i = index.get(node).ok_or_else(|| Error::UnknownNode(node.into()))?;
        if labels[i].replace(community.into()).is_some() {
            return Err(Error::DuplicateNode(node.into()));
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::MissingNode(g.label(i))))
        .collect::<Result<Vec<String>>>()?;
    Ok(Partition::from_assignment(&labels))
}

/// Serializes a partition as `node community` lines, nodes in index order.
pub fn format_partition(g: &Graph, p: &Partition) -> String {
    let mut out = String::new();
    for i in 0..p.node_count() {
        let _ = writeln!(out, "{} {}", g.label(i), p.community_of(i));
    }
    out
}
