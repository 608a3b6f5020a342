//! Immutable undirected simple graphs in compressed adjacency form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Undirected simple graph over dense node indices `0..node_count`.
///
/// Neighbor lists are sorted and free of self-loops and duplicates. An
/// optional label table maps indices back to the identifiers found in the
/// source file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Result of building a graph from raw edges, with what was thrown away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListLoad {
    pub graph: Graph,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

impl EdgeListLoad {
    pub fn dropped(&self) -> usize {
        self.duplicate_edges + self.self_loops
    }
}

impl Graph {
    /// Builds a graph on `node_count` nodes, silently dropping self-loops and
    /// repeated edges. Use [`Graph::build`] to learn how many were dropped.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::build(node_count, edges.iter().copied()).map(|load| load.graph)
    }

    pub fn build<I>(node_count: usize, edges: I) -> Result<EdgeListLoad>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut self_loops = 0;
        let mut halves: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                self_loops += 1;
                continue;
            }
            halves.push((u, v));
            halves.push((v, u));
        }
        halves.sort_unstable();
        let before = halves.len();
        halves.dedup();
        let duplicate_edges = (before - halves.len()) / 2;

        let mut offsets = alloc::vec![0usize; node_count + 1];
        for &(u, _) in &halves {
            offsets[u + 1] += 1;
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let targets = halves.into_iter().map(|(_, v)| v).collect();
        Ok(EdgeListLoad {
            graph: Graph { offsets, targets, labels: None },
            duplicate_edges,
            self_loops,
        })
    }

    /// Graph with `node_count` nodes and no edges.
    pub fn empty(node_count: usize) -> Graph {
        Graph {
            offsets: alloc::vec![0; node_count + 1],
            targets: Vec::new(),
            labels: None,
        }
    }

    /// Attaches an identifier table; `labels[i]` names node `i`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.node_count() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.node_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbors of `node`. Panics when `node` is out of range.
    #[inline]
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.targets[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn degree(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        Ok(self.neighbors(node).len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn check(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, node_count: self.node_count() })
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External identifier of `node`: its label, or the index itself.
    pub fn label(&self, node: usize) -> String {
        match &self.labels {
            Some(labels) => labels[node].clone(),
            None => node.to_string(),
        }
    }

    /// Inverse of [`Graph::label`].
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            // Linear; callers that resolve many labels use `label_index`.
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&i| i < self.node_count()),
        }
    }

    /// Label → index lookup table for bulk resolution.
    pub fn label_index(&self) -> BTreeMap<String, usize> {
        (0..self.node_count()).map(|i| (self.label(i), i)).collect()
    }
}

/// Parses an edge list: one edge per line as two whitespace-separated
/// identifiers, `#` starting a comment line, blank lines ignored.
///
/// Identifiers are mapped to dense indices in sorted order (numeric order
/// when every identifier is an unsigned integer, lexicographic otherwise),
/// so the result does not depend on the order of the lines.
pub fn parse_edge_list(text: &str) -> Result<EdgeListLoad> {
    let mut raw: Vec<(&str, &str)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => raw.push((a, b)),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two node identifiers, got `{line}`"),
                })
            }
        }
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let distinct: BTreeSet<&str> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut labels: Vec<&str> = distinct.into_iter().collect();
    if labels.iter().all(|l| l.parse::<u64>().is_ok()) {
        labels.sort_by_key(|l| l.parse::<u64>().unwrap_or(0));
    }
    let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    let load = Graph::build(labels.len(), raw.iter().map(|(a, b)| (index[a], index[b])))?;
    let graph = load
        .graph
        .with_labels(labels.into_iter().map(String::from).collect())?;
    Ok(EdgeListLoad { graph, ..load })
}
