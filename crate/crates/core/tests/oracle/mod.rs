//! Brute-force reference implementations working on an adjacency matrix.
//! They share no code with the library beyond building the input graph.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use modimmune_core::{rng, Graph, Partition};
use num_rational::Ratio;
use rand::Rng;

pub type Q = Ratio<i64>;

pub struct Instance {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub label: Vec<usize>,
}

impl Instance {
    /// Random graph with `n ≤ max_n` nodes, edge probability in [0.1, 0.5],
    /// and a random partition into 1..=8 labels.
    pub fn random(seed: u64, max_n: usize) -> Instance {
        let mut r = rng::seeded(seed);
        let n = r.gen_range(2..=max_n);
        let p = r.gen_range(0.1..=0.5);
        let communities = r.gen_range(1..=8);
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                if r.gen_bool(p) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
        }
        let label = (0..n).map(|_| r.gen_range(0..communities)).collect();
        Instance { n, adj, label }
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adj[i][j] {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, &edges).unwrap()
    }

    pub fn partition(&self) -> Partition {
        Partition::from_assignment(&self.label)
    }

    fn a(&self, i: usize, j: usize) -> i64 {
        i64::from(self.adj[i][j])
    }

    fn labels(&self) -> BTreeSet<usize> {
        self.label.iter().copied().collect()
    }

    fn card(&self, i: usize) -> i64 {
        self.label.iter().filter(|&&l| l == self.label[i]).count() as i64
    }

    pub fn degree(&self, i: usize) -> i64 {
        (0..self.n).map(|j| self.a(i, j)).sum()
    }

    pub fn k_intra(&self, i: usize) -> i64 {
        (0..self.n).filter(|&j| self.label[j] == self.label[i]).map(|j| self.a(i, j)).sum()
    }

    pub fn k_inter(&self, i: usize) -> i64 {
        (0..self.n).filter(|&j| self.label[j] != self.label[i]).map(|j| self.a(i, j)).sum()
    }

    /// Sum over foreign communities of the disjunction of `a_ij`.
    pub fn beta1(&self, i: usize) -> i64 {
        self.labels()
            .into_iter()
            .filter(|&l| l != self.label[i])
            .map(|l| i64::from((0..self.n).filter(|&j| self.label[j] == l).any(|j| self.adj[i][j])))
            .sum()
    }

    pub fn hub(&self, i: usize) -> i64 {
        self.card(i) * self.k_intra(i)
    }

    pub fn bridge(&self, i: usize) -> i64 {
        self.beta1(i) * self.k_inter(i)
    }

    pub fn beta2(&self, i: usize) -> i64 {
        self.hub(i) + self.bridge(i)
    }

    /// Interconnection density of the community of `i`; a member without
    /// links adds nothing to the numerator.
    pub fn rho(&self, i: usize) -> Q {
        let members: Vec<usize> = (0..self.n).filter(|&j| self.label[j] == self.label[i]).collect();
        let sum: Q = members
            .iter()
            .map(|&j| {
                let total = self.k_inter(j) + self.k_intra(j);
                if total == 0 {
                    Q::from_integer(0)
                } else {
                    Q::new(self.k_inter(j), total)
                }
            })
            .sum();
        sum / Q::from_integer(members.len() as i64)
    }

    pub fn beta3(&self, i: usize) -> Q {
        let rho = self.rho(i);
        rho * Q::from_integer(self.hub(i)) + (Q::from_integer(1) - rho) * Q::from_integer(self.bridge(i))
    }

    pub fn comm(&self, i: usize) -> i64 {
        self.k_intra(i) + self.k_inter(i) * self.k_inter(i)
    }

    /// Betweenness by listing every geodesic of every unordered pair.
    pub fn betweenness(&self) -> Vec<f64> {
        let mut score = vec![0.0; self.n];
        for s in 0..self.n {
            let dist = bfs(&self.adj, s);
            for t in s + 1..self.n {
                if dist[t] == usize::MAX {
                    continue;
                }
                let mut paths = Vec::new();
                let mut current = vec![s];
                list_geodesics(&self.adj, &dist, t, &mut current, &mut paths);
                for v in 0..self.n {
                    if v == s || v == t {
                        continue;
                    }
                    let through = paths.iter().filter(|p| p.contains(&v)).count();
                    score[v] += through as f64 / paths.len() as f64;
                }
            }
        }
        score
    }
}

pub fn bfs(adj: &[Vec<bool>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..adj.len() {
            if adj[u][v] && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn list_geodesics(adj: &[Vec<bool>], dist: &[usize], t: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let u = *current.last().unwrap();
    if u == t {
        out.push(current.clone());
        return;
    }
    for v in 0..adj.len() {
        if adj[u][v] && dist[v] == dist[u] + 1 && dist[v] <= dist[t] {
            current.push(v);
            list_geodesics(adj, dist, t, current, out);
            current.pop();
        }
    }
}

/// Size of the connected component of `s` after deleting `blocked` nodes.
pub fn component_size(g: &Graph, s: usize, blocked: &[bool]) -> usize {
    let mut seen = vec![false; g.node_count()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    let mut size = 0;
    while let Some(u) = queue.pop_front() {
        size += 1;
        for &v in g.neighbors(u) {
            if !seen[v] && !blocked[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    size
}

pub fn to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}
