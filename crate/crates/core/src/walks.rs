//! Random-walk immunization strategies that only use local information:
//! Acquaintance, Community Bridge Finder (CBF) and Bridge-Hub Detector (BHD).
//!
//! All three return the selected nodes in selection order. Walks move to a
//! uniformly chosen *unvisited* neighbor; a walk with nowhere to go, or one
//! exceeding `STEP_CAP_FACTOR · N` steps, is abandoned and a fresh walk starts
//! from a uniform node. After `WALK_BUDGET_PER_TARGET` consecutive walks that
//! add no new target, the [`StallPolicy`] decides what happens.

use alloc::vec;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::strategy::coverage_count;
use crate::{rng, Error, Graph, Result};

pub const WALK_BUDGET_PER_TARGET: usize = 1000;
pub const STEP_CAP_FACTOR: usize = 100;

/// What a walk strategy does when it stops finding new targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StallPolicy {
    /// Fail with [`Error::BudgetExhausted`].
    #[default]
    Error,
    /// Immunize a uniformly chosen unselected node and carry on. Graphs
    /// without bridges (a clique) then still yield the requested count.
    RandomNode,
}

/// Collects distinct targets in selection order.
struct Targets {
    selected: Vec<bool>,
    order: Vec<usize>,
    want: usize,
}

impl Targets {
    fn new(n: usize, want: usize) -> Targets {
        Targets { selected: vec![false; n], order: Vec::with_capacity(want), want }
    }

    fn done(&self) -> bool {
        self.order.len() >= self.want
    }

    /// Adds `node` unless already present or full; true when it was added.
    fn add(&mut self, node: usize) -> bool {
        if self.done() || self.selected[node] {
            return false;
        }
        self.selected[node] = true;
        self.order.push(node);
        true
    }

    /// Applies the stall policy after a fruitless streak of walks.
    fn stall<R: Rng + ?Sized>(&mut self, what: &'static str, policy: StallPolicy, rng: &mut R) -> Result<()> {
        match policy {
            StallPolicy::Error => Err(Error::BudgetExhausted { what, budget: WALK_BUDGET_PER_TARGET }),
            StallPolicy::RandomNode => {
                let free: Vec<usize> = (0..self.selected.len()).filter(|&i| !self.selected[i]).collect();
                let &node = free.choose(rng).ok_or(Error::BudgetExhausted { what, budget: WALK_BUDGET_PER_TARGET })?;
                self.add(node);
                Ok(())
            }
        }
    }
}

fn check_walkable(g: &Graph, count: usize) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if count > g.node_count() {
        return Err(Error::Infeasible(alloc::format!(
            "{count} targets requested from {} nodes",
            g.node_count()
        )));
    }
    Ok(())
}

/// Picks a uniform node, then immunizes one of its uniform neighbors.
pub fn acquaintance(g: &Graph, coverage: f64, seed: u64) -> Result<Vec<usize>> {
    let count = coverage_count(g.node_count(), coverage)?;
    acquaintance_count(g, count, &mut rng::seeded(seed))
}

pub fn acquaintance_count<R: Rng + ?Sized>(g: &Graph, count: usize, rng: &mut R) -> Result<Vec<usize>> {
    check_walkable(g, count)?;
    let reachable = (0..g.node_count()).filter(|&i| !g.neighbors(i).is_empty()).count();
    if count > reachable {
        return Err(Error::Infeasible(alloc::format!(
            "{count} acquaintances requested but only {reachable} nodes have a neighbor"
        )));
    }
    let mut targets = Targets::new(g.node_count(), count);
    let budget = WALK_BUDGET_PER_TARGET * count;
    for _ in 0..budget {
        if targets.done() {
            break;
        }
        let u = rng.gen_range(0..g.node_count());
        if let Some(&v) = g.neighbors(u).choose(rng) {
            targets.add(v);
        }
    }
    if !targets.done() {
        return Err(Error::BudgetExhausted { what: "acquaintance", budget });
    }
    Ok(targets.order)
}

/// Walk bookkeeping shared by CBF and BHD: a visited set that is cheap to
/// reset between walks.
struct Visited {
    mark: Vec<bool>,
    list: Vec<usize>,
}

impl Visited {
    fn new(n: usize) -> Visited {
        Visited { mark: vec![false; n], list: Vec::new() }
    }

    fn insert(&mut self, node: usize) {
        if !self.mark[node] {
            self.mark[node] = true;
            self.list.push(node);
        }
    }

    fn contains(&self, node: usize) -> bool {
        self.mark[node]
    }

    fn clear(&mut self) {
        for &i in &self.list {
            self.mark[i] = false;
        }
        self.list.clear();
    }
}

fn step_to_unvisited<R: Rng + ?Sized>(
    g: &Graph,
    from: usize,
    visited: &Visited,
    scratch: &mut Vec<usize>,
    rng: &mut R,
) -> Option<usize> {
    scratch.clear();
    scratch.extend(g.neighbors(from).iter().copied().filter(|&j| !visited.contains(j)));
    scratch.choose(rng).copied()
}

/// Community Bridge Finder.
///
/// Along a walk `v_0, v_1, …`, the previous node `v_{i-1}` (`i ≥ 2`) becomes
/// a candidate when `v_i` has at most one edge into the visited set (the one
/// it arrived by). Up to two random neighbors of `v_i` other than `v_{i-1}`
/// are then probed: if none of them links back to an already visited node,
/// `v_{i-1}` is a bridge and is immunized, and a new walk starts. Otherwise
/// the walk steps back to `v_{i-1}` and continues from there; `v_i` stays
/// visited.
pub fn cbf(g: &Graph, coverage: f64, seed: u64) -> Result<Vec<usize>> {
    let count = coverage_count(g.node_count(), coverage)?;
    cbf_count(g, count, &mut rng::seeded(seed), StallPolicy::default())
}

pub fn cbf_count<R: Rng + ?Sized>(
    g: &Graph,
    count: usize,
    rng: &mut R,
    policy: StallPolicy,
) -> Result<Vec<usize>> {
    check_walkable(g, count)?;
    let n = g.node_count();
    let mut targets = Targets::new(n, count);
    let mut visited = Visited::new(n);
    let mut path: Vec<usize> = Vec::new();
    let mut scratch = Vec::new();
    let mut fruitless = 0;

    while !targets.done() {
        if fruitless == WALK_BUDGET_PER_TARGET {
            targets.stall("cbf", policy, rng)?;
            fruitless = 0;
            continue;
        }
        visited.clear();
        path.clear();
        let start = rng.gen_range(0..n);
        visited.insert(start);
        path.push(start);
        let mut found = false;

        for _ in 0..STEP_CAP_FACTOR * n {
            let current = *path.last().expect("path holds the start node");
            let Some(next) = step_to_unvisited(g, current, &visited, &mut scratch, rng) else {
                break;
            };
            visited.insert(next);
            path.push(next);
            if path.len() < 3 {
                continue;
            }
            let back_links = g.neighbors(next).iter().filter(|&&j| visited.contains(j)).count();
            if back_links > 1 {
                continue;
            }
            let candidate = current;
            scratch.clear();
            scratch.extend(g.neighbors(next).iter().copied().filter(|&j| j != candidate));
            let probes: Vec<usize> = scratch.choose_multiple(rng, 2).copied().collect();
            let links_back = |w: usize| g.neighbors(w).iter().any(|&j| j != next && visited.contains(j));
            if !probes.is_empty() && !probes.iter().any(|&w| links_back(w)) {
                found = targets.add(candidate);
                break;
            }
            path.pop();
        }
        fruitless = if found { 0 } else { fruitless + 1 };
    }
    Ok(targets.order)
}

/// Bridge-Hub Detector.
///
/// The walk keeps `F`, the union of the neighborhoods of the nodes visited so
/// far. On reaching `v_i`, the neighbors of `v_i` that are outside `F` and
/// have no link into `F` (other than to `v_i` itself) open onto unexplored
/// territory: if there is any, `v_i` (the bridge) and one of them chosen
/// uniformly (the bridge hub) are immunized and a new walk starts. Otherwise
/// `F` absorbs the neighborhood of `v_i` and the walk goes on.
pub fn bhd(g: &Graph, coverage: f64, seed: u64) -> Result<Vec<usize>> {
    let count = coverage_count(g.node_count(), coverage)?;
    bhd_count(g, count, &mut rng::seeded(seed), StallPolicy::default())
}

pub fn bhd_count<R: Rng + ?Sized>(
    g: &Graph,
    count: usize,
    rng: &mut R,
    policy: StallPolicy,
) -> Result<Vec<usize>> {
    check_walkable(g, count)?;
    let n = g.node_count();
    let mut targets = Targets::new(n, count);
    let mut visited = Visited::new(n);
    let mut frontier = Visited::new(n);
    let mut scratch = Vec::new();
    let mut hubs = Vec::new();
    let mut fruitless = 0;

    while !targets.done() {
        if fruitless == WALK_BUDGET_PER_TARGET {
            targets.stall("bhd", policy, rng)?;
            fruitless = 0;
            continue;
        }
        visited.clear();
        frontier.clear();
        let mut current = rng.gen_range(0..n);
        visited.insert(current);
        for &j in g.neighbors(current) {
            frontier.insert(j);
        }
        let mut found = false;

        for _ in 0..STEP_CAP_FACTOR * n {
            let Some(next) = step_to_unvisited(g, current, &visited, &mut scratch, rng) else {
                break;
            };
            visited.insert(next);
            hubs.clear();
            hubs.extend(g.neighbors(next).iter().copied().filter(|&u| {
                !frontier.contains(u) && !g.neighbors(u).iter().any(|&j| j != next && frontier.contains(j))
            }));
            if let Some(&hub) = hubs.choose(rng) {
                let bridge_added = targets.add(next);
                let hub_added = targets.add(hub);
                found = bridge_added || hub_added;
                break;
            }
            for &j in g.neighbors(next) {
                frontier.insert(j);
            }
            current = next;
        }
        fruitless = if found { 0 } else { fruitless + 1 };
    }
    Ok(targets.order)
}
