//! Benchmark graphs with power-law degrees, power-law community sizes and a
//! target mixing parameter.

mod powerlaw;

pub use powerlaw::{sample_truncated_power_law, DiscretePowerLaw, RoundedPowerLaw};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use libm::{ceil, floor};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::community::estimate_mixing;
use crate::rng::{self, SimRng};
use crate::{Error, Graph, Partition, Result};

/// Generation attempts before giving up on the mixing tolerance.
pub const MAX_ATTEMPTS: u64 = 10;
/// Allowed gap between the realized and the requested mixing parameter.
pub const MIXING_TOLERANCE: f64 = 0.05;
const SWAP_TRIES: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct LfrParams {
    pub n: usize,
    pub avg_degree: f64,
    pub max_degree: usize,
    pub degree_exponent: f64,
    pub community_exponent: f64,
    pub mu: f64,
    pub min_community: usize,
    pub max_community: usize,
    pub seed: u64,
}

impl LfrParams {
    /// The reference benchmark family: mean degree 7, maximum degree 122,
    /// exponents 3 and 2.5, communities of 50 to 250 nodes.
    pub fn benchmark(n: usize, mu: f64, seed: u64) -> LfrParams {
        LfrParams {
            n,
            avg_degree: 7.0,
            max_degree: 122,
            degree_exponent: 3.0,
            community_exponent: 2.5,
            mu,
            min_community: 50,
            max_community: 250,
            seed,
        }
    }

    /// Largest internal degree any node can be asked for.
    pub fn max_internal_degree(&self) -> usize {
        ceil((1.0 - self.mu) * self.max_degree as f64) as usize
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: alloc::string::String| Err(Error::InvalidParameter(m));
        if self.n == 0 {
            return bad("node count must be positive".into());
        }
        if !(0.0..1.0).contains(&self.mu) {
            return bad(format!("mixing parameter {} outside [0, 1)", self.mu));
        }
        if self.degree_exponent.is_nan() || self.degree_exponent < 2.0 {
            return bad(format!("degree exponent {} below 2", self.degree_exponent));
        }
        if self.community_exponent.is_nan() || self.community_exponent <= 1.0 {
            return bad(format!("community-size exponent {} must exceed 1", self.community_exponent));
        }
        if !(self.avg_degree >= 1.0 && self.avg_degree < self.max_degree as f64) {
            return bad(format!(
                "average degree {} must lie in [1, max degree {})",
                self.avg_degree, self.max_degree
            ));
        }
        if self.min_community == 0 || self.min_community > self.max_community {
            return bad(format!(
                "community size range [{}, {}] is empty",
                self.min_community, self.max_community
            ));
        }
        if self.max_degree >= self.n {
            return Err(Error::Infeasible(format!(
                "max degree {} needs more than {} nodes",
                self.max_degree, self.n
            )));
        }
        if self.min_community > self.n {
            return Err(Error::Infeasible(format!(
                "smallest community ({}) exceeds the node count {}",
                self.min_community, self.n
            )));
        }
        if self.max_community < self.max_internal_degree() + 1 {
            return Err(Error::Infeasible(format!(
                "max community size {} cannot hold internal degree {}",
                self.max_community,
                self.max_internal_degree()
            )));
        }
        Ok(())
    }
}

/// Generates a graph and its planted partition.
///
/// Up to [`MAX_ATTEMPTS`] independent attempts are made; an attempt is kept
/// when every node has at least one link and the realized mixing parameter is
/// within [`MIXING_TOLERANCE`] of the target.
pub fn generate(params: &LfrParams) -> Result<(Graph, Partition)> {
    params.validate()?;
    let law = RoundedPowerLaw::with_mean(params.degree_exponent, params.max_degree as f64, params.avg_degree)?;
    let sizes = DiscretePowerLaw::new(params.community_exponent, params.min_community, params.max_community);
    let mut last_mixing = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = rng::stream(params.seed, attempt);
        let Some((g, p)) = attempt_once(params, &law, &sizes, &mut rng) else {
            continue;
        };
        if (0..g.node_count()).any(|i| g.neighbors(i).is_empty()) {
            continue;
        }
        let mixing = estimate_mixing(&g, &p)?;
        if (mixing - params.mu).abs() <= MIXING_TOLERANCE {
            return Ok((g, p));
        }
        last_mixing = Some(mixing);
    }
    Err(Error::Infeasible(match last_mixing {
        Some(m) => format!("mixing {m:.3} still off target {} after {MAX_ATTEMPTS} attempts", params.mu),
        None => format!("no valid community layout found in {MAX_ATTEMPTS} attempts"),
    }))
}

fn attempt_once(
    params: &LfrParams,
    law: &RoundedPowerLaw,
    size_law: &DiscretePowerLaw,
    rng: &mut SimRng,
) -> Option<(Graph, Partition)> {
    let n = params.n;
    let mut degree: Vec<usize> = (0..n).map(|_| law.sample(rng).min(params.max_degree)).collect();
    if degree.iter().sum::<usize>() % 2 == 1 {
        let candidates: Vec<usize> = (0..n).filter(|&i| degree[i] < params.max_degree).collect();
        degree[*candidates.choose(rng)?] += 1;
    }

    let mut size = community_sizes(n, params, size_law, rng)?;

    let mut internal: Vec<usize> = degree
        .iter()
        .map(|&k| {
            let target = (1.0 - params.mu) * k as f64;
            let base = floor(target);
            base as usize + usize::from(rng.gen_bool(target - base))
        })
        .collect();

    let community = assign(&mut internal, &mut size, rng);

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); size.len()];
    for (i, &c) in community.iter().enumerate() {
        members[c].push(i);
    }
    for nodes in &members {
        if nodes.iter().map(|&i| internal[i]).sum::<usize>() % 2 == 0 {
            continue;
        }
        let cap = nodes.len() - 1;
        if let Some(&i) = nodes.iter().find(|&&i| internal[i] < degree[i] && internal[i] < cap) {
            internal[i] += 1;
        } else if let Some(&i) = nodes.iter().find(|&&i| internal[i] > 0) {
            internal[i] -= 1;
            degree[i] -= 1;
        }
    }

    let mut edges = BTreeSet::new();
    for nodes in &members {
        let stubs: Vec<usize> = nodes.iter().flat_map(|&i| core::iter::repeat_n(i, internal[i])).collect();
        wire(stubs, &mut edges, |_, _| true, rng);
    }
    let stubs: Vec<usize> = (0..n).flat_map(|i| core::iter::repeat_n(i, degree[i] - internal[i])).collect();
    wire(stubs, &mut edges, |u, v| community[u] != community[v], rng);

    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::from_edges(n, &edges).ok()?;
    Some((g, Partition::from_assignment(&community)))
}

/// Samples community sizes until they cover `n`, then trims the excess one
/// node at a time from communities still above the minimum.
fn community_sizes(n: usize, params: &LfrParams, law: &DiscretePowerLaw, rng: &mut SimRng) -> Option<Vec<usize>> {
    let mut sizes = Vec::new();
    let mut total = 0;
    while total < n {
        let s = law.sample(rng);
        sizes.push(s);
        total += s;
    }
    while total > n {
        let shrinkable: Vec<usize> = (0..sizes.len()).filter(|&c| sizes[c] > params.min_community).collect();
        match shrinkable.choose(rng) {
            Some(&c) => {
                let cut = (total - n).min(sizes[c] - params.min_community).min(1 + (total - n) / sizes.len());
                sizes[c] -= cut;
                total -= cut;
            }
            None => {
                total -= sizes.pop()?;
                while total < n {
                    let growable: Vec<usize> =
                        (0..sizes.len()).filter(|&c| sizes[c] < params.max_community).collect();
                    let &c = growable.choose(rng)?;
                    sizes[c] += 1;
                    total += 1;
                }
            }
        }
    }
    Some(sizes)
}

/// Places nodes into communities, largest internal degree first, choosing
/// among communities big enough to hold the node with probability
/// proportional to their free slots. When none fits, the node goes to the
/// community with the most free slots and its internal degree is capped.
fn assign(internal: &mut [usize], size: &mut [usize], rng: &mut SimRng) -> Vec<usize> {
    let n = internal.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| internal[b].cmp(&internal[a]).then(a.cmp(&b)));
    let mut free: Vec<usize> = size.to_vec();
    let mut community = vec![0; n];
    for i in order {
        let fitting: u64 = (0..free.len())
            .filter(|&c| size[c] > internal[i])
            .map(|c| free[c] as u64)
            .sum();
        let chosen = if fitting > 0 {
            let mut pick = rng.gen_range(0..fitting);
            (0..free.len())
                .filter(|&c| size[c] > internal[i])
                .find(|&c| {
                    let f = free[c] as u64;
                    if pick < f {
                        true
                    } else {
                        pick -= f;
                        false
                    }
                })
                .expect("weighted pick inside the total")
        } else {
            let c = (0..free.len()).max_by_key(|&c| (free[c], core::cmp::Reverse(c))).expect("a community");
            internal[i] = internal[i].min(size[c] - 1);
            c
        };
        free[chosen] -= 1;
        community[i] = chosen;
    }
    community
}

/// Configuration-model matching of `stubs`. Pairs that would form a self-loop,
/// a repeated edge or a rejected edge are repaired by swapping with a random
/// edge made in the same call; pairs that still fail are dropped.
fn wire(
    mut stubs: Vec<usize>,
    edges: &mut BTreeSet<(usize, usize)>,
    accept: impl Fn(usize, usize) -> bool,
    rng: &mut SimRng,
) {
    let key = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };
    let ok = |u: usize, v: usize, edges: &BTreeSet<(usize, usize)>| {
        u != v && accept(u, v) && !edges.contains(&key(u, v))
    };
    stubs.shuffle(rng);
    let mut made: Vec<(usize, usize)> = Vec::new();
    let mut bad = Vec::new();
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if ok(u, v, edges) {
            edges.insert(key(u, v));
            made.push((u, v));
        } else {
            bad.push((u, v));
        }
    }
    for (u, v) in bad {
        for _ in 0..SWAP_TRIES.min(made.len()) {
            let slot = rng.gen_range(0..made.len());
            let (x, y) = made[slot];
            let (x, y) = if rng.gen_bool(0.5) { (x, y) } else { (y, x) };
            edges.remove(&key(x, y));
            if ok(u, x, edges) && ok(v, y, edges) && key(u, x) != key(v, y) {
                edges.insert(key(u, x));
                edges.insert(key(v, y));
                made[slot] = (u, x);
                made.push((v, y));
                break;
            }
            edges.insert(key(x, y));
        }
    }
}
