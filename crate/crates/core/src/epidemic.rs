//! Discrete-time SIR outbreaks on immunized graphs.
//!
//! A run seeds one uniformly chosen susceptible node. Each step, every node
//! infected at the start of the step tries to infect each susceptible
//! neighbor with probability λ; afterwards each of those nodes recovers with
//! probability γ. Nodes infected during a step become infectious the next
//! step. The run ends when nobody is infected, and its epidemic size is the
//! number of recovered nodes, immunized nodes excluded.

use alloc::vec::Vec;
use rand::Rng;

use crate::{rng, Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeState {
    Susceptible,
    Infected,
    /// Recovered from infection, or immunized before the outbreak.
    Recovered,
}

/// Node states before an outbreak: immunized nodes are resistant, all others
/// susceptible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialState {
    states: Vec<NodeState>,
    immunized: usize,
}

impl InitialState {
    pub fn states(&self) -> &[NodeState] {
        &self.states
    }

    pub fn immunized(&self) -> usize {
        self.immunized
    }

    pub fn susceptible(&self) -> usize {
        self.states.len() - self.immunized
    }
}

pub fn immunize(g: &Graph, targets: &[usize]) -> Result<InitialState> {
    let mut states = alloc::vec![NodeState::Susceptible; g.node_count()];
    let mut immunized = 0;
    for &t in targets {
        g.check(t)?;
        if states[t] == NodeState::Susceptible {
            states[t] = NodeState::Recovered;
            immunized += 1;
        }
    }
    Ok(InitialState { states, immunized })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SirConfig {
    /// Per-contact, per-step transmission probability.
    pub lambda: f64,
    /// Per-step recovery probability.
    pub gamma: f64,
    /// Ensemble size.
    pub runs: usize,
    pub master_seed: u64,
}

impl Default for SirConfig {
    fn default() -> SirConfig {
        SirConfig { lambda: 0.2, gamma: 1.0, runs: 600, master_seed: 0 }
    }
}

impl SirConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(Error::InvalidParameter(alloc::format!("lambda {} outside [0, 1]", self.lambda)));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::InvalidParameter(alloc::format!("gamma {} outside (0, 1]", self.gamma)));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOutcome {
    pub epidemic_size: usize,
    pub steps: usize,
}

pub fn sir_run<R: Rng + ?Sized>(g: &Graph, initial: &InitialState, cfg: &SirConfig, rng: &mut R) -> Result<RunOutcome> {
    sir_run_observed(g, initial, cfg, rng, |_, _| {})
}

/// [`sir_run`] calling `observe(step, states)` after every step.
pub fn sir_run_observed<R, F>(
    g: &Graph,
    initial: &InitialState,
    cfg: &SirConfig,
    rng: &mut R,
    mut observe: F,
) -> Result<RunOutcome>
where
    R: Rng + ?Sized,
    F: FnMut(usize, &[NodeState]),
{
    cfg.validate()?;
    if initial.states.len() != g.node_count() {
        return Err(Error::PartitionMismatch { expected: g.node_count(), found: initial.states.len() });
    }
    let susceptible = initial.susceptible();
    if susceptible == 0 {
        return Err(Error::NoSusceptible);
    }
    let mut states = initial.states.clone();
    let pick = rng.gen_range(0..susceptible);
    let seed = states
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == NodeState::Susceptible)
        .nth(pick)
        .map(|(i, _)| i)
        .expect("pick < susceptible count");
    states[seed] = NodeState::Infected;
    observe(0, &states);

    let mut infected = alloc::vec![seed];
    let mut next = Vec::new();
    let mut recovered = 0;
    let mut steps = 0;
    while !infected.is_empty() {
        steps += 1;
        next.clear();
        for &u in &infected {
            for &v in g.neighbors(u) {
                if states[v] == NodeState::Susceptible && rng.gen_bool(cfg.lambda) {
                    states[v] = NodeState::Infected;
                    next.push(v);
                }
            }
        }
        for &u in &infected {
            if rng.gen_bool(cfg.gamma) {
                states[u] = NodeState::Recovered;
                recovered += 1;
            } else {
                next.push(u);
            }
        }
        core::mem::swap(&mut infected, &mut next);
        observe(steps, &states);
    }
    Ok(RunOutcome { epidemic_size: recovered, steps })
}

/// Run `index` of an ensemble, on its own random stream of `cfg.master_seed`.
pub fn sir_run_indexed(g: &Graph, initial: &InitialState, cfg: &SirConfig, index: usize) -> Result<RunOutcome> {
    sir_run(g, initial, cfg, &mut rng::stream(cfg.master_seed, index as u64))
}

/// Ensemble summary.
#[derive(Debug, Clone, PartialEq)]
pub struct SirOutcome {
    pub mean_epidemic_size: f64,
    /// Sample standard deviation of the per-run sizes (0 for a single run).
    pub sd: f64,
    pub per_run_sizes: Vec<usize>,
    pub mean_steps: f64,
}

impl SirOutcome {
    /// Summarizes runs given in run-index order.
    pub fn from_runs(runs: &[RunOutcome]) -> SirOutcome {
        let n = runs.len() as f64;
        let per_run_sizes: Vec<usize> = runs.iter().map(|r| r.epidemic_size).collect();
        let mean = per_run_sizes.iter().map(|&s| s as f64).sum::<f64>() / n;
        let var = if runs.len() > 1 {
            per_run_sizes.iter().map(|&s| (s as f64 - mean) * (s as f64 - mean)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        let mean_steps = runs.iter().map(|r| r.steps as f64).sum::<f64>() / n;
        SirOutcome { mean_epidemic_size: mean, sd: libm::sqrt(var), per_run_sizes, mean_steps }
    }

    pub fn runs(&self) -> usize {
        self.per_run_sizes.len()
    }

    pub fn standard_error(&self) -> f64 {
        self.sd / libm::sqrt(self.runs() as f64)
    }
}

/// Sequential ensemble of `cfg.runs` independent runs.
pub fn sir_ensemble(g: &Graph, initial: &InitialState, cfg: &SirConfig) -> Result<SirOutcome> {
    cfg.validate()?;
    let runs = (0..cfg.runs)
        .map(|i| sir_run_indexed(g, initial, cfg, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(SirOutcome::from_runs(&runs))
}

/// Standard error of the difference of two ensemble means.
pub fn pooled_standard_error(a: &SirOutcome, b: &SirOutcome) -> f64 {
    libm::sqrt(a.standard_error() * a.standard_error() + b.standard_error() * b.standard_error())
}

/// Relative difference of outbreak size `(R_baseline − R_proposed) / R_baseline`;
/// positive when the proposed strategy contains the outbreak better.
pub fn relative_difference(baseline: f64, proposed: f64) -> Result<f64> {
    if baseline.is_nan() || baseline <= 0.0 {
        return Err(Error::InvalidParameter(alloc::format!(
            "baseline outbreak size must be positive, got {baseline}"
        )));
    }
    Ok((baseline - proposed) / baseline)
}
