//! Command-line definitions and their resolution into [`Job`]s.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use modimmune_core::lfr::LfrParams;

use crate::config::ConfigFile;
use crate::error::{CliError, CliResult};
use crate::jobs::*;
use crate::manifest::Manifest;

#[derive(Debug, Parser)]
#[command(name = "modimmune", version, about = "Community-aware network immunization experiments")]
pub struct Cli {
    /// Flat `key = value` file; flags given on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads (0 = one per core). Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a benchmark graph with planted communities.
    Generate(GenerateArgs),
    /// Detect communities and print N, E, Q, N_c and the mixing estimate.
    Detect(DetectArgs),
    /// Rank nodes by an immunization strategy.
    Rank(RankArgs),
    /// Mean SIR epidemic size per strategy and coverage.
    Simulate(SimulateArgs),
    /// Relative difference of outbreak size between two simulated curves.
    Compare(CompareArgs),
    /// Re-run the job recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub avg_degree: Option<f64>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub degree_exponent: Option<f64>,
    #[arg(long)]
    pub community_exponent: Option<f64>,
    /// Target mixing parameter in [0, 1).
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub min_community: Option<usize>,
    #[arg(long)]
    pub max_community: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output prefix for `.edges`, `.communities` and `.manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Use this partition instead of running detection.
    #[arg(long)]
    pub partition: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Where to write the partition.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub partition: Option<PathBuf>,
    /// nnc, chb, wchb, degree, betweenness, comm, acquaintance, cbf or bhd.
    #[arg(long)]
    pub strategy: Option<String>,
    /// Fraction of nodes to list.
    #[arg(long)]
    pub coverage: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// What random walks do when they stop finding targets: error or random-node.
    #[arg(long)]
    pub stall: Option<Stall>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub partition: Option<PathBuf>,
    /// Comma-separated strategy names.
    #[arg(long, value_delimiter = ',')]
    pub strategy: Option<Vec<String>>,
    /// Comma-separated coverage fractions.
    #[arg(long, value_delimiter = ',')]
    pub coverage: Option<Vec<f64>>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub runs: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub stall: Option<Stall>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// CSV of the alternative strategy.
    #[arg(long)]
    pub baseline: Option<PathBuf>,
    /// CSV of the proposed strategy.
    #[arg(long)]
    pub proposed: Option<PathBuf>,
    #[arg(long)]
    pub baseline_strategy: Option<String>,
    #[arg(long)]
    pub proposed_strategy: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Write the outputs here instead of the recorded location.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn pick<T>(flag: Option<T>, file: CliResult<Option<T>>) -> CliResult<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => file,
    }
}

fn required<T>(value: Option<T>, key: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("missing --{key}")))
}

const GENERATE_KEYS: &[&str] = &[
    "threads", "nodes", "avg-degree", "max-degree", "degree-exponent", "community-exponent", "mu",
    "min-community", "max-community", "seed", "out",
];
const DETECT_KEYS: &[&str] = &["threads", "graph", "partition", "seed", "out"];
const RANK_KEYS: &[&str] = &["threads", "graph", "partition", "strategy", "coverage", "seed", "stall", "out"];
const SIMULATE_KEYS: &[&str] = &[
    "threads", "graph", "partition", "strategy", "coverage", "lambda", "gamma", "runs", "seed", "stall", "out",
];
const COMPARE_KEYS: &[&str] = &["threads", "baseline", "proposed", "baseline-strategy", "proposed-strategy", "out"];

impl GenerateArgs {
    fn resolve(self, f: &ConfigFile) -> CliResult<Job> {
        f.check_known(GENERATE_KEYS)?;
        let mu = required(pick(self.mu, f.parsed("mu"))?, "mu")?;
        let d = LfrParams::benchmark(2000, mu, 0);
        let params = LfrParams {
            n: pick(self.nodes, f.parsed("nodes"))?.unwrap_or(d.n),
            avg_degree: pick(self.avg_degree, f.parsed("avg-degree"))?.unwrap_or(d.avg_degree),
            max_degree: pick(self.max_degree, f.parsed("max-degree"))?.unwrap_or(d.max_degree),
            degree_exponent: pick(self.degree_exponent, f.parsed("degree-exponent"))?.unwrap_or(d.degree_exponent),
            community_exponent: pick(self.community_exponent, f.parsed("community-exponent"))?
                .unwrap_or(d.community_exponent),
            mu,
            min_community: pick(self.min_community, f.parsed("min-community"))?.unwrap_or(d.min_community),
            max_community: pick(self.max_community, f.parsed("max-community"))?.unwrap_or(d.max_community),
            seed: pick(self.seed, f.parsed("seed"))?.unwrap_or(0),
        };
        let out = required(pick(self.out, f.parsed("out"))?, "out")?;
        Ok(Job::Generate(GenerateJob { params: params.into(), out }))
    }
}

impl DetectArgs {
    fn resolve(self, f: &ConfigFile) -> CliResult<Job> {
        f.check_known(DETECT_KEYS)?;
        Ok(Job::Detect(DetectJob {
            graph: required(pick(self.graph, f.parsed("graph"))?, "graph")?,
            partition: pick(self.partition, f.parsed("partition"))?,
            seed: pick(self.seed, f.parsed("seed"))?.unwrap_or(0),
            out: pick(self.out, f.parsed("out"))?,
        }))
    }
}

impl RankArgs {
    fn resolve(self, f: &ConfigFile) -> CliResult<Job> {
        f.check_known(RANK_KEYS)?;
        let strategy = required(pick(self.strategy, f.parsed("strategy"))?, "strategy")?;
        let stochastic = parse_strategy(&strategy)?.is_stochastic();
        let default_coverage = if stochastic { DEFAULT_WALK_COVERAGE } else { 1.0 };
        Ok(Job::Rank(RankJob {
            graph: required(pick(self.graph, f.parsed("graph"))?, "graph")?,
            partition: pick(self.partition, f.parsed("partition"))?,
            strategy,
            coverage: pick(self.coverage, f.parsed("coverage"))?.unwrap_or(default_coverage),
            seed: pick(self.seed, f.parsed("seed"))?,
            stall: pick(self.stall, f.parsed("stall"))?.unwrap_or_default(),
            out: pick(self.out, f.parsed("out"))?,
        }))
    }
}

impl SimulateArgs {
    fn resolve(self, f: &ConfigFile) -> CliResult<Job> {
        f.check_known(SIMULATE_KEYS)?;
        let strategies = required(pick(self.strategy, f.list("strategy"))?, "strategy")?;
        let seed = pick(self.seed, f.parsed("seed"))?;
        let mut stochastic = strategies.iter().map(|s| parse_strategy(s)).collect::<CliResult<Vec<_>>>()?;
        stochastic.retain(|s| s.is_stochastic());
        if let (Some(s), None) = (stochastic.first(), seed) {
            return Err(CliError::Usage(format!("strategy `{s}` is random; pass --seed")));
        }
        Ok(Job::Simulate(SimulateJob {
            graph: required(pick(self.graph, f.parsed("graph"))?, "graph")?,
            partition: pick(self.partition, f.parsed("partition"))?,
            strategies,
            coverages: pick(self.coverage, f.list("coverage"))?.unwrap_or_else(|| DEFAULT_COVERAGES.to_vec()),
            lambda: pick(self.lambda, f.parsed("lambda"))?.unwrap_or(DEFAULT_LAMBDA),
            gamma: pick(self.gamma, f.parsed("gamma"))?.unwrap_or(DEFAULT_GAMMA),
            runs: pick(self.runs, f.parsed("runs"))?.unwrap_or(DEFAULT_RUNS),
            seed: seed.unwrap_or(0),
            stall: pick(self.stall, f.parsed("stall"))?.unwrap_or_default(),
            out: pick(self.out, f.parsed("out"))?,
        }))
    }
}

impl CompareArgs {
    fn resolve(self, f: &ConfigFile) -> CliResult<Job> {
        f.check_known(COMPARE_KEYS)?;
        Ok(Job::Compare(CompareJob {
            baseline: required(pick(self.baseline, f.parsed("baseline"))?, "baseline")?,
            proposed: required(pick(self.proposed, f.parsed("proposed"))?, "proposed")?,
            baseline_strategy: pick(self.baseline_strategy, f.parsed("baseline-strategy"))?,
            proposed_strategy: pick(self.proposed_strategy, f.parsed("proposed-strategy"))?,
            out: pick(self.out, f.parsed("out"))?,
        }))
    }
}

impl Cli {
    /// Resolves flags and config into a job plus a worker count.
    pub fn into_job(self) -> CliResult<(Job, usize)> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let threads = pick(self.threads, file.parsed("threads"))?.unwrap_or(0);
        let job = match self.command {
            Command::Generate(a) => a.resolve(&file)?,
            Command::Detect(a) => a.resolve(&file)?,
            Command::Rank(a) => a.resolve(&file)?,
            Command::Simulate(a) => a.resolve(&file)?,
            Command::Compare(a) => a.resolve(&file)?,
            Command::Replay(a) => {
                if self.config.is_some() {
                    return Err(CliError::Usage("replay takes its settings from the manifest, not --config".into()));
                }
                let manifest = Manifest::load(&a.manifest)?;
                manifest.verify_inputs()?;
                let mut job = manifest.job;
                if let Some(out) = a.out {
                    job.redirect(out);
                }
                job
            }
        };
        Ok((job, threads))
    }

    pub fn run(self, stdout: &mut dyn Write) -> CliResult<()> {
        let (job, threads) = self.into_job()?;
        job.run(threads, stdout)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(args: &[&str]) -> CliResult<Job> {
        let mut argv = vec!["modimmune"];
        argv.extend_from_slice(args);
        Cli::try_parse_from(argv).unwrap().into_job().map(|(j, _)| j)
    }

    #[test]
    fn flags_beat_config_which_beats_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("run.cfg");
        std::fs::write(&cfg, "graph = g.edges\nlambda = 0.3\nruns = 50\nstrategy = chb,degree\n").unwrap();
        let cfg = cfg.to_str().unwrap();
        let Job::Simulate(j) = job(&["simulate", "--config", cfg, "--runs", "7"]).unwrap() else { panic!() };
        assert_eq!(j.runs, 7);
        assert_eq!(j.lambda, 0.3);
        assert_eq!(j.gamma, DEFAULT_GAMMA);
        assert_eq!(j.strategies, ["chb", "degree"]);
        assert_eq!(j.coverages, DEFAULT_COVERAGES);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(job(&["simulate", "--graph", "g", "--strategy", "cbf"]).unwrap_err().exit_code(), 1);
        assert_eq!(job(&["rank", "--graph", "g", "--strategy", "pagerank"]).unwrap_err().exit_code(), 1);
        assert_eq!(job(&["rank", "--strategy", "chb"]).unwrap_err().exit_code(), 1);
        assert_eq!(job(&["generate", "--out", "x"]).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn unknown_config_key_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("run.cfg");
        std::fs::write(&cfg, "graph = g\nlamda = 0.3\n").unwrap();
        let err = job(&["detect", "--config", cfg.to_str().unwrap()]).unwrap_err();
        assert!(err.to_string().contains("lamda"));
    }
}
