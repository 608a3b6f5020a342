//! The five experiment commands as serializable jobs.

use std::io::Write;
use std::path::{Path, PathBuf};

use modimmune_core::centrality::{rank, TieRule};
use modimmune_core::community::{estimate_mixing, louvain, modularity};
use modimmune_core::epidemic::{immunize, relative_difference, SirConfig};
use modimmune_core::lfr::{self, LfrParams};
use modimmune_core::strategy::coverage_count;
use modimmune_core::walks::StallPolicy;
use modimmune_core::{rng, Graph, Partition, Strategy};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::format::sig6;
use crate::io::{read_graph, read_partition, read_text, write_graph, write_partition, write_text};
use crate::manifest::{manifest_path, Manifest};
use crate::parallel;

/// Coverage grid used when none is given.
pub const DEFAULT_COVERAGES: [f64; 6] = [0.05, 0.10, 0.15, 0.20, 0.25, 0.30];
pub const DEFAULT_RUNS: usize = 600;
pub const DEFAULT_LAMBDA: f64 = 0.2;
pub const DEFAULT_GAMMA: f64 = 1.0;
/// Coverage listed by `rank` for the random-walk strategies.
pub const DEFAULT_WALK_COVERAGE: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stall {
    #[default]
    Error,
    RandomNode,
}

impl Stall {
    pub fn policy(self) -> StallPolicy {
        match self {
            Stall::Error => StallPolicy::Error,
            Stall::RandomNode => StallPolicy::RandomNode,
        }
    }
}

impl std::str::FromStr for Stall {
    type Err = String;

    fn from_str(s: &str) -> Result<Stall, String> {
        match s {
            "error" => Ok(Stall::Error),
            "random-node" => Ok(Stall::RandomNode),
            other => Err(format!("unknown stall policy `{other}` (expected error or random-node)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerateJob {
    pub params: LfrSettings,
    /// Output prefix: writes `<out>.edges` and `<out>.communities`.
    pub out: PathBuf,
}

/// Serializable mirror of [`LfrParams`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LfrSettings {
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

impl From<&LfrSettings> for LfrParams {
    fn from(s: &LfrSettings) -> LfrParams {
        LfrParams {
            n: s.n,
            avg_degree: s.avg_degree,
            max_degree: s.max_degree,
            degree_exponent: s.degree_exponent,
            community_exponent: s.community_exponent,
            mu: s.mu,
            min_community: s.min_community,
            max_community: s.max_community,
            seed: s.seed,
        }
    }
}

impl From<LfrParams> for LfrSettings {
    fn from(p: LfrParams) -> LfrSettings {
        LfrSettings {
            n: p.n,
            avg_degree: p.avg_degree,
            max_degree: p.max_degree,
            degree_exponent: p.degree_exponent,
            community_exponent: p.community_exponent,
            mu: p.mu,
            min_community: p.min_community,
            max_community: p.max_community,
            seed: p.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectJob {
    pub graph: PathBuf,
    /// Ground-truth partition; detection is skipped when present.
    pub partition: Option<PathBuf>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankJob {
    pub graph: PathBuf,
    pub partition: Option<PathBuf>,
    pub strategy: String,
    pub coverage: f64,
    pub seed: Option<u64>,
    pub stall: Stall,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateJob {
    pub graph: PathBuf,
    pub partition: Option<PathBuf>,
    pub strategies: Vec<String>,
    pub coverages: Vec<f64>,
    pub lambda: f64,
    pub gamma: f64,
    pub runs: usize,
    pub seed: u64,
    pub stall: Stall,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareJob {
    pub baseline: PathBuf,
    pub proposed: PathBuf,
    pub baseline_strategy: Option<String>,
    pub proposed_strategy: Option<String>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    Generate(GenerateJob),
    Detect(DetectJob),
    Rank(RankJob),
    Simulate(SimulateJob),
    Compare(CompareJob),
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

impl Job {
    pub fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Job::Generate(_) => Vec::new(),
            Job::Detect(j) => [Some(&j.graph), j.partition.as_ref()].into_iter().flatten().cloned().collect(),
            Job::Rank(j) => [Some(&j.graph), j.partition.as_ref()].into_iter().flatten().cloned().collect(),
            Job::Simulate(j) => [Some(&j.graph), j.partition.as_ref()].into_iter().flatten().cloned().collect(),
            Job::Compare(j) => vec![j.baseline.clone(), j.proposed.clone()],
        }
    }

    /// Files the job writes, primary output first.
    pub fn outputs(&self) -> Vec<PathBuf> {
        match self {
            Job::Generate(j) => vec![with_suffix(&j.out, ".edges"), with_suffix(&j.out, ".communities")],
            Job::Detect(j) => j.out.iter().cloned().collect(),
            Job::Rank(j) => j.out.iter().cloned().collect(),
            Job::Simulate(j) => j.out.iter().cloned().collect(),
            Job::Compare(j) => j.out.iter().cloned().collect(),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Job::Generate(j) => Some(j.params.seed),
            Job::Detect(j) => j.partition.is_none().then_some(j.seed),
            Job::Rank(j) => j.seed,
            Job::Simulate(j) => Some(j.seed),
            Job::Compare(_) => None,
        }
    }

    /// Where the manifest goes, if the job writes files.
    pub fn manifest_path(&self) -> Option<PathBuf> {
        match self {
            Job::Generate(j) => Some(with_suffix(&j.out, ".manifest.json")),
            _ => self.outputs().first().map(|p| manifest_path(p)),
        }
    }

    /// Replaces the output location, for replays into a fresh directory.
    pub fn redirect(&mut self, out: PathBuf) {
        match self {
            Job::Generate(j) => j.out = out,
            Job::Detect(j) => j.out = Some(out),
            Job::Rank(j) => j.out = Some(out),
            Job::Simulate(j) => j.out = Some(out),
            Job::Compare(j) => j.out = Some(out),
        }
    }

    /// Checks the job, writes its manifest, then computes and writes the
    /// results. Reports and CSVs without an output file go to `stdout`.
    pub fn run(&self, threads: usize, stdout: &mut dyn Write) -> CliResult<()> {
        self.validate()?;
        if let Some(path) = self.manifest_path() {
            Manifest::for_job(self)?.write(&path)?;
        }
        let pool = parallel::pool(threads)?;
        let text = pool.install(|| match self {
            Job::Generate(j) => run_generate(j),
            Job::Detect(j) => run_detect(j),
            Job::Rank(j) => run_rank(j),
            Job::Simulate(j) => run_simulate(j),
            Job::Compare(j) => run_compare(j),
        })?;
        stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
    }

    /// Parameter checks that need no input files.
    pub fn validate(&self) -> CliResult<()> {
        match self {
            Job::Generate(j) => Ok(LfrParams::from(&j.params).validate()?),
            Job::Detect(_) | Job::Compare(_) => Ok(()),
            Job::Rank(j) => {
                let strategy = parse_strategy(&j.strategy)?;
                if strategy.is_stochastic() && j.seed.is_none() {
                    return Err(CliError::Usage(format!("strategy `{strategy}` is random; pass --seed")));
                }
                coverage_count(1, j.coverage)?;
                Ok(())
            }
            Job::Simulate(j) => {
                if j.strategies.is_empty() {
                    return Err(CliError::Usage("no strategy given".into()));
                }
                if j.coverages.is_empty() {
                    return Err(CliError::Usage("no coverage given".into()));
                }
                for s in &j.strategies {
                    parse_strategy(s)?;
                }
                for &c in &j.coverages {
                    coverage_count(1, c)?;
                }
                SirConfig { lambda: j.lambda, gamma: j.gamma, runs: j.runs, master_seed: j.seed }.validate()?;
                Ok(())
            }
        }
    }
}

pub fn parse_strategy(name: &str) -> CliResult<Strategy> {
    Ok(name.parse::<Strategy>()?)
}

/// Writes `text` to `out`, or hands it back for stdout.
fn emit(out: Option<&Path>, text: String) -> CliResult<String> {
    match out {
        Some(path) => write_text(path, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn load_inputs(graph: &Path, partition: Option<&Path>, needed: bool) -> CliResult<(Graph, Partition)> {
    let g = read_graph(graph)?;
    let p = match partition {
        Some(path) => read_partition(path, &g)?,
        None if needed => return Err(CliError::Usage("community strategies need --partition".into())),
        None => Partition::whole(g.node_count()),
    };
    Ok((g, p))
}

/// The first `count` targets of `strategy`. Random-walk strategies draw from
/// a generator derived from `seed`, kept apart from the SIR streams.
pub fn select_targets(
    strategy: Strategy,
    g: &Graph,
    p: &Partition,
    count: usize,
    seed: u64,
    stall: Stall,
) -> CliResult<Vec<usize>> {
    match parallel::scores(strategy, g, p) {
        Some(scores) => Ok(rank(&scores?, TieRule::LowerIndex).top(count).to_vec()),
        None => Ok(strategy.targets(g, p, count, rng::mix(seed), stall.policy())?),
    }
}

fn run_generate(j: &GenerateJob) -> CliResult<String> {
    let (g, p) = lfr::generate(&LfrParams::from(&j.params))?;
    let outputs = Job::Generate(j.clone()).outputs();
    write_graph(&outputs[0], &g)?;
    write_partition(&outputs[1], &g, &p)?;
    let report = format!(
        "nodes\t{}\nedges\t{}\ncommunities\t{}\nmixing\t{}\n",
        g.node_count(),
        g.edge_count(),
        p.community_count(),
        sig6(estimate_mixing(&g, &p)?)
    );
    Ok(report)
}

fn run_detect(j: &DetectJob) -> CliResult<String> {
    let g = read_graph(&j.graph)?;
    if g.edge_count() == 0 {
        return Err(CliError::Input { path: j.graph.clone(), message: "graph has no edges".into() });
    }
    let p = match &j.partition {
        Some(path) => read_partition(path, &g)?,
        None => louvain(&g, j.seed),
    };
    let report = format!(
        "nodes\t{}\nedges\t{}\nmodularity\t{}\ncommunities\t{}\nmixing\t{}\n",
        g.node_count(),
        g.edge_count(),
        sig6(modularity(&g, &p)?),
        p.community_count(),
        sig6(estimate_mixing(&g, &p)?)
    );
    if let Some(out) = &j.out {
        write_partition(out, &g, &p)?;
    }
    Ok(report)
}

fn run_rank(j: &RankJob) -> CliResult<String> {
    let strategy = parse_strategy(&j.strategy)?;
    let (g, p) = load_inputs(&j.graph, j.partition.as_deref(), strategy.needs_partition())?;
    let count = coverage_count(g.node_count(), j.coverage)?;
    let rows: Vec<Vec<String>> = match parallel::scores(strategy, &g, &p) {
        Some(scores) => {
            let scores = scores?;
            rank(&scores, TieRule::LowerIndex)
                .top(count)
                .iter()
                .enumerate()
                .map(|(pos, &i)| vec![g.label(i), sig6(scores.get(i)), (pos + 1).to_string()])
                .collect()
        }
        None => {
            let seed = j.seed.expect("validated");
            let targets = select_targets(strategy, &g, &p, count, seed, j.stall)?;
            // Selection order; earlier picks get higher scores.
            targets
                .iter()
                .enumerate()
                .map(|(pos, &i)| vec![g.label(i), (count - pos).to_string(), (pos + 1).to_string()])
                .collect()
        }
    };
    emit(j.out.as_deref(), csv_text(&["node", "score", "rank"], &rows))
}

fn run_simulate(j: &SimulateJob) -> CliResult<String> {
    let strategies = j.strategies.iter().map(|s| parse_strategy(s)).collect::<CliResult<Vec<_>>>()?;
    let needs_partition = strategies.iter().any(|s| s.needs_partition());
    let (g, p) = load_inputs(&j.graph, j.partition.as_deref(), needs_partition)?;
    let n = g.node_count();
    let counts = j.coverages.iter().map(|&c| coverage_count(n, c)).collect::<Result<Vec<_>, _>>()?;
    let largest = counts.iter().copied().max().expect("validated non-empty");
    let cfg = SirConfig { lambda: j.lambda, gamma: j.gamma, runs: j.runs, master_seed: j.seed };

    let mut rows = Vec::new();
    for &strategy in &strategies {
        let targets = select_targets(strategy, &g, &p, largest, j.seed, j.stall)?;
        for (&coverage, &count) in j.coverages.iter().zip(&counts) {
            let initial = immunize(&g, &targets[..count])?;
            let outcome = parallel::ensemble(&g, &initial, &cfg)?;
            eprintln!(
                "{strategy} coverage {}: mean epidemic size {}",
                sig6(coverage),
                sig6(outcome.mean_epidemic_size)
            );
            rows.push(vec![
                strategy.name().to_string(),
                sig6(coverage),
                sig6(outcome.mean_epidemic_size),
                sig6(outcome.sd),
                outcome.runs().to_string(),
            ]);
        }
    }
    let header = ["strategy", "coverage", "mean_epidemic_size", "sd", "runs"];
    emit(j.out.as_deref(), csv_text(&header, &rows))
}

#[derive(Debug, Deserialize)]
struct CurveRow {
    strategy: String,
    coverage: String,
    mean_epidemic_size: f64,
}

/// `(coverage, mean)` pairs of one strategy from a `simulate` CSV.
fn read_curve(path: &Path, strategy: Option<&str>) -> CliResult<Vec<(String, f64)>> {
    let bad = |message: String| CliError::Input { path: path.into(), message };
    let text = read_text(path)?;
    let rows: Vec<CurveRow> = csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| bad(format!("not a simulation CSV: {e}")))?;
    let chosen = match strategy {
        Some(s) => parse_strategy(s)?.name().to_string(),
        None => {
            let first = rows.first().ok_or_else(|| bad("no rows".into()))?.strategy.clone();
            if rows.iter().any(|r| r.strategy != first) {
                return Err(bad("holds several strategies; pick one with --baseline-strategy/--proposed-strategy".into()));
            }
            first
        }
    };
    let mut curve: Vec<(String, f64)> = Vec::new();
    for row in rows.into_iter().filter(|r| r.strategy == chosen) {
        if curve.iter().any(|(c, _)| *c == row.coverage) {
            return Err(bad(format!("coverage {} appears twice for {chosen}", row.coverage)));
        }
        curve.push((row.coverage, row.mean_epidemic_size));
    }
    if curve.is_empty() {
        return Err(bad(format!("no rows for strategy {chosen}")));
    }
    Ok(curve)
}

fn run_compare(j: &CompareJob) -> CliResult<String> {
    let baseline = read_curve(&j.baseline, j.baseline_strategy.as_deref())?;
    let proposed = read_curve(&j.proposed, j.proposed_strategy.as_deref())?;
    let same_grid = baseline.len() == proposed.len() && baseline.iter().all(|(c, _)| proposed.iter().any(|(d, _)| c == d));
    if !same_grid {
        let grid = |curve: &[(String, f64)]| curve.iter().map(|(c, _)| c.as_str()).collect::<Vec<_>>().join(",");
        return Err(CliError::Data(format!(
            "coverage grids differ: baseline {{{}}}, proposed {{{}}}",
            grid(&baseline),
            grid(&proposed)
        )));
    }
    let mut rows = Vec::new();
    for (coverage, rb) in &baseline {
        let rp = proposed.iter().find(|(c, _)| c == coverage).expect("same grid").1;
        let dr = relative_difference(*rb, rp).map_err(|e| CliError::Data(format!("coverage {coverage}: {e}")))?;
        rows.push(vec![coverage.clone(), sig6(dr)]);
    }
    emit(j.out.as_deref(), csv_text(&["coverage", "delta_r"], &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn job_round_trips_through_json() {
        let job = Job::Simulate(SimulateJob {
            graph: "g.edges".into(),
            partition: Some("g.communities".into()),
            strategies: vec!["chb".into(), "cbf".into()],
            coverages: DEFAULT_COVERAGES.to_vec(),
            lambda: 0.2,
            gamma: 1.0,
            runs: 600,
            seed: 9,
            stall: Stall::RandomNode,
            out: Some("out.csv".into()),
        });
        let text = serde_json::to_string(&job).unwrap();
        assert!(text.contains("\"command\":\"simulate\""));
        assert_eq!(serde_json::from_str::<Job>(&text).unwrap(), job);
        assert_eq!(job.manifest_path().unwrap(), PathBuf::from("out.csv.manifest.json"));
    }

    #[test]
    fn stochastic_rank_needs_a_seed() {
        let job = Job::Rank(RankJob {
            graph: "g".into(),
            partition: None,
            strategy: "bhd".into(),
            coverage: 0.1,
            seed: None,
            stall: Stall::Error,
            out: None,
        });
        assert_eq!(job.validate().unwrap_err().exit_code(), 1);
    }

    #[test]
    fn csv_rows() {
        let text = csv_text(&["a", "b"], &[vec!["x".into(), "1".into()]]);
        assert_eq!(text, "a,b\nx,1\n");
    }
}
