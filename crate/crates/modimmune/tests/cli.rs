use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TRIANGLES: &str = "# two triangles joined by c-d\na b\nb c\na c\nd e\ne f\nd f\nc d\n";
const TRIANGLE_COMMUNITIES: &str = "a x\nb x\nc x\nd y\ne y\nf y\n";

fn modimmune(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modimmune")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Workspace {
        let ws = Workspace { dir: tempfile::tempdir().unwrap() };
        ws.write("tri.edges", TRIANGLES);
        ws.write("tri.communities", TRIANGLE_COMMUNITIES);
        ws
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn p(&self, name: &str) -> String {
        self.path(name).to_string_lossy().into_owned()
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.path(name), text).unwrap();
    }

    fn read(&self, name: &str) -> String {
        fs::read_to_string(self.path(name)).unwrap()
    }
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn chb_ranks_the_bridge_endpoints_first() {
    let ws = Workspace::new();
    let out = modimmune(&["rank", "--graph", &ws.p("tri.edges"), "--partition", &ws.p("tri.communities"), "--strategy", "chb"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "node,score,rank");
    assert_eq!(lines[1], "c,7,1");
    assert_eq!(lines[2], "d,7,2");
    assert_eq!(lines.len(), 7);
}

#[test]
fn usage_errors_exit_with_one() {
    let ws = Workspace::new();
    let g = ws.p("tri.edges");
    assert_eq!(code(&modimmune(&["rank", "--graph", &g, "--strategy", "pagerank"])), 1);
    assert_eq!(code(&modimmune(&["rank", "--graph", &g, "--strategy", "cbf"])), 1);
    assert_eq!(code(&modimmune(&["rank", "--graph", &g, "--strategy", "chb"])), 1);
    assert_eq!(code(&modimmune(&["generate", "--mu", "1.2", "--out", &ws.p("bad")])), 1);
    assert_eq!(code(&modimmune(&["simulate", "--graph", &g, "--strategy", "degree", "--lambda", "2"])), 1);
    assert_eq!(code(&modimmune(&["frobnicate"])), 1);
    assert_eq!(code(&modimmune(&["--help"])), 0);
}

#[test]
fn data_errors_exit_with_two() {
    let ws = Workspace::new();
    ws.write("empty.edges", "# nothing\n");
    assert_eq!(code(&modimmune(&["detect", "--graph", &ws.p("empty.edges")])), 2);
    ws.write("isolated.edges", "a b\n");
    ws.write("short.communities", "a 0\n");
    let out = modimmune(&["detect", "--graph", &ws.p("isolated.edges"), "--partition", &ws.p("short.communities")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("b"), "error names the missing node");
    assert_eq!(code(&modimmune(&["detect", "--graph", &ws.p("missing.edges")])), 2);
}

#[test]
fn stalled_walks_exit_with_three() {
    let ws = Workspace::new();
    let clique: String = (0..6).flat_map(|i| (i + 1..6).map(move |j| format!("{i} {j}\n"))).collect();
    ws.write("k6.edges", &clique);
    let args = ["rank", "--graph", &ws.p("k6.edges"), "--strategy", "cbf", "--seed", "1", "--coverage", "0.5"];
    assert_eq!(code(&modimmune(&args)), 3);
    let mut relaxed = args.to_vec();
    relaxed.extend(["--stall", "random-node"]);
    assert_eq!(stdout(&modimmune(&relaxed)).lines().count(), 4);
}

#[test]
fn detect_reports_the_table_columns() {
    let ws = Workspace::new();
    let text = stdout(&modimmune(&["detect", "--graph", &ws.p("tri.edges"), "--out", &ws.p("found.communities")]));
    assert_eq!(text, "nodes\t6\nedges\t7\nmodularity\t0.357143\ncommunities\t2\nmixing\t0.142857\n");
    assert_eq!(ws.read("found.communities").lines().count(), 6);
    assert!(ws.path("found.communities.manifest.json").exists());
    // A given partition is used as is.
    ws.write("one.communities", "a 0\nb 0\nc 0\nd 0\ne 0\nf 0\n");
    let text = stdout(&modimmune(&["detect", "--graph", &ws.p("tri.edges"), "--partition", &ws.p("one.communities")]));
    assert!(text.contains("modularity\t0\n") && text.contains("communities\t1\n"), "{text}");
}

#[test]
fn simulate_csv_shape_and_zero_transmission() {
    let ws = Workspace::new();
    let text = stdout(&modimmune(&[
        "simulate", "--graph", &ws.p("tri.edges"), "--partition", &ws.p("tri.communities"), "--strategy", "chb,degree",
        "--lambda", "0", "--runs", "25",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "strategy,coverage,mean_epidemic_size,sd,runs");
    assert_eq!(lines.len(), 1 + 2 * 6);
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(&fields[2..], ["1", "0", "25"], "{line}");
    }
    assert_eq!(lines[1], "chb,0.05,1,0,25");
}

#[test]
fn generate_is_reproducible_and_reloads() {
    let ws = Workspace::new();
    for name in ["a", "b"] {
        stdout(&modimmune(&["generate", "--mu", "0.2", "--nodes", "500", "--seed", "4", "--out", &ws.p(name)]));
    }
    assert_eq!(ws.read("a.edges"), ws.read("b.edges"));
    assert_eq!(ws.read("a.communities"), ws.read("b.communities"));
    let text = stdout(&modimmune(&["detect", "--graph", &ws.p("a.edges"), "--partition", &ws.p("a.communities")]));
    assert!(text.starts_with("nodes\t500\n"), "{text}");
    let manifest = ws.read("a.manifest.json");
    assert!(manifest.contains("\"command\": \"generate\"") && manifest.contains("\"seed\": 4"), "{manifest}");
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let ws = Workspace::new();
    ws.write(
        "run.cfg",
        &format!("graph = {}\npartition = {}\nstrategy = wchb\nlambda = 0\nruns = 3\ncoverage = 0.5\n", ws.p("tri.edges"), ws.p("tri.communities")),
    );
    let text = stdout(&modimmune(&["simulate", "--config", &ws.p("run.cfg"), "--runs", "4"]));
    assert_eq!(text, "strategy,coverage,mean_epidemic_size,sd,runs\nwchb,0.5,1,0,4\n");
}

#[test]
fn compare_joins_on_coverage() {
    let ws = Workspace::new();
    let header = "strategy,coverage,mean_epidemic_size,sd,runs\n";
    ws.write("base.csv", &format!("{header}degree,0.1,100,1,600\ndegree,0.2,50,1,600\n"));
    ws.write("prop.csv", &format!("{header}chb,0.2,75,1,600\nchb,0.1,80,1,600\n"));
    let text = stdout(&modimmune(&["compare", "--baseline", &ws.p("base.csv"), "--proposed", &ws.p("prop.csv")]));
    assert_eq!(text, "coverage,delta_r\n0.1,0.2\n0.2,-0.5\n");
    let same = stdout(&modimmune(&["compare", "--baseline", &ws.p("base.csv"), "--proposed", &ws.p("base.csv")]));
    assert_eq!(same, "coverage,delta_r\n0.1,0\n0.2,0\n");
    ws.write("other.csv", &format!("{header}chb,0.1,80,1,600\nchb,0.3,75,1,600\n"));
    assert_eq!(code(&modimmune(&["compare", "--baseline", &ws.p("base.csv"), "--proposed", &ws.p("other.csv")])), 2);
}

#[test]
fn replay_refuses_changed_inputs() {
    let ws = Workspace::new();
    let out = ws.p("rank.csv");
    stdout(&modimmune(&["rank", "--graph", &ws.p("tri.edges"), "--strategy", "degree", "--out", &out]));
    let manifest = ws.p("rank.csv.manifest.json");
    stdout(&modimmune(&["replay", &manifest, "--out", &ws.p("again.csv")]));
    assert_eq!(ws.read("rank.csv"), ws.read("again.csv"));
    ws.write("tri.edges", "a b\n");
    assert_eq!(code(&modimmune(&["replay", &manifest])), 2);
    assert!(Path::new(&out).exists());
}
