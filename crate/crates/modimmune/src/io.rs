//! Reading and writing graphs, partitions and digests.

use std::fs;
use std::path::Path;

use modimmune_core::graph::parse_edge_list;
use modimmune_core::partition::{format_partition, parse_partition};
use modimmune_core::{Graph, Partition};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Loads an edge list, reporting dropped self-loops and duplicates on stderr.
pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let load = parse_edge_list(&read_text(path)?).map_err(|e| CliError::in_file(path, e))?;
    if load.dropped() > 0 {
        eprintln!(
            "{}: dropped {} self-loop(s) and {} duplicate edge(s)",
            path.display(),
            load.self_loops,
            load.duplicate_edges
        );
    }
    Ok(load.graph)
}

pub fn read_partition(path: &Path, g: &Graph) -> CliResult<Partition> {
    parse_partition(&read_text(path)?, g).map_err(|e| CliError::in_file(path, e))
}

pub fn format_edges(g: &Graph) -> String {
    let mut out = String::with_capacity(g.edge_count() * 12);
    for (u, v) in g.edges() {
        out.push_str(&g.label(u));
        out.push(' ');
        out.push_str(&g.label(v));
        out.push('\n');
    }
    out
}

pub fn write_graph(path: &Path, g: &Graph) -> CliResult<()> {
    write_text(path, &format_edges(g))
}

pub fn write_partition(path: &Path, g: &Graph, p: &Partition) -> CliResult<()> {
    write_text(path, &format_partition(g, p))
}

pub fn sha256_file(path: &Path) -> CliResult<String> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use modimmune_core::fixtures;

    #[test]
    fn graph_and_partition_files_reload() {
        let dir = tempfile::tempdir().unwrap();
        let (g, p) = fixtures::toy_network();
        let (ge, pe) = (dir.path().join("toy.edges"), dir.path().join("toy.communities"));
        write_graph(&ge, &g).unwrap();
        write_partition(&pe, &g, &p).unwrap();
        let g2 = read_graph(&ge).unwrap();
        let labelled = |g: &Graph| {
            let mut e: Vec<(String, String)> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (g.label(u), g.label(v));
                    if a < b { (a, b) } else { (b, a) }
                })
                .collect();
            e.sort();
            e
        };
        assert_eq!(labelled(&g2), labelled(&g));
        let p2 = read_partition(&pe, &g2).unwrap();
        assert_eq!(p2.community_count(), 5);
        assert_eq!(p2.community_of(g2.index_of("n5").unwrap()), p2.community_of(g2.index_of("n1").unwrap()));
    }

    #[test]
    fn parse_errors_name_the_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.edges");
        write_text(&path, "a b\nc\n").unwrap();
        let err = read_graph(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("bad.edges"));
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn digest_is_hex_sha256() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x");
        write_text(&path, "abc").unwrap();
        assert_eq!(
            sha256_file(&path).unwrap(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
