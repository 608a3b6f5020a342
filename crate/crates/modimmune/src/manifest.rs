//! Run manifests: everything needed to regenerate a job's outputs.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::io::{read_text, sha256_file, write_text};
use crate::jobs::Job;

pub const TOOL: &str = "modimmune";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    /// Master seed of the job, when it has one.
    pub seed: Option<u64>,
    /// The fully resolved job.
    pub job: Job,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<PathBuf>,
}

impl Manifest {
    pub fn for_job(job: &Job) -> CliResult<Manifest> {
        let inputs = job
            .inputs()
            .into_iter()
            .map(|path| Ok(InputDigest { sha256: sha256_file(&path)?, path }))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Manifest {
            tool: TOOL.into(),
            version: VERSION.into(),
            seed: job.seed(),
            job: job.clone(),
            inputs,
            outputs: job.outputs(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        write_text(path, &self.to_json())
    }

    pub fn load(path: &Path) -> CliResult<Manifest> {
        let manifest: Manifest = serde_json::from_str(&read_text(path)?)
            .map_err(|e| CliError::Input { path: path.into(), message: format!("not a run manifest: {e}") })?;
        if manifest.tool != TOOL {
            return Err(CliError::Input { path: path.into(), message: format!("written by `{}`", manifest.tool) });
        }
        Ok(manifest)
    }

    /// Fails when an input file changed since the manifest was written.
    pub fn verify_inputs(&self) -> CliResult<()> {
        for input in &self.inputs {
            let now = sha256_file(&input.path)?;
            if now != input.sha256 {
                return Err(CliError::Input {
                    path: input.path.clone(),
                    message: format!("content changed since the run (sha256 {} != {})", now, input.sha256),
                });
            }
        }
        Ok(())
    }
}

/// `<path>.manifest.json`, next to the primary output.
pub fn manifest_path(primary: &Path) -> PathBuf {
    let mut s = primary.as_os_str().to_os_string();
    s.push(".manifest.json");
    PathBuf::from(s)
}
