//! Flat `key = value` configuration files.
//!
//! One setting per line; `#` starts a comment line; blank lines are ignored.
//! Keys are the long flag names, and `_` may be written for `-`. List values
//! (strategies, coverages) are comma-separated. Command-line flags override
//! file values, which override built-in defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{CliError, CliResult};
use crate::io::read_text;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    path: Option<PathBuf>,
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<ConfigFile> {
        let mut cfg = ConfigFile::parse(&read_text(path)?).map_err(|m| CliError::Usage(format!("{}: {m}", path.display())))?;
        cfg.path = Some(path.to_path_buf());
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<ConfigFile, String> {
        let mut values = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
            let key = key.trim().to_ascii_lowercase().replace('_', "-");
            if key.is_empty() {
                return Err(format!("line {}: empty key", lineno + 1));
            }
            if values.insert(key.clone(), value.trim().to_string()).is_some() {
                return Err(format!("line {}: `{key}` set twice", lineno + 1));
            }
        }
        Ok(ConfigFile { path: None, values })
    }

    fn origin(&self) -> String {
        match &self.path {
            Some(p) => p.display().to_string(),
            None => "config".into(),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Parses `key` if present.
    pub fn parsed<T>(&self, key: &str) -> CliResult<Option<T>>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| CliError::Usage(format!("{}: invalid `{key}` value `{v}`: {e}", self.origin())))
            })
            .transpose()
    }

    /// Parses a comma-separated list under `key` if present.
    pub fn list<T>(&self, key: &str) -> CliResult<Option<Vec<T>>>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.split(',')
                    .map(|item| {
                        item.trim().parse::<T>().map_err(|e| {
                            CliError::Usage(format!("{}: invalid `{key}` item `{}`: {e}", self.origin(), item.trim()))
                        })
                    })
                    .collect()
            })
            .transpose()
    }

    /// Rejects keys that the running command does not understand.
    pub fn check_known(&self, known: &[&str]) -> CliResult<()> {
        match self.values.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(CliError::Usage(format!("{}: unknown key `{k}`", self.origin()))),
            None => Ok(()),
        }
    }
}
