//! Bundled scenario data and its loader.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Overrides the bundled data with the directory `$NODALCOV_HOME/data`.
pub const HOME_VAR: &str = "NODALCOV_HOME";

const EMBEDDED: &[(&str, &str)] = &[
    ("x40/scenario.toml", include_str!("../data/x40/scenario.toml")),
    ("x40/nodes.txt", include_str!("../data/x40/nodes.txt")),
    ("x40/tropes.txt", include_str!("../data/x40/tropes.txt")),
    ("y48/scenario.toml", include_str!("../data/y48/scenario.toml")),
    ("y48/B.txt", include_str!("../data/y48/B.txt")),
    ("y48/C.txt", include_str!("../data/y48/C.txt")),
    ("y48/D.txt", include_str!("../data/y48/D.txt")),
];

#[derive(Debug, Error)]
pub enum DataError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("missing data file {0}")]
    Missing(String),
    #[error("checksum mismatch for {file}: expected {expected}, found {found}")]
    Checksum {
        file: String,
        expected: String,
        found: String,
    },
    #[error("bad scenario config {file}: {message}")]
    Config { file: String, message: String },
}

/// Where data files come from.
#[derive(Clone, Debug)]
pub enum DataSource {
    Embedded,
    Dir(PathBuf),
}

impl DataSource {
    pub fn from_env() -> Self {
        match std::env::var_os(HOME_VAR) {
            Some(home) => DataSource::Dir(PathBuf::from(home).join("data")),
            None => DataSource::Embedded,
        }
    }

    pub fn read(&self, rel: &str) -> Result<String, DataError> {
        match self {
            DataSource::Embedded => EMBEDDED
                .iter()
                .find(|(k, _)| *k == rel)
                .map(|(_, v)| v.to_string())
                .ok_or_else(|| DataError::Missing(rel.into())),
            DataSource::Dir(dir) => {
                let path = dir.join(rel);
                std::fs::read_to_string(&path).map_err(|source| DataError::Io {
                    path: path.display().to_string(),
                    source,
                })
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub description: String,
    pub variables: Vec<String>,
    /// `[name, minimal polynomial]` in adjunction order.
    pub tower: Vec<(String, String)>,
    #[serde(default)]
    pub macros: Vec<(String, String)>,
    pub polynomials: BTreeMap<String, String>,
    /// sha256 of each data file, keyed by its name in the scenario directory.
    pub files: BTreeMap<String, String>,
    pub checks: Vec<String>,
    #[serde(default)]
    pub base: Option<BaseInvariants>,
}

/// Invariants of the surface being covered.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseInvariants {
    pub pg: i64,
    pub q: i64,
    pub k2: i64,
}

/// A scenario config with the contents of its verified data files.
#[derive(Clone, Debug)]
pub struct ScenarioData {
    pub config: ScenarioConfig,
    pub files: BTreeMap<String, String>,
}

impl ScenarioData {
    pub fn file(&self, name: &str) -> Result<&str, DataError> {
        self.files
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| DataError::Missing(format!("{}/{name}", self.config.name)))
    }

    pub fn polynomial(&self, name: &str) -> Result<&str, DataError> {
        self.config
            .polynomials
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| DataError::Missing(format!("{}: polynomial {name}", self.config.name)))
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub const SCENARIOS: [&str; 2] = ["x40", "y48"];

pub fn load(name: &str, source: &DataSource) -> Result<ScenarioData, DataError> {
    if !SCENARIOS.contains(&name) {
        return Err(DataError::UnknownScenario(name.into()));
    }
    let cfg_path = format!("{name}/scenario.toml");
    let text = source.read(&cfg_path)?;
    let config: ScenarioConfig = toml::from_str(&text).map_err(|e| DataError::Config {
        file: cfg_path.clone(),
        message: e.to_string(),
    })?;
    if config.name != name {
        return Err(DataError::Config {
            file: cfg_path,
            message: format!("declares name {:?}", config.name),
        });
    }
    let mut files = BTreeMap::new();
    for (file, expected) in &config.files {
        let rel = format!("{name}/{file}");
        let body = source.read(&rel)?;
        let found = sha256_hex(&body);
        if &found != expected {
            return Err(DataError::Checksum {
                file: rel,
                expected: expected.clone(),
                found,
            });
        }
        files.insert(file.clone(), body);
    }
    Ok(ScenarioData { config, files })
}

/// Labeled point lists: a `[label]` line opens a section, every other
/// nonblank line is one point with comma-separated coordinates.
pub fn parse_point_sections(text: &str) -> Result<Vec<(String, Vec<Vec<String>>)>, DataError> {
    let mut out: Vec<(String, Vec<Vec<String>>)> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(label) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push((label.trim().to_string(), Vec::new()));
            continue;
        }
        let Some(section) = out.last_mut() else {
            return Err(DataError::Config {
                file: "points".into(),
                message: format!("line {} precedes any [section]", k + 1),
            });
        };
        section.1.push(line.split(',').map(|c| c.trim().to_string()).collect());
    }
    Ok(out)
}

/// Nonblank lines that are not comments.
pub fn parse_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}
