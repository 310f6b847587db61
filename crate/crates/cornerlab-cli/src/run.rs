//! Configuration loading, report output and the exit-code contract shared by
//! every subcommand.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Errors that end a command before a verdict is reached.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Model(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// Exit status following the sysexits convention.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 64,
            CliError::Config(_) | CliError::Model(_) => 65,
            CliError::Io { .. } => 74,
        })
    }

    pub fn model(e: impl std::fmt::Display) -> Self {
        CliError::Model(e.to_string())
    }
}

/// Verdict of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Inconclusive,
    Disagreement,
}

impl Outcome {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Outcome::Pass => 0,
            Outcome::Disagreement => 1,
            Outcome::Inconclusive => 2,
        })
    }

    /// Disagreement dominates inconclusive, which dominates pass.
    pub fn worst(items: impl IntoIterator<Item = Outcome>) -> Outcome {
        items.into_iter().max().unwrap_or(Outcome::Pass)
    }
}

/// Settings common to every subcommand.
#[derive(Debug, Clone)]
pub struct Global {
    pub out: PathBuf,
    pub tol_scale: f64,
    pub seed: u64,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn overlay(base: &mut Value, patch: Value) {
    match (base, patch) {
        (Value::Object(b), Value::Object(p)) => {
            for (key, val) in p {
                match b.get_mut(&key) {
                    Some(slot) if slot.is_object() && val.is_object() => overlay(slot, val),
                    _ => {
                        b.insert(key, val);
                    }
                }
            }
        }
        (b, p) => *b = p,
    }
}

/// Loads a command configuration: defaults, overlaid with the file's fields.
pub fn load_config<T: Serialize + DeserializeOwned + Default>(path: Option<&Path>) -> Result<T, CliError> {
    let Some(path) = path else { return Ok(T::default()) };
    let mut base = serde_json::to_value(T::default()).map_err(|e| CliError::Config(e.to_string()))?;
    let patch = read_json(path)?;
    if !patch.is_object() {
        return Err(CliError::Config(format!("{}: top level must be a JSON object", path.display())));
    }
    overlay(&mut base, patch);
    serde_json::from_value(base).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// Report sink rooted at the output directory.
pub struct Output {
    dir: PathBuf,
}

impl Output {
    pub fn create(dir: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_owned(), source })?;
        Ok(Self { dir: dir.to_owned() })
    }

    pub fn write_text(&self, name: &str, text: &str) -> Result<PathBuf, CliError> {
        let path = self.dir.join(name);
        fs::write(&path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
        Ok(path)
    }

    /// Writes `report` with `schema_version`, `command` and `outcome` prepended.
    pub fn write_report(&self, name: &str, command: &str, outcome: Outcome, report: impl Serialize) -> Result<PathBuf, CliError> {
        let body = serde_json::to_value(report).map_err(|e| CliError::Model(e.to_string()))?;
        let mut top = Map::new();
        top.insert("schema_version".into(), SCHEMA_VERSION.into());
        top.insert("command".into(), command.into());
        top.insert("outcome".into(), serde_json::to_value(outcome).expect("outcome serializes"));
        match body {
            Value::Object(fields) => top.extend(fields),
            other => {
                top.insert("report".into(), other);
            }
        }
        let text = serde_json::to_string_pretty(&Value::Object(top)).map_err(|e| CliError::Model(e.to_string()))?;
        self.write_text(name, &(text + "\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlay_merges_nested_objects() {
        let mut base = serde_json::json!({"k": 1.0, "mesh": {"a": 1, "b": 2}});
        overlay(&mut base, serde_json::json!({"mesh": {"b": 5}, "extra": true}));
        assert_eq!(base, serde_json::json!({"k": 1.0, "mesh": {"a": 1, "b": 5}, "extra": true}));
    }

    #[test]
    fn worst_outcome() {
        assert_eq!(Outcome::worst([]), Outcome::Pass);
        assert_eq!(Outcome::worst([Outcome::Pass, Outcome::Inconclusive]), Outcome::Inconclusive);
        assert_eq!(Outcome::worst([Outcome::Disagreement, Outcome::Inconclusive]), Outcome::Disagreement);
    }
}
