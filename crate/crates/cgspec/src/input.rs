//! Group sources: catalog specs, Cayley-table JSON files, and permutation
//! generator files.

use std::fs;
use std::path::{Path, PathBuf};

use cgspec_core::{catalog, GroupTable, Permutation, CATALOG_ORDER_CAP};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Catalog(String),
    Cayley(PathBuf),
    Generators(PathBuf),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    #[serde(default)]
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

pub fn load(source: &GroupSource) -> Result<GroupTable, CliError> {
    match source {
        GroupSource::Catalog(spec) => Ok(catalog(spec)?),
        GroupSource::Cayley(path) => parse_cayley(path, &read(path)?),
        GroupSource::Generators(path) => parse_generators(path, &read(path)?),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn malformed(path: &Path, reason: impl ToString) -> CliError {
    CliError::Malformed {
        path: path.to_path_buf(),
        reason: reason.to_string(),
    }
}

/// `{"names": [...], "table": [[...]]}` with 0-based entries; `names` is
/// optional.
pub fn parse_cayley(path: &Path, text: &str) -> Result<GroupTable, CliError> {
    let file: CayleyFile = serde_json::from_str(text).map_err(|e| malformed(path, e))?;
    Ok(GroupTable::from_cayley(file.table, file.names)?)
}

/// A JSON array of cycle-notation strings, or one permutation per line
/// (blank lines and `#` comments skipped). Points are 1-based; all
/// generators are padded to the largest degree.
pub fn parse_generators(path: &Path, text: &str) -> Result<GroupTable, CliError> {
    let lines: Vec<String> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| malformed(path, e))?
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect()
    };
    let perms = lines
        .iter()
        .map(|l| Permutation::parse_cycles(l, None))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| malformed(path, e))?;
    let degree = perms.iter().map(Permutation::degree).max().unwrap_or(0);
    let perms: Vec<Permutation> = perms.iter().map(|p| p.padded(degree)).collect();
    Ok(GroupTable::from_generators_capped(
        &perms,
        CATALOG_ORDER_CAP,
    )?)
}
