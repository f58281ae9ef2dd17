//! Clustering and feature file readers.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use splitmerge::{Clustering, FeatureMatrix};

use crate::CliError;

/// A clustering read from disk. `ids` is present for `id<TAB>label` files.
#[derive(Debug, Clone)]
pub struct ClusteringFile {
    pub clustering: Clustering,
    pub ids: Option<Vec<String>>,
}

impl ClusteringFile {
    /// Reorders `self` onto the point order of `reference` when both carry ids.
    pub fn align_to(self, reference: &ClusteringFile) -> Result<ClusteringFile, CliError> {
        let (Some(ids), Some(order)) = (&self.ids, &reference.ids) else {
            return Ok(self);
        };
        if ids == order {
            return Ok(self);
        }
        let position: HashMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        if position.len() != order.len() {
            return Err(CliError::Input(format!(
                "{} point ids vs {} in the reference",
                position.len(),
                order.len()
            )));
        }
        let labels = order
            .iter()
            .map(|id| {
                position
                    .get(id.as_str())
                    .map(|&i| self.clustering.label_of(i))
                    .ok_or_else(|| CliError::Input(format!("point `{id}` missing")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ClusteringFile {
            clustering: Clustering::from_labels(&labels)
                .map_err(|e| CliError::Input(e.to_string()))?,
            ids: Some(order.clone()),
        })
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_clustering(path: &Path) -> Result<ClusteringFile, CliError> {
    parse_clustering(&read(path)?).map_err(|e| e.in_file(path))
}

pub fn read_features(path: &Path) -> Result<FeatureMatrix, CliError> {
    parse_features(&read(path)?).map_err(|e| e.in_file(path))
}

/// One label per line, or `id<TAB>label` per line. `#` comments and blank
/// lines are skipped.
pub fn parse_clustering(text: &str) -> Result<ClusteringFile, CliError> {
    let rows: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(i, line)| (i, line.split('\t').map(str::trim).collect()))
        .collect();
    let Some((_, first)) = rows.first() else {
        return Err(CliError::Input("no points".into()));
    };
    let width = first.len();
    if let Some((line, row)) = rows.iter().find(|(_, r)| r.len() != width) {
        return Err(CliError::Input(format!(
            "line {line}: {} columns, expected {width}",
            row.len()
        )));
    }
    match width {
        1 => {
            let labels: Vec<&str> = rows.iter().map(|(_, r)| r[0]).collect();
            let clustering =
                Clustering::from_labels(&labels).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(ClusteringFile {
                clustering,
                ids: None,
            })
        }
        2 => {
            let mut seen = HashMap::with_capacity(rows.len());
            let mut ids = Vec::with_capacity(rows.len());
            let mut labels = Vec::with_capacity(rows.len());
            for (line, row) in &rows {
                if let Some(earlier) = seen.insert(row[0], *line) {
                    return Err(CliError::Input(format!(
                        "line {line}: point `{}` already listed on line {earlier}",
                        row[0]
                    )));
                }
                ids.push(row[0].to_string());
                labels.push(row[1]);
            }
            let clustering =
                Clustering::from_labels(&labels).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(ClusteringFile {
                clustering,
                ids: Some(ids),
            })
        }
        w => Err(CliError::Input(format!(
            "{w} columns per line; expected 1 or 2"
        ))),
    }
}

/// Comma-separated rows, one per point. A first row that does not parse as
/// numbers is taken as a header.
pub fn parse_features(text: &str) -> Result<FeatureMatrix, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(e.to_string()))?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(row) => {
                if let Some(bad) = row.iter().find(|v| !v.is_finite()) {
                    return Err(CliError::Input(format!(
                        "line {line}: non-finite value {bad}"
                    )));
                }
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(CliError::Input(format!(
                            "line {line}: {} columns, expected {}",
                            row.len(),
                            first.len()
                        )));
                    }
                }
                rows.push(row);
            }
            Err(_) if i == 0 => {}
            Err(e) => return Err(CliError::Input(format!("line {line}: {e}"))),
        }
    }
    if rows.is_empty() {
        return Err(CliError::Input("no feature rows".into()));
    }
    FeatureMatrix::from_rows(rows).map_err(|e| CliError::Input(e.to_string()))
}
