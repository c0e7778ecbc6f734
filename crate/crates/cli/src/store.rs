//! Append-only JSON-lines store of maximizer records.

use std::fs::OpenOptions;
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::Path;

use qext_core::rewire::MaximizerRecord;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("store i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("store line {line} is not a record: {source}")]
    Corrupt {
        line: usize,
        source: serde_json::Error,
    },

    #[error("regression: line {line} already holds {existing} for this key, new record has {new}")]
    RegressionConflict {
        line: usize,
        existing: String,
        new: String,
    },
}

impl StoreError {
    pub fn kind(&self) -> &'static str {
        match self {
            StoreError::Io(_) => "io-error",
            StoreError::Corrupt { .. } => "store-corrupt",
            StoreError::RegressionConflict { .. } => "regression-conflict",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Appended {
    New,
    /// An identical record was already stored; nothing written.
    AlreadyPresent,
}

/// Append `record` unless its key is already stored. A stored record with
/// the same key but a different `best_graph6` is a regression and is left
/// untouched. The whole file is locked for the duration.
pub fn store_append(record: &MaximizerRecord, path: &Path) -> Result<Appended, StoreError> {
    let mut file = OpenOptions::new()
        .read(true)
        .append(true)
        .create(true)
        .open(path)?;
    file.lock()?;
    let mut text = String::new();
    file.read_to_string(&mut text)?;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let old: MaximizerRecord =
            serde_json::from_str(line).map_err(|source| StoreError::Corrupt {
                line: i + 1,
                source,
            })?;
        if old.key() != record.key() {
            continue;
        }
        if old.best_graph6 == record.best_graph6 {
            return Ok(Appended::AlreadyPresent);
        }
        return Err(StoreError::RegressionConflict {
            line: i + 1,
            existing: old.best_graph6,
            new: record.best_graph6.clone(),
        });
    }
    file.seek(SeekFrom::End(0))?;
    if !text.is_empty() && !text.ends_with('\n') {
        file.write_all(b"\n")?;
    }
    let mut line = serde_json::to_string(record).expect("records serialize");
    line.push('\n');
    file.write_all(line.as_bytes())?;
    file.flush()?;
    Ok(Appended::New)
}
