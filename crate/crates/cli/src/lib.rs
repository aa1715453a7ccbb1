//! Library side of the `spirallike` command: file formats, reports, plots and command bodies.

use std::path::Path;

pub mod commands;
pub mod format;
pub mod mapfile;
pub mod plot;
pub mod report;

pub use mapfile::MapFile;
pub use plot::{PlotFormat, PlotSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}, column {column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] spirallike::Error),
    #[error("{file}: {source}")]
    InFile {
        file: String,
        #[source]
        source: Box<CliError>,
    },
}

impl CliError {
    pub fn in_file(self, path: &Path) -> Self {
        CliError::InFile { file: path.display().to_string(), source: Box::new(self) }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Text for stdout plus the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}
