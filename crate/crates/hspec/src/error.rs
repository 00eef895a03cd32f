//! One error type for everything the frontend can reject: unreadable files,
//! malformed input lines, bad flag combinations, and failures bubbling up
//! from the core library.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A text-format parse failure; `src` names the file (or `<edges>`,
    /// `<graph6>` for inline input) and `line` is 1-based.
    #[error("{src}:{line}: {msg}")]
    Parse { src: String, line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Graph(#[from] hspec_core::GraphError),

    #[error(transparent)]
    Eigen(#[from] hspec_core::EigenError),

    #[error(transparent)]
    Check(#[from] hspec_core::CheckError),

    #[error("family: {0}")]
    Family(hspec_core::FamilyError),

    /// A construction identity that must hold failed; this indicates a bug,
    /// not bad input, so it is surfaced loudly instead of unwrapped.
    #[error("internal consistency: {0}")]
    Consistency(#[from] hspec_core::ConsistencyError),
}

impl CliError {
    pub fn parse(src: &str, line: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse { src: src.to_string(), line, msg: msg.into() }
    }
}

impl From<hspec_core::FamilyError> for CliError {
    fn from(e: hspec_core::FamilyError) -> CliError {
        CliError::Family(e)
    }
}
