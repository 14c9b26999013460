//! Crate-wide error type.
//!
//! Errors fall into two families, and the split drives the CLI exit codes:
//! *invalid input* (malformed partition text, a selector out of range, an
//! `n` outside a routine's supported window) maps to exit code 2, while
//! everything else (I/O, a verification that could not be carried out)
//! maps to exit code 1.

use std::io;

use thiserror::Error;

/// Any error produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed partition text or an invalid list of parts.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Malformed connection-set selector text.
    #[error("invalid selector: {0}")]
    InvalidSelector(String),

    /// Structurally valid input that violates a routine's preconditions
    /// (mismatched `n`, an index out of range, unsupported `n` window).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The brute-force oracle was asked for a group too large to expand.
    #[error("oracle capacity exceeded: {0}")]
    OracleCapacity(String),

    /// A character-cache file that cannot be used (bad header, bad entry).
    #[error("unusable character cache: {0}")]
    Cache(String),

    /// Exact and numeric computations disagree on the shape of a spectrum;
    /// the comparison itself cannot proceed.
    #[error("structural mismatch between spectra: {0}")]
    StructuralMismatch(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),

    /// Underlying I/O failure (cache files, numeric dumps).
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    /// `true` for errors caused by bad input rather than by a failed
    /// computation. The CLI reports these with exit code 2.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::InvalidPartition(_)
                | Error::InvalidSelector(_)
                | Error::InvalidInput(_)
                | Error::OracleCapacity(_)
        )
    }
}
