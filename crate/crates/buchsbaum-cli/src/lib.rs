//! Standard-library companion to `buchsbaum-core`: complex file formats,
//! JSON/text/CSV reports, and the command implementations behind the
//! `buchsbaum` binary.
//!
//! The split of responsibilities: everything mathematical lives in
//! `buchsbaum-core` (which is `no_std`); this crate only reads files,
//! renders results, and fans the census out over worker threads.
//!
//! # Exit-code contract
//!
//! The binary distinguishes three outcomes, stable across commands:
//!
//! * `0` — success (for `check`: the file parsed, whatever the verdicts),
//! * `1` — semantic failure: the target is not realizable, or a scan
//!   found a property violation,
//! * `2` — input error: unreadable or ill-formed file, malformed
//!   h-vector, out-of-range parameters.

pub mod formats;
pub mod report;
pub mod run;

use std::fmt;

/// Top-level error split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit code 2.
    Input(String),
    /// Well-formed request whose answer is "no" or whose verification
    /// failed: exit code 1.
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Semantic(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<formats::FormatError> for CliError {
    fn from(e: formats::FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<buchsbaum_core::realizer::RealizeError> for CliError {
    fn from(e: buchsbaum_core::realizer::RealizeError) -> Self {
        use buchsbaum_core::realizer::RealizeError;
        match e {
            // The user handed us a vector of the wrong shape.
            RealizeError::WrongDimension { .. } => CliError::Input(e.to_string()),
            // Well-formed target, negative or failed answer.
            RealizeError::Unrealizable { .. }
            | RealizeError::TooManyVertices { .. }
            | RealizeError::InvariantViolated { .. } => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<buchsbaum_core::oracle::OracleError> for CliError {
    fn from(e: buchsbaum_core::oracle::OracleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<buchsbaum_core::hvec::HvecError> for CliError {
    fn from(e: buchsbaum_core::hvec::HvecError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Parses `"1,5,14,-4"` into a length-4 h-vector with leading 1.
pub fn parse_hvector(s: &str) -> Result<buchsbaum_core::HVector, CliError> {
    let entries = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("h-vector entry {tok:?} is not an integer")))
        })
        .collect::<Result<Vec<i64>, CliError>>()?;
    if entries.len() != 4 {
        return Err(CliError::Input(format!(
            "h-vector must have exactly 4 comma-separated entries, got {}",
            entries.len()
        )));
    }
    Ok(buchsbaum_core::HVector::new(entries)?)
}
