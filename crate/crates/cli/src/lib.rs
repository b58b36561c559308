//! IO, file formats, and the verification suites behind the `multiplicity`
//! command line. The computational core lives in `multiplicity-core`; this
//! crate only adds serialization and orchestration.

pub mod formats;
pub mod verify;

/// Version stamp embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit codes of the command line.
pub mod exit_codes {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const LIMIT_EXCEEDED: i32 = 3;
}

use std::fmt;

/// Top-level command error carrying its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: exit_codes::INVALID_INPUT, message: message.into() }
    }

    pub fn limit(message: impl Into<String>) -> Self {
        CliError { code: exit_codes::LIMIT_EXCEEDED, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(format!("io error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::input(format!("json error: {e}"))
    }
}

impl From<multiplicity_core::enumeration::EnumerationError> for CliError {
    fn from(e: multiplicity_core::enumeration::EnumerationError) -> Self {
        use multiplicity_core::enumeration::EnumerationError;
        match &e {
            EnumerationError::LimitExceeded { .. } => CliError::limit(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<multiplicity_core::geometry::GeometryError> for CliError {
    fn from(e: multiplicity_core::geometry::GeometryError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<multiplicity_core::constructions::BuildError> for CliError {
    fn from(e: multiplicity_core::constructions::BuildError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<multiplicity_core::weighted::WeightError> for CliError {
    fn from(e: multiplicity_core::weighted::WeightError) -> Self {
        use multiplicity_core::enumeration::EnumerationError;
        use multiplicity_core::weighted::WeightError;
        match &e {
            WeightError::Enumeration(EnumerationError::LimitExceeded { .. }) => {
                CliError::limit(e.to_string())
            }
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<multiplicity_core::convex_tour::TourError> for CliError {
    fn from(e: multiplicity_core::convex_tour::TourError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<multiplicity_core::bounds::BoundError> for CliError {
    fn from(e: multiplicity_core::bounds::BoundError) -> Self {
        CliError::input(e.to_string())
    }
}
