use alloc::boxed::Box;
use alloc::string::String;

use crate::report::Report;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("scalars from different fields cannot be combined")]
    FieldMismatch,
    #[error("set maps and linear maps cannot be combined")]
    ModeMismatch,
    #[error("input violates a required law: {}", .0.summary())]
    LawViolation(Box<Report>),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("{what} exceeds the limit {limit} (found {found})")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        found: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no S-invariant element {0}")]
    NotInvariant(usize),
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn law(report: Report) -> Self {
        Error::LawViolation(Box::new(report))
    }

    pub(crate) fn dims(context: &'static str, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context,
            expected,
            found,
        }
    }
}

/// Fails with `LawViolation` unless every entry of the report passed.
pub(crate) fn require(report: Report) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::law(report))
    }
}
