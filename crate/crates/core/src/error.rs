use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("map must have degree {expected}, found degree {found}")]
    WrongDegree { expected: u8, found: u8 },

    #[error("matrix is singular")]
    Singular,

    #[error("alpha must be nonzero")]
    ZeroAlpha,

    #[error("precondition violated: {what}")]
    Precondition {
        what: String,
        report: Option<Box<CheckReport>>,
    },

    #[error("no odd annihilator element (input is not a valid pseudo-euclidean algebra)")]
    NoOddAnnihilator,

    #[error("odd dimension {0} is at most 1")]
    OddDimensionTooSmall(usize),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }

    pub(crate) fn mismatch(expected: usize, found: usize) -> Self {
        Error::DimensionMismatch { expected, found }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
