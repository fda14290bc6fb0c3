use thiserror::Error;

use crate::exact::Scalar;
use crate::report::Witness;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator is not invertible")]
    NotInvertible,

    #[error("eigenvalue roots must be distinct")]
    DegenerateRoots,

    #[error("sign must be 1 or -1, got {0}")]
    InvalidSign(Scalar),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("not a left unit: L(e,e) != id for e = {0}")]
    NotLeftUnit(String),

    #[error("construction invalid: {what}{}", .witness.as_ref().map(|w| format!(" (witness {w})")).unwrap_or_default())]
    ConstructionInvalid { what: String, witness: Option<Witness> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisViolation(msg.into())
    }

    pub(crate) fn invalid(what: impl Into<String>, witness: Option<Witness>) -> Self {
        Error::ConstructionInvalid {
            what: what.into(),
            witness,
        }
    }
}
