use thiserror::Error;

use crate::report::Report;

/// Errors raised by constructions, lookups and parsers.
///
/// Law violations found by the checkers are *not* errors; they are returned
/// as [`Report`] data. An error means a computation could not be carried out.
#[derive(Debug, Error)]
pub enum Error {
    #[error("morphisms {f} and {g} are not composable (target of {f} is {f_target}, source of {g} is {g_source})")]
    NotComposable {
        f: String,
        g: String,
        f_target: String,
        g_source: String,
    },

    #[error("unknown object: {0}")]
    UnknownObject(String),

    #[error("unknown morphism: {0}")]
    UnknownMorphism(String),

    #[error("lookup failed: {0}")]
    Lookup(String),

    #[error("wiring error at stage `{stage}`: {detail}")]
    Wiring { stage: String, detail: String },

    #[error("{0} is not an endomorphism")]
    NotEndomorphism(String),

    #[error("morphism {0} is not invertible")]
    NotInvertible(String),

    #[error("index {0} is not in the index category")]
    Index(String),

    #[error("size cap exceeded: {what} would need {needed} entries (cap {cap})")]
    SizeCap {
        what: String,
        needed: u128,
        cap: u128,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("refused: {reason}")]
    Refused {
        reason: String,
        reports: Vec<Report>,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
