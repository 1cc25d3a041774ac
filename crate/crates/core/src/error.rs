use thiserror::Error;

use crate::hypergeom::ConditionReport;

/// Errors raised by the evaluators and the identity registry.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid precision context: {0}")]
    Context(String),

    #[error("precision mismatch: values carry {left} and {right} working bits")]
    ContextMismatch { left: usize, right: usize },

    #[error("arity error: {0}")]
    Arity(String),

    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("hypotheses not satisfied: {}", .0.summary())]
    Precondition(Box<ConditionReport>),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("configuration error: {0}")]
    Configuration(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// True for errors that stem from bad user input rather than numerics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::Parse(_)
                | Error::Context(_)
                | Error::Arity(_)
                | Error::Precondition(_)
                | Error::UnknownIdentity(_)
                | Error::Configuration(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
