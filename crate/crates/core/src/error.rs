use thiserror::Error;

use crate::taut::Ambient;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: Ambient, right: Ambient },

    #[error("invalid ambient: {0}")]
    Ambient(String),

    #[error("generator {generator} is out of range for ambient {ambient}")]
    GeneratorOutOfRange { generator: String, ambient: Ambient },

    #[error("class still depends on marked points: {0}")]
    NotPushedForward(String),

    #[error("constant term of a Chern class must be 1, found {0}")]
    NotUnital(String),

    #[error("monomial {0} is not in reduced normal form")]
    NotReduced(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("model error in `{label}`: {message} [{citation}]")]
    Model {
        label: String,
        message: String,
        citation: String,
    },

    #[error("solver error: {0}")]
    Solver(String),

    #[error("state error: {0}")]
    State(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn at_stage(self, stage: &str) -> Self {
        Error::Stage {
            stage: stage.to_string(),
            source: Box::new(self),
        }
    }

    /// Strips stage wrappers and returns the originating error.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }
}
