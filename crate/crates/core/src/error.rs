use thiserror::Error;

/// Errors raised by polytope construction and the counting formulas.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("polytope is not simple: {0}")]
    NotSimple(String),
    #[error("direction is not generic: {0}")]
    Genericity(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

impl Error {
    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::DegenerateGeometry(_) => "degenerate_geometry",
            Error::NotSimple(_) => "not_simple",
            Error::Genericity(_) => "genericity",
            Error::Resource(_) => "resource",
            Error::InternalConsistency(_) => "internal_consistency",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
