use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("invalid symplectic weight {0:?}: entries must be non-increasing and non-negative")]
    InvalidSpWeight(Vec<i64>),

    #[error("S^{power} requested but the residual bundle has rank {s_rank}; only rank-2 plethysm is supported")]
    UnsupportedSPower { power: u32, s_rank: usize },

    #[error("negative multiplicity {mult} on {term}: virtual classes have no cohomology")]
    NegativeMultiplicity { term: String, mult: i64 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("probe certificate absent: {0}")]
    ProbeCertificateAbsent(String),

    #[error("unknown class name `{0}`")]
    UnknownClass(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
