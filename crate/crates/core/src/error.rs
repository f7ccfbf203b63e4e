use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("coefficient domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },

    #[error("ring context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("free module rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} is not a power of the characteristic {1}")]
    NotAFrobeniusPower(u64, u64),

    #[error("characteristic must be 0 or a prime, got {0}")]
    BadCharacteristic(u64),

    #[error("operation requires positive characteristic, ring has characteristic {0}")]
    NeedsPrimeChar(u64),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by zero element")]
    DivisionByZero,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate recheck failed: {0}")]
    CertificateRecheck(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
