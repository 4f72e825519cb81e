use thiserror::Error;

/// Errors surfaced by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("exponent overflow: {0} exceeds 2^31")]
    Overflow(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cap of {cap} exceeded: {what}")]
    CapExceeded { what: String, cap: usize },
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    /// Short machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Config(_) => "config",
            Error::Arithmetic(_) => "arithmetic",
            Error::Overflow(_) => "overflow",
            Error::Shape(_) => "shape",
            Error::Degenerate(_) => "degenerate",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidStructure(_) => "invalid-structure",
            Error::InvalidInput(_) => "invalid-input",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::Resource(_) => "resource",
        }
    }

    /// True for errors caused by hitting a computational cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Resource(_) | Error::Overflow(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
