use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("target error: {0}")]
    Target(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("registry error: {0}")]
    Registry(String),
    #[error("index {index} out of range for length {len}")]
    Index { index: usize, len: usize },
    #[error("reference error: {0}")]
    Reference(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("circuit contains a measurement; statevector runs require a gate-only circuit")]
    MeasurementInStatevector,
    #[error("classical register error: {0}")]
    Creg(String),
    #[error("ordering error: {0}")]
    Ordering(String),
    #[error("{0}")]
    Display(String),
    #[error("length mismatch: {0}")]
    Length(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("aliasing error: {0}")]
    Aliasing(String),
    #[error("request error: {0}")]
    Request(String),
    #[error("no unique candidate after {runs} runs ({candidates} candidates remain)")]
    NonConvergence {
        runs: usize,
        candidates: usize,
        unique_results: Vec<String>,
    },
}

impl Error {
    /// True for errors raised while reading qasm text.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
