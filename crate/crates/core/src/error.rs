use thiserror::Error;

/// Errors raised while building or evaluating an approximation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: lower bound must be below upper bound")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("partition size must be at least 1")]
    ZeroPartition,

    #[error("quantum number must be at least 1")]
    ZeroQuantumNumber,

    #[error("function returned non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("empty input sequence")]
    EmptyInput,

    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("point {value} outside [{lo}, {hi}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("degenerate value range: all node values equal {0}")]
    DegenerateRange(f64),

    #[error("denominator {value:e} below floor {floor:e} at x = {x}")]
    DenominatorUnderflow { x: f64, value: f64, floor: f64 },

    #[error("normalization constant {0:e} is not positive")]
    NonPositiveNormalization(f64),

    #[error("closed-form weights are only defined for the triangular family")]
    ClosedFormNeedsTriangular,

    #[error("invalid quadrature: {0}")]
    InvalidQuadrature(String),

    #[error("inconsistent grid: expected {expected} cells, found {found}")]
    InconsistentGrid { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
