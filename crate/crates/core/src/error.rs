use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("invalid diagram: {0}")]
    Invalid(#[from] Violation),

    #[error("{0} is only defined for knots (diagram has {1} components)")]
    NotAKnot(&'static str, usize),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("breadth of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("inexact polynomial division in determinant (internal error)")]
    InexactDivision,

    #[error(
        "parity mismatch between symmetric and intersection forms at ({0}, {1}) (internal error)"
    )]
    Parity(usize, usize),

    #[error("Fox-calculus minor vanishes identically; presentation is malformed")]
    OracleFailure,

    #[error(
        "Alexander polynomial mismatch: Seifert blocks give {blocks}, Fox calculus gives {fox}"
    )]
    OracleMismatch { blocks: String, fox: String },

    #[error("matrix is not square: {0}")]
    NotSquare(String),

    #[error("{0}")]
    Usage(String),
}

/// A violated diagram invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("crossing {crossing} repeats arc {label}")]
    RepeatedInCrossing { crossing: usize, label: i64 },
    #[error("arc label {label} outside 1..={max}")]
    LabelOutOfRange { label: i64, max: usize },
    #[error("arc {label} occurs {count} times (expected exactly twice)")]
    LabelCount { label: i64, count: usize },
    #[error("component labels {lo}..={hi} are not consecutive")]
    NonConsecutiveComponent { lo: u32, hi: u32 },
    #[error("under-strand at crossing {crossing} runs against the arc order")]
    UnderStrandOrientation { crossing: usize },
    #[error("over-strand at crossing {crossing} is not a pair of consecutive arcs")]
    OverStrandOrientation { crossing: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("crossing index {0} out of range")]
    CrossingIndex(usize),
    #[error("braid generator {generator} invalid for {strands} strands")]
    BraidGenerator { generator: i32, strands: usize },
}
