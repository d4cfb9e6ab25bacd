use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?} (expected p or p/q)")]
    BadRational(String),
    #[error("malformed parameter polynomial: {0}")]
    BadParamPoly(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown model name {0:?}")]
    UnknownModel(String),
    #[error("invalid generator: {0}")]
    BadGenerator(String),
    #[error("operator does not preserve the space: u^{p} v^{q} maps outside (offending monomial u^{out_p} v^{out_q})")]
    NotInvariant { p: u32, q: u32, out_p: u32, out_q: u32 },
    #[error("matrix is not triangular in the grading order (entry {row},{col} is nonzero)")]
    NotTriangular { row: usize, col: usize },
    #[error("repeated diagonal value blocks back-substitution for basis index {index}")]
    DegenerateChain { index: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size guard: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
