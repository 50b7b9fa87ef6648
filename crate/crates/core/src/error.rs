use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expression is not homogeneous in weight")]
    InhomogeneousWeight,
    #[error("expression is not homogeneous in the filtration degrees")]
    Inhomogeneous,
    #[error("operation needs a nonzero input")]
    ZeroInput,
    #[error("generator index {index} outside 1..={rank}")]
    IndexOutOfRange { index: u8, rank: u8 },
    #[error("field is not an eigenvector of the given conformal vector")]
    NotEigenvector,
    #[error("sections are only defined for rank 2, got rank {0}")]
    WrongRank(u8),
    #[error("product {0} is not in the span of normally ordered section words")]
    ClosureFailure(String),
    #[error("word is not standard: {0}")]
    NotStandard(String),
    #[error("linear system has no solution: {0}")]
    InconsistentSystem(String),
    #[error("requested truncation {requested} exceeds supported order {supported}")]
    TruncationTooDeep { requested: i32, supported: i32 },
    #[error("pair ({0}, {1}) is not in a known sign class")]
    UnknownPairClass(String, String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("result cache {path}: {message}")]
    Cache { path: String, message: String },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}
