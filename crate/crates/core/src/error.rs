use thiserror::Error;

/// Failures that are not law violations: malformed input, broken
/// preconditions, I/O. Law failures are reported through `CheckReport`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: expected {expected} entries, found {found}")]
    Dimension {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what}: entry {value} at position {position} is outside 0..{order}")]
    OutOfRange {
        what: String,
        position: usize,
        value: usize,
        order: usize,
    },
    #[error("order must be positive")]
    EmptyCarrier,
    #[error("subset must contain the zero element")]
    MissingZero,
    #[error("invalid algebra `{name}`: {reason}")]
    InvalidAlgebra { name: String, reason: String },
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("algebra `{0}` is not reduced")]
    NotReduced(String),
    #[error("action not well-defined on cosets: {0}")]
    QuotientNotWellDefined(String),
    #[error("semi-direct product candidate is invalid: {0}")]
    CandidateInvalid(String),
    #[error("invalid split extension: {0}")]
    InvalidExtension(String),
    #[error("j({b})^{a} - j({b}) is not in the image of i")]
    NotInKernelImage { b: usize, a: usize },
    #[error("ill-sorted term in law `{law}`: {reason}")]
    IllSorted { law: String, reason: String },
    #[error("search space of {size} candidates exceeds the exhaustive cap {cap}; a sampling seed is required")]
    SeedRequired { size: u128, cap: u64 },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("{role} is `{expected}` but the triple file names `{found}`")]
    NameMismatch {
        role: String,
        expected: String,
        found: String,
    },
    #[error("duplicate algebra name `{0}`")]
    DuplicateAlgebra(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
