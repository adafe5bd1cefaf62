use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe size must be between 1 and {max}, got {size}")]
    InvalidSize { size: usize, max: usize },

    #[error("element {index} is out of range for a universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("universe of size {size} exceeds the exhaustive-scan cap of {cap}")]
    SizeTooLarge { size: usize, cap: usize },

    #[error("the subset must be nonempty")]
    EmptySubset,

    #[error("model has no join table")]
    MissingJoin,

    #[error("model has no zero constant")]
    MissingZero,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("relation is not a pre-order")]
    NotPreorder,

    #[error("relational and equational theta disagree on ({0}, {1})")]
    ThetaViewDisagreement(usize, usize),

    #[error("theta is not a congruence of the join reduct, witness {0:?}")]
    NotJoinCongruence(Vec<usize>),

    #[error("partition does not match theta of the algebra")]
    PartitionMismatch,

    #[error("operation {op} is not well defined on classes, witness {witness:?}")]
    NotWellDefined { op: &'static str, witness: Vec<usize> },

    #[error("size {size} exceeds the cap of {cap} for class {class}")]
    CapExceeded { size: usize, cap: usize, class: String },

    #[error("unknown model class `{0}`")]
    UnknownClass(String),

    #[error("cannot parse property: {0}")]
    PropertyParse(String),

    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),

    #[error("invalid model JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
