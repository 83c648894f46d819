use thiserror::Error;

/// Errors raised by group, field, and grading constructions.
///
/// Verification failures are not errors; they are reported through
/// [`crate::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("invalid conductor: {0}")]
    InvalidConductor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("supports clash: {0}")]
    SupportClash(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("element is not in the graded algebra")]
    NotInAlgebra,
    #[error("singular form matrix")]
    SingularForm,
    #[error("form matrix is neither symmetric nor skew-symmetric")]
    MixedSymmetry,
    #[error("subspace is not stable under the involution")]
    NotInvolutionStable,
    #[error("incompatible tuple: {0}")]
    IncompatibleTuple(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("algebra too small: {0}")]
    TooSmall(String),
    #[error("bad marker: {0}")]
    BadMarker(String),
    #[error("grading is not an involution grading: {0}")]
    NotInvolutionGrading(String),
    #[error("component not stable under the outer action: {0}")]
    NotStable(String),
    #[error("outer action squares to the wrong scalar: {0}")]
    BadSquare(String),
    #[error("not an outer action: {0}")]
    NotOuter(String),
    #[error("bad embedding: {0}")]
    BadEmbedding(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable name of the variant, used in machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::GroupMismatch(_) => "GroupMismatch",
            Error::InvalidConductor(_) => "InvalidConductor",
            Error::DivisionByZero => "DivisionByZero",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::InvalidTuple(_) => "InvalidTuple",
            Error::SupportClash(_) => "SupportClash",
            Error::KindMismatch(_) => "KindMismatch",
            Error::NotInAlgebra => "NotInAlgebra",
            Error::SingularForm => "SingularForm",
            Error::MixedSymmetry => "MixedSymmetry",
            Error::NotInvolutionStable => "NotInvolutionStable",
            Error::IncompatibleTuple(_) => "IncompatibleTuple",
            Error::InvalidOrder(_) => "InvalidOrder",
            Error::InvalidCase(_) => "InvalidCase",
            Error::TooSmall(_) => "TooSmall",
            Error::BadMarker(_) => "BadMarker",
            Error::NotInvolutionGrading(_) => "NotInvolutionGrading",
            Error::NotStable(_) => "NotStable",
            Error::BadSquare(_) => "BadSquare",
            Error::NotOuter(_) => "NotOuter",
            Error::BadEmbedding(_) => "BadEmbedding",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
