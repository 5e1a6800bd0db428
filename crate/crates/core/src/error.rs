use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("elements live over different generator sets")]
    MismatchedSets,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has degree {degree}; degrees must be at least 1")]
    InvalidDegree { name: String, degree: i64 },
    #[error("suspension generator `{name}` must have degree {expected}, found {found}")]
    SuspensionDegree { name: String, expected: u32, found: u32 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("value for `{generator}` has degree {found}, expected {expected}")]
    DegreeMismatch { generator: String, expected: i64, found: i64 },
    #[error("{0}")]
    OutsideDomain(String),
    #[error("tensor is not a Lie element: leading word `{0}` is not a basis word")]
    NotALieElement(String),
    #[error("cone length {found} exceeds {allowed}; use the candidate model builder")]
    ConeLengthExceeded { found: usize, allowed: usize },
    #[error("generators {0:?} can never be placed in a cone filtration")]
    NotWellFounded(Vec<String>),
    #[error("invalid presentation `{label}`: {reason}")]
    InvalidPresentation { label: String, reason: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error at {0}")]
    Parse(#[from] crate::io::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
