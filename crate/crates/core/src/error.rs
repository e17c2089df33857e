use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable name (see [`Error::name`]) that the
/// CLI surfaces next to its exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("basis truncated at degree {truncation} cannot reduce a polynomial of degree {degree}")]
    TruncationInsufficient { truncation: u32, degree: u32 },
    #[error("operation requires a full (untruncated) basis")]
    TruncatedBasis,
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("modular case: characteristic {prime} divides the group order {order}")]
    ModularCase { prime: u64, order: usize },
    #[error("polynomial is not invariant under the subgroup")]
    NotHInvariant,
    #[error("element list is not a subgroup of the group")]
    NotASubgroup,
    #[error("operation requires characteristic 0, field has characteristic {0}")]
    PositiveCharacteristic(u64),
    #[error("operation requires an infinite ground field")]
    FieldTooSmall,
    #[error("input polynomials must be homogeneous and nonconstant")]
    NonHomogeneousInput,
    #[error("no suitable random choice found after {0} retries")]
    RetryLimitExceeded(usize),
    #[error("group is not declared linearly reductive")]
    NotDeclaredReductive,
    #[error("separating subalgebra not reached up to degree {max_degree} ({found} invariants accumulated)")]
    MaxDegreeExceeded { max_degree: u32, found: usize },
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidField(_) => "InvalidField",
            Error::ContextMismatch => "ContextMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::SingularMatrix => "SingularMatrix",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::TruncationInsufficient { .. } => "TruncationInsufficient",
            Error::TruncatedBasis => "TruncatedBasis",
            Error::CapExceeded(_) => "CapExceeded",
            Error::SingularGenerator(_) => "SingularGenerator",
            Error::ModularCase { .. } => "ModularCase",
            Error::NotHInvariant => "NotHInvariant",
            Error::NotASubgroup => "NotASubgroup",
            Error::PositiveCharacteristic(_) => "PositiveCharacteristic",
            Error::FieldTooSmall => "FieldTooSmall",
            Error::NonHomogeneousInput => "NonHomogeneousInput",
            Error::RetryLimitExceeded(_) => "RetryLimitExceeded",
            Error::NotDeclaredReductive => "NotDeclaredReductive",
            Error::MaxDegreeExceeded { .. } => "MaxDegreeExceeded",
            Error::InvalidSpec(_) => "InvalidSpec",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
