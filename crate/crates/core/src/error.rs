use thiserror::Error;

use crate::exactnum::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of {0} cannot be inverted")]
    NonInvertibleDomain(Domain),
    #[error("sqrt({0}) does not define a quadratic field (need squarefree d != 0, 1)")]
    InvalidQuadField(i64),
    #[error("prefix too short: need index {needed}, only {available} terms available")]
    PrefixTooShort { needed: usize, available: usize },
    #[error("sequence prefix must contain at least one term")]
    EmptyPrefix,
    #[error("characteristic polynomial must be monic")]
    NonMonic,
    #[error("characteristic polynomial must have degree at least 1")]
    ZeroDegree,
    #[error("initial values: expected {expected}, got {got}")]
    InitLength { expected: usize, got: usize },
    #[error("series kind mismatch (OGF vs EGF)")]
    KindMismatch,
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("roots must be pairwise distinct")]
    RepeatedRoot,
    #[error("{0} is not a field")]
    NotAField(Domain),
    #[error("enumeration bound exceeded: n = {0} > 12")]
    EnumerationTooLarge(usize),
    #[error("negative input where a nonnegative integer is required")]
    NegativeInput,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}
