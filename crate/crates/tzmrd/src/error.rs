use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the characteristic must be odd")]
    EvenCharacteristic,
    #[error("shift s = {s} must be coprime to 2n = {two_n}")]
    GcdViolation { s: usize, two_n: usize },
    #[error("field F_{{{p}^{d}}} exceeds the supported size")]
    FieldTooLarge { p: u64, d: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("subfield degree {0} does not divide {1}")]
    InvalidSubfield(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("interpolation points are linearly dependent over F_q")]
    DependentPoints,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gamma must have a non-square norm in F_q")]
    BadGamma,
    #[error("evaluation points are linearly dependent over F_q")]
    DependentAlpha,
    #[error("dimension k = {k} must satisfy 1 <= k < {two_n}")]
    BadK { k: usize, two_n: usize },
    #[error("message coefficient lies outside its required subfield")]
    SubfieldViolation,
    #[error("empty input sequence")]
    EmptySequence,
    #[error("register length is not on the decoding boundary")]
    NotBoundaryCase,
    #[error("error rank {0} is out of range")]
    BadRank(usize),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("decoding failure: {0}")]
    DecodingFailure(FailureDiagnostic),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
}

/// Why a decode attempt gave up. Carried by [`Error::DecodingFailure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureDiagnostic {
    /// The synthesized register is longer than the unique decoding radius.
    BeyondUniqueRadius,
    /// The boundary-case algebra produced no omega candidate at all.
    NoCandidates,
    /// Every candidate failed period, subfield, or rank validation.
    AllCandidatesRejected,
    /// The boundary-case quadratic was vacuous and the exhaustive fallback
    /// was disabled.
    DegenerateBoundary,
}

impl std::fmt::Display for FailureDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FailureDiagnostic::BeyondUniqueRadius => "error rank beyond the unique decoding radius",
            FailureDiagnostic::NoCandidates => "no omega candidates",
            FailureDiagnostic::AllCandidatesRejected => "all candidates rejected by validation",
            FailureDiagnostic::DegenerateBoundary => "degenerate boundary case",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
