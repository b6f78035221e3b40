use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a scalar of magnitude {magnitude:e} (tolerance {tol:e})")]
    DivisionByZero { magnitude: f64, tol: f64 },

    #[error("polynomial variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("variable `{0}` assigned zero but appears with a negative exponent")]
    ZeroAssignment(String),

    #[error("polynomial is not a single monomial and cannot be inverted")]
    NotMonomial,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular (pivot magnitude {pivot:e})")]
    SingularMatrix { pivot: f64 },

    #[error("q^2 = 1 is excluded (a_i b_i would diverge)")]
    QSquaredOne,

    #[error("neither branch condition holds: |(s/q)^(2(m-1)) - 1| = {generic_gap:e}, |[m]_q| = {root_gap:e}")]
    NeitherBranch { generic_gap: f64, root_gap: f64 },

    #[error("gauge sequences violate a_i b_i = product at index {index}")]
    GaugeInconsistent { index: usize },

    #[error("requested branch is inconsistent with (q, s): {0}")]
    BranchMismatch(String),

    #[error("a1b2 * a2b1 = {found} differs from a1b1 * a2b2 = {expected}")]
    ProductConstraintViolated { expected: String, found: String },

    #[error("representations do not share q")]
    QMismatch,

    #[error("raw parameters (mu, lambda, t, u) are required for this operation")]
    MissingRawParameters,

    #[error("operation requires m = 2, got m = {0}")]
    NotM2(usize),

    #[error("series coefficient 1/{{{n}}}_(q^2)! is singular at this q (non-primitive root of unity)")]
    SingularSeriesCoefficient { n: usize },

    #[error("flip variants need equal factor dimensions, got {0} and {1}")]
    UnequalDims(usize, usize),

    #[error("exact mode unsupported: {0}")]
    ExactModeUnsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero { .. } => "DivisionByZero",
            Error::VariableMismatch { .. } => "VariableMismatch",
            Error::MissingAssignment(_) => "MissingAssignment",
            Error::ZeroAssignment(_) => "ZeroAssignment",
            Error::NotMonomial => "NotMonomial",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::QSquaredOne => "QSquaredOne",
            Error::NeitherBranch { .. } => "NeitherBranch",
            Error::GaugeInconsistent { .. } => "GaugeInconsistent",
            Error::BranchMismatch(_) => "BranchMismatch",
            Error::ProductConstraintViolated { .. } => "ProductConstraintViolated",
            Error::QMismatch => "QMismatch",
            Error::MissingRawParameters => "MissingRawParameters",
            Error::NotM2(_) => "NotM2",
            Error::SingularSeriesCoefficient { .. } => "SingularSeriesCoefficient",
            Error::UnequalDims(..) => "UnequalDims",
            Error::ExactModeUnsupported(_) => "ExactModeUnsupported",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
