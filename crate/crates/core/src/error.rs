use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("empty input")]
    EmptyInput,

    #[error("invalid place: {0}")]
    InvalidPlace(String),

    #[error("unknown inequality `{0}`")]
    UnknownInequality(String),

    #[error("unknown statement `{0}`")]
    UnknownStatement(String),

    #[error("missing input `{input}` for `{statement}`")]
    MissingInput { statement: String, input: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension {0} is not supported (at most 3)")]
    DimensionTooHigh(usize),

    #[error("support must have at least 2 points")]
    CardinalityTooSmall,

    #[error("non-generic shift: lattice point {0:?} lies on a cell boundary")]
    NonGenericEpsilon(Vec<i64>),

    #[error("degenerate lifting: {0}")]
    DegenerateLifting(String),

    #[error("resultant vanishes at this specialization")]
    ZeroResultant,

    #[error("normalization violated: coefficient of x{var}^{degree} is {found}, expected 1")]
    NormalizationViolated {
        var: usize,
        degree: u32,
        found: String,
    },

    #[error("ideal is not zero-dimensional")]
    PositiveDimensional,

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("system is not square: {polys} polynomials in {vars} variables")]
    NonSquareSystem { polys: usize, vars: usize },

    #[error("the classes c_m do not span the quotient algebra")]
    TraceDoesNotSpan,

    #[error("trace system is inconsistent")]
    TraceInconsistent,

    #[error("norm of J*f vanishes (zero divisor or non-reduced input)")]
    ZeroNorm,

    #[error("divisibility check failed: q*f - g is not zero in the quotient")]
    DivisibilityFailure,

    #[error("order of the root-of-unity group ({q}) must exceed the algebra dimension ({dim})")]
    RootOrderTooSmall { q: usize, dim: usize },

    #[error("no certificate up to degree {cap}{}", if *.common_zero { " (system has a common zero)" } else { "" })]
    Infeasible { cap: u32, common_zero: bool },

    #[error("certificate identity fails: {0}")]
    IdentityFailed(String),

    #[error("preparation retries exhausted: {0}")]
    RetriesExhausted(String),

    #[error("io: {0}")]
    Io(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl Error {
    /// Process exit status: 1 for a failed certificate identity, 2 for bad
    /// input, 3 when no certificate exists up to the requested degree, and 1
    /// for any other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::IdentityFailed(_) => 1,
            Error::Infeasible { .. } => 3,
            Error::Parse { .. }
            | Error::VarCountMismatch { .. }
            | Error::LengthMismatch { .. }
            | Error::NonSquareSystem { .. }
            | Error::EmptyInput
            | Error::MissingInput { .. }
            | Error::UnknownStatement(_)
            | Error::UnknownInequality(_)
            | Error::InvalidPlace(_)
            | Error::InvalidArgument(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            _ => 1,
        }
    }
}
