use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the reduction pipeline can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable `{0}` in registry")]
    DuplicateVariable(String),
    #[error("variable `{0}` is already in the registry")]
    VariableCollision(String),
    #[error("operands live over different variable registries")]
    RegistryMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("input polynomial has non-integer coefficients")]
    NonIntegerCoefficients,
    #[error("empty generator list")]
    EmptyInput,
    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: String, limit: u64 },
    #[error("no smooth candidate for c in 1..={c_max}; raise --c-max")]
    CSearchExhausted { c_max: u64 },
    #[error("dimension {0} is too small; need n >= 3")]
    DimensionTooSmall(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("stabilizing map outside G: {0}")]
    StabilizerOutsideG(String),
    #[error("curve is singular (zero discriminant)")]
    SingularCurve,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("expected an affine point, got the point at infinity")]
    PointAtInfinity,
    #[error("base point failed the infinite-order sanity check")]
    InfiniteOrderSanityFailed,
    #[error("projective point has all coordinates zero")]
    ZeroProjectivePoint,
    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, limit: u64) -> Self {
        Error::ResourceCap { what: what.into(), limit }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
