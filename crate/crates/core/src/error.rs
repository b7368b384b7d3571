use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("too many variables ({0})")]
    TooManyVariables(usize),
    #[error("S-polynomial degree exceeded the cap of {0}")]
    DegreeCapExceeded(u32),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("eliminant of the distinguished variable is zero")]
    EliminantDegenerate,
    #[error("invalid variety spec: {0}")]
    InvalidSpec(String),
    #[error("regularity probe failed: {0}")]
    SmoothnessCheckFailed(String),
    #[error("image has dimension {got}, expected {expected}")]
    ImageDegenerate { got: i64, expected: usize },
    #[error("projection center meets the variety")]
    CenterContainsVariety,
    #[error("ideal is not principal")]
    NotHypersurface,
    #[error("point is not in the ambient space: {0}")]
    PointNotOnAmbient(String),
    #[error("parametrization has positive-dimensional fibers")]
    FiberNotFinite,
    #[error("no regular point found after {0} attempts")]
    NoRegularPointFound(usize),
    #[error("solution set is not finite")]
    NotFinite,
    #[error("trials disagree: {0:?}")]
    DisagreementAcrossTrials(Vec<i64>),
    #[error("genericity warning: {0}")]
    GenericityWarning(String),
    #[error("ordered secant count {0} is odd")]
    OddOrderedCount(u64),
    #[error("random slice met the singular locus")]
    SliceSingularityHit,
    #[error("tangent family is degenerate (dim Tan < 2n)")]
    TangentFamilyDegenerate,
    #[error("family is degenerate: {0}")]
    DegenerateFamily(String),
    #[error("manifest parse error: {0}")]
    ManifestParseError(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Stable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax(_) => "SyntaxError",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidField(_) => "InvalidField",
            Error::TooManyVariables(_) => "TooManyVariables",
            Error::DegreeCapExceeded(_) => "DegreeCapExceeded",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::NotZeroDimensional => "NotZeroDimensional",
            Error::EliminantDegenerate => "EliminantDegenerate",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::SmoothnessCheckFailed(_) => "SmoothnessCheckFailed",
            Error::ImageDegenerate { .. } => "ImageDegenerate",
            Error::CenterContainsVariety => "CenterContainsVariety",
            Error::NotHypersurface => "NotHypersurface",
            Error::PointNotOnAmbient(_) => "PointNotOnAmbient",
            Error::FiberNotFinite => "FiberNotFinite",
            Error::NoRegularPointFound(_) => "NoRegularPointFound",
            Error::NotFinite => "NotFinite",
            Error::DisagreementAcrossTrials(_) => "DisagreementAcrossTrials",
            Error::GenericityWarning(_) => "GenericityWarning",
            Error::OddOrderedCount(_) => "OddOrderedCount",
            Error::SliceSingularityHit => "SliceSingularityHit",
            Error::TangentFamilyDegenerate => "TangentFamilyDegenerate",
            Error::DegenerateFamily(_) => "DegenerateFamily",
            Error::ManifestParseError(_) => "ManifestParseError",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}
