use thiserror::Error;

/// Every failure the library reports. The variant name is the stable,
/// machine-readable error tag (see [`Error::name`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("matrix rows are linearly dependent")]
    RankDeficient,
    #[error("intersection or projection has the wrong dimension")]
    DimensionDrop,
    #[error("configuration has a zero column at position {0}")]
    ZeroColumn(usize),
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("vertex {0} is not an internal vertex")]
    NotInternal(usize),
    #[error("input is not a valid matroid decomposition")]
    NotADecomposition,
    #[error("operation needs at least {0} leaves")]
    TooFewLeaves(usize),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("not a triangulation of the point configuration")]
    InvalidTriangulation,
    #[error("configuration too large for exhaustive search ({0} points)")]
    TooLarge(usize),
    #[error("points are not pairwise distinct")]
    CoincidentPoints,
    #[error("input is not in general position")]
    NotGeneric,
    #[error("point lies on hyperplane {0} of the arrangement")]
    OnArrangement(usize),
    #[error("arrangement is not in chart form")]
    ChartMismatch,
    #[error("arrangement is not normalized")]
    NotNormalized,
    #[error("diagram does not fit the rectangle")]
    DoesNotFit,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("bad index sequence")]
    BadIndices,
    #[error("weight is not in the admissible set")]
    BadWeight,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// The typed error tag used in CLI JSON output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::BadParams(_) => "BadParams",
            Error::RankDeficient => "RankDeficient",
            Error::DimensionDrop => "DimensionDrop",
            Error::ZeroColumn(_) => "ZeroColumn",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::NotInternal(_) => "NotInternal",
            Error::NotADecomposition => "NotADecomposition",
            Error::TooFewLeaves(_) => "TooFewLeaves",
            Error::InvalidTree(_) => "InvalidTree",
            Error::InvalidTriangulation => "InvalidTriangulation",
            Error::TooLarge(_) => "TooLarge",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::NotGeneric => "NotGeneric",
            Error::OnArrangement(_) => "OnArrangement",
            Error::ChartMismatch => "ChartMismatch",
            Error::NotNormalized => "NotNormalized",
            Error::DoesNotFit => "DoesNotFit",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::BadIndices => "BadIndices",
            Error::BadWeight => "BadWeight",
            Error::Parse(_) => "Parse",
        }
    }

    /// Parse failures are input problems, everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
