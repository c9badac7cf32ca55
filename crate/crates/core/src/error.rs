use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("more than {bound} irreducible paths: algebra is not finite-dimensional under these rules")]
    DimensionBoundExceeded { bound: usize },
    #[error("rewriting completion did not terminate within {cap} overlap resolutions")]
    NonTerminating { cap: usize },
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid rewrite rule: {0}")]
    InvalidRule(String),
    #[error("`{0}` is not a string for this algebra")]
    NotAString(String),
    #[error("new strings still appear at length cap {cap}")]
    CapTooSmall { cap: usize },
    #[error("string starts or ends on a peak on the requested side")]
    OnPeak,
    #[error("string starts or ends in a deep on the requested side")]
    InDeep,
    #[error("more than one extension letter on one side: algebra is not special biserial")]
    NotSpecialBiserial,
    #[error("index {index} out of range for {series}")]
    IndexOutOfRange { series: String, index: usize },
    #[error("operation needs a nonzero module")]
    ZeroModule,
    #[error("representation violates relation: {0}")]
    RelationViolated(String),
    #[error("map is not a module homomorphism")]
    NotIntertwining,
    #[error("no deformation sequence found from {0}")]
    NoSequenceFound(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
