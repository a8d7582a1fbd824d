use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A general-position assumption failed for the sampled data.
    #[error("genericity failure at {stage}: {detail}")]
    Genericity { stage: String, detail: String },
    /// Eliminations from an earlier pass were undone by a later one.
    #[error("plan order: {0} reappeared after a later pass")]
    PlanOrder(String),
    #[error("plan not triangular: {0}")]
    PlanNotTriangular(String),
    #[error("septuple {0} is not in the accepted catalog")]
    NotInCatalog(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("catalog schema version {found:?} is not supported (expected {expected:?})")]
    Schema { found: String, expected: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn genericity(stage: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Genericity { stage: stage.into(), detail: detail.into() }
    }

    /// Stable machine-readable tag used in structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Usage(_) => "usage",
            Error::Precondition(_) => "precondition",
            Error::Parse(_) => "parse",
            Error::Genericity { .. } => "genericity",
            Error::PlanOrder(_) => "plan-order",
            Error::PlanNotTriangular(_) => "plan-not-triangular",
            Error::NotInCatalog(_) => "not-in-catalog",
            Error::Unsupported(_) => "unsupported",
            Error::Internal(_) => "internal",
            Error::Schema { .. } => "schema",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    /// Failures that a fresh random sample may avoid.
    pub fn is_resampleable(&self) -> bool {
        matches!(self, Error::Genericity { .. })
    }
}
