use thiserror::Error;

/// Everything that can go wrong while building or analysing a groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("carrier mismatch: value {value} does not belong to {carrier}")]
    CarrierMismatch { carrier: String, value: String },

    #[error("parameter {param} is not a legal scalar for {carrier}")]
    Parameter { carrier: String, param: String },

    #[error("the pair (0, 0) does not define a groupoid")]
    ZeroPair,

    #[error("level tag {tag} is inconsistent with the parameter pair ({t}, {u})")]
    LevelMismatch { tag: String, t: String, u: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} cannot be enumerated")]
    Unenumerable(String),

    #[error("too large: {what} needs {needed}, limit is {limit}")]
    TooLarge {
        what: String,
        needed: String,
        limit: u64,
    },

    #[error("table cell ({row}, {col}) holds {value}, outside 0..{order}")]
    TableIndex {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("partial map: {0}")]
    PartialMap(String),

    #[error("unknown check id {0}")]
    UnknownCheck(String),

    #[error("unknown worked example {0}")]
    UnknownExample(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    /// True for errors caused by exceeding a configured size or evaluation budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
