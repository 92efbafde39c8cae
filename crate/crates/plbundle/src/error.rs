use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("segment endpoints do not match sub-polyline endpoints")]
    EndpointMismatch,

    #[error("bundle is not a tree bundle: {0}")]
    NotATreeBundle(String),

    #[error("point {point} has two parents ({a} and {b}); common-prefix property violated")]
    PrefixViolation { point: usize, a: usize, b: usize },

    #[error("shortcut graph is missing tree edge ({0}, {1})")]
    MissingTreeEdge(usize, usize),

    #[error("{removable} removable points exceed oracle cap {cap}")]
    OracleCap { removable: usize, cap: usize },

    #[error("node {0} is not reachable from {1} in the shortcut graph")]
    Unreachable(usize, usize),

    #[error("kept set refers to point {0}, but the bundle has only {1} points")]
    KeptOutOfRange(usize, usize),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("graph is disconnected or smaller than the requested size")]
    GraphTooSmall,

    #[error("gadget parameters inconsistent: {0}")]
    GadgetParams(String),

    #[error("gadget self-check failed for {gadget}: {msg}")]
    GadgetCheck { gadget: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
