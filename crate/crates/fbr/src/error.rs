use thiserror::Error;

use crate::metric::ValidationReport;

/// Structural failures. Axiom violations that should be *reported* rather
/// than aborted on travel through [`ValidationReport`] instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not a metric: {0}")]
    InvalidMetric(ValidationReport),

    #[error("distance {0} exceeds 1; cannot adjoin basepoint")]
    DistanceAboveOne(String),

    #[error("operands live over different ambient spaces")]
    SpaceMismatch,

    #[error("operands refer to different labeled graphs")]
    GraphMismatch,

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("graph has a cycle: {}", .0.join(" - "))]
    Cycle(Vec<String>),

    #[error("vertices `{0}` and `{1}` are in different components")]
    DifferentComponents(String, String),

    #[error("cannot compose: first path ends at `{0}`, second starts at `{1}`")]
    EndpointMismatch(String, String),

    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),

    #[error("lower bound needs at least two support points")]
    SupportTooSmall,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
