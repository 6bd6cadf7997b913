use thiserror::Error;

/// Errors raised by constructions and measurements in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("empty set")]
    EmptySet,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("polygon has {0} vertices, at least 3 required")]
    TooFewVertices(usize),
    #[error("vertex {index} repeats vertex {other}")]
    RepeatedVertex { index: usize, other: usize },
    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(usize),
    #[error("polygon winds more than once around its interior")]
    NotSimple,
    #[error("PointNotInterior: point is outside or on the boundary of the polygon (edge {edge})")]
    PointNotInterior { edge: usize },
    #[error("DuplicateSites: sites {0} and {1} coincide")]
    DuplicateSites(usize, usize),
    #[error("at least {needed} sites required, got {got}")]
    TooFewSites { needed: usize, got: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
