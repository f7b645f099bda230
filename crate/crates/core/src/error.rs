use std::fmt;

use crate::geometry::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A negative training point that ended up inside a positive polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct Offender {
    pub polytope: usize,
    pub point: Point,
}

impl fmt::Display for Offender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polytope {} contains negative point {}", self.polytope, self.point)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("point must have at least one coordinate")]
    EmptyPoint,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degenerate cut: spatial weights are all zero")]
    DegenerateCut,
    #[error("cluster straddles the cut or touches its hyperplane")]
    StraddlingCluster,
    #[error("cluster is empty")]
    EmptyCluster,
    #[error("convex hull cuts require 2-D points, got dimension {0}")]
    NotPlanar(usize),
    #[error("margin must be positive, got {0}")]
    NonPositiveMargin(f64),
    #[error("margin must be nonnegative and finite, got {0}")]
    InvalidMargin(f64),
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("polytope has no cuts")]
    EmptyPolytope,
    #[error("polytope list is empty")]
    EmptyPolytopeList,
    #[error("duplicate cut at index {0} of polytope")]
    DuplicateCut(usize),
    #[error("gate arity must be at least 1")]
    InvalidArity,
    #[error("gate arity {0} is too large to enumerate (limit 20)")]
    ArityTooLarge(usize),
    #[error("gate expects {expected} input bits, got {found}")]
    BitCountMismatch { expected: usize, found: usize },
    #[error("sampling box is degenerate")]
    DegenerateBox,
    #[error("image must be at least 1x1, got {0}x{1}")]
    InvalidImageSize(usize, usize),
    #[error("sample count must be at least 1")]
    ZeroSamples,
    #[error("point norm {norm} exceeds the network input bound L = {bound}")]
    BoundViolated { norm: f64, bound: f64 },
    #[error("malformed network: {0}")]
    MalformedNetwork(String),
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
    #[error("dataset has no positive points")]
    NoPositiveClass,
    #[error(
        "separation failure: {} negative point(s) fall inside positive polytopes ({}); \
         retry without cluster ids to enclose each positive point separately",
        offenders.len(),
        offenders.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    )]
    SeparationFailure { offenders: Vec<Offender> },
    #[error("margin too small: training point {point} lies within {epsilon:e} of a cut (distance {distance:e})")]
    MarginTooSmall { point: Point, distance: f64, epsilon: f64 },
    #[error("synthesized {network} network misclassifies training data (accuracy {accuracy})")]
    AccuracyShortfall { network: &'static str, accuracy: f64 },
}
