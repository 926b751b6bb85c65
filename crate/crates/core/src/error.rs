use thiserror::Error;

use crate::arc_model::{Arc, BoundaryId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface: p must be at least 1 (got p = {p}, q = {q})")]
    InvalidSurface { p: usize, q: usize },

    #[error("boundary {0} carries no marked points on this surface")]
    InvalidBoundary(BoundaryId),

    #[error("arc `{arc}` is not valid on C({p},{q}): {reason}")]
    InvalidArc {
        arc: Arc,
        p: usize,
        q: usize,
        reason: &'static str,
    },

    #[error("tube has no bridging arcs")]
    TubeHasNoBridging,

    #[error("empty winding window [{lo}, {hi}]")]
    EmptyWindingWindow { lo: i64, hi: i64 },

    #[error("crossing pair ({0}, {1})")]
    CrossingPair(Arc, Arc),

    #[error("wrong cardinality (got {got}, want {want})")]
    WrongCardinality { got: usize, want: usize },

    #[error("duplicate arc `{0}`")]
    DuplicateArc(Arc),

    #[error("decomposition undefined: triangulation is ordinary")]
    OrdinaryTriangulation,

    #[error("arc `{0}` is not in the triangulation")]
    ArcNotInTriangulation(Arc),

    #[error("flip partner not unique for `{arc}` ({count} candidates)")]
    FlipPartnerNotUnique { arc: Arc, count: usize },

    #[error("no partner for `{0}` in widened window")]
    NoFlipPartner(Arc),

    #[error("quiver undefined: {0}")]
    QuiverUndefined(&'static str),

    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("B-matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),

    #[error("seed must be an ordinary triangulation")]
    SeedNotOrdinary,

    #[error("mixed surfaces in window: C({0},{1}) and C({2},{3})")]
    MixedSurfaces(usize, usize, usize, usize),

    #[error("sequence window is empty")]
    EmptyWindow,

    #[error("limit failed validation: {0}")]
    InvalidLimit(Box<Error>),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
