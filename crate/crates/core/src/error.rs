use thiserror::Error;

use crate::hypercube::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {n} outside supported range {min}..={max}")]
    Dimension { n: usize, min: usize, max: usize },

    #[error("face dimension h={h} must satisfy 0 <= h < n={n}")]
    FaceDimension { n: usize, h: usize },

    #[error("axis {axis} outside 1..={n}")]
    Axis { axis: usize, n: usize },

    #[error("singular matrix (|det| = {det:e})")]
    Singular { det: f64 },

    #[error("arrows not composable: first arrow ends at `{end}`, second starts at `{start}`")]
    NotComposable { end: String, start: String },

    #[error("unknown base point `{0}`")]
    UnknownPoint(String),

    #[error("invalid symmetry group: {0}")]
    InvalidGroup(String),

    #[error("construction halted at edge {edge}: constituent {axis} has no arrow from `{from}` to `{to}`")]
    ConstructionHalted {
        edge: EdgeId,
        axis: usize,
        from: String,
        to: String,
    },

    #[error("edge {edge}: weight is not an arrow of constituent `{constituent}` from `{from}` to `{to}`")]
    NotMember {
        edge: EdgeId,
        constituent: String,
        from: String,
        to: String,
    },

    #[error("skeletons not composable along axis {axis}: {detail}")]
    FacetMismatch { axis: usize, detail: String },

    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),

    #[error("invalid mixture: {0}")]
    InvalidMixture(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
