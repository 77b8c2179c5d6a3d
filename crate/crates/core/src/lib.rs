//! Groupoid-weighted hypercube skeletons for n-constituent mixtures.
//!
//! Each constituent of a mixture is a material groupoid over a finite set of
//! body points, with arrows that are invertible 3x3 matrices. An objective
//! n-skeleton places body points on the vertices of the n-cube and, on every
//! edge along axis `I`, an arrow of the `I`-th constituent. Such skeletons
//! compose along each axis ([`skeleton::compose`]), and a skeleton is
//! conservative when every circuit has identity weight, which
//! [`analysis::is_conservative`] decides from the 2-faces and
//! [`analysis::conservative_oracle`] decides independently from a spanning
//! tree potential. The mixture is uniform exactly when its core groupoid is
//! transitive ([`analysis::is_uniform`]).

pub mod analysis;
pub mod cli;
pub mod error;
pub mod groupoid;
pub mod hypercube;
pub mod mixture;
pub mod skeleton;

pub use error::{Error, Result};
pub use groupoid::{compose_arrows, Arrow, BasePoint, ConstituentGroupoid, Mat3, SymmetryGroup};
pub use hypercube::{count_faces, EdgeId, FaceId, HypercubeSkeleton, TwoFace, VertexId};
pub use mixture::MixtureSpec;
pub use skeleton::{compose, interchange_check, inverse_along, unit_skeleton, ObjectiveSkeleton};
