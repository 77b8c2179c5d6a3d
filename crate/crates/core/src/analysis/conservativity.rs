//! Two independent conservativity deciders.
//!
//! [`is_conservative`] checks that every 2-face commutes. [`conservative_oracle`]
//! never looks at faces: it integrates a vertex potential along a spanning
//! tree and checks every remaining edge against it, which is the same as
//! asking that every circuit has identity weight. [`circuit_sweep`] walks all
//! simple cycles directly for small dimensions.

use serde::Serialize;

use super::paths::{path_weight, WeightedPath};
use crate::error::Result;
use crate::groupoid::Mat3;
use crate::hypercube::{EdgeId, TwoFace, VertexId};
use crate::skeleton::ObjectiveSkeleton;

/// Holonomy and verdict for one 2-face.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FaceCheck {
    pub commutes: bool,
    /// `L * R^-1`, with `L` the path through `corner + I` and `R` the path
    /// through `corner + J`.
    pub holonomy: Mat3,
    /// `|holonomy - I|_F / sqrt(3)`.
    pub deviation: f64,
}

pub fn face2_commutes(t: &ObjectiveSkeleton, face: &TwoFace, tol: f64) -> FaceCheck {
    let [i_at_corner, j_at_i, i_at_j, j_at_corner] = face.edges();
    let left = t.weight(j_at_i) * t.weight(i_at_corner);
    let right = t.weight(i_at_j) * t.weight(j_at_corner);
    let holonomy = match right.try_inverse() {
        Some(inv) => left * inv,
        None => Mat3([[f64::NAN; 3]; 3]),
    };
    let deviation = holonomy.identity_deviation();
    FaceCheck {
        commutes: left.approx_eq(&right, tol) && deviation.is_finite(),
        holonomy,
        deviation,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceWitness {
    pub corner: VertexId,
    pub axes: (usize, usize),
    pub holonomy: Mat3,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConservativityReport {
    pub verdict: bool,
    pub faces_checked: usize,
    /// Largest holonomy deviation over all faces, failing or not.
    pub max_deviation: f64,
    /// Failing faces, in axis-pair then corner order.
    pub witnesses: Vec<FaceWitness>,
}

pub fn is_conservative(t: &ObjectiveSkeleton, tol: f64) -> ConservativityReport {
    let faces = if t.n() >= 2 {
        t.shape().two_faces().expect("n >= 2 has 2-faces")
    } else {
        Vec::new()
    };
    let mut max_deviation: f64 = 0.0;
    let mut witnesses = Vec::new();
    for f in &faces {
        let c = face2_commutes(t, f, tol);
        max_deviation = if c.deviation.is_nan() {
            f64::INFINITY
        } else {
            max_deviation.max(c.deviation)
        };
        if !c.commutes {
            witnesses.push(FaceWitness {
                corner: f.corner,
                axes: f.axes,
                holonomy: c.holonomy,
                deviation: c.deviation,
            });
        }
    }
    ConservativityReport {
        verdict: witnesses.is_empty(),
        faces_checked: faces.len(),
        max_deviation,
        witnesses,
    }
}

/// Result of the spanning-tree potential reconstruction.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialCheck {
    pub verdict: bool,
    /// `potential[v]` is the tree-path weight from vertex 0 to `v`.
    pub potential: Vec<Mat3>,
    /// Non-tree edges whose weight disagrees with the potential.
    pub failing_edges: Vec<EdgeId>,
    /// Largest relative mismatch over the non-tree edges.
    pub max_defect: f64,
}

pub fn potential_check(t: &ObjectiveSkeleton, tol: f64) -> PotentialCheck {
    let shape = t.shape();
    let tree = shape.spanning_tree();
    let mut potential = vec![Mat3::identity(); shape.vertex_count()];
    for &v in tree.order.iter().skip(1) {
        let e = tree.parent_edge[v.0].expect("non-root vertices have a parent edge");
        let head = shape.head(e);
        potential[v.0] = if head == v {
            t.weight(e) * &potential[e.tail.0]
        } else {
            t.weight(e).try_inverse().unwrap_or(Mat3([[f64::NAN; 3]; 3])) * potential[head.0]
        };
    }
    let mut failing_edges = Vec::new();
    let mut max_defect: f64 = 0.0;
    for (e, a) in t.edges() {
        if tree.contains(shape, e) {
            continue;
        }
        let expected = match potential[e.tail.0].try_inverse() {
            Some(inv) => potential[shape.head(e).0] * inv,
            None => Mat3([[f64::NAN; 3]; 3]),
        };
        let defect = a.weight().relative_distance(&expected);
        max_defect = if defect.is_nan() {
            f64::INFINITY
        } else {
            max_defect.max(defect)
        };
        if defect.is_nan() || defect > tol {
            failing_edges.push(e);
        }
    }
    PotentialCheck {
        verdict: failing_edges.is_empty(),
        potential,
        failing_edges,
        max_defect,
    }
}

/// Independent decision: a potential on the vertices reproduces every edge.
pub fn conservative_oracle(t: &ObjectiveSkeleton, tol: f64) -> bool {
    potential_check(t, tol).verdict
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircuitSweep {
    pub cycles: usize,
    /// Largest `|W - I|_F / sqrt(3)` over all simple cycle weights `W`.
    pub max_deviation: f64,
    pub all_identity: bool,
}

/// Weighs every simple cycle of the skeleton graph; only for `n <= 4`.
pub fn circuit_sweep(t: &ObjectiveSkeleton, tol: f64) -> Result<CircuitSweep> {
    let cycles = t.shape().simple_cycles()?;
    let mut max_deviation: f64 = 0.0;
    for c in &cycles {
        let p = WeightedPath::circuit(t.shape(), c)?;
        let d = path_weight(t, &p)?.identity_deviation();
        max_deviation = if d.is_nan() {
            f64::INFINITY
        } else {
            max_deviation.max(d)
        };
    }
    Ok(CircuitSweep {
        cycles: cycles.len(),
        max_deviation,
        all_identity: max_deviation <= tol,
    })
}
