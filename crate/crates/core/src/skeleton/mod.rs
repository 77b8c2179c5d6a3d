//! Objective skeletons: hypercube skeletons whose vertices are base points
//! and whose axis-`I` edges carry arrows of the `I`-th constituent.
//!
//! Every operation here is phrased through [`ObjectiveSkeleton::facet`] and
//! [`ObjectiveSkeleton::assemble`]: an n-skeleton is the pair of its two
//! facets along some axis plus the connecting edges along that axis.

mod io;

use crate::error::{Error, Result};
use crate::groupoid::{compose_arrows, Arrow, BasePoint, ConstituentGroupoid, Mat3};
use crate::hypercube::{insert_bit, remove_bit, EdgeId, HypercubeSkeleton, VertexId};
use crate::mixture::MixtureSpec;

pub use io::SkeletonDoc;

/// Picks one arrow out of the candidates available for an edge.
pub trait Selector {
    fn select(&self, edge: EdgeId, candidates: &[Arrow]) -> usize;
}

/// Always takes the first candidate, i.e. the arrow generated by the first
/// symmetry element (the identity).
#[derive(Clone, Copy, Debug, Default)]
pub struct CanonicalSelector;

impl Selector for CanonicalSelector {
    fn select(&self, _edge: EdgeId, _candidates: &[Arrow]) -> usize {
        0
    }
}

impl<F: Fn(EdgeId, &[Arrow]) -> usize> Selector for F {
    fn select(&self, edge: EdgeId, candidates: &[Arrow]) -> usize {
        self(edge, candidates)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectiveSkeleton {
    shape: HypercubeSkeleton,
    vertices: Vec<BasePoint>,
    /// Indexed by [`HypercubeSkeleton::edge_index`].
    weights: Vec<Arrow>,
}

impl ObjectiveSkeleton {
    /// Assembles a skeleton from its vertex tuple and one arrow per edge (in
    /// edge-index order), checking that every arrow joins the right vertices.
    pub fn from_parts(n: usize, vertices: Vec<BasePoint>, weights: Vec<Arrow>) -> Result<Self> {
        let shape = shape_of(n)?;
        if vertices.len() != shape.vertex_count() {
            return Err(Error::InvalidSkeleton(format!(
                "expected {} vertices, got {}",
                shape.vertex_count(),
                vertices.len()
            )));
        }
        if weights.len() != shape.edge_count() {
            return Err(Error::InvalidSkeleton(format!(
                "expected {} edges, got {}",
                shape.edge_count(),
                weights.len()
            )));
        }
        let t = ObjectiveSkeleton {
            shape,
            vertices,
            weights,
        };
        t.check_endpoints()?;
        Ok(t)
    }

    /// Builds a skeleton whose edge weights come from `weight`.
    pub fn from_weights(
        n: usize,
        vertices: Vec<BasePoint>,
        mut weight: impl FnMut(EdgeId) -> Result<Mat3>,
    ) -> Result<Self> {
        let shape = shape_of(n)?;
        if vertices.len() != shape.vertex_count() {
            return Err(Error::InvalidSkeleton(format!(
                "expected {} vertices, got {}",
                shape.vertex_count(),
                vertices.len()
            )));
        }
        let weights = shape
            .edges()
            .map(|e| {
                let w = weight(e)?;
                Arrow::new(vertices[e.tail.0].clone(), vertices[shape.head(e).0].clone(), w)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ObjectiveSkeleton {
            shape,
            vertices,
            weights,
        })
    }

    /// Every edge carries the unit arrow; requires a constant vertex tuple.
    pub fn all_units(n: usize, point: BasePoint) -> Result<Self> {
        let count = shape_of(n)?.vertex_count();
        Self::from_weights(n, vec![point; count], |_| Ok(Mat3::identity()))
    }

    /// Chooses, for every axis-`I` edge from `W_a` to `W_b`, an arrow of the
    /// `I`-th constituent via `selector`. Halts on the first edge whose arrow
    /// set is empty.
    pub fn build(mix: &MixtureSpec, vertices: Vec<BasePoint>, selector: &impl Selector) -> Result<Self> {
        let shape = shape_of(mix.n())?;
        if vertices.len() != shape.vertex_count() {
            return Err(Error::InvalidSkeleton(format!(
                "vertex tuple has {} entries, expected {}",
                vertices.len(),
                shape.vertex_count()
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !mix.contains_point(p)) {
            return Err(Error::UnknownPoint(p.to_string()));
        }
        let mut weights = Vec::with_capacity(shape.edge_count());
        for e in shape.edges() {
            let (a, b) = (&vertices[e.tail.0], &vertices[shape.head(e).0]);
            let mut set = mix.constituent(e.axis)?.arrow_set(a, b)?;
            if set.is_empty() {
                return Err(Error::ConstructionHalted {
                    edge: e,
                    axis: e.axis,
                    from: a.to_string(),
                    to: b.to_string(),
                });
            }
            let k = selector.select(e, &set);
            if k >= set.len() {
                return Err(Error::InvalidSkeleton(format!(
                    "selector chose arrow {k} of {} at edge {e}",
                    set.len()
                )));
            }
            weights.push(set.swap_remove(k));
        }
        Ok(ObjectiveSkeleton {
            shape,
            vertices,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn shape(&self) -> &HypercubeSkeleton {
        &self.shape
    }

    pub fn vertices(&self) -> &[BasePoint] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &BasePoint {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, e: EdgeId) -> &Arrow {
        &self.weights[self.shape.edge_index(e)]
    }

    pub fn weight(&self, e: EdgeId) -> &Mat3 {
        self.arrow(e).weight()
    }

    /// `(edge, arrow)` pairs in edge-index order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Arrow)> {
        self.shape.edges().zip(self.weights.iter())
    }

    /// Copy with the weight of one edge replaced.
    pub fn with_weight(&self, e: EdgeId, weight: Mat3) -> Result<Self> {
        if !self.shape.is_edge(e) {
            return Err(Error::InvalidSkeleton(format!("no edge {e} in dimension {}", self.n())));
        }
        let mut out = self.clone();
        let i = self.shape.edge_index(e);
        out.weights[i] = Arrow::new(
            self.weights[i].source().clone(),
            self.weights[i].target().clone(),
            weight,
        )?;
        Ok(out)
    }

    fn check_endpoints(&self) -> Result<()> {
        for (e, a) in self.edges() {
            let (tail, head) = (self.vertex(e.tail), self.vertex(self.shape.head(e)));
            if a.source() != tail || a.target() != head {
                return Err(Error::InvalidSkeleton(format!(
                    "edge {e}: arrow runs `{}` -> `{}` but the vertices are `{tail}` -> `{head}`",
                    a.source(),
                    a.target()
                )));
            }
        }
        Ok(())
    }

    /// Checks that every axis-`I` weight belongs to `constituents[I-1]`.
    pub fn validate_against(&self, constituents: &[&ConstituentGroupoid], tol: f64) -> Result<()> {
        if constituents.len() != self.n() {
            return Err(Error::InvalidSkeleton(format!(
                "dimension {} but {} constituents",
                self.n(),
                constituents.len()
            )));
        }
        self.check_endpoints()?;
        for (e, a) in self.edges() {
            let c = constituents[e.axis - 1];
            if !c.contains_arrow(a, tol) {
                return Err(Error::NotMember {
                    edge: e,
                    constituent: c.name().to_owned(),
                    from: a.source().to_string(),
                    to: a.target().to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn validate_in(&self, mix: &MixtureSpec) -> Result<()> {
        if let Some(p) = self.vertices.iter().find(|p| !mix.contains_point(p)) {
            return Err(Error::UnknownPoint(p.to_string()));
        }
        let cs: Vec<&ConstituentGroupoid> = mix.constituents().iter().collect();
        self.validate_against(&cs, mix.tolerance())
    }

    /// The facet with coordinate `axis` fixed to `side`, reindexed as a
    /// standard `(n-1)`-skeleton: remaining axes keep their order.
    pub fn facet(&self, axis: usize, side: bool) -> Result<Self> {
        self.shape.check_axis(axis)?;
        let n = self.n();
        let pos = n - axis;
        let lower = HypercubeSkeleton::with_dim(n - 1);
        let vertices = (0..lower.vertex_count())
            .map(|k| self.vertices[insert_bit(k, pos, side)].clone())
            .collect();
        let weights = lower
            .edges()
            .map(|e| self.arrow(self.lift_edge(e, axis, side)).clone())
            .collect();
        Ok(ObjectiveSkeleton {
            shape: lower,
            vertices,
            weights,
        })
    }

    pub fn source_facet(&self, axis: usize) -> Result<Self> {
        self.facet(axis, false)
    }

    pub fn target_facet(&self, axis: usize) -> Result<Self> {
        self.facet(axis, true)
    }

    /// The axis-`axis` edges, ordered like the vertices of the facets they join.
    pub fn connecting(&self, axis: usize) -> Result<Vec<Arrow>> {
        self.shape.check_axis(axis)?;
        let pos = self.n() - axis;
        Ok((0..self.shape.vertex_count() / 2)
            .map(|k| {
                self.arrow(EdgeId {
                    tail: VertexId(insert_bit(k, pos, false)),
                    axis,
                })
                .clone()
            })
            .collect())
    }

    /// Maps an edge of the reindexed facet back to this skeleton.
    fn lift_edge(&self, e: EdgeId, axis: usize, side: bool) -> EdgeId {
        let pos = self.n() - axis;
        EdgeId {
            tail: VertexId(insert_bit(e.tail.0, pos, side)),
            axis: if e.axis < axis { e.axis } else { e.axis + 1 },
        }
    }

    /// Inverse of [`facet`](Self::facet)/[`connecting`](Self::connecting): glues
    /// `facet0` and `facet1` along a new axis `axis` with the given
    /// connecting arrows.
    pub fn assemble(facet0: &Self, facet1: &Self, axis: usize, connecting: Vec<Arrow>) -> Result<Self> {
        if facet0.n() != facet1.n() {
            return Err(Error::InvalidSkeleton(format!(
                "facets of dimensions {} and {}",
                facet0.n(),
                facet1.n()
            )));
        }
        let n = facet0.n() + 1;
        let shape = shape_of(n)?;
        shape.check_axis(axis)?;
        if connecting.len() != facet0.vertices.len() {
            return Err(Error::InvalidSkeleton(format!(
                "{} connecting arrows for {} facet vertices",
                connecting.len(),
                facet0.vertices.len()
            )));
        }
        let pos = n - axis;
        let m = shape.axis_mask(axis);
        let side = |v: usize| if v & m == 0 { facet0 } else { facet1 };
        let vertices = shape
            .vertices()
            .map(|v| side(v.0).vertices[remove_bit(v.0, pos)].clone())
            .collect();
        let weights = shape
            .edges()
            .map(|e| {
                let k = remove_bit(e.tail.0, pos);
                if e.axis == axis {
                    connecting[k].clone()
                } else {
                    let axis_below = if e.axis < axis { e.axis } else { e.axis - 1 };
                    side(e.tail.0)
                        .arrow(EdgeId {
                            tail: VertexId(k),
                            axis: axis_below,
                        })
                        .clone()
                }
            })
            .collect();
        let t = ObjectiveSkeleton {
            shape,
            vertices,
            weights,
        };
        t.check_endpoints()?;
        Ok(t)
    }

    /// Same dimension, identical vertex labels, weights equal within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.first_difference(other, tol).is_none()
    }

    /// Describes the first vertex or edge where the two skeletons differ.
    pub fn first_difference(&self, other: &Self, tol: f64) -> Option<String> {
        if self.n() != other.n() {
            return Some(format!("dimensions {} and {}", self.n(), other.n()));
        }
        for (k, (a, b)) in self.vertices.iter().zip(&other.vertices).enumerate() {
            if a != b {
                return Some(format!("vertex {k}: `{a}` vs `{b}`"));
            }
        }
        for ((e, a), (_, b)) in self.edges().zip(other.edges()) {
            if !a.weight().approx_eq(b.weight(), tol) {
                return Some(format!(
                    "edge {e}: weights differ by {:e} (relative)",
                    a.weight().relative_distance(b.weight())
                ));
            }
        }
        None
    }
}

/// `t ⊙_axis tp`: `tp` first, then `t`. Requires the target facet of `tp`
/// to equal the source facet of `t`; the composite has `tp`'s source facet,
/// `t`'s target facet, and axis edges `t_e ∘ tp_e`.
pub fn compose(t: &ObjectiveSkeleton, tp: &ObjectiveSkeleton, axis: usize, tol: f64) -> Result<ObjectiveSkeleton> {
    if t.n() != tp.n() {
        return Err(Error::FacetMismatch {
            axis,
            detail: format!("dimensions {} and {}", t.n(), tp.n()),
        });
    }
    let upstream = tp.target_facet(axis)?;
    let downstream = t.source_facet(axis)?;
    if let Some(detail) = downstream.first_difference(&upstream, tol) {
        return Err(Error::FacetMismatch { axis, detail });
    }
    let connecting = t
        .connecting(axis)?
        .iter()
        .zip(tp.connecting(axis)?)
        .map(|(b, a)| compose_arrows(b, &a))
        .collect::<Result<Vec<_>>>()?;
    ObjectiveSkeleton::assemble(&tp.source_facet(axis)?, &t.target_facet(axis)?, axis, connecting)
}

/// Identity for `⊙_axis` on the facet `f`: `f` on both sides, unit arrows
/// across.
pub fn unit_skeleton(f: &ObjectiveSkeleton, axis: usize) -> Result<ObjectiveSkeleton> {
    let units = f.vertices.iter().cloned().map(Arrow::unit).collect();
    ObjectiveSkeleton::assemble(f, f, axis, units)
}

/// Inverse for `⊙_axis`: facets swapped, axis edges inverted.
pub fn inverse_along(t: &ObjectiveSkeleton, axis: usize) -> Result<ObjectiveSkeleton> {
    let connecting = t
        .connecting(axis)?
        .iter()
        .map(Arrow::inverse)
        .collect::<Result<Vec<_>>>()?;
    ObjectiveSkeleton::assemble(&t.target_facet(axis)?, &t.source_facet(axis)?, axis, connecting)
}

/// Evaluates both sides of the interchange law
/// `(t ⊙_i tp) ⊙_j (tpp ⊙_i tppp) = (t ⊙_j tpp) ⊙_i (tp ⊙_j tppp)`.
/// Fails if any of the six compositions is undefined.
pub fn interchange_check(
    t: &ObjectiveSkeleton,
    tp: &ObjectiveSkeleton,
    tpp: &ObjectiveSkeleton,
    tppp: &ObjectiveSkeleton,
    i: usize,
    j: usize,
    tol: f64,
) -> Result<bool> {
    if i == j {
        return Err(Error::Axis { axis: j, n: t.n() });
    }
    let lhs = compose(&compose(t, tp, i, tol)?, &compose(tpp, tppp, i, tol)?, j, tol)?;
    let rhs = compose(&compose(t, tpp, j, tol)?, &compose(tp, tppp, j, tol)?, i, tol)?;
    Ok(lhs.approx_eq(&rhs, tol))
}

fn shape_of(n: usize) -> Result<HypercubeSkeleton> {
    if n == 0 {
        Ok(HypercubeSkeleton::with_dim(0))
    } else {
        HypercubeSkeleton::new(n)
    }
}
