//! JSON form of an objective skeleton:
//! `{ "n", "vertices": [ids in index order], "edges": [{ "tail", "axis", "weight": [9 numbers] }] }`.
//! Floats are written in shortest round-trip form and parsed exactly, so a
//! write/read cycle reproduces every weight bit for bit.

use serde::{Deserialize, Serialize};

use super::ObjectiveSkeleton;
use crate::error::{Error, Result};
use crate::groupoid::{Arrow, BasePoint, Mat3};
use crate::hypercube::{EdgeId, VertexId};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkeletonDoc {
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub tail: usize,
    pub axis: usize,
    pub weight: [f64; 9],
}

impl From<&ObjectiveSkeleton> for SkeletonDoc {
    fn from(t: &ObjectiveSkeleton) -> SkeletonDoc {
        SkeletonDoc {
            n: t.n(),
            vertices: t.vertices().iter().map(|p| p.0.clone()).collect(),
            edges: t
                .edges()
                .map(|(e, a)| EdgeDoc {
                    tail: e.tail.0,
                    axis: e.axis,
                    weight: a.weight().to_row_major(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SkeletonDoc> for ObjectiveSkeleton {
    type Error = Error;

    fn try_from(doc: SkeletonDoc) -> Result<ObjectiveSkeleton> {
        let shape = super::shape_of(doc.n)?;
        if doc.vertices.len() != shape.vertex_count() {
            return Err(Error::InvalidSkeleton(format!(
                "vertices: expected {} entries for n = {}, got {}",
                shape.vertex_count(),
                doc.n,
                doc.vertices.len()
            )));
        }
        let vertices: Vec<BasePoint> = doc.vertices.into_iter().map(BasePoint).collect();
        let mut slots: Vec<Option<Arrow>> = vec![None; shape.edge_count()];
        for (i, ed) in doc.edges.into_iter().enumerate() {
            let e = EdgeId {
                tail: VertexId(ed.tail),
                axis: ed.axis,
            };
            if !shape.is_edge(e) {
                return Err(Error::InvalidSkeleton(format!(
                    "edges[{i}]: no edge with tail {} along axis {} in dimension {}",
                    ed.tail, ed.axis, doc.n
                )));
            }
            let slot = &mut slots[shape.edge_index(e)];
            if slot.is_some() {
                return Err(Error::InvalidSkeleton(format!("edges[{i}]: edge {e} listed twice")));
            }
            let arrow = Arrow::new(
                vertices[e.tail.0].clone(),
                vertices[shape.head(e).0].clone(),
                Mat3::from(ed.weight),
            )
            .map_err(|err| Error::InvalidSkeleton(format!("edges[{i}].weight: {err}")))?;
            *slot = Some(arrow);
        }
        let mut weights = Vec::with_capacity(slots.len());
        for (k, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(a) => weights.push(a),
                None => {
                    return Err(Error::InvalidSkeleton(format!(
                        "edges: missing edge {}",
                        shape.edge_at(k)
                    )))
                }
            }
        }
        ObjectiveSkeleton::from_parts(doc.n, vertices, weights)
    }
}

impl ObjectiveSkeleton {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SkeletonDoc::from(self)).expect("skeletons always serialize")
    }

    pub fn from_json(text: &str) -> Result<ObjectiveSkeleton> {
        let doc: SkeletonDoc = serde_json::from_str(text)?;
        doc.try_into()
    }
}
