use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Mat3;
use crate::hypercube::{EdgeId, HypercubeSkeleton, VertexId};
use crate::skeleton::ObjectiveSkeleton;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub edge: EdgeId,
    pub direction: Direction,
}

/// An edge path on the skeleton graph; edges may be traversed against their
/// orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedPath {
    pub start: VertexId,
    pub steps: Vec<PathStep>,
}

impl WeightedPath {
    pub fn empty(start: VertexId) -> WeightedPath {
        WeightedPath {
            start,
            steps: Vec::new(),
        }
    }

    /// Path through the given vertex sequence; consecutive vertices must be
    /// adjacent.
    pub fn through(shape: &HypercubeSkeleton, vertices: &[VertexId]) -> Result<WeightedPath> {
        let Some(&start) = vertices.first() else {
            return Err(Error::InvalidPath("no vertices".into()));
        };
        shape.check_vertex(start)?;
        let mut steps = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let edge = shape
                .edge_between(w[0], w[1])
                .ok_or_else(|| Error::InvalidPath(format!("vertices {} and {} are not adjacent", w[0], w[1])))?;
            let direction = if edge.tail == w[0] {
                Direction::Forward
            } else {
                Direction::Reverse
            };
            steps.push(PathStep { edge, direction });
        }
        Ok(WeightedPath { start, steps })
    }

    /// Closed path around a cycle given without its repeated closing vertex.
    pub fn circuit(shape: &HypercubeSkeleton, cycle: &[VertexId]) -> Result<WeightedPath> {
        let mut closed = cycle.to_vec();
        if let Some(&first) = cycle.first() {
            closed.push(first);
        }
        WeightedPath::through(shape, &closed)
    }

    /// Walks the path, returning the vertex it ends on.
    pub fn end(&self, shape: &HypercubeSkeleton) -> Result<VertexId> {
        shape.check_vertex(self.start)?;
        let mut at = self.start;
        for (i, s) in self.steps.iter().enumerate() {
            if !shape.is_edge(s.edge) {
                return Err(Error::InvalidPath(format!("step {i}: no edge {}", s.edge)));
            }
            let (from, to) = match s.direction {
                Direction::Forward => (s.edge.tail, shape.head(s.edge)),
                Direction::Reverse => (shape.head(s.edge), s.edge.tail),
            };
            if from != at {
                return Err(Error::InvalidPath(format!(
                    "step {i}: edge {} leaves from {from}, path is at {at}",
                    s.edge
                )));
            }
            at = to;
        }
        Ok(at)
    }

    pub fn is_circuit(&self, shape: &HypercubeSkeleton) -> Result<bool> {
        Ok(self.end(shape)? == self.start)
    }

    /// Number of steps along `axis`.
    pub fn crossings(&self, axis: usize) -> usize {
        self.steps.iter().filter(|s| s.edge.axis == axis).count()
    }
}

/// Total weight of a path: step weights multiplied with later steps on the
/// left, reverse steps contributing the inverse weight.
pub fn path_weight(t: &ObjectiveSkeleton, p: &WeightedPath) -> Result<Mat3> {
    p.end(t.shape())?;
    let mut total = Mat3::identity();
    for s in &p.steps {
        let w = t.weight(s.edge);
        let step = match s.direction {
            Direction::Forward => *w,
            Direction::Reverse => w.inverse()?,
        };
        total = step * total;
    }
    Ok(total)
}
