//! Combinatorics of the oriented unit n-cube skeleton.
//!
//! Vertices are numbered by their binary coordinates. Axis `I` (1-based) is
//! the `I`-th most significant of the `n` bits, so in the 3-cube vertex 4 is
//! `(1,0,0)` and lies along the first axis while vertex 1 lies along the
//! third. Edges are oriented from the endpoint with coordinate 0 to the one
//! with coordinate 1.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension cap used when [`MAX_DIMENSION_ENV`] is not set.
pub const DEFAULT_MAX_DIMENSION: usize = 12;

/// Environment variable overriding the dimension cap.
pub const MAX_DIMENSION_ENV: &str = "NGROUPOID_MAX_N";

/// Hard ceiling for the override; vertex indices must fit comfortably in a `usize`.
const HARD_MAX_DIMENSION: usize = 30;

/// Largest dimension for which skeletons are enumerated.
pub fn max_dimension() -> usize {
    std::env::var(MAX_DIMENSION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|n| n.clamp(1, HARD_MAX_DIMENSION))
        .unwrap_or(DEFAULT_MAX_DIMENSION)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An oriented edge, identified by its tail and the axis it runs along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub tail: VertexId,
    pub axis: usize,
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}-[X{}]->", self.tail, self.axis)
    }
}

/// An `h`-face: `h` free axes, the remaining coordinates fixed to 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceId {
    n: usize,
    free: usize,
    fixed: usize,
}

impl FaceId {
    pub fn dimension(&self) -> usize {
        self.free.count_ones() as usize
    }

    /// Free axes in ascending order.
    pub fn free_axes(&self) -> Vec<usize> {
        (1..=self.n).filter(|&a| self.free & bit(self.n, a) != 0).collect()
    }

    /// `(axis, value)` for every fixed axis, ascending by axis.
    pub fn fixed_bits(&self) -> Vec<(usize, u8)> {
        (1..=self.n)
            .filter(|&a| self.free & bit(self.n, a) == 0)
            .map(|a| (a, u8::from(self.fixed & bit(self.n, a) != 0)))
            .collect()
    }

    /// The vertex of the face with all free coordinates zero.
    pub fn corner(&self) -> VertexId {
        VertexId(self.fixed)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 & !self.free == self.fixed
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = submasks(self.free).map(|s| VertexId(self.fixed | s)).collect();
        out.sort();
        out
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for axis in self.free_axes() {
            let m = bit(self.n, axis);
            for v in self.vertices() {
                if v.0 & m == 0 {
                    out.push(EdgeId { tail: v, axis });
                }
            }
        }
        out
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let s: String = (1..=self.n)
            .map(|a| {
                let m = bit(self.n, a);
                if self.free & m != 0 {
                    'J'
                } else if self.fixed & m != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        f.write_str(&s)
    }
}

/// A 2-face together with its boundary orientation data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoFace {
    pub face: FaceId,
    pub corner: VertexId,
    /// The two free axes, `axes.0 < axes.1`.
    pub axes: (usize, usize),
}

impl TwoFace {
    /// Boundary edges in cyclic order starting at the corner: the first-axis
    /// edge at the corner, the second-axis edge at `corner + I`, the
    /// first-axis edge at `corner + J`, the second-axis edge at the corner.
    pub fn edges(&self) -> [EdgeId; 4] {
        let n = self.face.n;
        let (i, j) = self.axes;
        let c = self.corner.0;
        [
            EdgeId {
                tail: VertexId(c),
                axis: i,
            },
            EdgeId {
                tail: VertexId(c | bit(n, i)),
                axis: j,
            },
            EdgeId {
                tail: VertexId(c | bit(n, j)),
                axis: i,
            },
            EdgeId {
                tail: VertexId(c),
                axis: j,
            },
        ]
    }
}

/// The two facets perpendicular to one axis and the vertex bijection given
/// by the connecting edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetPair {
    pub axis: usize,
    pub facet0: FaceId,
    pub facet1: FaceId,
    /// Entry `k` pairs the facet vertices whose remaining `n-1` coordinates
    /// spell `k`, so `k` is also the vertex index in the reindexed
    /// `(n-1)`-skeleton.
    pub correspondence: Vec<(VertexId, VertexId)>,
}

/// Breadth-first spanning tree rooted at vertex 0.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    /// Tree edge linking each vertex to its parent; `None` for the root.
    pub parent_edge: Vec<Option<EdgeId>>,
    /// Vertices in discovery order, root first.
    pub order: Vec<VertexId>,
    in_tree: Vec<bool>,
    edges: Vec<EdgeId>,
}

impl SpanningTree {
    /// Tree edges in discovery order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, skel: &HypercubeSkeleton, e: EdgeId) -> bool {
        self.in_tree[skel.edge_index(e)]
    }
}

/// The oriented skeleton of the unit n-cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypercubeSkeleton {
    n: usize,
}

impl HypercubeSkeleton {
    pub fn new(n: usize) -> Result<HypercubeSkeleton> {
        let max = max_dimension();
        if n < 1 || n > max {
            return Err(Error::Dimension { n, min: 1, max });
        }
        Ok(HypercubeSkeleton { n })
    }

    /// Also admits the 0-dimensional skeleton (a single vertex), which shows
    /// up as the facet of a 1-skeleton.
    pub(crate) fn with_dim(n: usize) -> HypercubeSkeleton {
        debug_assert!(n <= HARD_MAX_DIMENSION);
        HypercubeSkeleton { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    pub fn edge_count(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.n << (self.n - 1)
        }
    }

    pub fn check_axis(&self, axis: usize) -> Result<()> {
        if axis < 1 || axis > self.n {
            return Err(Error::Axis { axis, n: self.n });
        }
        Ok(())
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 >= self.vertex_count() {
            return Err(Error::InvalidPath(format!(
                "vertex {} outside 0..{}",
                v,
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Mask of the bit carrying coordinate `axis`.
    pub fn axis_mask(&self, axis: usize) -> usize {
        bit(self.n, axis)
    }

    /// Coordinate of `v` along `axis`.
    pub fn coordinate(&self, v: VertexId, axis: usize) -> u8 {
        u8::from(v.0 & self.axis_mask(axis) != 0)
    }

    pub fn coordinates(&self, v: VertexId) -> Vec<u8> {
        (1..=self.n).map(|a| self.coordinate(v, a)).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    /// All edges, grouped by axis and ascending by tail within each axis.
    /// The position of an edge in this sequence is its [`edge_index`].
    ///
    /// [`edge_index`]: HypercubeSkeleton::edge_index
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).map(move |i| self.edge_at(i))
    }

    pub fn is_edge(&self, e: EdgeId) -> bool {
        e.axis >= 1 && e.axis <= self.n && e.tail.0 < self.vertex_count() && e.tail.0 & self.axis_mask(e.axis) == 0
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        VertexId(e.tail.0 | self.axis_mask(e.axis))
    }

    pub fn edge_index(&self, e: EdgeId) -> usize {
        debug_assert!(self.is_edge(e));
        let per_axis = 1usize << (self.n - 1);
        (e.axis - 1) * per_axis + remove_bit(e.tail.0, self.n - e.axis)
    }

    pub fn edge_at(&self, index: usize) -> EdgeId {
        let per_axis = 1usize << (self.n - 1);
        let axis = index / per_axis + 1;
        let tail = insert_bit(index % per_axis, self.n - axis, false);
        EdgeId {
            tail: VertexId(tail),
            axis,
        }
    }

    /// The edge joining two adjacent vertices, whichever order they come in.
    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let axis = self.adjacency_class(a, b)?;
        Some(EdgeId {
            tail: VertexId(a.0.min(b.0)),
            axis,
        })
    }

    /// The axis along which `a` and `b` differ, if they differ in exactly
    /// one coordinate.
    pub fn adjacency_class(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let diff = a.0 ^ b.0;
        if diff.count_ones() != 1 || a.0 >= self.vertex_count() || b.0 >= self.vertex_count() {
            return None;
        }
        Some(self.n - diff.trailing_zeros() as usize)
    }

    /// True when `head` is adjacent from `tail`, i.e. the two are adjacent and
    /// `head` carries the extra coordinate 1.
    pub fn adjacent_from(&self, head: VertexId, tail: VertexId) -> bool {
        self.adjacency_class(head, tail).is_some() && head.0 > tail.0
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = (usize, VertexId)> + '_ {
        (1..=self.n).map(move |a| (a, VertexId(v.0 ^ self.axis_mask(a))))
    }

    pub fn out_edges(&self, v: VertexId) -> Vec<EdgeId> {
        (1..=self.n)
            .filter(|&a| v.0 & self.axis_mask(a) == 0)
            .map(|axis| EdgeId { tail: v, axis })
            .collect()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        v.0.count_ones() as usize
    }

    /// Every `h`-face, ordered by free axes then by the fixed coordinates.
    pub fn faces(&self, h: usize) -> Result<Vec<FaceId>> {
        if h >= self.n {
            return Err(Error::FaceDimension { n: self.n, h });
        }
        let all = self.vertex_count() - 1;
        let mut frees: Vec<usize> = (0..=all).filter(|m| m.count_ones() as usize == h).collect();
        // descending masks put axis 1 (the most significant bit) first
        frees.sort_by(|a, b| b.cmp(a));
        let mut out = Vec::new();
        for free in frees {
            let mut fixed: Vec<usize> = submasks(all & !free).collect();
            fixed.sort();
            out.extend(fixed.into_iter().map(|fixed| FaceId { n: self.n, free, fixed }));
        }
        Ok(out)
    }

    pub fn facet_pair(&self, axis: usize) -> Result<FacetPair> {
        self.check_axis(axis)?;
        let m = self.axis_mask(axis);
        let pos = self.n - axis;
        let free = (self.vertex_count() - 1) & !m;
        let correspondence = (0..self.vertex_count() / 2)
            .map(|k| (VertexId(insert_bit(k, pos, false)), VertexId(insert_bit(k, pos, true))))
            .collect();
        Ok(FacetPair {
            axis,
            facet0: FaceId {
                n: self.n,
                free,
                fixed: 0,
            },
            facet1: FaceId {
                n: self.n,
                free,
                fixed: m,
            },
            correspondence,
        })
    }

    /// All 2-faces, ordered by axis pair then by corner.
    /// Number of 2-faces, counting the square itself when `n = 2`.
    pub fn two_face_count(&self) -> u128 {
        if self.n < 2 {
            return 0;
        }
        (self.n as u128 * (self.n as u128 - 1) / 2) << (self.n - 2)
    }

    pub fn two_faces(&self) -> Result<Vec<TwoFace>> {
        if self.n < 2 {
            return Err(Error::FaceDimension { n: self.n, h: 2 });
        }
        let mut out = Vec::with_capacity(self.two_face_count() as usize);
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let free = self.axis_mask(i) | self.axis_mask(j);
                let mut corners: Vec<usize> = submasks((self.vertex_count() - 1) & !free).collect();
                corners.sort();
                out.extend(corners.into_iter().map(|c| TwoFace {
                    face: FaceId {
                        n: self.n,
                        free,
                        fixed: c,
                    },
                    corner: VertexId(c),
                    axes: (i, j),
                }));
            }
        }
        Ok(out)
    }

    /// Deterministic breadth-first spanning tree from vertex 0; vertices are
    /// dequeued in discovery order and neighbours visited by ascending axis.
    pub fn spanning_tree(&self) -> SpanningTree {
        let nv = self.vertex_count();
        let mut parent_edge = vec![None; nv];
        let mut seen = vec![false; nv];
        let mut in_tree = vec![false; self.edge_count()];
        let mut order = Vec::with_capacity(nv);
        let mut edges = Vec::with_capacity(nv.saturating_sub(1));
        let mut queue = VecDeque::from([VertexId(0)]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (axis, u) in self.neighbours(v) {
                if seen[u.0] {
                    continue;
                }
                seen[u.0] = true;
                let e = EdgeId {
                    tail: VertexId(v.0.min(u.0)),
                    axis,
                };
                parent_edge[u.0] = Some(e);
                in_tree[self.edge_index(e)] = true;
                edges.push(e);
                queue.push_back(u);
            }
        }
        SpanningTree {
            parent_edge,
            order,
            in_tree,
            edges,
        }
    }

    /// Every simple cycle of the undirected skeleton graph, each listed once
    /// as a vertex sequence starting at its smallest vertex (the closing
    /// vertex is not repeated). Exponential; only meant for `n <= 4`.
    pub fn simple_cycles(&self) -> Result<Vec<Vec<VertexId>>> {
        if self.n > 4 {
            return Err(Error::Dimension {
                n: self.n,
                min: 2,
                max: 4,
            });
        }
        let mut out = Vec::new();
        let mut on_path = vec![false; self.vertex_count()];
        for start in self.vertices() {
            let mut path = vec![start];
            on_path[start.0] = true;
            self.extend_cycles(start, &mut path, &mut on_path, &mut out);
            on_path[start.0] = false;
        }
        Ok(out)
    }

    fn extend_cycles(
        &self,
        start: VertexId,
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let last = *path.last().expect("path starts non-empty");
        for (_, u) in self.neighbours(last) {
            if u == start {
                // keep one of the two traversal directions
                if path.len() >= 3 && path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
            } else if u > start && !on_path[u.0] {
                on_path[u.0] = true;
                path.push(u);
                self.extend_cycles(start, path, on_path, out);
                path.pop();
                on_path[u.0] = false;
            }
        }
    }
}

/// Number of `h`-faces of the n-cube, `2^(n-h) * C(n, h)`.
pub fn count_faces(n: usize, h: usize) -> Result<u128> {
    if !(1..=64).contains(&n) {
        return Err(Error::Dimension { n, min: 1, max: 64 });
    }
    if h >= n {
        return Err(Error::FaceDimension { n, h });
    }
    let k = h.min(n - h) as u128;
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (n as u128 - i) / (i + 1);
    }
    Ok(binom << (n - h))
}

fn bit(n: usize, axis: usize) -> usize {
    debug_assert!(axis >= 1 && axis <= n);
    1 << (n - axis)
}

/// Drops bit `pos` from `v`, shifting higher bits down.
pub(crate) fn remove_bit(v: usize, pos: usize) -> usize {
    let low = v & ((1 << pos) - 1);
    let high = v >> (pos + 1);
    (high << pos) | low
}

/// Inverse of [`remove_bit`]: opens a slot at `pos` and fills it with `value`.
pub(crate) fn insert_bit(v: usize, pos: usize, value: bool) -> usize {
    let low = v & ((1 << pos) - 1);
    let high = v >> pos;
    (high << (pos + 1)) | (usize::from(value) << pos) | low
}

/// All submasks of `mask`, including 0 and `mask` itself.
fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(n: usize) -> HypercubeSkeleton {
        HypercubeSkeleton::new(n).unwrap()
    }

    #[test]
    fn face_counts_reported_for_the_cube() {
        assert_eq!(count_faces(3, 1).unwrap(), 12);
        assert_eq!(count_faces(3, 0).unwrap(), 8);
        assert_eq!(count_faces(4, 1).unwrap(), 32);
        assert_eq!(count_faces(4, 2).unwrap(), 24);
        assert_eq!(count_faces(7, 6).unwrap(), 14);
    }

    #[test]
    fn face_count_domain() {
        assert!(matches!(count_faces(3, 3), Err(Error::FaceDimension { .. })));
        assert!(matches!(count_faces(0, 0), Err(Error::Dimension { .. })));
        assert!(cube(3).faces(3).is_err());
    }

    #[test]
    fn msb_convention_matches_figure_labels() {
        let s = cube(3);
        assert_eq!(s.coordinates(VertexId(4)), vec![1, 0, 0]);
        assert_eq!(s.coordinates(VertexId(1)), vec![0, 0, 1]);
        assert_eq!(s.coordinates(VertexId(6)), vec![1, 1, 0]);
    }

    #[test]
    fn adjacency_examples() {
        let s = cube(3);
        assert_eq!(s.adjacency_class(VertexId(0), VertexId(4)), Some(1));
        assert_eq!(s.adjacency_class(VertexId(0), VertexId(3)), None);
        assert_eq!(s.adjacency_class(VertexId(5), VertexId(7)), Some(2));
        assert!(s.adjacent_from(VertexId(7), VertexId(5)));
        assert!(!s.adjacent_from(VertexId(5), VertexId(7)));
        assert_eq!(s.adjacency_class(VertexId(2), VertexId(2)), None);
    }

    #[test]
    fn facet_pair_examples() {
        let p = cube(4).facet_pair(4).unwrap();
        assert_eq!(p.correspondence.len(), 8);

        let p = cube(1).facet_pair(1).unwrap();
        assert_eq!(p.facet0.vertices(), vec![VertexId(0)]);
        assert_eq!(p.facet1.vertices(), vec![VertexId(1)]);

        let p = cube(3).facet_pair(2).unwrap();
        let ids = |f: &FaceId| f.vertices().iter().map(|v| v.0).collect::<Vec<_>>();
        assert_eq!(ids(&p.facet0), vec![0, 1, 4, 5]);
        assert_eq!(ids(&p.facet1), vec![2, 3, 6, 7]);
        assert!(cube(3).facet_pair(4).is_err());
        assert!(cube(3).facet_pair(0).is_err());
    }

    #[test]
    fn two_face_counts() {
        assert_eq!(cube(2).two_faces().unwrap().len(), 1);
        assert_eq!(cube(3).two_faces().unwrap().len(), 6);
        assert_eq!(cube(4).two_faces().unwrap().len(), 24);
        assert!(cube(1).two_faces().is_err());
        for n in 1..=6 {
            let listed = cube(n).two_faces().map_or(0, |f| f.len() as u128);
            assert_eq!(cube(n).two_face_count(), listed, "n={n}");
        }
    }

    #[test]
    fn two_face_boundary_is_a_square() {
        let s = cube(3);
        for f in s.two_faces().unwrap() {
            let [a, b, c, d] = f.edges();
            assert_eq!(s.head(a), b.tail);
            assert_eq!(s.head(d), c.tail);
            assert_eq!(s.head(b), s.head(c));
            assert_eq!(a.tail, d.tail);
            assert!(f.face.edges().contains(&a));
        }
    }

    #[test]
    fn spanning_tree_sizes() {
        for n in 1..=5 {
            let s = cube(n);
            let t = s.spanning_tree();
            assert_eq!(t.edges().len(), s.vertex_count() - 1);
            assert_eq!(t.order.len(), s.vertex_count());
        }
        let s = cube(3);
        assert_eq!(s.edge_count() - s.spanning_tree().edges().len(), 5);
        assert_eq!(
            cube(1).spanning_tree().edges(),
            &[EdgeId {
                tail: VertexId(0),
                axis: 1
            }]
        );
    }

    #[test]
    fn spanning_tree_is_breadth_first_from_origin() {
        let s = cube(3);
        let t = s.spanning_tree();
        // depth of each vertex equals its Hamming weight
        for v in s.vertices() {
            let mut depth = 0;
            let mut cur = v;
            while let Some(e) = t.parent_edge[cur.0] {
                cur = if e.tail == cur { s.head(e) } else { e.tail };
                depth += 1;
            }
            assert_eq!(depth, v.0.count_ones());
        }
        assert_eq!(
            t.edges()[0],
            EdgeId {
                tail: VertexId(0),
                axis: 1
            }
        );
    }

    #[test]
    fn edge_index_round_trip() {
        for n in 1..=6 {
            let s = cube(n);
            for (i, e) in s.edges().enumerate() {
                assert!(s.is_edge(e));
                assert_eq!(s.edge_index(e), i);
            }
        }
    }

    #[test]
    fn degrees() {
        let s = cube(4);
        let out: usize = s.vertices().map(|v| s.out_edges(v).len()).sum();
        assert_eq!(out, 4 * 8);
        assert_eq!(s.in_degree(VertexId(0)), 0);
        for v in s.vertices() {
            assert_eq!(s.neighbours(v).count(), 4);
        }
    }

    #[test]
    fn zero_dimensional_skeleton() {
        let s = HypercubeSkeleton::with_dim(0);
        assert_eq!(s.vertex_count(), 1);
        assert_eq!(s.edge_count(), 0);
        assert!(HypercubeSkeleton::new(0).is_err());
    }

    #[test]
    fn cube_has_28_cycles() {
        // 6 four-cycles, 16 six-cycles and 6 Hamiltonian cycles
        let cycles = cube(3).simple_cycles().unwrap();
        assert_eq!(cycles.len(), 28);
        let len = |k| cycles.iter().filter(|c| c.len() == k).count();
        assert_eq!((len(4), len(6), len(8)), (6, 16, 6));
    }

    #[test]
    fn seven_cube_faces_by_pattern() {
        let s = cube(7);
        let names: Vec<String> = s.faces(4).unwrap().iter().map(|f| f.to_string()).collect();
        assert!(names.iter().any(|f| f == "0J10JJJ"));
        let p = s.facet_pair(2).unwrap();
        assert_eq!((p.facet0.to_string(), p.facet1.to_string()), ("J0JJJJJ".into(), "J1JJJJJ".into()));
    }

    #[test]
    fn tesseract_cycle_census() {
        let cycles = cube(4).simple_cycles().unwrap();
        assert_eq!(cycles.len(), 14704);
        let len = |k| cycles.iter().filter(|c| c.len() == k).count();
        let census: Vec<usize> = (2..=8).map(|k| len(2 * k)).collect();
        assert_eq!(census, vec![24, 128, 696, 2112, 5024, 5376, 1344]);
    }

    #[test]
    fn face_display() {
        let s = cube(3);
        let f = s.faces(2).unwrap()[0];
        assert_eq!(f.to_string(), "JJ0");
        assert_eq!(f.free_axes(), vec![1, 2]);
        assert_eq!(f.fixed_bits(), vec![(3, 0)]);
    }

    #[test]
    fn bit_helpers_are_inverse() {
        for v in 0..64 {
            for pos in 0..6 {
                let r = remove_bit(v, pos);
                let b = v & (1 << pos) != 0;
                assert_eq!(insert_bit(r, pos, b), v);
            }
        }
    }
}
