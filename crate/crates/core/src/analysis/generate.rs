//! Seeded test-data generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64`, which produces the
//! same stream on every platform, so equal seeds give bit-identical output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::core::core_arrows;
use crate::error::{Error, Result};
use crate::groupoid::{BasePoint, Mat3};
use crate::hypercube::EdgeId;
use crate::mixture::MixtureSpec;
use crate::skeleton::ObjectiveSkeleton;

/// Factor applied (on the right) to one edge weight when perturbing.
pub const PERTURBATION: Mat3 = Mat3::diag(2.0, 1.0, 1.0);

/// Minimum `|det|` of a sampled potential.
const MIN_POTENTIAL_DET: f64 = 0.1;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `[-1, 1]`, resampled until `|det| > 0.1`.
pub fn random_invertible(rng: &mut impl Rng) -> Mat3 {
    loop {
        let mut m = Mat3::zero();
        for x in m.0.iter_mut().flatten() {
            *x = rng.gen_range(-1.0..=1.0);
        }
        if m.determinant().abs() > MIN_POTENTIAL_DET {
            return m;
        }
    }
}

/// Labels `v0 .. v{2^n - 1}`.
pub fn raw_labels(n: usize) -> Vec<BasePoint> {
    (0..1usize << n).map(|i| BasePoint(format!("v{i}"))).collect()
}

/// Skeleton over [`raw_labels`] with every edge weight `φ(head) φ(tail)^-1`.
pub fn from_potential(n: usize, potential: Vec<Mat3>) -> Result<ObjectiveSkeleton> {
    from_potential_on(n, raw_labels(n), &potential)
}

fn from_potential_on(n: usize, vertices: Vec<BasePoint>, potential: &[Mat3]) -> Result<ObjectiveSkeleton> {
    if potential.len() != 1 << n {
        return Err(Error::InvalidSkeleton(format!(
            "{} potential values for {} vertices",
            potential.len(),
            1usize << n
        )));
    }
    let inverses = potential.iter().map(Mat3::inverse).collect::<Result<Vec<_>>>()?;
    let mask = |axis: usize| 1usize << (n - axis);
    ObjectiveSkeleton::from_weights(n, vertices, |e: EdgeId| {
        let head = e.tail.0 | mask(e.axis);
        Ok(potential[head] * inverses[e.tail.0])
    })
}

/// Conservative skeleton on raw labels: a random potential per vertex.
pub fn random_conservative(n: usize, seed: u64) -> ObjectiveSkeleton {
    random_conservative_with(n, &mut rng(seed))
}

fn random_conservative_with(n: usize, rng: &mut ChaCha8Rng) -> ObjectiveSkeleton {
    let potential: Vec<Mat3> = (0..1usize << n).map(|_| random_invertible(rng)).collect();
    from_potential(n, potential).expect("sampled potentials are invertible")
}

/// Multiplies the weight of one uniformly chosen edge by [`PERTURBATION`].
pub fn perturb(t: &ObjectiveSkeleton, seed: u64) -> (ObjectiveSkeleton, EdgeId) {
    perturb_with(t, &mut rng(seed))
}

fn perturb_with(t: &ObjectiveSkeleton, rng: &mut ChaCha8Rng) -> (ObjectiveSkeleton, EdgeId) {
    let shape = t.shape();
    let e = shape.edge_at(rng.gen_range(0..shape.edge_count()));
    let p = t
        .with_weight(e, t.weight(e) * &PERTURBATION)
        .expect("perturbation keeps weights invertible");
    (p, e)
}

/// A conservative skeleton followed by a perturbation, drawn from one stream.
pub fn random_perturbed(n: usize, seed: u64) -> (ObjectiveSkeleton, EdgeId) {
    let mut r = rng(seed);
    let t = random_conservative_with(n, &mut r);
    perturb_with(&t, &mut r)
}

/// Conservative skeleton whose weights are genuine arrows of the mixture.
///
/// Picks a random reference point `X0` with a nonempty core loop set, keeps
/// the points reachable from it through the core, and uses as potential a
/// random core arrow `X0 -> W_v` for each vertex. Every edge weight is then
/// a core arrow, hence an arrow of every constituent.
pub fn random_conservative_in(mix: &MixtureSpec, seed: u64) -> Result<ObjectiveSkeleton> {
    let mut r = rng(seed);
    let n = mix.n();
    let points = mix.base_points();
    let start = r.gen_range(0..points.len());
    for offset in 0..points.len() {
        let x0 = &points[(start + offset) % points.len()];
        let mut reach: Vec<(&BasePoint, Vec<Mat3>)> = Vec::new();
        for y in points {
            let set = core_arrows(mix, x0, y)?;
            if !set.arrows.is_empty() {
                reach.push((y, set.arrows));
            }
        }
        if !reach.iter().any(|(y, _)| *y == x0) {
            continue;
        }
        let mut vertices = Vec::with_capacity(1 << n);
        let mut potential = Vec::with_capacity(1 << n);
        for _ in 0..1usize << n {
            let (y, arrows) = &reach[r.gen_range(0..reach.len())];
            vertices.push((*y).clone());
            potential.push(arrows[r.gen_range(0..arrows.len())]);
        }
        let t = from_potential_on(n, vertices, &potential)?;
        t.validate_in(mix)?;
        return Ok(t);
    }
    Err(Error::InvalidMixture(
        "no base point has a core arrow to itself; the mixture admits no conservative skeleton".into(),
    ))
}

/// How lattice edges get their weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeWeights {
    /// `φ(head) φ(tail)^-1` from a random potential on the lattice points.
    Conservative,
    /// An independent random invertible matrix per lattice edge.
    Free,
}

/// A box of `extents[a]` unit cells along each axis with weighted lattice
/// edges. Cells that share a facet share its vertices and edges exactly, so
/// neighbouring cells are composable along the axis that separates them.
#[derive(Clone, Debug)]
pub struct Lattice {
    extents: Vec<usize>,
    /// Indexed by `point * n + (axis - 1)`; entries for edges leaving the box are unused.
    weights: Vec<Mat3>,
}

impl Lattice {
    pub fn random(extents: &[usize], mode: LatticeWeights, seed: u64) -> Lattice {
        let n = extents.len();
        let mut r = rng(seed);
        let points: usize = extents.iter().map(|e| e + 1).product();
        let mut lattice = Lattice {
            extents: extents.to_vec(),
            weights: Vec::new(),
        };
        lattice.weights = match mode {
            LatticeWeights::Free => (0..points * n).map(|_| random_invertible(&mut r)).collect(),
            LatticeWeights::Conservative => {
                let phi: Vec<Mat3> = (0..points).map(|_| random_invertible(&mut r)).collect();
                let mut w = vec![Mat3::identity(); points * n];
                for p in 0..points {
                    for axis in 1..=n {
                        if let Some(q) = lattice.step(p, axis) {
                            w[p * n + axis - 1] = phi[q] * phi[p].inverse().expect("|det| > 0.1");
                        }
                    }
                }
                w
            }
        };
        lattice
    }

    pub fn n(&self) -> usize {
        self.extents.len()
    }

    fn coords(&self, mut p: usize) -> Vec<usize> {
        let mut c = vec![0; self.n()];
        for a in (0..self.n()).rev() {
            c[a] = p % (self.extents[a] + 1);
            p /= self.extents[a] + 1;
        }
        c
    }

    fn point(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.extents)
            .fold(0, |acc, (c, e)| acc * (e + 1) + c)
    }

    fn step(&self, p: usize, axis: usize) -> Option<usize> {
        let mut c = self.coords(p);
        c[axis - 1] += 1;
        (c[axis - 1] <= self.extents[axis - 1]).then(|| self.point(&c))
    }

    fn label(&self, p: usize) -> BasePoint {
        let c: Vec<String> = self.coords(p).iter().map(|x| x.to_string()).collect();
        BasePoint(format!("p{}", c.join(".")))
    }

    /// The unit cell whose lowest corner sits at `origin`.
    pub fn cell(&self, origin: &[usize]) -> Result<ObjectiveSkeleton> {
        let n = self.n();
        if origin.len() != n || origin.iter().zip(&self.extents).any(|(o, e)| o >= e) {
            return Err(Error::InvalidSkeleton(format!(
                "cell origin {origin:?} outside extents {:?}",
                self.extents
            )));
        }
        let point_of = |v: usize| {
            let c: Vec<usize> = (1..=n)
                .map(|a| origin[a - 1] + usize::from(v & (1 << (n - a)) != 0))
                .collect();
            self.point(&c)
        };
        let vertices = (0..1usize << n).map(|v| self.label(point_of(v))).collect();
        ObjectiveSkeleton::from_weights(n, vertices, |e| Ok(self.weights[point_of(e.tail.0) * n + e.axis - 1]))
    }
}
