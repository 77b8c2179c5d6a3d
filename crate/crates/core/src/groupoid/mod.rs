//! Material groupoids over a finite base.
//!
//! A constituent is described generatively: each point `X` where the
//! constituent is defined carries an implant `K(X)` from a common archetype,
//! and the archetype has a finite symmetry group `G`. The arrows from `X` to
//! `Y` are then the coset `{ K(Y) g K(X)^-1 : g in G }`.

mod mat3;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use mat3::{Mat3, SINGULAR_THRESHOLD};

/// Default relative Frobenius tolerance for matrix equality.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Label of a material point of the discretized body.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasePoint(pub String);

impl BasePoint {
    pub fn new(id: impl Into<String>) -> BasePoint {
        BasePoint(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for BasePoint {
    fn from(s: &str) -> BasePoint {
        BasePoint(s.to_owned())
    }
}

/// One groupoid element: an invertible weight from `source` to `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrow {
    source: BasePoint,
    target: BasePoint,
    weight: Mat3,
}

impl Arrow {
    pub fn new(source: BasePoint, target: BasePoint, weight: Mat3) -> Result<Arrow> {
        if !weight.is_finite() || !weight.is_invertible() {
            return Err(Error::Singular {
                det: weight.determinant(),
            });
        }
        Ok(Arrow { source, target, weight })
    }

    pub fn unit(at: BasePoint) -> Arrow {
        Arrow {
            source: at.clone(),
            target: at,
            weight: Mat3::identity(),
        }
    }

    pub fn source(&self) -> &BasePoint {
        &self.source
    }

    pub fn target(&self) -> &BasePoint {
        &self.target
    }

    pub fn weight(&self) -> &Mat3 {
        &self.weight
    }

    pub fn inverse(&self) -> Result<Arrow> {
        Arrow::new(self.target.clone(), self.source.clone(), self.weight.inverse()?)
    }

    /// Same endpoints and weights within relative tolerance.
    pub fn approx_eq(&self, other: &Arrow, tol: f64) -> bool {
        self.source == other.source && self.target == other.target && self.weight.approx_eq(&other.weight, tol)
    }
}

/// `b ∘ a`: first `a`, then `b`. The weight is `weight(b) * weight(a)`.
pub fn compose_arrows(b: &Arrow, a: &Arrow) -> Result<Arrow> {
    if a.target != b.source {
        return Err(Error::NotComposable {
            end: a.target.to_string(),
            start: b.source.to_string(),
        });
    }
    Arrow::new(a.source.clone(), b.target.clone(), b.weight * a.weight)
}

/// Largest group [`SymmetryGroup::generated_by`] will build before giving up.
const MAX_GROUP_ORDER: usize = 4096;

/// A finite matrix group. The identity is always the first element.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryGroup {
    elements: Vec<Mat3>,
}

impl SymmetryGroup {
    pub fn trivial() -> SymmetryGroup {
        SymmetryGroup {
            elements: vec![Mat3::identity()],
        }
    }

    /// Validates an explicit element list: identity present, no duplicates,
    /// closed under product and inverse (all within `tol`).
    pub fn new(elements: Vec<Mat3>, tol: f64) -> Result<SymmetryGroup> {
        if elements.is_empty() {
            return Err(Error::InvalidGroup("no elements".into()));
        }
        for (i, g) in elements.iter().enumerate() {
            if !g.is_finite() || !g.is_invertible() {
                return Err(Error::InvalidGroup(format!("element {i} is singular")));
            }
            if let Some(j) = elements[..i].iter().position(|h| h.approx_eq(g, tol)) {
                return Err(Error::InvalidGroup(format!("elements {j} and {i} coincide")));
            }
        }
        let find = |m: &Mat3| elements.iter().position(|g| g.approx_eq(m, tol));
        let id = find(&Mat3::identity()).ok_or_else(|| Error::InvalidGroup("identity missing".into()))?;
        for (i, g) in elements.iter().enumerate() {
            if find(&g.inverse()?).is_none() {
                return Err(Error::InvalidGroup(format!("inverse of element {i} missing")));
            }
            for (j, h) in elements.iter().enumerate() {
                if find(&(g * h)).is_none() {
                    return Err(Error::InvalidGroup(format!("product of elements {i} and {j} missing")));
                }
            }
        }
        let mut elements = elements;
        let e = elements.remove(id);
        elements.insert(0, e);
        Ok(SymmetryGroup { elements })
    }

    /// Closure of `generators` under multiplication. Fails if the closure
    /// exceeds an internal order bound (the generators are then almost
    /// certainly not of finite order).
    pub fn generated_by(generators: &[Mat3], tol: f64) -> Result<SymmetryGroup> {
        for (i, g) in generators.iter().enumerate() {
            if !g.is_finite() || !g.is_invertible() {
                return Err(Error::InvalidGroup(format!("generator {i} is singular")));
            }
        }
        let mut elements = vec![Mat3::identity()];
        let mut frontier = vec![Mat3::identity()];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = g * &x;
                if elements.iter().all(|e| !e.approx_eq(&y, tol)) {
                    if elements.len() == MAX_GROUP_ORDER {
                        return Err(Error::InvalidGroup(format!(
                            "generated group exceeds {MAX_GROUP_ORDER} elements"
                        )));
                    }
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        SymmetryGroup::new(elements, tol)
    }

    /// Named presets: `trivial`, `cyclic_z_2`, `cyclic_z_4` (rotations about
    /// z) and `orthorhombic` (the eight diagonal sign matrices).
    pub fn preset(name: &str) -> Result<SymmetryGroup> {
        let elements = match name {
            "trivial" => return Ok(SymmetryGroup::trivial()),
            "cyclic_z_2" => vec![Mat3::identity(), Mat3::rotation_z(180.0)],
            "cyclic_z_4" => (0..4).map(|k| Mat3::rotation_z(90.0 * k as f64)).collect(),
            "orthorhombic" => {
                let mut v = Vec::new();
                for a in [1.0, -1.0] {
                    for b in [1.0, -1.0] {
                        for c in [1.0, -1.0] {
                            v.push(Mat3::diag(a, b, c));
                        }
                    }
                }
                v
            }
            other => {
                return Err(Error::InvalidGroup(format!("unknown preset `{other}`")));
            }
        };
        SymmetryGroup::new(elements, DEFAULT_TOLERANCE)
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat3, tol: f64) -> bool {
        self.elements.iter().any(|g| g.approx_eq(m, tol))
    }
}

/// The material groupoid of one constituent.
#[derive(Clone, Debug)]
pub struct ConstituentGroupoid {
    name: String,
    base: Vec<BasePoint>,
    implants: BTreeMap<BasePoint, Mat3>,
    group: SymmetryGroup,
    tolerance: f64,
}

impl ConstituentGroupoid {
    pub fn new(
        name: impl Into<String>,
        base: Vec<BasePoint>,
        implants: BTreeMap<BasePoint, Mat3>,
        group: SymmetryGroup,
        tolerance: f64,
    ) -> Result<ConstituentGroupoid> {
        let name = name.into();
        for (p, k) in &implants {
            if !base.contains(p) {
                return Err(Error::UnknownPoint(p.to_string()));
            }
            if !k.is_finite() || !k.is_invertible() {
                return Err(Error::InvalidMixture(format!(
                    "constituent `{name}`: implant at `{p}` is singular"
                )));
            }
        }
        Ok(ConstituentGroupoid {
            name,
            base,
            implants,
            group,
            tolerance,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &[BasePoint] {
        &self.base
    }

    pub fn implant(&self, p: &BasePoint) -> Option<&Mat3> {
        self.implants.get(p)
    }

    pub fn group(&self) -> &SymmetryGroup {
        &self.group
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn check_point(&self, p: &BasePoint) -> Result<()> {
        if self.base.contains(p) {
            Ok(())
        } else {
            Err(Error::UnknownPoint(p.to_string()))
        }
    }

    /// All arrows from `x` to `y`, one per symmetry element in group order.
    /// Empty when either point lacks an implant.
    pub fn arrow_set(&self, x: &BasePoint, y: &BasePoint) -> Result<Vec<Arrow>> {
        self.check_point(x)?;
        self.check_point(y)?;
        let (Some(kx), Some(ky)) = (self.implants.get(x), self.implants.get(y)) else {
            return Ok(Vec::new());
        };
        let kx_inv = kx.inverse()?;
        let mut out: Vec<Arrow> = Vec::with_capacity(self.group.order());
        for g in self.group.elements() {
            let w = (ky * g) * kx_inv;
            if out.iter().all(|a| !a.weight.approx_eq(&w, self.tolerance)) {
                out.push(Arrow::new(x.clone(), y.clone(), w)?);
            }
        }
        Ok(out)
    }

    /// Whether `a` is (within `tol`) one of the arrows of this groupoid.
    pub fn contains_arrow(&self, a: &Arrow, tol: f64) -> bool {
        self.arrow_set(&a.source, &a.target)
            .map(|set| set.iter().any(|b| b.weight.approx_eq(&a.weight, tol)))
            .unwrap_or(false)
    }

    /// Transitive iff every point carries an implant.
    pub fn is_transitive(&self) -> bool {
        !self.base.is_empty() && self.base.iter().all(|p| self.implants.contains_key(p))
    }

    /// Points without an implant.
    pub fn missing_implants(&self) -> Vec<&BasePoint> {
        self.base.iter().filter(|p| !self.implants.contains_key(*p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> BasePoint {
        BasePoint::from(s)
    }

    fn constituent(implants: &[(&str, Mat3)], group: SymmetryGroup) -> ConstituentGroupoid {
        let base = vec![pt("X"), pt("Y"), pt("Z")];
        let implants = implants.iter().map(|(p, m)| (pt(p), *m)).collect();
        ConstituentGroupoid::new("c", base, implants, group, DEFAULT_TOLERANCE).unwrap()
    }

    #[test]
    fn unit_and_inverse_laws() {
        let a = Arrow::new(pt("X"), pt("Y"), Mat3::diag(2.0, 1.0, 1.0)).unwrap();
        assert_eq!(compose_arrows(&Arrow::unit(pt("Y")), &a).unwrap(), a);
        let u = compose_arrows(&a.inverse().unwrap(), &a).unwrap();
        assert!(u.approx_eq(&Arrow::unit(pt("X")), 1e-15));
    }

    #[test]
    fn composition_multiplies_in_application_order() {
        let a = Arrow::new(pt("X"), pt("Y"), Mat3::diag(2.0, 1.0, 1.0)).unwrap();
        let b = Arrow::new(pt("Y"), pt("Z"), Mat3::diag(1.0, 3.0, 1.0)).unwrap();
        let c = compose_arrows(&b, &a).unwrap();
        assert_eq!(c.source(), &pt("X"));
        assert_eq!(c.target(), &pt("Z"));
        assert_eq!(c.weight(), &Mat3::diag(2.0, 3.0, 1.0));
    }

    #[test]
    fn mismatched_endpoints_rejected() {
        let a = Arrow::unit(pt("X"));
        let b = Arrow::unit(pt("Y"));
        assert!(matches!(compose_arrows(&b, &a), Err(Error::NotComposable { .. })));
    }

    #[test]
    fn singular_arrow_rejected() {
        assert!(Arrow::new(pt("X"), pt("Y"), Mat3::zero()).is_err());
    }

    #[test]
    fn arrow_set_examples() {
        let c = constituent(
            &[("X", Mat3::identity()), ("Y", Mat3::identity())],
            SymmetryGroup::trivial(),
        );
        let set = c.arrow_set(&pt("X"), &pt("Y")).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set[0].weight(), &Mat3::identity());

        // Z carries no implant
        assert!(c.arrow_set(&pt("Z"), &pt("X")).unwrap().is_empty());
        assert!(matches!(c.arrow_set(&pt("W"), &pt("X")), Err(Error::UnknownPoint(_))));

        let r = Mat3::rotation_z(90.0);
        let c = constituent(&[("X", Mat3::identity()), ("Y", r)], SymmetryGroup::trivial());
        let set = c.arrow_set(&pt("X"), &pt("Y")).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set[0].weight(), &r);
    }

    #[test]
    fn contains_arrow_examples() {
        let k = Mat3([[1.0, 0.2, 0.0], [0.0, 2.0, 0.1], [0.3, 0.0, 1.0]]);
        let c = constituent(
            &[("X", Mat3::identity()), ("Y", k)],
            SymmetryGroup::preset("cyclic_z_4").unwrap(),
        );
        assert!(c.contains_arrow(&Arrow::unit(pt("X")), 1e-9));
        assert!(!c.contains_arrow(
            &Arrow::new(pt("X"), pt("X"), Mat3::identity().scale(2.0)).unwrap(),
            1e-9
        ));
        let g = c.group().elements()[1];
        let w = (k * g) * Mat3::identity().inverse().unwrap();
        let perturbed = w.scale(1.0 + 1e-12);
        assert!(c.contains_arrow(&Arrow::new(pt("X"), pt("Y"), perturbed).unwrap(), 1e-9));
        assert!(!c.contains_arrow(&Arrow::new(pt("X"), pt("Y"), w.scale(1.01)).unwrap(), 1e-9));
    }

    #[test]
    fn transitivity() {
        let c = constituent(
            &[
                ("X", Mat3::identity()),
                ("Y", Mat3::diag(2.0, 1.0, 1.0)),
                ("Z", Mat3::diag(1.0, 1.0, 5.0)),
            ],
            SymmetryGroup::trivial(),
        );
        assert!(c.is_transitive());
        let c = constituent(
            &[("X", Mat3::identity()), ("Y", Mat3::identity())],
            SymmetryGroup::trivial(),
        );
        assert!(!c.is_transitive());
        assert_eq!(c.missing_implants(), vec![&pt("Z")]);
    }

    #[test]
    fn presets_validate() {
        assert_eq!(SymmetryGroup::preset("trivial").unwrap().order(), 1);
        assert_eq!(SymmetryGroup::preset("cyclic_z_2").unwrap().order(), 2);
        assert_eq!(SymmetryGroup::preset("cyclic_z_4").unwrap().order(), 4);
        assert_eq!(SymmetryGroup::preset("orthorhombic").unwrap().order(), 8);
        assert!(SymmetryGroup::preset("icosahedral").is_err());
    }

    #[test]
    fn non_closed_group_rejected() {
        let r = Mat3::rotation_z(90.0);
        let err = SymmetryGroup::new(vec![Mat3::identity(), r], 1e-9).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(_)));
        assert!(SymmetryGroup::new(vec![r], 1e-9).is_err());
        assert!(SymmetryGroup::new(vec![Mat3::identity(), Mat3::identity()], 1e-9).is_err());
    }

    #[test]
    fn generated_cyclic_group() {
        let g = SymmetryGroup::generated_by(&[Mat3::rotation_z(90.0)], 1e-9).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.elements()[0], Mat3::identity());
        // an irrational-angle rotation never closes
        assert!(SymmetryGroup::generated_by(&[Mat3::rotation_z(1.0 / 3f64.sqrt())], 1e-9).is_err());
    }

    #[test]
    fn identity_moved_to_front() {
        let g = SymmetryGroup::new(vec![Mat3::rotation_z(180.0), Mat3::identity()], 1e-9).unwrap();
        assert_eq!(g.elements()[0], Mat3::identity());
    }
}
