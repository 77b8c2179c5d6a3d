//! Mixture instances: a base point set, one constituent groupoid per axis,
//! and the matrix tolerance. Read from and written to JSON documents of the
//! form
//!
//! ```json
//! {
//!   "n": 2,
//!   "base_points": ["X", "Y"],
//!   "tolerance": 1e-9,
//!   "constituents": [
//!     { "name": "fibre", "implants": { "X": [1,0,0, 0,1,0, 0,0,1], "Y": [...] },
//!       "symmetry": "trivial" }
//!   ]
//! }
//! ```
//!
//! `symmetry` is a preset name, `{ "elements": [[9 numbers], ...] }` or
//! `{ "generators": [[9 numbers], ...] }`; it defaults to `"trivial"`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{BasePoint, ConstituentGroupoid, Mat3, SymmetryGroup, DEFAULT_TOLERANCE};

#[derive(Clone, Debug)]
pub struct MixtureSpec {
    base_points: Vec<BasePoint>,
    constituents: Vec<ConstituentGroupoid>,
    tolerance: f64,
}

impl MixtureSpec {
    pub fn new(
        base_points: Vec<BasePoint>,
        constituents: Vec<ConstituentGroupoid>,
        tolerance: f64,
    ) -> Result<MixtureSpec> {
        if base_points.is_empty() {
            return Err(Error::InvalidMixture("base_points: empty".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &base_points {
            if !seen.insert(p) {
                return Err(Error::InvalidMixture(format!("base_points: `{p}` declared twice")));
            }
        }
        if constituents.is_empty() {
            return Err(Error::InvalidMixture("constituents: empty".into()));
        }
        if !(tolerance > 0.0 && tolerance < 1.0) {
            return Err(Error::InvalidMixture(format!("tolerance: {tolerance} not in (0, 1)")));
        }
        for (i, c) in constituents.iter().enumerate() {
            if c.base() != base_points.as_slice() {
                return Err(Error::InvalidMixture(format!(
                    "constituents[{i}]: base differs from the mixture base"
                )));
            }
        }
        Ok(MixtureSpec {
            base_points,
            constituents,
            tolerance,
        })
    }

    /// Number of constituents, which is also the skeleton dimension.
    pub fn n(&self) -> usize {
        self.constituents.len()
    }

    pub fn base_points(&self) -> &[BasePoint] {
        &self.base_points
    }

    pub fn constituents(&self) -> &[ConstituentGroupoid] {
        &self.constituents
    }

    /// The constituent supplying weights for edges along `axis` (1-based).
    pub fn constituent(&self, axis: usize) -> Result<&ConstituentGroupoid> {
        self.constituents
            .get(axis.wrapping_sub(1))
            .ok_or(Error::Axis { axis, n: self.n() })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn contains_point(&self, p: &BasePoint) -> bool {
        self.base_points.contains(p)
    }

    pub fn from_json(text: &str) -> Result<MixtureSpec> {
        let doc: MixtureDoc = serde_json::from_str(text)?;
        doc.into_spec()
    }

    pub fn to_json(&self) -> String {
        let doc = MixtureDoc {
            n: self.n(),
            base_points: self.base_points.iter().map(|p| p.0.clone()).collect(),
            tolerance: Some(self.tolerance),
            constituents: self
                .constituents
                .iter()
                .map(|c| ConstituentDoc {
                    name: c.name().to_owned(),
                    implants: self
                        .base_points
                        .iter()
                        .filter_map(|p| c.implant(p).map(|k| (p.0.clone(), k.to_row_major())))
                        .collect(),
                    symmetry: SymmetryDoc::Elements {
                        elements: c.group().elements().iter().map(Mat3::to_row_major).collect(),
                    },
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("mixture documents always serialize")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MixtureDoc {
    n: usize,
    base_points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
    constituents: Vec<ConstituentDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstituentDoc {
    name: String,
    #[serde(default)]
    implants: BTreeMap<String, [f64; 9]>,
    #[serde(default = "SymmetryDoc::trivial")]
    symmetry: SymmetryDoc,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum SymmetryDoc {
    Preset(String),
    Elements { elements: Vec<[f64; 9]> },
    Generators { generators: Vec<[f64; 9]> },
}

impl SymmetryDoc {
    fn trivial() -> SymmetryDoc {
        SymmetryDoc::Preset("trivial".into())
    }

    fn build(&self, tol: f64) -> Result<SymmetryGroup> {
        match self {
            SymmetryDoc::Preset(name) => SymmetryGroup::preset(name),
            SymmetryDoc::Elements { elements } => {
                SymmetryGroup::new(elements.iter().map(|e| Mat3::from(*e)).collect(), tol)
            }
            SymmetryDoc::Generators { generators } => {
                let gens: Vec<Mat3> = generators.iter().map(|e| Mat3::from(*e)).collect();
                SymmetryGroup::generated_by(&gens, tol)
            }
        }
    }
}

impl MixtureDoc {
    fn into_spec(self) -> Result<MixtureSpec> {
        if self.constituents.len() != self.n {
            return Err(Error::InvalidMixture(format!(
                "n: declared {} but {} constituents given",
                self.n,
                self.constituents.len()
            )));
        }
        let tol = self.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        let base: Vec<BasePoint> = self.base_points.into_iter().map(BasePoint).collect();
        let mut constituents = Vec::with_capacity(self.n);
        for (i, c) in self.constituents.into_iter().enumerate() {
            let group = c
                .symmetry
                .build(tol)
                .map_err(|e| Error::InvalidMixture(format!("constituents[{i}].symmetry: {e}")))?;
            let mut implants = BTreeMap::new();
            for (p, k) in c.implants {
                let p = BasePoint(p);
                if !base.contains(&p) {
                    return Err(Error::InvalidMixture(format!(
                        "constituents[{i}].implants.{p}: not a declared base point"
                    )));
                }
                implants.insert(p, Mat3::from(k));
            }
            let c = ConstituentGroupoid::new(c.name, base.clone(), implants, group, tol)
                .map_err(|e| Error::InvalidMixture(format!("constituents[{i}]: {e}")))?;
            constituents.push(c);
        }
        MixtureSpec::new(base, constituents, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROTATED: &str = r#"{
        "n": 2,
        "base_points": ["X", "Y"],
        "constituents": [
            { "name": "a", "implants": { "X": [1,0,0,0,1,0,0,0,1], "Y": [1,0,0,0,1,0,0,0,1] } },
            { "name": "b", "implants": { "X": [1,0,0,0,1,0,0,0,1], "Y": [0,-1,0,1,0,0,0,0,1] },
              "symmetry": { "generators": [[0,-1,0,1,0,0,0,0,1]] } }
        ]
    }"#;

    #[test]
    fn parses_generators_and_defaults() {
        let m = MixtureSpec::from_json(ROTATED).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m.tolerance(), DEFAULT_TOLERANCE);
        assert_eq!(m.constituent(1).unwrap().group().order(), 1);
        assert_eq!(m.constituent(2).unwrap().group().order(), 4);
        assert!(m.constituent(3).is_err());
        assert!(m.constituent(0).is_err());
    }

    #[test]
    fn round_trips_through_json() {
        let m = MixtureSpec::from_json(ROTATED).unwrap();
        let again = MixtureSpec::from_json(&m.to_json()).unwrap();
        assert_eq!(again.base_points(), m.base_points());
        for (a, b) in again.constituents().iter().zip(m.constituents()) {
            assert_eq!(a.group(), b.group());
            for p in m.base_points() {
                assert_eq!(a.implant(p), b.implant(p));
            }
        }
    }

    #[test]
    fn rejects_bad_documents() {
        let count = ROTATED.replace("\"n\": 2", "\"n\": 3");
        assert!(matches!(MixtureSpec::from_json(&count), Err(Error::InvalidMixture(_))));

        let unknown = ROTATED.replace("\"Y\": [0,-1", "\"Q\": [0,-1");
        let err = MixtureSpec::from_json(&unknown).unwrap_err();
        assert!(err.to_string().contains("implants.Q"), "{err}");

        let not_closed = ROTATED.replace("\"generators\"", "\"elements\"");
        let err = MixtureSpec::from_json(&not_closed).unwrap_err();
        assert!(err.to_string().contains("symmetry"), "{err}");

        let truncated = &ROTATED[..ROTATED.len() / 2];
        assert!(matches!(MixtureSpec::from_json(truncated), Err(Error::Json(_))));

        let dup = ROTATED.replace("[\"X\", \"Y\"]", "[\"X\", \"X\"]");
        assert!(MixtureSpec::from_json(&dup).is_err());
    }
}
