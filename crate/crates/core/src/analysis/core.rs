//! The core groupoid and the uniformity verdict.
//!
//! Collapsing every edge not leaving `W_0` to a unit identifies all of
//! `W_1 .. W_{2^n-1}`, and commutativity of the faces at the origin then
//! forces the `n` edges leaving `W_0` to carry one and the same matrix. A
//! core arrow `X -> Y` is therefore a single matrix lying in the arrow set
//! of every constituent at once; that intersection is what is computed here.

use serde::Serialize;

use crate::error::Result;
use crate::groupoid::{BasePoint, Mat3};
use crate::mixture::MixtureSpec;

/// Short description of how core arrows are computed, carried in reports.
pub const CORE_RULE: &str =
    "core arrows X->Y = intersection over constituents of their arrow sets X->Y (unit-collapse reading)";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoreArrowSet {
    pub source: BasePoint,
    pub target: BasePoint,
    pub arrows: Vec<Mat3>,
}

impl CoreArrowSet {
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn contains(&self, m: &Mat3, tol: f64) -> bool {
        self.arrows.iter().any(|a| a.approx_eq(m, tol))
    }
}

/// Arrows from `x` to `y` shared by all constituents: enumerate the smallest
/// arrow set and keep the elements every other constituent contains.
pub fn core_arrows(mix: &MixtureSpec, x: &BasePoint, y: &BasePoint) -> Result<CoreArrowSet> {
    let tol = mix.tolerance();
    let sets = mix
        .constituents()
        .iter()
        .map(|c| c.arrow_set(x, y))
        .collect::<Result<Vec<_>>>()?;
    let smallest = sets
        .iter()
        .enumerate()
        .min_by_key(|(_, s)| s.len())
        .map(|(i, _)| i)
        .unwrap_or(0);
    let arrows = sets
        .get(smallest)
        .map(|candidates| {
            candidates
                .iter()
                .map(|a| *a.weight())
                .filter(|w| {
                    sets.iter()
                        .enumerate()
                        .all(|(i, s)| i == smallest || s.iter().any(|b| b.weight().approx_eq(w, tol)))
                })
                .collect()
        })
        .unwrap_or_default();
    Ok(CoreArrowSet {
        source: x.clone(),
        target: y.clone(),
        arrows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstituentStatus {
    pub name: String,
    pub transitive: bool,
    pub missing_implants: Vec<BasePoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DefectPair {
    pub source: BasePoint,
    pub target: BasePoint,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniformityReport {
    pub verdict: bool,
    pub reference: BasePoint,
    /// Ordered pairs with an empty core arrow set (misalignment defects),
    /// in base-point order.
    pub defect_pairs: Vec<DefectPair>,
    pub constituents: Vec<ConstituentStatus>,
    pub core_rule: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl UniformityReport {
    pub fn all_constituents_transitive(&self) -> bool {
        self.constituents.iter().all(|c| c.transitive)
    }
}

/// Uniform iff the core is transitive, decided from the first base point.
pub fn is_uniform(mix: &MixtureSpec) -> Result<UniformityReport> {
    let points = mix.base_points();
    let reference = points[0].clone();
    let mut verdict = true;
    for y in points {
        if core_arrows(mix, &reference, y)?.is_empty() {
            verdict = false;
            break;
        }
    }
    let mut defect_pairs = Vec::new();
    if !verdict {
        for x in points {
            for y in points {
                if core_arrows(mix, x, y)?.is_empty() {
                    defect_pairs.push(DefectPair {
                        source: x.clone(),
                        target: y.clone(),
                    });
                }
            }
        }
    }
    let constituents: Vec<ConstituentStatus> = mix
        .constituents()
        .iter()
        .map(|c| ConstituentStatus {
            name: c.name().to_owned(),
            transitive: c.is_transitive(),
            missing_implants: c.missing_implants().into_iter().cloned().collect(),
        })
        .collect();
    let note = (!verdict && constituents.iter().all(|c| c.transitive))
        .then(|| "all constituents individually uniform".to_owned());
    Ok(UniformityReport {
        verdict,
        reference,
        defect_pairs,
        constituents,
        core_rule: CORE_RULE,
        note,
    })
}
