//! Arithmetic prequantization criteria and moduli-space component counts.
//!
//! For a conjugacy class labelled by an alcove point `xi`, the levels `k`
//! at which the class admits a prequantization are exactly the multiples of
//! a minimal level, computed from the coordinates of the flat image of `xi`
//! in the fundamental-weight basis. For the moduli space of flat `PU(p)`
//! bundles (`p` an odd prime) over a genus-`h` surface with `s` marked
//! classes, a level-`k` prequantization exists iff
//!
//!   (i)  `h >= 1` implies `p | k`, and
//!   (ii) every marked class admits level `k`,
//!
//! and the number of connected components is the index of the subgroup
//! generated by the class stabilizers inside the deck group. Everything is
//! evaluated by exact lattice arithmetic; no cohomology is computed, and
//! whether 1 is a regular value of the moment map is *not* decided here
//! (reports carry a fixed caveat).

use num::integer::lcm;
use num::ToPrimitive;
use serde_json::json;

use crate::alcove::{Alcove, AlcovePoint};
use crate::center::{center_elements, stabilizer, subgroup_generated, CenterElement};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, RatVec};
use crate::root_system::{RootSystem, Series, SimpleType};
use crate::weyl::fold_to_alcove;

/// Caveat attached to every report: regularity of 1 as a moment-map value
/// is a transversality condition this toolkit does not decide.
pub const REGULAR_VALUE_CAVEAT: &str = "assumes 1 is a regular value of the moment map";

/// A conjugacy class of the simply connected group, represented by its
/// alcove point. Arbitrary rational points are folded on ingestion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    point: AlcovePoint,
}

impl ClassLabel {
    /// Label the class of `exp(xi)`: folds `xi` to its alcove representative.
    pub fn new(alc: &Alcove, xi: &RatVec) -> Result<Self> {
        Ok(ClassLabel {
            point: fold_to_alcove(alc, xi)?.point,
        })
    }

    pub fn from_alcove_point(point: AlcovePoint) -> Self {
        ClassLabel { point }
    }

    pub fn point(&self) -> &AlcovePoint {
        &self.point
    }
}

/// Smallest `k >= 1` such that the flat image of `k * xi` lies in the
/// weight lattice; the admitting levels are exactly its multiples.
///
/// The coordinates of `flat(xi)` in the fundamental-weight basis are its
/// pairings with the simple coroots, so the answer is the lcm of their
/// denominators.
pub fn class_min_level(alc: &Alcove, p: &AlcovePoint) -> u64 {
    let rs = alc.root_system();
    let flat = p.cartesian().scale(rs.basic_scale());
    let coords = RatVec::new((1..=rs.rank()).map(|i| flat.dot(rs.coroot(i))).collect());
    denominator_lcm(&coords)
        .to_u64()
        .expect("minimal level fits in u64")
}

/// Structure group of a double, for the genus condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureGroup {
    /// Simply connected: the double admits every level.
    SimplyConnected,
    /// `PU(n)`: the double requires levels divisible by `n`.
    ProjectiveUnitary { n: u64 },
    /// Any other quotient: out of scope, rejected rather than guessed.
    OtherQuotient { description: String },
}

/// Minimal level of the double of the structure group: 1 when simply
/// connected, `n` for `PU(n)`.
pub fn double_min_level(group: &StructureGroup) -> Result<u64> {
    match group {
        StructureGroup::SimplyConnected => Ok(1),
        StructureGroup::ProjectiveUnitary { n } if *n >= 2 => Ok(*n),
        StructureGroup::ProjectiveUnitary { n } => Err(Error::OutOfScope {
            reason: format!("PU({n}) is not a simple quotient; need n >= 2"),
        }),
        StructureGroup::OtherQuotient { description } => Err(Error::OutOfScope {
            reason: format!("minimal double level for {description} is not tabulated here"),
        }),
    }
}

/// A moduli-space query: flat `PU(p)` bundles over a genus-`h` surface with
/// boundary holonomies in the classes covering the given alcove points of
/// `SU(p)`.
///
/// Level-independent facts (per-class minimal levels, stabilizer orders,
/// the component count, and the deck-group order) are computed once at
/// construction, so evaluating the obstruction at many levels is cheap.
#[derive(Clone, Debug)]
pub struct ModuliQuery {
    p: u64,
    genus: u64,
    alcove: Alcove,
    classes: Vec<ClassLabel>,
    level: Option<u64>,
    class_min_levels: Vec<u64>,
    class_stabilizer_orders: Vec<u64>,
    components: u64,
    gamma: u64,
}

impl ModuliQuery {
    /// Build and validate a query. `p` must be an odd prime; class points
    /// are rational vectors in the ambient space of `A_{p-1}` and are
    /// folded into the alcove on ingestion.
    pub fn new(p: u64, genus: u64, class_points: &[RatVec], level: Option<u64>) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::OutOfScope {
                reason: format!(
                    "structure group PU({p}): supported only for odd prime p (p = 2, composite, \
                     and other quotients are out of scope)"
                ),
            });
        }
        let rank = (p - 1) as usize;
        let alcove = Alcove::new(RootSystem::new(SimpleType::new(Series::A, rank)?));
        let classes = class_points
            .iter()
            .map(|xi| ClassLabel::new(&alcove, xi))
            .collect::<Result<Vec<_>>>()?;
        if let Some(k) = level {
            if k == 0 {
                return Err(Error::OutOfScope {
                    reason: "level k must be a positive integer".to_string(),
                });
            }
        }

        let full_center = center_elements(alcove.root_system());
        let stabilizers: Vec<Vec<CenterElement>> = classes
            .iter()
            .map(|c| stabilizer(&alcove, c.point(), &full_center))
            .collect();
        let class_min_levels = classes
            .iter()
            .map(|c| class_min_level(&alcove, c.point()))
            .collect();
        let class_stabilizer_orders = stabilizers.iter().map(|s| s.len() as u64).collect();
        let generated = subgroup_generated(
            alcove.root_system(),
            &stabilizers.iter().flatten().copied().collect::<Vec<_>>(),
        );
        let stab_product: u64 = stabilizers.iter().map(|s| s.len() as u64).product();
        let components = full_center.len() as u64 / generated.len() as u64;
        let gamma = stab_product / generated.len() as u64;

        Ok(ModuliQuery {
            p,
            genus,
            alcove,
            classes,
            level,
            class_min_levels,
            class_stabilizer_orders,
            components,
            gamma,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alcove
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn level(&self) -> Option<u64> {
        self.level
    }
}

/// Order of the subgroup of stabilizer tuples with trivial product:
/// `prod |Z_j| / |<Z_1, ..., Z_s>|` (exact for the abelian center).
pub fn gamma_order(alc: &Alcove, subgroup: &[CenterElement], classes: &[AlcovePoint]) -> u64 {
    let rs = alc.root_system();
    let stabs: Vec<Vec<CenterElement>> = classes
        .iter()
        .map(|p| stabilizer(alc, p, subgroup))
        .collect();
    let product: u64 = stabs.iter().map(|s| s.len() as u64).product();
    let all: Vec<CenterElement> = stabs.into_iter().flatten().collect();
    let generated = subgroup_generated(rs, &all);
    product / generated.len() as u64
}

/// Number of connected components of the moduli space: the index of the
/// subgroup generated by all class stabilizers inside `subgroup`. With no
/// classes this is the full order of `subgroup`. The count does not depend
/// on the genus; it is accepted to mirror the query shape.
pub fn component_count(
    alc: &Alcove,
    subgroup: &[CenterElement],
    _genus: u64,
    classes: &[AlcovePoint],
) -> u64 {
    let rs = alc.root_system();
    let all: Vec<CenterElement> = classes
        .iter()
        .flat_map(|p| stabilizer(alc, p, subgroup))
        .collect();
    let generated = subgroup_generated(rs, &all);
    subgroup.len() as u64 / generated.len() as u64
}

/// Per-class portion of a report.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub xi: RatVec,
    pub min_level: u64,
    pub stabilizer_order: u64,
    /// Whether the class admits the queried level; present only when the
    /// query fixes a level.
    pub satisfied: Option<bool>,
}

/// Full verdict for a moduli query: per-condition minimal levels, the
/// overall minimal level, component count, and the deck-group order.
#[derive(Clone, Debug)]
pub struct PrequantReport {
    pub p: u64,
    pub genus: u64,
    pub level: Option<u64>,
    /// Level divisor imposed by the genus condition (`p` when `h >= 1`).
    pub condition_i_required: u64,
    pub condition_i_satisfied: Option<bool>,
    pub classes: Vec<ClassReport>,
    /// Minimal admissible level: lcm of the genus requirement and the
    /// per-class minimal levels.
    pub k_min: u64,
    pub prequantizable: Option<bool>,
    pub components: u64,
    pub gamma_order: u64,
    pub caveat: &'static str,
}

impl PrequantReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut condition_i = json!({ "required_multiple": self.condition_i_required });
        if let Some(ok) = self.condition_i_satisfied {
            condition_i["satisfied"] = json!(ok);
        }
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                let mut v = json!({
                    "xi": c.xi.to_json(),
                    "min_level": c.min_level,
                    "stabilizer_order": c.stabilizer_order,
                });
                if let Some(ok) = c.satisfied {
                    v["satisfied"] = json!(ok);
                }
                v
            })
            .collect();
        let mut out = json!({
            "p": self.p,
            "genus": self.genus,
            "k_min": self.k_min,
            "condition_i": condition_i,
            "classes": classes,
            "components": self.components,
            "gamma_order": self.gamma_order,
            "caveat": self.caveat,
        });
        if let Some(k) = self.level {
            out["level"] = json!(k);
            out["prequantizable"] = json!(self.prequantizable.expect("verdict present with level"));
        }
        out
    }
}

/// Evaluate a query: minimal levels always, pass/fail verdicts when the
/// query fixes a level.
pub fn report(q: &ModuliQuery) -> PrequantReport {
    report_at(q, q.level)
}

fn report_at(q: &ModuliQuery, level: Option<u64>) -> PrequantReport {
    let condition_i_required = if q.genus >= 1 { q.p } else { 1 };
    let mut k_min = condition_i_required;
    let classes: Vec<ClassReport> = q
        .classes
        .iter()
        .zip(q.class_min_levels.iter().zip(&q.class_stabilizer_orders))
        .map(|(c, (&min_level, &stabilizer_order))| {
            k_min = lcm(k_min, min_level);
            ClassReport {
                xi: c.point().cartesian().clone(),
                min_level,
                stabilizer_order,
                satisfied: level.map(|k| k % min_level == 0),
            }
        })
        .collect();

    let condition_i_satisfied = level.map(|k| k % condition_i_required == 0);
    let prequantizable = level.map(|_| {
        condition_i_satisfied.unwrap_or(true)
            && classes.iter().all(|c| c.satisfied.unwrap_or(true))
    });

    PrequantReport {
        p: q.p,
        genus: q.genus,
        level,
        condition_i_required,
        condition_i_satisfied,
        classes,
        k_min,
        prequantizable,
        components: q.components,
        gamma_order: q.gamma,
        caveat: REGULAR_VALUE_CAVEAT,
    }
}

/// Verdict of the two obstruction conditions at a specific level `k`.
pub fn theorem_obs_check(q: &ModuliQuery, k: u64) -> PrequantReport {
    report_at(q, Some(k))
}

/// Minimal admissible level of a query: lcm of the genus requirement and
/// the per-class minimal levels.
pub fn minimal_level(q: &ModuliQuery) -> u64 {
    report(q).k_min
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
