//! The fundamental alcove as an exact half-space intersection.
//!
//! The closed alcove is `{ xi : <xi, alpha_j> >= 0 (j = 1..l),
//! <xi, highest_root> <= 1 }`. Its vertices are `v_0 = 0` and
//! `v_j = coweight_j / m_j`, with `v_j` opposite the facet parallel to
//! `ker alpha_j`. Points carry both cartesian and barycentric coordinates;
//! the barycentric coordinates have the closed form
//! `t_0 = 1 - <xi, highest_root>`, `t_j = m_j <xi, alpha_j>`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::halfspace::{enumerate_vertices, HalfSpace, VertexEnumeration};
use crate::rational::{rat, rat_int, Rat, RatVec};
use crate::root_system::{RootSystem, Series, SimpleType};

/// A closed alcove facet, the constraint `<xi, normal> >= offset`.
/// Facet 0 is the wall `<xi, highest_root> = 1` (stored with normal
/// `-highest_root`); facet `j >= 1` is the wall `<xi, alpha_j> = 0`.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: RatVec,
    pub offset: Rat,
}

impl Facet {
    /// Signed slack `<xi, normal> - offset`; nonnegative inside the alcove.
    pub fn slack(&self, xi: &RatVec) -> Rat {
        self.normal.dot(xi) - self.offset.clone()
    }

    /// Human-readable form of the constraint this facet imposes.
    pub fn constraint_text(&self, index: usize) -> String {
        if index == 0 {
            "<xi, highest_root> <= 1".to_string()
        } else {
            format!("<xi, alpha_{index}> >= 0")
        }
    }
}

/// The fundamental alcove of a root system, with facets and vertices.
#[derive(Clone, Debug)]
pub struct Alcove {
    rs: RootSystem,
    facets: Vec<Facet>,
    vertices: Vec<RatVec>,
    /// `wall_pairings[w][r] = <root_r, coroot_w>` with index 0 standing for
    /// the highest root/coroot; these integers drive the incremental facet
    /// bookkeeping during folding.
    wall_pairings: Vec<Vec<Rat>>,
}

/// A point of the closed alcove in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcovePoint {
    cartesian: RatVec,
    barycentric: Vec<Rat>,
}

impl AlcovePoint {
    pub fn cartesian(&self) -> &RatVec {
        &self.cartesian
    }

    pub fn barycentric(&self) -> &[Rat] {
        &self.barycentric
    }

    /// Assemble from coordinates already known to be consistent (used by
    /// the folding fast path, which tracks both incrementally).
    pub(crate) fn from_parts(cartesian: RatVec, barycentric: Vec<Rat>) -> Self {
        AlcovePoint {
            cartesian,
            barycentric,
        }
    }
}

impl std::fmt::Display for AlcovePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cartesian)
    }
}

impl Alcove {
    /// Build the alcove of a root system: `l + 1` facets and the closed-form
    /// vertices.
    pub fn new(rs: RootSystem) -> Self {
        let l = rs.rank();
        let dim = rs.ambient_dim();
        let mut facets = Vec::with_capacity(l + 1);
        // <xi, highest_root> <= 1, stored as <xi, -highest_root> >= -1.
        facets.push(Facet {
            normal: -rs.highest_root(),
            offset: rat_int(-1),
        });
        for j in 1..=l {
            facets.push(Facet {
                normal: rs.simple_root(j).clone(),
                offset: Rat::zero(),
            });
        }
        let mut vertices = Vec::with_capacity(l + 1);
        vertices.push(RatVec::zero(dim));
        for j in 1..=l {
            vertices.push(
                rs.fundamental_coweight(j)
                    .scale(&(Rat::one() / rat_int(rs.mark(j) as i64))),
            );
        }
        let root = |r: usize| {
            if r == 0 {
                rs.highest_root().clone()
            } else {
                rs.simple_root(r).clone()
            }
        };
        let coroot = |w: usize| {
            if w == 0 {
                rs.highest_coroot().clone()
            } else {
                rs.coroot(w).clone()
            }
        };
        let wall_pairings = (0..=l)
            .map(|w| (0..=l).map(|r| root(r).dot(&coroot(w))).collect())
            .collect();
        Alcove {
            rs,
            facets,
            vertices,
            wall_pairings,
        }
    }

    /// The pairing `<root_r, coroot_w>` with 0 denoting the highest
    /// root/coroot.
    pub(crate) fn wall_pairing(&self, wall: usize, r: usize) -> &Rat {
        &self.wall_pairings[wall][r]
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Facets indexed 0..=l; see [`Facet`] for the indexing convention.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Vertices `v_0, ..., v_l`, with `v_j` opposite facet `j`.
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn vertex(&self, j: usize) -> &RatVec {
        &self.vertices[j]
    }

    /// Index of the first violated facet in the folding order
    /// (alpha_1, ..., alpha_l, then the highest-root wall), or `None` if the
    /// point lies in the closed alcove.
    pub fn violated_facet(&self, xi: &RatVec) -> Option<usize> {
        for j in 1..=self.rank() {
            if self.facets[j].slack(xi) < Rat::zero() {
                return Some(j);
            }
        }
        if self.facets[0].slack(xi) < Rat::zero() {
            return Some(0);
        }
        None
    }

    /// Whether `xi` lies in the closed alcove. Points outside the root-space
    /// subspace are an input error, not `false`.
    pub fn contains(&self, xi: &RatVec) -> Result<bool> {
        self.rs.check_point(xi)?;
        Ok(self.violated_facet(xi).is_none())
    }

    /// Barycentric coordinates of an alcove point: the unique `t` with
    /// `xi = sum t_j v_j`, `sum t_j = 1`, all `t_j >= 0`. Rejects points
    /// outside the alcove, naming the violated facet.
    pub fn point(&self, xi: &RatVec) -> Result<AlcovePoint> {
        self.rs.check_point(xi)?;
        let mut t = Vec::with_capacity(self.rank() + 1);
        t.push(Rat::one() - self.rs.highest_root().dot(xi));
        for j in 1..=self.rank() {
            t.push(rat_int(self.rs.mark(j) as i64) * self.rs.simple_root(j).dot(xi));
        }
        if let Some(j) = (1..=self.rank()).chain([0]).find(|&j| t[j] < Rat::zero()) {
            return Err(Error::OutsideAlcove {
                point: xi.to_string(),
                facet: j,
                constraint: self.facets[j].constraint_text(j),
            });
        }
        Ok(AlcovePoint {
            cartesian: xi.clone(),
            barycentric: t,
        })
    }

    /// The alcove point with the given barycentric coordinates.
    pub fn from_barycentric(&self, t: &[Rat]) -> Result<AlcovePoint> {
        if t.len() != self.rank() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.rank() + 1,
                got: t.len(),
            });
        }
        let sum: Rat = t.iter().cloned().sum();
        if sum != Rat::one() || t.iter().any(|x| x < &Rat::zero()) {
            return Err(Error::Parse {
                what: "barycentric coordinates",
                input: format!("{t:?}"),
                reason: "coordinates must be nonnegative and sum to 1".to_string(),
            });
        }
        let mut xi = RatVec::zero(self.rs.ambient_dim());
        for (tj, vj) in t.iter().zip(&self.vertices) {
            xi += &vj.scale(tj);
        }
        self.point(&xi)
    }

    /// Barycenter of the whole alcove, an interior point.
    pub fn barycenter(&self) -> AlcovePoint {
        let k = self.rank() + 1;
        let t = vec![rat(1, k as i64); k];
        self.from_barycentric(&t)
            .expect("alcove barycenter is always a valid interior point")
    }

    /// Independent brute-force vertex enumeration from the facet
    /// half-spaces; must agree with [`Self::vertices`] as a set.
    pub fn oracle_vertices(&self) -> VertexEnumeration {
        let halfspaces: Vec<HalfSpace> = self
            .facets
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal.clone(),
                offset: f.offset.clone(),
            })
            .collect();
        enumerate_vertices(&halfspaces, self.rs.complement_basis())
    }
}

/// Barycenter of the `SU(n)` alcove in closed form:
/// coordinate `i` (1-based) is `(n - (2i - 1)) / 2n`.
pub fn su_n_barycenter(n: usize) -> RatVec {
    assert!(n >= 2, "SU(n) needs n >= 2");
    let n_i = n as i64;
    RatVec::new(
        (1..=n_i)
            .map(|i| rat(n_i - (2 * i - 1), 2 * n_i))
            .collect(),
    )
}

/// Convenience: the alcove of `A_{n-1}`, i.e. of `SU(n)`.
pub fn su_n_alcove(n: usize) -> Alcove {
    assert!(n >= 2, "SU(n) needs n >= 2");
    Alcove::new(RootSystem::new(
        SimpleType::new(Series::A, n - 1).expect("A_{n-1} is valid for n >= 2"),
    ))
}
