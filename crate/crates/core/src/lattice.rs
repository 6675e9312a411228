//! The four lattices attached to a root system and exact membership tests.
//!
//! `Q-check` (coroot lattice, which is also the integer lattice of the
//! simply connected group), `P-check` (coweight lattice), `Q` (root
//! lattice), and `P` (weight lattice). Membership is decided by solving the
//! integer linear system exactly; nothing is ever rounded.

use std::fmt;

use num::{Signed, ToPrimitive};

use crate::matrix::RatMat;
use crate::rational::RatVec;
use crate::root_system::RootSystem;

/// Which of the four standard lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Coroot lattice, spanned by the simple coroots.
    Coroot,
    /// Coweight lattice, spanned by the fundamental coweights.
    Coweight,
    /// Root lattice, spanned by the simple roots.
    Root,
    /// Weight lattice, spanned by the fundamental weights.
    Weight,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LatticeKind::Coroot => "Qv",
            LatticeKind::Coweight => "Pv",
            LatticeKind::Root => "Q",
            LatticeKind::Weight => "P",
        };
        write!(f, "{s}")
    }
}

/// A lattice presented by a basis of rank `l` vectors spanning the
/// root-space subspace, together with the dual basis that turns coordinate
/// extraction into inner products.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    kind: LatticeKind,
    generators: Vec<RatVec>,
    duals: Vec<RatVec>,
}

impl LatticeBasis {
    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    /// Exact membership: true iff `v` is an integer combination of the
    /// generators. A vector outside the span is simply not a member.
    pub fn contains(&self, v: &RatVec) -> bool {
        match self.coordinates(v) {
            Some(c) => c.is_integral(),
            None => false,
        }
    }

    /// Coordinates of `v` in the generator basis, if `v` lies in the span.
    /// The candidate coordinates are the pairings with the dual basis;
    /// reconstructing the vector from them doubles as the span check.
    pub fn coordinates(&self, v: &RatVec) -> Option<RatVec> {
        if v.dim() != self.generators[0].dim() {
            return None;
        }
        let c = RatVec::new(self.duals.iter().map(|d| d.dot(v)).collect());
        let mut rebuilt = RatVec::zero(v.dim());
        for (ci, g) in c.coords().iter().zip(&self.generators) {
            rebuilt += &g.scale(ci);
        }
        if &rebuilt == v {
            Some(c)
        } else {
            None
        }
    }

    /// Index of `sub` as a sublattice of `self`: the absolute determinant of
    /// the integer matrix expressing `sub`'s generators in this basis.
    /// `None` if `sub` is not contained in `self`.
    pub fn index_of(&self, sub: &LatticeBasis) -> Option<u64> {
        let mut rows = Vec::new();
        for g in &sub.generators {
            let c = self.coordinates(g)?;
            if !c.is_integral() {
                return None;
            }
            rows.push(c);
        }
        let det = RatMat::from_rows(&rows).det();
        det.abs().to_integer().to_u64()
    }
}

/// Build the named lattice of a root system. Each basis comes with its
/// dual: weights pair with coroots, coweights with roots.
pub fn lattice(rs: &RootSystem, kind: LatticeKind) -> LatticeBasis {
    let (generators, duals) = match kind {
        LatticeKind::Coroot => (rs.coroots(), rs.fundamental_weights()),
        LatticeKind::Coweight => (rs.fundamental_coweights(), rs.simple_roots()),
        LatticeKind::Root => (rs.simple_roots(), rs.fundamental_coweights()),
        LatticeKind::Weight => (rs.fundamental_weights(), rs.coroots()),
    };
    LatticeBasis {
        kind,
        generators: generators.to_vec(),
        duals: duals.to_vec(),
    }
}
