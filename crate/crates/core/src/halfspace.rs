//! Brute-force vertex enumeration for half-space intersections.
//!
//! Deliberately dumb so it can serve as an independent check on the
//! closed-form alcove vertices: for every subset of facets of size equal to
//! the subspace dimension, solve the equality system exactly and keep the
//! solutions satisfying all inequalities. Ranks are at most 8, so the
//! subset enumeration is trivial.
//!
//! The polyhedron lives inside the subspace orthogonal to
//! `subspace_complement` (pass an empty slice for a full-dimensional one),
//! and each facet `(normal, offset)` is the constraint
//! `<x, normal> >= offset`.

use std::collections::BTreeSet;

use num::Zero;

use crate::matrix::{RatMat, Solution};
use crate::rational::{Rat, RatVec};

/// One half-space constraint `<x, normal> >= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: RatVec,
    pub offset: Rat,
}

/// Outcome of enumerating the vertices of a half-space intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexEnumeration {
    /// Bounded and nonempty: the complete vertex set.
    Vertices(BTreeSet<RatVec>),
    /// No point satisfies all constraints.
    Empty,
    /// Feasible but with an unbounded direction.
    Unbounded,
}

/// Enumerate the vertices of the intersection of the given half-spaces
/// within the subspace orthogonal to `subspace_complement`.
pub fn enumerate_vertices(
    halfspaces: &[HalfSpace],
    subspace_complement: &[RatVec],
) -> VertexEnumeration {
    assert!(!halfspaces.is_empty(), "need at least one half-space");
    let ambient = halfspaces[0].normal.dim();

    // Coordinates on the subspace: x = sum_k y_k s_k for a kernel basis s_k
    // of the complement constraints.
    let basis = if subspace_complement.is_empty() {
        (0..ambient).map(|i| RatVec::unit(ambient, i)).collect()
    } else {
        RatMat::from_rows(subspace_complement).kernel()
    };
    let dim = basis.len();
    if dim == 0 {
        // Zero-dimensional space: the origin either satisfies everything or
        // nothing does.
        let origin_ok = halfspaces.iter().all(|h| h.offset <= Rat::zero());
        return if origin_ok {
            VertexEnumeration::Vertices(BTreeSet::from([RatVec::zero(ambient)]))
        } else {
            VertexEnumeration::Empty
        };
    }

    // Reduced system A y >= c in the subspace coordinates.
    let reduced: Vec<RatVec> = halfspaces
        .iter()
        .map(|h| RatVec::new(basis.iter().map(|s| s.dot(&h.normal)).collect()))
        .collect();
    let offsets: Vec<Rat> = halfspaces.iter().map(|h| h.offset.clone()).collect();

    match enumerate_reduced(&reduced, &offsets, dim) {
        Reduced::Empty => VertexEnumeration::Empty,
        Reduced::Unbounded => VertexEnumeration::Unbounded,
        Reduced::Vertices(ys) => {
            let set = ys
                .into_iter()
                .map(|y| {
                    let mut x = RatVec::zero(ambient);
                    for (yk, sk) in y.coords().iter().zip(&basis) {
                        x += &sk.scale(yk);
                    }
                    x
                })
                .collect();
            VertexEnumeration::Vertices(set)
        }
    }
}

enum Reduced {
    Vertices(Vec<RatVec>),
    Empty,
    Unbounded,
}

/// Classify the full-dimensional system `A y >= c` in R^dim.
fn enumerate_reduced(rows: &[RatVec], offsets: &[Rat], dim: usize) -> Reduced {
    let a = RatMat::from_rows(rows);

    // A nonzero lineality space means no vertices at all: quotient it away
    // and decide feasibility there instead.
    let lineality = a.kernel();
    if !lineality.is_empty() {
        let quotient_basis = RatMat::from_rows(&lineality).kernel();
        if quotient_basis.is_empty() {
            // Constraints are all trivial; feasible iff every offset <= 0.
            return if offsets.iter().all(|c| c <= &Rat::zero()) {
                Reduced::Unbounded
            } else {
                Reduced::Empty
            };
        }
        let reduced: Vec<RatVec> = rows
            .iter()
            .map(|r| RatVec::new(quotient_basis.iter().map(|q| q.dot(r)).collect()))
            .collect();
        return match enumerate_reduced(&reduced, offsets, quotient_basis.len()) {
            Reduced::Empty => Reduced::Empty,
            _ => Reduced::Unbounded,
        };
    }

    // Pointed case: vertices come from dim-subsets of tight constraints.
    let satisfied = |y: &RatVec| {
        rows.iter()
            .zip(offsets)
            .all(|(r, c)| &r.dot(y) >= c)
    };
    let mut vertices: Vec<RatVec> = Vec::new();
    for subset in subsets(rows.len(), dim) {
        let sys = RatMat::from_rows(&subset.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
        let rhs = RatVec::new(subset.iter().map(|&i| offsets[i].clone()).collect());
        if let Solution::Unique(y) = sys.solve(&rhs) {
            if satisfied(&y) && !vertices.contains(&y) {
                vertices.push(y);
            }
        }
    }
    if vertices.is_empty() {
        // Pointed and without vertices means infeasible.
        return Reduced::Empty;
    }

    // Extreme rays of the (pointed) recession cone saturate dim-1
    // independent constraints; any valid ray witnesses unboundedness.
    if dim == 1 {
        for g in [RatVec::from_ints(&[1]), RatVec::from_ints(&[-1])] {
            if rows.iter().all(|r| r.dot(&g) >= Rat::zero()) {
                return Reduced::Unbounded;
            }
        }
    } else {
        for subset in subsets(rows.len(), dim - 1) {
            let sys =
                RatMat::from_rows(&subset.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
            let kernel = sys.kernel();
            if kernel.len() != 1 {
                continue;
            }
            for g in [kernel[0].clone(), -&kernel[0]] {
                if rows.iter().all(|r| r.dot(&g) >= Rat::zero()) {
                    return Reduced::Unbounded;
                }
            }
        }
    }

    Reduced::Vertices(vertices)
}

/// All k-subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
