//! The action of the center on the fundamental alcove.
//!
//! Nonzero central elements of the simply connected group correspond to the
//! special roots (mark 1) via minimal dominant coweights; the element
//! `exp(coweight_i)` acts on the alcove by `xi -> w_i xi + coweight_i`. The
//! action is always *computed* by folding `xi + coweight_i` back into the
//! alcove; the distinguished Weyl element `w_i` is recovered from the fold
//! witness afterwards and cross-checked, so the two routes validate each
//! other.
//!
//! The induced permutation of the alcove vertices coincides with the
//! automorphism of the extended Dynkin diagram given by the action of `w_i`
//! on `{alpha_0, ..., alpha_l}`; both are computed here.

use std::fmt;

use num::Zero;

use crate::alcove::{su_n_alcove, Alcove, AlcovePoint};
use crate::error::{Error, Result};
use crate::lattice::{lattice, LatticeKind};
use crate::rational::{rat, Rat, RatVec};
use crate::root_system::RootSystem;
use crate::weyl::{extended_root_permutation, fold_point, fold_to_alcove, WeylElement};

/// An element of the center `Z(G)`: the identity, or `exp(coweight_i)` for
/// a special root index `i` (the index is 1-based; 0 encodes the identity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterElement {
    special_index: usize,
}

impl CenterElement {
    pub fn identity() -> Self {
        CenterElement { special_index: 0 }
    }

    /// Element for a special root index of the given root system.
    pub fn new(rs: &RootSystem, special_index: usize) -> Result<Self> {
        if special_index == 0 || rs.special_root_indices().contains(&special_index) {
            Ok(CenterElement { special_index })
        } else {
            Err(Error::IndexOutOfRange {
                index: special_index,
                max: rs.rank(),
            })
        }
    }

    pub fn is_identity(&self) -> bool {
        self.special_index == 0
    }

    /// The special root index, 0 for the identity.
    pub fn special_index(&self) -> usize {
        self.special_index
    }

    /// The minimal dominant coweight representing this element (zero vector
    /// for the identity).
    pub fn coweight(&self, rs: &RootSystem) -> RatVec {
        if self.special_index == 0 {
            RatVec::zero(rs.ambient_dim())
        } else {
            rs.fundamental_coweight(self.special_index).clone()
        }
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.special_index == 0 {
            write!(f, "e")
        } else {
            write!(f, "exp(coweight_{})", self.special_index)
        }
    }
}

/// All elements of the center: the identity followed by one element per
/// special root, in index order.
pub fn center_elements(rs: &RootSystem) -> Vec<CenterElement> {
    let mut out = vec![CenterElement::identity()];
    for &i in rs.special_root_indices() {
        out.push(CenterElement { special_index: i });
    }
    out
}

/// Group law: the product corresponds to the sum of coweight
/// representatives modulo the coroot lattice, and exactly one candidate
/// representative matches.
pub fn compose(rs: &RootSystem, a: CenterElement, b: CenterElement) -> CenterElement {
    let qv = lattice(rs, LatticeKind::Coroot);
    let sum = &a.coweight(rs) + &b.coweight(rs);
    for z in center_elements(rs) {
        if qv.contains(&(&sum - &z.coweight(rs))) {
            return z;
        }
    }
    unreachable!("coweight representatives enumerate the center")
}

/// Inverse element.
pub fn inverse(rs: &RootSystem, z: CenterElement) -> CenterElement {
    center_elements(rs)
        .into_iter()
        .find(|&y| compose(rs, z, y).is_identity())
        .expect("every central element has an inverse")
}

/// Order of an element in the center.
pub fn order(rs: &RootSystem, z: CenterElement) -> u64 {
    let mut n = 1;
    let mut acc = z;
    while !acc.is_identity() {
        acc = compose(rs, acc, z);
        n += 1;
    }
    n
}

/// Closure of a generating set under the group law (always contains the
/// identity).
pub fn subgroup_generated(rs: &RootSystem, generators: &[CenterElement]) -> Vec<CenterElement> {
    let mut elements = vec![CenterElement::identity()];
    let mut frontier = elements.clone();
    while let Some(x) = frontier.pop() {
        for &g in generators {
            let y = compose(rs, x, g);
            if !elements.contains(&y) {
                elements.push(y);
                frontier.push(y);
            }
        }
    }
    elements.sort();
    elements
}

/// The subgroup of the given order, when it is unique (always the case for
/// cyclic centers). For `D_n` with even `n` the center is a Klein
/// four-group and order 2 does not determine a subgroup.
pub fn subgroup_of_order(rs: &RootSystem, order_wanted: u64) -> Result<Vec<CenterElement>> {
    let z_order = rs.center_order();
    if order_wanted == 0 || !z_order.is_multiple_of(order_wanted) {
        return Err(Error::NotADivisor {
            what: "subgroup order",
            divisor: order_wanted,
            of: z_order,
        });
    }
    let candidates: Vec<CenterElement> = center_elements(rs)
        .into_iter()
        .filter(|&z| order_wanted.is_multiple_of(order(rs, z)))
        .collect();
    if candidates.len() as u64 == order_wanted {
        Ok(candidates)
    } else {
        Err(Error::AmbiguousSubgroup {
            type_name: rs.simple_type().to_string(),
            order: order_wanted,
        })
    }
}

/// Action of a central element on an alcove point, computed as the fold of
/// `xi + coweight` into the alcove.
pub fn act_on_point(alc: &Alcove, z: CenterElement, p: &AlcovePoint) -> AlcovePoint {
    if z.is_identity() {
        return p.clone();
    }
    let shifted = p.cartesian() + &z.coweight(alc.root_system());
    fold_point(alc, &shifted)
        .expect("alcove points stay in the root space under coweight translation")
}

/// The distinguished Weyl element `w_i` of a central element: the unique
/// `w` leaving the alcove-plus-lowest-root configuration invariant with
/// `w(alpha_0) = alpha_i`.
///
/// Recovered from the fold witness of an interior point (the alcove
/// barycenter): for interior points the affine witness is unique, and its
/// linear part is exactly `w_i`. Folding a boundary point such as a vertex
/// can stop early and yield a witness with a different linear part, which
/// is why an interior point is used. Both defining properties are verified
/// before returning.
pub fn weyl_element_for_center(alc: &Alcove, z: CenterElement) -> WeylElement {
    let rs = alc.root_system();
    if z.is_identity() {
        return WeylElement::identity(rs.ambient_dim());
    }
    let interior = alc.barycenter();
    let shifted = interior.cartesian() + &z.coweight(rs);
    let fold = fold_to_alcove(alc, &shifted).expect("interior point stays in root space");
    let w = fold.witness.linear().clone();

    let alpha_0 = rs.extended_root(0);
    assert_eq!(
        w.apply(&alpha_0),
        *rs.simple_root(z.special_index()),
        "distinguished element must send alpha_0 to alpha_i"
    );
    assert!(
        extended_root_permutation(rs, &w).is_some(),
        "distinguished element must permute the extended simple roots"
    );
    w
}

/// A permutation of the indices `{0, ..., l}` shared by the alcove vertices
/// and the extended Dynkin diagram nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    mapping: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(mapping: Vec<usize>) -> Self {
        let mut seen = vec![false; mapping.len()];
        for &k in &mapping {
            assert!(k < mapping.len() && !seen[k], "not a permutation");
            seen[k] = true;
        }
        VertexPermutation { mapping }
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            mapping: (0..n).collect(),
        }
    }

    /// Image of index `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.mapping[j]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &k)| i == k)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| {
            let len = c.len() as u64;
            num::integer::lcm(acc, len)
        })
    }

    /// Cycle decomposition; each cycle starts at its smallest element,
    /// cycles sorted by first element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.mapping.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.mapping[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.mapping[j];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Orbits of the group generated by the given permutations.
    pub fn joint_orbits(perms: &[&VertexPermutation], n: usize) -> Vec<Vec<usize>> {
        let mut orbit_of: Vec<Option<usize>> = vec![None; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start].is_some() {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = Some(id);
            let mut frontier = vec![start];
            while let Some(j) = frontier.pop() {
                for p in perms {
                    let k = p.apply(j);
                    if orbit_of[k].is_none() {
                        orbit_of[k] = Some(id);
                        orbit.push(k);
                        frontier.push(k);
                    }
                }
            }
            orbit.sort();
            orbits.push(orbit);
        }
        orbits
    }
}

impl fmt::Display for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, j) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{j}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Permutation of the alcove vertices induced by a central element,
/// computed by acting on each vertex through the fold.
pub fn vertex_permutation(alc: &Alcove, z: CenterElement) -> VertexPermutation {
    let mapping = alc
        .vertices()
        .iter()
        .map(|v| {
            let p = alc.point(v).expect("catalog vertices lie in the alcove");
            let image = act_on_point(alc, z, &p);
            alc.vertices()
                .iter()
                .position(|w| w == image.cartesian())
                .expect("central elements permute the vertices")
        })
        .collect();
    VertexPermutation::new(mapping)
}

/// Automorphism of the extended Dynkin diagram induced by a central
/// element: the action of its distinguished Weyl element on
/// `{alpha_0, ..., alpha_l}`.
pub fn dynkin_automorphism(alc: &Alcove, z: CenterElement) -> VertexPermutation {
    let rs = alc.root_system();
    if z.is_identity() {
        return VertexPermutation::identity(rs.rank() + 1);
    }
    let w = weyl_element_for_center(alc, z);
    let mapping = extended_root_permutation(rs, &w)
        .expect("distinguished element permutes the extended simple roots");
    VertexPermutation::new(mapping)
}

/// Elements of `subgroup` fixing the point.
pub fn stabilizer(
    alc: &Alcove,
    p: &AlcovePoint,
    subgroup: &[CenterElement],
) -> Vec<CenterElement> {
    subgroup
        .iter()
        .copied()
        .filter(|&z| act_on_point(alc, z, p) == *p)
        .collect()
}

/// Fixed-point locus of a subgroup of the center acting on the alcove: a
/// face-barycenter simplex described in barycentric coordinates.
#[derive(Clone, Debug)]
pub struct FixedLocus {
    subgroup_order: u64,
    orbits: Vec<Vec<usize>>,
    generators: Vec<AlcovePoint>,
}

impl FixedLocus {
    pub fn subgroup_order(&self) -> u64 {
        self.subgroup_order
    }

    /// Orbits of the vertex indices under the subgroup.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// The locus is the convex hull of these orbit barycenters.
    pub fn generators(&self) -> &[AlcovePoint] {
        &self.generators
    }

    /// Membership: a point is fixed iff its barycentric coordinates are
    /// constant on every orbit.
    pub fn contains(&self, p: &AlcovePoint) -> bool {
        self.orbits.iter().all(|orbit| {
            let first = &p.barycentric()[orbit[0]];
            orbit.iter().all(|&j| &p.barycentric()[j] == first)
        })
    }
}

/// Fixed locus of an arbitrary subgroup, from the orbits of its vertex
/// permutations: one generator per orbit, the barycenter of the face the
/// orbit spans.
pub fn fixed_locus(alc: &Alcove, subgroup: &[CenterElement]) -> FixedLocus {
    let perms: Vec<VertexPermutation> = subgroup
        .iter()
        .map(|&z| vertex_permutation(alc, z))
        .collect();
    let perm_refs: Vec<&VertexPermutation> = perms.iter().collect();
    let orbits = VertexPermutation::joint_orbits(&perm_refs, alc.rank() + 1);
    let generators = orbit_barycenters(alc, &orbits);
    FixedLocus {
        subgroup_order: subgroup.len() as u64,
        orbits,
        generators,
    }
}

/// Closed-form fixed locus for `SU(n)` under the subgroup of order `nu` of
/// its cyclic center: with `m = n / nu`, the orbits are
/// `{i, i + m, ..., i + (nu-1) m}` for `i = 0..m-1`, and the generators are
/// the barycenters `(1/nu) sum_j v_{i + j m}`.
pub fn fixed_locus_su_n(n: usize, nu: usize) -> Result<FixedLocus> {
    if nu == 0 || !n.is_multiple_of(nu) {
        return Err(Error::NotADivisor {
            what: "fixed-locus subgroup order",
            divisor: nu as u64,
            of: n as u64,
        });
    }
    let alc = su_n_alcove(n);
    let m = n / nu;
    let orbits: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..nu).map(|j| i + j * m).collect())
        .collect();
    let generators = orbit_barycenters(&alc, &orbits);
    Ok(FixedLocus {
        subgroup_order: nu as u64,
        orbits,
        generators,
    })
}

fn orbit_barycenters(alc: &Alcove, orbits: &[Vec<usize>]) -> Vec<AlcovePoint> {
    orbits
        .iter()
        .map(|orbit| {
            let mut t = vec![Rat::zero(); alc.rank() + 1];
            for &j in orbit {
                t[j] = rat(1, orbit.len() as i64);
            }
            alc.from_barycentric(&t)
                .expect("face barycenters lie in the alcove")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::su_n_barycenter;

    fn alcove(name: &str) -> Alcove {
        Alcove::new(RootSystem::new(name.parse().unwrap()))
    }

    fn su(n: usize) -> Alcove {
        su_n_alcove(n)
    }

    #[test]
    fn su_generator_fixes_barycenter() {
        for p in [3usize, 5] {
            let alc = su(p);
            let zeta = alc.point(&su_n_barycenter(p)).unwrap();
            for z in center_elements(alc.root_system()) {
                assert_eq!(act_on_point(&alc, z, &zeta), zeta, "SU({p}), {z}");
            }
        }
    }

    #[test]
    fn su_generator_cycles_vertices() {
        for n in 2..=6usize {
            let alc = su(n);
            let gen = CenterElement::new(alc.root_system(), 1).unwrap();
            for j in 0..n {
                let vj = alc.point(alc.vertex(j)).unwrap();
                let image = act_on_point(&alc, gen, &vj);
                assert_eq!(
                    image.cartesian(),
                    alc.vertex((j + 1) % n),
                    "SU({n}): v_{j} should go to v_{}",
                    (j + 1) % n
                );
            }
        }
    }

    #[test]
    fn su4_square_fixes_edge_barycenter() {
        let alc = su(4);
        let rs = alc.root_system();
        let gen = CenterElement::new(rs, 1).unwrap();
        let gen2 = compose(rs, gen, gen);
        assert_eq!(gen2.special_index(), 2);
        let zeta0 = alc
            .point(&RatVec::from_pairs(&[(1, 4), (1, 4), (-1, 4), (-1, 4)]))
            .unwrap();
        assert_eq!(act_on_point(&alc, gen2, &zeta0), zeta0);
    }

    #[test]
    fn vertex_permutation_examples() {
        let alc = su(4);
        let rs = alc.root_system();
        let gen = CenterElement::new(rs, 1).unwrap();
        assert_eq!(vertex_permutation(&alc, gen).mapping(), &[1, 2, 3, 0]);
        let gen2 = compose(rs, gen, gen);
        assert_eq!(vertex_permutation(&alc, gen2).mapping(), &[2, 3, 0, 1]);
        assert_eq!(vertex_permutation(&alc, gen2).to_string(), "(0 2)(1 3)");
    }

    #[test]
    fn a2_dynkin_automorphism_is_three_cycle() {
        let alc = su(3);
        let gen = CenterElement::new(alc.root_system(), 1).unwrap();
        let d = dynkin_automorphism(&alc, gen);
        assert_eq!(d.cycles(), vec![vec![0, 1, 2]]);
        assert_eq!(d.order(), 3);
    }

    #[test]
    fn identity_element_everywhere() {
        let alc = alcove("E6");
        let id = CenterElement::identity();
        assert!(dynkin_automorphism(&alc, id).is_identity());
        assert!(vertex_permutation(&alc, id).is_identity());
        assert!(weyl_element_for_center(&alc, id).is_identity());
    }

    #[test]
    fn group_law_is_cyclic_for_su_n() {
        let rs = RootSystem::new("A4".parse().unwrap());
        let gen = CenterElement::new(&rs, 1).unwrap();
        let mut acc = gen;
        let mut indices = vec![1];
        for _ in 0..4 {
            acc = compose(&rs, acc, gen);
            indices.push(acc.special_index());
        }
        assert_eq!(indices, vec![1, 2, 3, 4, 0]);
        assert_eq!(order(&rs, gen), 5);
        assert_eq!(inverse(&rs, gen).special_index(), 4);
    }

    #[test]
    fn d4_center_is_klein_four_group() {
        let rs = RootSystem::new("D4".parse().unwrap());
        assert_eq!(rs.center_order(), 4);
        for z in center_elements(&rs) {
            if !z.is_identity() {
                assert_eq!(order(&rs, z), 2, "{z}");
            }
        }
        assert!(matches!(
            subgroup_of_order(&rs, 2),
            Err(Error::AmbiguousSubgroup { .. })
        ));
        assert_eq!(subgroup_of_order(&rs, 4).unwrap().len(), 4);
    }

    #[test]
    fn d5_center_is_cyclic_of_order_4() {
        let rs = RootSystem::new("D5".parse().unwrap());
        assert_eq!(rs.center_order(), 4);
        let orders: Vec<u64> = center_elements(&rs).iter().map(|&z| order(&rs, z)).collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 4, 4]);
        assert_eq!(subgroup_of_order(&rs, 2).unwrap().len(), 2);
    }

    #[test]
    fn stabilizer_examples() {
        for p in [3usize, 5] {
            let alc = su(p);
            let full = center_elements(alc.root_system());
            let zeta = alc.point(&su_n_barycenter(p)).unwrap();
            assert_eq!(stabilizer(&alc, &zeta, &full).len(), p);
        }
        let alc = su(4);
        let full = center_elements(alc.root_system());
        let zeta0 = alc
            .point(&RatVec::from_pairs(&[(1, 4), (1, 4), (-1, 4), (-1, 4)]))
            .unwrap();
        assert_eq!(stabilizer(&alc, &zeta0, &full).len(), 2);

        let a2 = su(3);
        let full = center_elements(a2.root_system());
        let v1 = a2.point(a2.vertex(1)).unwrap();
        assert_eq!(stabilizer(&a2, &v1, &full).len(), 1);
    }

    #[test]
    fn su4_fixed_locus_of_z2() {
        let locus = fixed_locus_su_n(4, 2).unwrap();
        assert_eq!(locus.generators().len(), 2);
        assert_eq!(
            locus.generators()[0].cartesian(),
            &RatVec::from_pairs(&[(1, 4), (1, 4), (-1, 4), (-1, 4)])
        );
        assert_eq!(
            locus.generators()[1].cartesian(),
            &RatVec::from_pairs(&[(1, 2), (0, 1), (0, 1), (-1, 2)])
        );
        // The full-center fixed point lies on the segment, vertices do not.
        let alc = su(4);
        assert!(locus.contains(&alc.point(&su_n_barycenter(4)).unwrap()));
        assert!(!locus.contains(&alc.point(alc.vertex(0)).unwrap()));
    }

    #[test]
    fn su_prime_full_center_fixes_only_barycenter() {
        for p in [3usize, 5] {
            let locus = fixed_locus_su_n(p, p).unwrap();
            assert_eq!(locus.generators().len(), 1);
            assert_eq!(locus.generators()[0].cartesian(), &su_n_barycenter(p));
        }
    }

    #[test]
    fn su6_order_3_locus_is_a_segment() {
        let locus = fixed_locus_su_n(6, 3).unwrap();
        assert_eq!(locus.generators().len(), 2);
        assert_eq!(locus.orbits(), &[vec![0, 2, 4], vec![1, 3, 5]]);
        for g in locus.generators() {
            assert!(locus.contains(g));
        }
    }

    #[test]
    fn fixed_locus_rejects_non_divisor() {
        assert!(fixed_locus_su_n(6, 4).is_err());
        assert!(fixed_locus_su_n(5, 0).is_err());
    }

    #[test]
    fn generic_locus_matches_closed_form() {
        for (n, nu) in [(4usize, 2u64), (6, 2), (6, 3), (6, 6), (5, 5)] {
            let alc = su(n);
            let subgroup = subgroup_of_order(alc.root_system(), nu).unwrap();
            let generic = fixed_locus(&alc, &subgroup);
            let closed = fixed_locus_su_n(n, nu as usize).unwrap();
            let mut a: Vec<_> = generic.generators().to_vec();
            let mut b: Vec<_> = closed.generators().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b, "SU({n}) with subgroup of order {nu}");
        }
    }

    #[test]
    fn membership_agrees_with_stabilizer_on_samples() {
        let alc = su(6);
        let rs = alc.root_system();
        let subgroup = subgroup_of_order(rs, 3).unwrap();
        let locus = fixed_locus(&alc, &subgroup);
        // A family of rational points: orbit-constant ones must be fixed,
        // the others must not be.
        let samples = [
            vec![(1, 6); 6],
            vec![(1, 9), (2, 9), (1, 9), (2, 9), (1, 9), (2, 9)],
            vec![(1, 2), (1, 10), (1, 10), (1, 10), (1, 10), (1, 10)],
            vec![(1, 3), (1, 3), (1, 3), (0, 1), (0, 1), (0, 1)],
        ];
        for t in samples {
            let t: Vec<Rat> = t.into_iter().map(|(a, b)| rat(a, b)).collect();
            let p = alc.from_barycentric(&t).unwrap();
            let fixed_by_action = subgroup
                .iter()
                .all(|&z| act_on_point(&alc, z, &p) == p);
            assert_eq!(locus.contains(&p), fixed_by_action, "t = {t:?}");
        }
    }
}
