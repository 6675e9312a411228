//! Static catalog of root-system data in Bourbaki coordinates.
//!
//! For each simple type this builds, exactly over the rationals: the simple
//! roots and highest root in the ambient coordinates of the Bourbaki
//! planches, the marks, coroots, fundamental coweights and weights, the dual
//! Coxeter number, and the order of the center. Simple roots are tabulated;
//! everything else is derived from them by exact linear algebra so there is
//! a single source of truth.
//!
//! Ambient spaces are the non-minimal Bourbaki ones: `A_n` lives in the
//! sum-zero hyperplane of R^{n+1}, `E6` in the subspace `x6 = x7 = -x8` of
//! R^8, `E7` in `x7 = -x8`. Points are required to lie in the root-space
//! subspace; they are never silently projected.
//!
//! The basic inner product (the invariant one normalized so short coroots
//! have squared length 2) is a scalar multiple `c` of the standard inner
//! product in these coordinates; `c = 1` for the simply-laced types, and the
//! `t -> t*` identification `flat` is multiplication by `c`.

use std::fmt;
use std::str::FromStr;

use num::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::matrix::{RatMat, Solution};
use crate::rational::{rat_int, Rat, RatVec};

/// The seven series of simple types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A valid simple type: `A_n` (n >= 1), `B_n` (n >= 2), `C_n` (n >= 3),
/// `D_n` (n >= 4), `E6`, `E7`, `E8`, `F4`, `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            let reason = match series {
                Series::A => "A_n requires n >= 1",
                Series::B => "B_n requires n >= 2 (B_1 = A_1)",
                Series::C => "C_n requires n >= 3 (C_2 = B_2)",
                Series::D => "D_n requires n >= 4 (D_3 = A_3)",
                Series::E => "E_n exists only for n in {6, 7, 8}",
                Series::F => "F_n exists only for n = 4",
                Series::G => "G_n exists only for n = 2",
            };
            Err(Error::InvalidType {
                series: series.letter(),
                rank,
                reason: reason.to_string(),
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parse `"E6"`, `"a3"`, or `"D_5"`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.trim().chars().filter(|&c| c != '_').collect();
        let parse_err = |reason: &str| Error::Parse {
            what: "simple type",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = cleaned.chars();
        let letter = chars.next().ok_or_else(|| parse_err("empty string"))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(parse_err("series must be one of A,B,C,D,E,F,G")),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| parse_err("rank must be a positive integer"))?;
        SimpleType::new(series, rank)
    }
}

/// Complete exact catalog for one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    ambient_dim: usize,
    simple_roots: Vec<RatVec>,
    highest_root: RatVec,
    marks: Vec<u64>,
    coroots: Vec<RatVec>,
    highest_coroot: RatVec,
    fundamental_coweights: Vec<RatVec>,
    fundamental_weights: Vec<RatVec>,
    dual_coxeter: u64,
    center_order: u64,
    special_root_indices: Vec<usize>,
    basic_scale: Rat,
    complement_basis: Vec<RatVec>,
}

impl RootSystem {
    /// Build the full catalog for a valid simple type.
    pub fn new(simple_type: SimpleType) -> Self {
        let (simple_roots, highest_root) = tabulated_roots(simple_type);
        let rank = simple_type.rank();
        let ambient_dim = simple_roots[0].dim();

        let coroots: Vec<RatVec> = simple_roots.iter().map(coroot_of).collect();
        let highest_coroot = coroot_of(&highest_root);

        // Cartan matrix A[i][j] = <alpha_i, alpha_j-coroot>.
        let cartan = RatMat::from_rows(
            &(0..rank)
                .map(|i| {
                    RatVec::new(
                        (0..rank)
                            .map(|j| simple_roots[i].dot(&coroots[j]))
                            .collect(),
                    )
                })
                .collect::<Vec<_>>(),
        );
        let cartan_inv = cartan
            .inverse()
            .expect("Cartan matrix of a simple type is invertible");

        // Coweights solve <alpha_i, cw_j> = delta_ij inside span(coroots):
        // cw_j = sum_k (A^-1)[k][j] alpha_k-coroot.
        let fundamental_coweights: Vec<RatVec> = (0..rank)
            .map(|j| {
                let mut v = RatVec::zero(ambient_dim);
                for k in 0..rank {
                    v += &coroots[k].scale(&cartan_inv[(k, j)]);
                }
                v
            })
            .collect();

        // Weights solve <w_i, alpha_j-coroot> = delta_ij inside span(roots):
        // w_i = sum_k (A^-1)[i][k] alpha_k.
        let fundamental_weights: Vec<RatVec> = (0..rank)
            .map(|i| {
                let mut v = RatVec::zero(ambient_dim);
                for k in 0..rank {
                    v += &simple_roots[k].scale(&cartan_inv[(i, k)]);
                }
                v
            })
            .collect();

        let marks = integer_coefficients(&simple_roots, &highest_root, "marks");
        let comarks = integer_coefficients(&coroots, &highest_coroot, "comarks");
        let dual_coxeter = 1 + comarks.iter().sum::<u64>();

        let special_root_indices: Vec<usize> = marks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == 1)
            .map(|(i, _)| i + 1)
            .collect();
        let center_order = 1 + special_root_indices.len() as u64;

        // Basic inner product = c * standard, with c fixed by "short coroots
        // have squared length 2"; the highest root is always long.
        let basic_scale = highest_root.norm_sq() / rat_int(2);

        let complement_basis = RatMat::from_rows(&simple_roots).kernel();

        let rs = RootSystem {
            simple_type,
            ambient_dim,
            simple_roots,
            highest_root,
            marks,
            coroots,
            highest_coroot,
            fundamental_coweights,
            fundamental_weights,
            dual_coxeter,
            center_order,
            special_root_indices,
            basic_scale,
            complement_basis,
        };
        rs.self_check();
        rs
    }

    /// Catalog consistency: duality, the mark expansion of the highest root,
    /// and the coroot normalization. Cheap enough to run on every build.
    fn self_check(&self) {
        let l = self.rank();
        for i in 0..l {
            for j in 0..l {
                let expect = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(
                    self.simple_roots[i].dot(&self.fundamental_coweights[j]),
                    expect,
                    "<alpha_{}, coweight_{}> != delta in {}",
                    i + 1,
                    j + 1,
                    self.simple_type
                );
                assert_eq!(
                    self.fundamental_weights[i].dot(&self.coroots[j]),
                    expect,
                    "<weight_{}, coroot_{}> != delta in {}",
                    i + 1,
                    j + 1,
                    self.simple_type
                );
            }
        }
        let mut sum = RatVec::zero(self.ambient_dim);
        for (m, alpha) in self.marks.iter().zip(&self.simple_roots) {
            sum += &alpha.scale(&rat_int(*m as i64));
        }
        assert_eq!(sum, self.highest_root, "marks expansion of highest root");
        let c = &self.basic_scale;
        assert_eq!(
            self.highest_coroot.norm_sq() * c,
            rat_int(2),
            "short coroot normalization"
        );
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Simple root `alpha_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &RatVec {
        &self.simple_roots[i - 1]
    }

    pub fn simple_roots(&self) -> &[RatVec] {
        &self.simple_roots
    }

    pub fn highest_root(&self) -> &RatVec {
        &self.highest_root
    }

    /// Extended root: `alpha_0 = -highest_root` for index 0, else `alpha_i`.
    pub fn extended_root(&self, i: usize) -> RatVec {
        if i == 0 {
            -&self.highest_root
        } else {
            self.simple_roots[i - 1].clone()
        }
    }

    /// Extended coroot, same indexing as [`Self::extended_root`].
    pub fn extended_coroot(&self, i: usize) -> RatVec {
        if i == 0 {
            -&self.highest_coroot
        } else {
            self.coroots[i - 1].clone()
        }
    }

    /// Marks `m_i` of the expansion of the highest root, 1-based slice.
    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    pub fn mark(&self, i: usize) -> u64 {
        self.marks[i - 1]
    }

    /// Coroot `alpha_i-check`, 1-based.
    pub fn coroot(&self, i: usize) -> &RatVec {
        &self.coroots[i - 1]
    }

    pub fn coroots(&self) -> &[RatVec] {
        &self.coroots
    }

    /// Coroot of the highest root.
    pub fn highest_coroot(&self) -> &RatVec {
        &self.highest_coroot
    }

    /// Fundamental coweight dual to `alpha_i`, 1-based.
    pub fn fundamental_coweight(&self, i: usize) -> &RatVec {
        &self.fundamental_coweights[i - 1]
    }

    pub fn fundamental_coweights(&self) -> &[RatVec] {
        &self.fundamental_coweights
    }

    /// Fundamental weight dual to coroot `i`, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> &RatVec {
        &self.fundamental_weights[i - 1]
    }

    pub fn fundamental_weights(&self) -> &[RatVec] {
        &self.fundamental_weights
    }

    pub fn dual_coxeter(&self) -> u64 {
        self.dual_coxeter
    }

    pub fn center_order(&self) -> u64 {
        self.center_order
    }

    /// Indices `i` (1-based) with `m_i = 1`; these label the nonzero central
    /// elements via the minimal dominant coweights.
    pub fn special_root_indices(&self) -> &[usize] {
        &self.special_root_indices
    }

    /// The scalar `c` with basic inner product `= c *` standard.
    pub fn basic_scale(&self) -> &Rat {
        &self.basic_scale
    }

    /// Basis of the orthogonal complement of the root space inside the
    /// ambient space (empty when the roots span it).
    pub fn complement_basis(&self) -> &[RatVec] {
        &self.complement_basis
    }

    /// True if `v` lies in the span of the roots.
    pub fn in_root_space(&self, v: &RatVec) -> bool {
        v.dim() == self.ambient_dim
            && self.complement_basis.iter().all(|u| v.dot(u).is_zero())
    }

    /// Validate that `v` is a point of the root space; the error names the
    /// offending input.
    pub fn check_point(&self, v: &RatVec) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.dim(),
            });
        }
        if !self.in_root_space(v) {
            return Err(Error::OutsideSubspace {
                type_name: self.simple_type.to_string(),
                point: v.to_string(),
            });
        }
        Ok(())
    }

    /// The identification `t -> t*` by the basic inner product: `xi` maps to
    /// the covector `<xi, ->`, which in ambient coordinates is `c * xi`.
    /// Identity on coordinates for the simply-laced types.
    pub fn flat_map(&self, xi: &RatVec) -> Result<RatVec> {
        self.check_point(xi)?;
        Ok(xi.scale(&self.basic_scale))
    }

    /// Entry of the extended Cartan pairing `<alpha_i, alpha_j-check>` for
    /// indices in `0..=rank`.
    pub fn extended_cartan(&self, i: usize, j: usize) -> Rat {
        self.extended_root(i).dot(&self.extended_coroot(j))
    }

    /// Catalog as JSON: type, simple roots, highest root, marks, fundamental
    /// coweights, dual Coxeter number, center order.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.simple_type.to_string(),
            "simple_roots": self.simple_roots.iter().map(RatVec::to_json).collect::<Vec<_>>(),
            "highest_root": self.highest_root.to_json(),
            "marks": self.marks,
            "fundamental_coweights": self.fundamental_coweights.iter().map(RatVec::to_json).collect::<Vec<_>>(),
            "dual_coxeter": self.dual_coxeter,
            "center_order": self.center_order,
        })
    }
}

/// Coroot `2a / <a, a>` under the standard inner product.
fn coroot_of(alpha: &RatVec) -> RatVec {
    alpha.scale(&(rat_int(2) / alpha.norm_sq()))
}

/// Expand `target` in the basis `vectors` and demand positive integer
/// coefficients (marks and comarks are such by the theory).
fn integer_coefficients(vectors: &[RatVec], target: &RatVec, what: &str) -> Vec<u64> {
    let m = RatMat::from_cols(vectors);
    let Solution::Unique(c) = m.solve(target) else {
        panic!("{what}: expansion is not unique");
    };
    c.coords()
        .iter()
        .map(|x| {
            assert!(x.is_integer() && x > &Rat::zero(), "{what}: non-integer coefficient {x}");
            x.to_integer().to_u64().expect("small coefficient")
        })
        .collect()
}

/// Simple roots and highest root in Bourbaki coordinates.
fn tabulated_roots(t: SimpleType) -> (Vec<RatVec>, RatVec) {
    let n = t.rank();
    match t.series() {
        Series::A => {
            let dim = n + 1;
            let roots = (0..n).map(|i| e_diff(dim, i, i + 1)).collect();
            (roots, e_diff(dim, 0, n))
        }
        Series::B => {
            let mut roots: Vec<RatVec> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            roots.push(RatVec::unit(n, n - 1));
            (roots, e_sum(n, 0, 1))
        }
        Series::C => {
            let mut roots: Vec<RatVec> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            roots.push(RatVec::unit(n, n - 1).scale(&rat_int(2)));
            (roots, RatVec::unit(n, 0).scale(&rat_int(2)))
        }
        Series::D => {
            let mut roots: Vec<RatVec> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            roots.push(e_sum(n, n - 2, n - 1));
            (roots, e_sum(n, 0, 1))
        }
        Series::E => {
            // alpha_1 = (e_1 + e_8 - e_2 - ... - e_7)/2, alpha_2 = e_1 + e_2,
            // alpha_k = e_{k-2} - e_{k-3} for k = 3..=rank.
            let mut roots = vec![
                RatVec::from_pairs(&[
                    (1, 2),
                    (-1, 2),
                    (-1, 2),
                    (-1, 2),
                    (-1, 2),
                    (-1, 2),
                    (-1, 2),
                    (1, 2),
                ]),
                e_sum(8, 0, 1),
            ];
            for k in 3..=n {
                roots.push(e_diff(8, k - 2, k - 3));
            }
            let highest = match n {
                6 => RatVec::from_pairs(&[
                    (1, 2),
                    (1, 2),
                    (1, 2),
                    (1, 2),
                    (1, 2),
                    (-1, 2),
                    (-1, 2),
                    (1, 2),
                ]),
                7 => e_diff(8, 7, 6),
                8 => e_sum(8, 6, 7),
                _ => unreachable!(),
            };
            (roots, highest)
        }
        Series::F => {
            let roots = vec![
                e_diff(4, 1, 2),
                e_diff(4, 2, 3),
                RatVec::unit(4, 3),
                RatVec::from_pairs(&[(1, 2), (-1, 2), (-1, 2), (-1, 2)]),
            ];
            (roots, e_sum(4, 0, 1))
        }
        Series::G => {
            let roots = vec![e_diff(3, 0, 1), RatVec::from_ints(&[-2, 1, 1])];
            (roots, RatVec::from_ints(&[-1, -1, 2]))
        }
    }
}

fn e_diff(dim: usize, i: usize, j: usize) -> RatVec {
    let mut v = vec![rat_int(0); dim];
    v[i] = rat_int(1);
    v[j] = rat_int(-1);
    RatVec::new(v)
}

fn e_sum(dim: usize, i: usize, j: usize) -> RatVec {
    let mut v = vec![rat_int(0); dim];
    v[i] = rat_int(1);
    v[j] = rat_int(1);
    RatVec::new(v)
}

/// All supported simple types up to rank 8, for sweep-style tests.
pub fn all_types_up_to_rank_8() -> Vec<SimpleType> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(SimpleType::new(Series::A, n).unwrap());
    }
    for n in 2..=8 {
        out.push(SimpleType::new(Series::B, n).unwrap());
    }
    for n in 3..=8 {
        out.push(SimpleType::new(Series::C, n).unwrap());
    }
    for n in 4..=8 {
        out.push(SimpleType::new(Series::D, n).unwrap());
    }
    for n in 6..=8 {
        out.push(SimpleType::new(Series::E, n).unwrap());
    }
    out.push(SimpleType::new(Series::F, 4).unwrap());
    out.push(SimpleType::new(Series::G, 2).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn rejects_invalid_types() {
        for bad in ["A0", "B1", "C2", "D3", "E5", "E9", "F3", "G4", "H4", "Q2"] {
            assert!(bad.parse::<SimpleType>().is_err(), "{bad} should be invalid");
        }
    }

    #[test]
    fn a3_catalog() {
        let rs = rs("A3");
        assert_eq!(rs.simple_root(1), &RatVec::from_ints(&[1, -1, 0, 0]));
        assert_eq!(rs.simple_root(2), &RatVec::from_ints(&[0, 1, -1, 0]));
        assert_eq!(rs.simple_root(3), &RatVec::from_ints(&[0, 0, 1, -1]));
        assert_eq!(rs.highest_root(), &RatVec::from_ints(&[1, 0, 0, -1]));
        assert_eq!(rs.marks(), &[1, 1, 1]);
        assert_eq!(rs.center_order(), 4);
        assert_eq!(rs.dual_coxeter(), 4);
    }

    #[test]
    fn e6_catalog_matches_reference_rows() {
        let rs = rs("E6");
        assert_eq!(rs.simple_root(2), &RatVec::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(
            rs.highest_root(),
            &RatVec::from_pairs(&[(1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (-1, 2), (-1, 2), (1, 2)])
        );
        assert_eq!(rs.center_order(), 3);
        assert_eq!(rs.special_root_indices(), &[1, 6]);
        assert_eq!(rs.marks(), &[1, 2, 2, 3, 2, 1]);
        // Minimal dominant coweights for the two nonzero central elements.
        assert_eq!(
            rs.fundamental_coweight(1),
            &RatVec::from_pairs(&[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-2, 3), (-2, 3), (2, 3)])
        );
        assert_eq!(
            rs.fundamental_coweight(6),
            &RatVec::from_pairs(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (-1, 3), (-1, 3), (1, 3)])
        );
    }

    #[test]
    fn e7_catalog_matches_reference_rows() {
        let rs = rs("E7");
        assert_eq!(
            rs.simple_root(7),
            &RatVec::from_ints(&[0, 0, 0, 0, -1, 1, 0, 0])
        );
        assert_eq!(rs.highest_root(), &RatVec::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1]));
        assert_eq!(rs.center_order(), 2);
        assert_eq!(rs.special_root_indices(), &[7]);
        assert_eq!(rs.marks(), &[2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(
            rs.fundamental_coweight(7),
            &RatVec::from_pairs(&[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (-1, 2), (1, 2)])
        );
    }

    #[test]
    fn center_orders_across_catalog() {
        let expect = [
            ("A1", 2),
            ("A4", 5),
            ("B5", 2),
            ("C4", 2),
            ("D6", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
        ];
        for (name, order) in expect {
            assert_eq!(rs(name).center_order(), order, "{name}");
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expect = [
            ("A2", 3),
            ("A6", 7),
            ("B4", 7),
            ("C3", 4),
            ("D5", 8),
            ("E6", 12),
            ("E7", 18),
            ("E8", 30),
            ("F4", 9),
            ("G2", 4),
        ];
        for (name, h) in expect {
            assert_eq!(rs(name).dual_coxeter(), h, "{name}");
        }
    }

    #[test]
    fn basic_scale_per_series() {
        assert_eq!(rs("A5").basic_scale(), &rat_int(1));
        assert_eq!(rs("B3").basic_scale(), &rat_int(1));
        assert_eq!(rs("C3").basic_scale(), &rat_int(2));
        assert_eq!(rs("D4").basic_scale(), &rat_int(1));
        assert_eq!(rs("F4").basic_scale(), &rat_int(1));
        assert_eq!(rs("G2").basic_scale(), &rat_int(3));
    }

    #[test]
    fn flat_map_is_identity_for_simply_laced() {
        let rs = rs("E6");
        let xi = rs.fundamental_coweight(4).clone();
        assert_eq!(rs.flat_map(&xi).unwrap(), xi);
        let zero = RatVec::zero(8);
        assert_eq!(rs.flat_map(&zero).unwrap(), zero);
    }

    #[test]
    fn flat_map_scales_for_c3() {
        let rs = rs("C3");
        // Coroot of the short root e_1 - e_2 is itself a long coroot.
        let v = RatVec::from_ints(&[1, -1, 0]);
        assert_eq!(rs.flat_map(&v).unwrap(), RatVec::from_ints(&[2, -2, 0]));
    }

    #[test]
    fn subspace_membership() {
        let e6 = rs("E6");
        assert!(e6.in_root_space(e6.fundamental_coweight(3)));
        assert!(!e6.in_root_space(&RatVec::unit(8, 5)));
        assert!(e6.check_point(&RatVec::zero(7)).is_err());
        let a2 = rs("A2");
        assert!(!a2.in_root_space(&RatVec::from_ints(&[1, 0, 0])));
        assert!(a2.in_root_space(&RatVec::from_ints(&[1, 0, -1])));
    }

    #[test]
    fn su_n_coweights_match_closed_form() {
        // coweight_j of A_{n-1} is sum_{i<=j} e_i - (j/n) sum e_i.
        for n in 2..=9i64 {
            let rs = RootSystem::new(SimpleType::new(Series::A, n as usize - 1).unwrap());
            for j in 1..n {
                let mut v = vec![rat(-j, n); n as usize];
                for item in v.iter_mut().take(j as usize) {
                    *item += rat_int(1);
                }
                assert_eq!(rs.fundamental_coweight(j as usize), &RatVec::new(v));
            }
        }
    }
}
