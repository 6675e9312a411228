//! Weyl group elements, reflection words, and alcove folding.
//!
//! A [`WeylElement`] is an exact orthogonal matrix on the ambient space,
//! optionally together with the reflection word that produced it; equality
//! is decided on matrices, never on words. An [`AffineWeylElement`] adds a
//! coroot-lattice translation and acts by `xi -> linear(xi) + translation`.
//!
//! [`fold_to_alcove`] maps any rational point of the root space to its
//! unique alcove representative by reflecting across violated walls, and
//! returns the affine element that witnesses the fold.

use std::fmt;

use num::Zero;

use crate::alcove::{Alcove, AlcovePoint};
use crate::error::{Error, Result};
use crate::matrix::RatMat;
use crate::rational::{rat_int, Rat, RatVec};
use crate::root_system::RootSystem;

/// An element of the Weyl group as an exact orthogonal linear map.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: RatMat,
    word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            matrix: RatMat::identity(dim),
            word: Some(Vec::new()),
        }
    }

    pub fn from_matrix(matrix: RatMat) -> Self {
        WeylElement { matrix, word: None }
    }

    pub fn matrix(&self) -> &RatMat {
        &self.matrix
    }

    /// The reflection word that produced this element, if one is attached.
    /// Words are metadata only; two different words can name one element.
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn with_word(mut self, word: Vec<usize>) -> Self {
        self.word = Some(word);
        self
    }

    pub fn apply(&self, v: &RatVec) -> RatVec {
        self.matrix.mul_vec(v)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            matrix: self
                .matrix
                .inverse()
                .expect("Weyl elements are orthogonal, hence invertible"),
            word: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RatMat::identity(self.matrix.rows())
    }
}

/// Equality of group elements: matrices only.
impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Matrix of the reflection in the hyperplane orthogonal to `alpha`:
/// `s_alpha(v) = v - (2 <alpha, v> / <alpha, alpha>) alpha`.
pub fn reflection_matrix(alpha: &RatVec) -> RatMat {
    let dim = alpha.dim();
    let norm = alpha.norm_sq();
    assert!(!norm.is_zero(), "cannot reflect in the zero vector");
    let mut m = RatMat::identity(dim);
    let two_over = rat_int(2) / norm;
    for i in 0..dim {
        for j in 0..dim {
            let delta = &(&alpha.coords()[i] * &alpha.coords()[j]) * &two_over;
            let v = &m[(i, j)] - &delta;
            m[(i, j)] = v;
        }
    }
    m
}

/// Reflection of `xi` in the wall of the extended root with index `i`
/// (0 means `alpha_0 = -highest_root`; 1..=l the simple roots).
pub fn reflect(rs: &RootSystem, i: usize, xi: &RatVec) -> Result<RatVec> {
    if i > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: rs.rank(),
        });
    }
    if xi.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            got: xi.dim(),
        });
    }
    let alpha = rs.extended_root(i);
    let coeff = rat_int(2) * alpha.dot(xi) / alpha.norm_sq();
    Ok(xi - &alpha.scale(&coeff))
}

/// Evaluate a composition of simple reflections, rightmost applied first:
/// `[i, j, k]` is `s_i . s_j . s_k`. Indices are 1-based; the input word is
/// kept as metadata and need not be reduced.
pub fn evaluate_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut matrix = RatMat::identity(rs.ambient_dim());
    for &i in word {
        if i == 0 || i > rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: rs.rank(),
            });
        }
        matrix = matrix.mul(&reflection_matrix(rs.simple_root(i)));
    }
    Ok(WeylElement {
        matrix,
        word: Some(word.to_vec()),
    })
}

/// The permutation `sigma` of extended root indices with
/// `w(alpha_j) = alpha_sigma(j)`, if `w` permutes
/// `{alpha_0, ..., alpha_l}` setwise; `None` otherwise.
pub fn extended_root_permutation(rs: &RootSystem, w: &WeylElement) -> Option<Vec<usize>> {
    let l = rs.rank();
    let roots: Vec<RatVec> = (0..=l).map(|i| rs.extended_root(i)).collect();
    let mut seen = vec![false; l + 1];
    let mut perm = vec![0usize; l + 1];
    for j in 0..=l {
        let image = w.apply(&roots[j]);
        let k = roots.iter().position(|r| r == &image)?;
        if seen[k] {
            return None;
        }
        seen[k] = true;
        perm[j] = k;
    }
    Some(perm)
}

/// An element of the affine Weyl group `W x Q-check`, acting by
/// `xi -> linear(xi) + translation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylElement {
    linear: WeylElement,
    translation: RatVec,
}

impl AffineWeylElement {
    pub fn identity(dim: usize) -> Self {
        AffineWeylElement {
            linear: WeylElement::identity(dim),
            translation: RatVec::zero(dim),
        }
    }

    pub fn new(linear: WeylElement, translation: RatVec) -> Self {
        AffineWeylElement { linear, translation }
    }

    pub fn linear(&self) -> &WeylElement {
        &self.linear
    }

    pub fn translation(&self) -> &RatVec {
        &self.translation
    }

    pub fn apply(&self, xi: &RatVec) -> RatVec {
        &self.linear.apply(xi) + &self.translation
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        AffineWeylElement {
            linear: self.linear.compose(&other.linear),
            translation: &self.linear.apply(&other.translation) + &self.translation,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.is_zero()
    }
}

/// Result of folding a point into the alcove: the representative, the
/// affine witness mapping the input onto it, and the sequence of wall
/// indices that was applied (first step first; 0 is the highest-root wall).
#[derive(Clone, Debug)]
pub struct Fold {
    pub point: AlcovePoint,
    pub witness: AffineWeylElement,
    pub walls: Vec<usize>,
}

/// Fold a rational point of the root space to its unique alcove
/// representative.
///
/// While some facet inequality is violated, reflect across the wall of the
/// lowest-index violated facet (`alpha_1, ..., alpha_l`, then the
/// highest-root wall, whose reflection is the affine map
/// `xi -> s(xi) + highest_coroot`). Each step strictly decreases the number
/// of affine walls separating the point from the alcove interior, so the
/// loop terminates.
pub fn fold_to_alcove(alc: &Alcove, xi: &RatVec) -> Result<Fold> {
    let rs = alc.root_system();
    rs.check_point(xi)?;
    let dim = rs.ambient_dim();

    // The witness is tracked incrementally as the columns of its linear
    // part plus its translation; reflecting all of them is a rank-one
    // update, much cheaper than a matrix product per wall crossing.
    let mut current = xi.clone();
    let mut columns: Vec<RatVec> = (0..dim).map(|i| RatVec::unit(dim, i)).collect();
    let mut translation = RatVec::zero(dim);
    let mut walls = Vec::new();
    while let Some(j) = alc.violated_facet(&current) {
        let (alpha, alpha_coroot) = if j == 0 {
            (rs.highest_root(), rs.highest_coroot())
        } else {
            (rs.simple_root(j), rs.coroot(j))
        };
        let reflect_in_wall = |v: &RatVec| v - &alpha_coroot.scale(&alpha.dot(v));
        current = reflect_in_wall(&current);
        for c in columns.iter_mut() {
            *c = reflect_in_wall(c);
        }
        translation = reflect_in_wall(&translation);
        if j == 0 {
            current += alpha_coroot;
            translation += alpha_coroot;
        }
        walls.push(j);
    }

    let witness = AffineWeylElement::new(
        WeylElement::from_matrix(RatMat::from_cols(&columns)),
        translation,
    );
    Ok(Fold {
        point: alc.point(&current)?,
        witness,
        walls,
    })
}

/// Witness-free folding: same fixed point as [`fold_to_alcove`], tuned for
/// the center-action hot path.
///
/// The facet pairings `<current, alpha_j>` are maintained incrementally:
/// reflecting across a wall changes them by integer Cartan pairings, so
/// each step costs a handful of scalar operations instead of a full facet
/// rescan. The barycentric coordinates of the result drop out of the final
/// pairings for free.
pub fn fold_point(alc: &Alcove, xi: &RatVec) -> Result<AlcovePoint> {
    let rs = alc.root_system();
    rs.check_point(xi)?;
    let l = rs.rank();
    let one = rat_int(1);

    // pairings[0] = <current, highest_root>, pairings[j] = <current, alpha_j>.
    let mut pairings: Vec<Rat> = (0..=l)
        .map(|r| {
            if r == 0 {
                rs.highest_root().dot(xi)
            } else {
                rs.simple_root(r).dot(xi)
            }
        })
        .collect();
    let mut current = xi.clone();

    loop {
        let wall = (1..=l)
            .find(|&j| pairings[j] < Rat::zero())
            .or_else(|| (pairings[0] > one).then_some(0));
        let Some(j) = wall else { break };
        // Reflect: current -= excess * coroot_j, where the excess is the
        // violated pairing (shifted by 1 for the affine wall).
        let excess = if j == 0 {
            &pairings[0] - &one
        } else {
            pairings[j].clone()
        };
        let coroot = if j == 0 {
            rs.highest_coroot()
        } else {
            rs.coroot(j)
        };
        current -= &coroot.scale(&excess);
        for (r, pairing) in pairings.iter_mut().enumerate() {
            *pairing -= &excess * alc.wall_pairing(j, r);
        }
    }

    let mut barycentric = Vec::with_capacity(l + 1);
    barycentric.push(&one - &pairings[0]);
    for (j, pairing) in pairings.iter().enumerate().skip(1) {
        barycentric.push(rat_int(rs.mark(j) as i64) * pairing.clone());
    }
    Ok(AlcovePoint::from_parts(current, barycentric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::su_n_alcove;
    use crate::rational::rat;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap())
    }

    #[test]
    fn a1_reflection() {
        let rs = rs("A1");
        let v = RatVec::from_pairs(&[(1, 2), (-1, 2)]);
        assert_eq!(
            reflect(&rs, 1, &v).unwrap(),
            RatVec::from_pairs(&[(-1, 2), (1, 2)])
        );
    }

    #[test]
    fn reflection_fixes_orthogonal_vectors() {
        let rs = rs("A3");
        // coweight_2 pairs to zero with alpha_1 and alpha_3.
        let v = rs.fundamental_coweight(2).clone();
        assert_eq!(reflect(&rs, 1, &v).unwrap(), v);
        assert_eq!(reflect(&rs, 3, &v).unwrap(), v);
    }

    #[test]
    fn e6_reflection_of_vertex() {
        let rs = rs("E6");
        let alc = Alcove::new(rs.clone());
        let v2 = alc.vertex(2).clone();
        let expect = &v2 - &rs.simple_root(2).scale(&rat(1, 2));
        assert_eq!(reflect(&rs, 2, &v2).unwrap(), expect);
    }

    #[test]
    fn reflection_index_out_of_range() {
        let rs = rs("A2");
        assert!(reflect(&rs, 3, &RatVec::zero(3)).is_err());
        assert!(evaluate_word(&rs, &[1, 0]).is_err());
    }

    #[test]
    fn empty_word_is_identity() {
        let rs = rs("G2");
        assert!(evaluate_word(&rs, &[]).unwrap().is_identity());
    }

    #[test]
    fn words_compose_right_to_left() {
        let rs = rs("A2");
        let w = evaluate_word(&rs, &[1, 2]).unwrap();
        let v = RatVec::from_ints(&[0, 1, -1]); // alpha_2
        // s_1 s_2 applied to alpha_2: first s_2(alpha_2) = -alpha_2,
        // then s_1(-alpha_2) = -(alpha_1 + alpha_2).
        assert_eq!(w.apply(&v), RatVec::from_ints(&[-1, 0, 1]));
        assert_eq!(w.word(), Some(&[1usize, 2][..]));
    }

    #[test]
    fn weyl_matrices_are_orthogonal() {
        let rs = rs("F4");
        let w = evaluate_word(&rs, &[1, 2, 3, 4, 2, 3]).unwrap();
        let wt = WeylElement::from_matrix(w.matrix().transpose());
        assert!(w.compose(&wt).is_identity());
    }

    #[test]
    fn fold_fixes_alcove_points() {
        let alc = su_n_alcove(3);
        let xi = RatVec::from_pairs(&[(1, 3), (0, 1), (-1, 3)]);
        let fold = fold_to_alcove(&alc, &xi).unwrap();
        assert_eq!(fold.point.cartesian(), &xi);
        assert!(fold.witness.is_identity());
        assert!(fold.walls.is_empty());
    }

    #[test]
    fn a2_fold_of_translated_vertex() {
        let alc = su_n_alcove(3);
        let rs = alc.root_system();
        let xi = &alc.vertex(1).clone() + rs.fundamental_coweight(1);
        let fold = fold_to_alcove(&alc, &xi).unwrap();
        assert_eq!(fold.point.cartesian(), alc.vertex(2));
        // Witness really maps the input to the output.
        assert_eq!(&fold.witness.apply(&xi), fold.point.cartesian());
    }

    #[test]
    fn a1_fold_example() {
        let alc = su_n_alcove(2);
        let xi = RatVec::from_pairs(&[(3, 2), (-3, 2)]);
        let fold = fold_to_alcove(&alc, &xi).unwrap();
        assert_eq!(fold.point.cartesian(), &RatVec::from_pairs(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn fold_rejects_bad_input() {
        let alc = su_n_alcove(3);
        assert!(fold_to_alcove(&alc, &RatVec::from_ints(&[1, 0, 0])).is_err());
        assert!(fold_to_alcove(&alc, &RatVec::from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn fold_translation_stays_in_coroot_lattice() {
        use crate::lattice::{lattice, LatticeKind};
        let alc = Alcove::new(rs("C3"));
        let qv = lattice(alc.root_system(), LatticeKind::Coroot);
        let xi = RatVec::from_pairs(&[(7, 2), (-5, 3), (11, 6)]);
        let fold = fold_to_alcove(&alc, &xi).unwrap();
        assert!(qv.contains(fold.witness.translation()));
    }
}
