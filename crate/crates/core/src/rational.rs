//! Exact rational scalars and vectors.
//!
//! Everything in this crate is computed over arbitrary-precision rationals;
//! there is no floating point anywhere. Scalars are [`Rat`] (always in lowest
//! terms with positive denominator), vectors are [`RatVec`] with the standard
//! inner product of the ambient space.
//!
//! Wire format: a rational prints as `a/b`, with `/b` omitted when the
//! denominator is 1 (`-2/3`, `1`). A vector prints as a comma-separated
//! tuple `(a/b, c/d, ...)` and serializes to JSON as an array of rational
//! strings.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Rational from an integer numerator and denominator. Panics on zero
/// denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse the `a/b` wire format (`/b` optional).
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse {
        what: "rational",
        input: s.to_string(),
        reason: e.to_string(),
    })
}

/// Render in the `a/b` wire format. `BigRational`'s `Display` already omits
/// a unit denominator, which is exactly the format we want.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// A vector with exact rational coordinates in an ambient Euclidean space.
///
/// The inner product is the standard one of the ambient space. Roots,
/// coweights, and alcove points are all `RatVec`s in the coordinates of the
/// catalog.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec {
    coords: Vec<Rat>,
}

impl RatVec {
    /// Vector from its coordinate list.
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVec { coords }
    }

    /// Vector from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec {
            coords: coords.iter().map(|&n| rat_int(n)).collect(),
        }
    }

    /// Vector from (numerator, denominator) pairs.
    pub fn from_pairs(coords: &[(i64, i64)]) -> Self {
        RatVec {
            coords: coords.iter().map(|&(n, d)| rat(n, d)).collect(),
        }
    }

    /// The zero vector of the given ambient dimension.
    pub fn zero(dim: usize) -> Self {
        RatVec {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// Standard basis vector `e_i` (zero-based index) in the given dimension.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rat::one();
        v
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate slice.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Standard inner product with another vector of the same dimension.
    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Squared length under the standard inner product.
    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    /// Scale by a rational.
    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// True if every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True if every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    /// Parse a comma-separated list of rationals, e.g. `"1/2,-1/2,0"`.
    pub fn parse(s: &str) -> Result<RatVec> {
        let coords: Result<Vec<Rat>> = s
            .split(',')
            .map(|piece| {
                let piece = piece.trim();
                if piece.is_empty() {
                    return Err(Error::Parse {
                        what: "vector",
                        input: s.to_string(),
                        reason: "empty coordinate".to_string(),
                    });
                }
                parse_rat(piece)
            })
            .collect();
        Ok(RatVec::new(coords?))
    }

    /// JSON representation: array of rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|r| serde_json::Value::String(rat_to_string(r)))
                .collect(),
        )
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatVec{self}")
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim(), "vector addition dimension mismatch");
        RatVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim(), "vector subtraction dimension mismatch");
        RatVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl AddAssign<&RatVec> for RatVec {
    fn add_assign(&mut self, other: &RatVec) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }
}

impl SubAssign<&RatVec> for RatVec {
    fn sub_assign(&mut self, other: &RatVec) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a -= b;
        }
    }
}

impl Mul<&Rat> for &RatVec {
    type Output = RatVec;
    fn mul(self, c: &Rat) -> RatVec {
        self.scale(c)
    }
}

/// Least common multiple of the coordinate denominators; the smallest
/// positive integer `k` with `k * v` integral.
pub fn denominator_lcm(v: &RatVec) -> BigInt {
    use num::Integer;
    v.coords()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom().abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trip() {
        for s in ["-2/3", "1", "0", "7/2", "-5"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
    }

    #[test]
    fn lowest_terms() {
        let r = rat(4, -6);
        assert_eq!(rat_to_string(&r), "-2/3");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(RatVec::parse("1,,2").is_err());
    }

    #[test]
    fn dot_product() {
        let a = RatVec::from_ints(&[1, -1, 0]);
        let b = RatVec::from_pairs(&[(2, 3), (-1, 3), (-1, 3)]);
        assert_eq!(a.dot(&b), rat_int(1));
    }

    #[test]
    fn denominator_lcm_works() {
        let v = RatVec::from_pairs(&[(1, 4), (1, 6), (0, 1)]);
        assert_eq!(denominator_lcm(&v), BigInt::from(12));
    }
}
