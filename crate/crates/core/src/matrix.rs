//! Exact rational matrices and Gaussian elimination.
//!
//! Small dense matrices (ambient dimension is at most 9 for the supported
//! types), row-reduced over the rationals. This is the only linear solver in
//! the crate; lattice membership, barycentric coordinates, and the
//! half-space vertex oracle all sit on top of it.

use num::{One, Zero};

use crate::rational::{Rat, RatVec};

/// Dense matrix of exact rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Outcome of solving a square or rectangular linear system exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// No solution (inconsistent system).
    Inconsistent,
    /// Exactly one solution.
    Unique(RatVec),
    /// Infinitely many solutions: one particular solution plus a kernel basis.
    Underdetermined {
        particular: RatVec,
        kernel: Vec<RatVec>,
    },
}

impl RatMat {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Matrix whose rows are the given vectors (all of equal dimension).
    pub fn from_rows(rows: &[RatVec]) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].dim();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.dim(), cols, "ragged rows");
            data.extend(r.coords().iter().cloned());
        }
        RatMat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[RatVec]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> RatVec {
        RatVec::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product.
    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &RatVec) -> RatVec {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        let coords = (0..self.rows).map(|i| self.row(i).dot(v)).collect();
        RatVec::new(coords)
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&m[(r, j)] * &f);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the (right) kernel: all `v` with `A v = 0`.
    pub fn kernel(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = RatVec::zero(self.cols);
            let mut coords: Vec<Rat> = v.coords().to_vec();
            coords[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                coords[pc] = -r[(row, free)].clone();
            }
            v = RatVec::new(coords);
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b` exactly.
    pub fn solve(&self, b: &RatVec) -> Solution {
        assert_eq!(self.rows, b.dim(), "rhs dimension mismatch");
        // Augment, reduce, and read the solution off the pivot columns.
        let mut aug = RatMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b.coords()[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Solution::Inconsistent;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        let particular = RatVec::new(x);
        if pivots.len() == self.cols {
            Solution::Unique(particular)
        } else {
            Solution::Underdetermined {
                particular,
                kernel: self.kernel(),
            }
        }
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = m[(c, c)].recip();
            for i in (c + 1)..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&m[(c, j)] * &f);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = RatMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = RatMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// JSON representation: array of rows, each an array of rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array((0..self.rows).map(|i| self.row(i).to_json()).collect())
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for RatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl std::fmt::Display for RatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn solve_unique() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 1]), RatVec::from_ints(&[1, -1])]);
        let b = RatVec::from_ints(&[3, 1]);
        assert_eq!(
            a.solve(&b),
            Solution::Unique(RatVec::from_ints(&[2, 1]))
        );
    }

    #[test]
    fn solve_inconsistent() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 1]), RatVec::from_ints(&[2, 2])]);
        let b = RatVec::from_ints(&[1, 3]);
        assert_eq!(a.solve(&b), Solution::Inconsistent);
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 1, 1])]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn det_and_inverse() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[2, 1]), RatVec::from_ints(&[1, 1])]);
        assert_eq!(a.det(), rat_int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMat::identity(2));
        assert_eq!(inv[(0, 1)], rat(-1, 1));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 2]), RatVec::from_ints(&[2, 4])]);
        assert_eq!(a.det(), rat_int(0));
        assert!(a.inverse().is_none());
    }
}
