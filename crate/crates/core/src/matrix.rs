//! Dense matrices over an exact scalar, with the Gaussian-elimination
//! kernel used throughout the Springer and collineation models.
//!
//! Reduced row-echelon form uses leftmost-pivot tie-breaking and unit
//! pivots, so every subspace has one canonical basis matrix and round-trip
//! identities can be tested by exact equality.

use crate::error::{Error, Result};
use crate::scalar::FieldScalar;
use num_traits::Zero;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: FieldScalar> Matrix<T> {
    /// Matrix filled with zeros. Zero-by-n and n-by-zero shapes are allowed;
    /// they represent maps to or from the zero space.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Matrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self
    where
        T: num_traits::FromPrimitive,
    {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_i64(x).unwrap()).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                if !self[(r, k)].is_zero() && !rhs[(k, c)].is_zero() {
                    acc = acc + self[(r, k)].clone() * rhs[(k, c)].clone();
                }
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - rhs[(r, c)].clone()
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| s.clone() * self[(r, c)].clone())
    }

    /// Applies the matrix to a vector given as a slice.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(r, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let pivot = m[(row, col)].clone();
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() / pivot.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = m[(row, c)].clone() * f.clone();
                        m[(r, c)] = m[(r, c)].clone() - v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_basis(&self) -> (Self, Vec<usize>) {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let basis = Self::from_fn(rank, self.cols, |i, j| r[(i, j)].clone());
        (basis, pivots)
    }

    /// Canonical basis of the kernel, one column per non-pivot coordinate.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zero(self.cols, free.len());
        for (b, &j) in free.iter().enumerate() {
            k[(j, b)] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                k[(p, b)] = -r[(i, j)].clone();
            }
        }
        k
    }

    /// Canonical basis of the column space as an RREF row matrix (rank x rows).
    pub fn column_space_basis(&self) -> (Self, Vec<usize>) {
        self.transpose().row_basis()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// A subspace of an ambient coordinate space, stored as a canonical RREF
/// basis. Quotient coordinates are read off the non-pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
    ambient: usize,
}

impl<T: FieldScalar> Subspace<T> {
    /// Canonicalizes the row span of `gens` inside a `ambient`-dimensional space.
    pub fn from_span(gens: &Matrix<T>) -> Self {
        let (basis, pivots) = gens.row_basis();
        Subspace {
            ambient: gens.cols(),
            basis,
            pivots,
        }
    }

    /// Subspace with a basis that is already required to have full row rank.
    pub fn from_independent_rows(gens: &Matrix<T>) -> Result<Self> {
        let s = Self::from_span(gens);
        if s.dim() != gens.rows() {
            return Err(Error::Precondition(format!(
                "expected {} independent rows, rank is {}",
                gens.rows(),
                s.dim()
            )));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Canonical RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Inclusion into the ambient space: basis vectors as columns.
    pub fn inclusion(&self) -> Matrix<T> {
        self.basis.transpose()
    }

    /// Projection onto the quotient in non-pivot coordinates; composed with
    /// the inclusion of the subspace it gives zero.
    pub fn quotient_projection(&self) -> Matrix<T> {
        let free = self.non_pivots();
        let mut p = Matrix::zero(free.len(), self.ambient);
        for (b, &j) in free.iter().enumerate() {
            p[(b, j)] = T::one();
            for (i, &piv) in self.pivots.iter().enumerate() {
                p[(b, piv)] = -self.basis[(i, j)].clone();
            }
        }
        p
    }

    /// Selects the pivot coordinates; on vectors of the subspace this reads
    /// off the coefficients in the canonical basis.
    pub fn coordinate_selection(&self) -> Matrix<T> {
        let mut s = Matrix::zero(self.dim(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            s[(i, p)] = T::one();
        }
        s
    }

    /// Whether the given vector lies in the subspace.
    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rem: Vec<T> = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, entry) in rem.iter_mut().enumerate() {
                let delta = c.clone() * self.basis[(i, j)].clone();
                *entry = entry.clone() - delta;
            }
        }
        rem.iter().all(Zero::is_zero)
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_canonicalizes() {
        let m = qm(&[&[2, 4, 2], &[1, 2, 3]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, qm(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn kernel_is_killed() {
        let m = qm(&[&[1, 2, 3], &[4, 5, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let w = Subspace::from_span(&qm(&[&[1, 0, 2, 0], &[0, 1, 1, 1]]));
        let proj = w.quotient_projection();
        assert!(proj.mul(&w.inclusion()).is_zero());
        assert_eq!(proj.rank(), 2);
    }

    #[test]
    fn zero_width_shapes_are_legal() {
        let m: Matrix<Rat> = Matrix::zero(0, 3);
        assert_eq!(m.rank(), 0);
        let k = qm(&[&[1, 0], &[0, 1]]).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_is_transpose_invariant(entries in proptest::collection::vec(-4i64..=4, 12)) {
            let m = Matrix::from_fn(3, 4, |r, c| Rat::from_i64(entries[r * 4 + c]).unwrap());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rref_is_idempotent(entries in proptest::collection::vec(-4i64..=4, 12)) {
            let m = Matrix::from_fn(3, 4, |r, c| Rat::from_i64(entries[r * 4 + c]).unwrap());
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn kernel_dimension_matches(entries in proptest::collection::vec(-3i64..=3, 20)) {
            let m = Matrix::from_fn(4, 5, |r, c| Rat::from_i64(entries[r * 5 + c]).unwrap());
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols(), 5 - m.rank());
            prop_assert!(m.mul(&k).is_zero());
        }
    }
}
