//! Dense matrices over an exact field.
//!
//! Rank and determinant use fraction-free (Bareiss) elimination. The
//! Moore-Penrose inverse here is the independent oracle for the
//! combinatorial formulas in [`crate::mpinv`]: it is computed from a rank
//! factorization `A = F G` as `Gᵀ (G Gᵀ)⁻¹ (Fᵀ F)⁻¹ Fᵀ` and never looks at
//! graph structure.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| T::from_i128(v as i128)));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "multiply",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        let cell = &mut out[(i, j)];
                        *cell = cell.clone() + prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    /// Fraction-free forward elimination. Returns the eliminated matrix, the
    /// pivot columns, and the parity of the row swaps performed.
    fn bareiss(&self) -> (Self, Vec<usize>, bool) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut odd_swaps = false;
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap_rows(p, r);
                odd_swaps = !odd_swaps;
            }
            let pivot = a[(r, c)].clone();
            for i in r + 1..a.rows {
                let factor = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = (pivot.clone() * a[(i, j)].clone() - factor.clone() * a[(r, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (a, pivots, odd_swaps)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(T::one());
        }
        let (a, pivots, odd) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(T::zero());
        }
        let d = a[(self.rows - 1, self.cols - 1)].clone();
        Ok(if odd { -d } else { d })
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = T::one() / a[(r, c)].clone();
            for j in c..a.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let factor = a[(i, c)].clone();
                for j in c..a.cols {
                    a[(i, j)] = a[(i, j)].clone() - factor.clone() * a[(r, j)].clone();
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// `self = F · G` with `F` the pivot columns of `self` and `G` the
    /// nonzero rows of its reduced echelon form.
    pub fn rank_factorization(&self) -> Result<(Self, Self)> {
        let (reduced, pivots) = self.rref();
        if pivots.is_empty() {
            return Err(Error::ZeroMatrix);
        }
        let f = self.select_columns(&pivots);
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let g = reduced.select_rows(&rows);
        Ok((f, g))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (reduced, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
    }

    /// Exact Moore-Penrose inverse via rank factorization.
    pub fn pinv_oracle(&self) -> Self {
        let (f, g) = match self.rank_factorization() {
            Ok(fg) => fg,
            Err(_) => return Self::zeros(self.cols, self.rows),
        };
        let ft = f.transpose();
        let gt = g.transpose();
        let ftf_inv = ft
            .multiply(&f)
            .and_then(|m| m.inverse())
            .expect("FᵀF is invertible for full-column-rank F");
        let ggt_inv = g
            .multiply(&gt)
            .and_then(|m| m.inverse())
            .expect("GGᵀ is invertible for full-row-rank G");
        gt.multiply(&ggt_inv)
            .and_then(|m| m.multiply(&ftf_inv))
            .and_then(|m| m.multiply(&ft))
            .expect("shapes agree by construction")
    }
}

/// Outcome of checking the four Penrose conditions for a candidate `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PenroseFlags {
    /// `A X A = A`
    pub axa: bool,
    /// `X A X = X`
    pub xax: bool,
    /// `A X` symmetric
    pub ax_symmetric: bool,
    /// `X A` symmetric
    pub xa_symmetric: bool,
}

impl PenroseFlags {
    pub fn all(&self) -> bool {
        self.axa && self.xax && self.ax_symmetric && self.xa_symmetric
    }

    pub fn as_array(&self) -> [bool; 4] {
        [self.axa, self.xax, self.ax_symmetric, self.xa_symmetric]
    }
}

pub fn penrose_verify<T: Scalar>(a: &Matrix<T>, x: &Matrix<T>) -> Result<PenroseFlags> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(Error::DimensionMismatch {
            op: "penrose_verify",
            left: a.shape(),
            right: x.shape(),
        });
    }
    let ax = a.multiply(x)?;
    let xa = x.multiply(a)?;
    Ok(PenroseFlags {
        axa: ax.multiply(a)? == *a,
        xax: xa.multiply(x)? == *x,
        ax_symmetric: ax.is_symmetric(),
        xa_symmetric: xa.is_symmetric(),
    })
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatMatrix, Rational};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_int_rows(rows)
    }

    fn q(n: i128, d: i128) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(RatMatrix::identity(2).multiply(&a).unwrap(), a);
    }

    #[test]
    fn inner_product() {
        let col = m(&[&[1], &[-1]]);
        assert_eq!(col.transpose().multiply(&col).unwrap(), m(&[&[2]]));
    }

    #[test]
    fn multiply_rejects_bad_shapes() {
        let a = m(&[&[1, 2]]);
        assert!(matches!(a.multiply(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rank_and_det_basics() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::identity(4).det().unwrap(), q(1, 1));
        let dup = m(&[&[1, 1, 2], &[3, 3, 5], &[0, 0, 7]]);
        assert_eq!(dup.det().unwrap(), q(0, 1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1, 1));
        assert_eq!(m(&[&[2, 1], &[1, 3]]).det().unwrap(), q(5, 1));
        assert_eq!(RatMatrix::zeros(2, 3).rank(), 0);
        assert!(matches!(m(&[&[1, 2]]).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, -1], &[3, 0, 2, 2]]);
        assert_eq!(a.det().unwrap(), q(cofactor_det(&a), 1));
    }

    fn cofactor_det(a: &RatMatrix) -> i128 {
        let n = a.rows();
        if n == 1 {
            return a[(0, 0)].to_small_int().unwrap() as i128;
        }
        (0..n)
            .map(|j| {
                let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
                    a[(r + 1, if c < j { c } else { c + 1 })].clone()
                });
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[(0, j)].to_small_int().unwrap() as i128 * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn rank_factorization_examples() {
        let (f, g) = RatMatrix::identity(2).rank_factorization().unwrap();
        assert_eq!(f, RatMatrix::identity(2));
        assert_eq!(g, RatMatrix::identity(2));
        let (f, g) = m(&[&[1, 1], &[1, 1]]).rank_factorization().unwrap();
        assert_eq!(f, m(&[&[1], &[1]]));
        assert_eq!(g, m(&[&[1, 1]]));
        assert_eq!(RatMatrix::zeros(2, 2).rank_factorization(), Err(Error::ZeroMatrix));
    }

    #[test]
    fn pinv_examples() {
        let col = m(&[&[1], &[-1]]);
        let p = col.pinv_oracle();
        assert_eq!(p, RatMatrix::new(1, 2, vec![q(1, 2), q(-1, 2)]).unwrap());
        assert_eq!(RatMatrix::zeros(2, 3).pinv_oracle(), RatMatrix::zeros(3, 2));
        let i3 = RatMatrix::identity(3);
        assert!(penrose_verify(&i3, &i3).unwrap().all());
    }

    #[test]
    fn inverse_of_singular_fails() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.multiply(&a.inverse().unwrap()).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn transpose_is_not_a_pseudoinverse_in_general() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let flags = penrose_verify(&a, &a.transpose()).unwrap();
        assert!(!flags.all());
        assert!(penrose_verify(&a, &m(&[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn display_renders_exact_rationals() {
        let a = RatMatrix::new(1, 2, vec![q(1, 2), q(-3, 1)]).unwrap();
        assert_eq!(a.to_string(), "1/2  -3\n");
    }
}
