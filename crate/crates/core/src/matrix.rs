//! Dense row-major matrices over exact scalars.
//!
//! [`IntMatrix`] holds arbitrary-precision integers (adjacency-type and
//! support matrices), [`RatMatrix`] holds reduced rationals (the Grover
//! transition matrix and its powers). Products skip zero entries, which keeps
//! the sparse arc-indexed operators cheap without a separate sparse format.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;

/// Exact ring element usable as a matrix entry.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn is_positive(&self) -> bool;
    fn to_rational(&self) -> Rational;
}

impl Scalar for BigInt {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }
}

impl Scalar for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from row vectors; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(Scalar::to_rational)
    }

    pub fn trace(&self) -> T {
        let n = self.rows.min(self.cols);
        let mut t = T::zero();
        for i in 0..n {
            t.add_assign_ref(&self[(i, i)]);
        }
        t
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let mut s = T::zero();
                for x in self.row(i) {
                    s.add_assign_ref(x);
                }
                s
            })
            .collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        self.transpose().row_sums()
    }

    /// Checked product; products skip zero entries of the left factor.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx].add_assign_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::add_ref)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::sub_ref)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Row-major iterator over `(row, col, &entry)`.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(idx, x)| (idx / cols.max(1), idx % cols.max(1), x))
    }

    /// Entries as display strings, one inner vector per row.
    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Plain text grid with right-aligned columns.
    pub fn to_text(&self) -> String {
        let grid = self.to_string_grid();
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &grid {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        Self::from_fn(n, m, |i, j| BigInt::from(rows[i][j]))
    }
}

impl RatMatrix {
    /// Returns the integer matrix when every entry has denominator 1.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.entries.iter().all(|x| x.is_integer()) {
            Some(self.map_to_int())
        } else {
            None
        }
    }

    fn map_to_int(&self) -> IntMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x.to_integer()).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

/// Panics on dimension mismatch; use [`Matrix::try_mul`] for checked products.
impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        self.try_add(rhs).expect("matrix sum dimension mismatch")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        self.try_sub(rhs).expect("matrix difference dimension mismatch")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_text())
    }
}

/// 0/1 matrix marking the strictly positive entries (exact sign test).
pub fn positive_support<T: Scalar>(m: &Matrix<T>) -> IntMatrix {
    m.map(|x| {
        if x.is_positive() {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_hand_computation() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_i64_rows(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), BigInt::from(5));
    }

    #[test]
    fn checked_product_rejects_bad_shapes() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn support_uses_exact_sign() {
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), int(-1)], vec![int(0), int(2)]]).unwrap();
        assert_eq!(
            positive_support(&m),
            IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1]])
        );
        assert!(positive_support(&RatMatrix::zeros(3, 3)).is_zero());
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = IntMatrix::from_rows(vec![vec![BigInt::one()], vec![]]);
        assert!(r.is_err());
    }
}
