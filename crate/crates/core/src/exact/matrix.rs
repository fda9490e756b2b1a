//! Dense matrices over the rationals.
//!
//! Rank, kernel and reduced row echelon forms all go through one
//! fraction-free Gauss-Jordan pass (the Bareiss update applied to every
//! row). Rows are first scaled to integers, and every intermediate entry
//! is then a minor of that integer matrix, so the divisions are exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(RationalMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| rat(v))
            })
            .collect();
        RationalMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::SizeMismatch("column length".into()));
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(r, j);
                    if !a.is_zero() {
                        acc += a * other.get(j, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&r| self.row(r).iter().cloned())
            .collect();
        RationalMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn delete_column(&self, c: usize) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_columns(&keep)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::SizeMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale_column(&mut self, c: usize, s: &Rational) {
        for r in 0..self.rows {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    pub fn scale_row(&mut self, r: usize, s: &Rational) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    /// Each row multiplied by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let den = Rational::from_integer(common_denominator(row));
                row.iter().map(|v| (v * &den).to_integer()).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        fraction_free_gauss_jordan(&mut a, self.cols).pivots.len()
    }

    /// Rows form a basis of the right kernel `{x : M x = 0}`; each row is a
    /// primitive integer vector.
    pub fn kernel_basis(&self) -> Self {
        let mut a = self.integer_rows();
        let ff = fraction_free_gauss_jordan(&mut a, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !ff.pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![BigInt::zero(); self.cols];
            x[f] = ff.pivot_value.clone();
            for (i, &pc) in ff.pivots.iter().enumerate() {
                x[pc] = -a[i][f].clone();
            }
            let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            out.push(
                x.into_iter()
                    .map(|v| Rational::from_integer(&v / &g))
                    .collect(),
            );
        }
        RationalMatrix::from_rows(out, self.cols).expect("kernel rows have matrix width")
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Self {
        let mut a = self.integer_rows();
        let ff = fraction_free_gauss_jordan(&mut a, self.cols);
        let d = Rational::from_integer(ff.pivot_value.clone());
        let rows = (0..ff.pivots.len())
            .map(|i| {
                a[i].iter()
                    .map(|v| Rational::from_integer(v.clone()) / &d)
                    .collect()
            })
            .collect();
        RationalMatrix::from_rows(rows, self.cols).expect("rref rows have matrix width")
    }

    /// Pivot columns of the row echelon form.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut a = self.integer_rows();
        fraction_free_gauss_jordan(&mut a, self.cols).pivots
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch("determinant of a non-square matrix".into()));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        self.minor(&all, &all)
    }

    /// Determinant of the submatrix on `row_set` x `col_set` (in the given order).
    pub fn minor(&self, row_set: &[usize], col_set: &[usize]) -> Result<Rational> {
        if row_set.len() != col_set.len() {
            return Err(Error::SizeMismatch("minor needs equally many rows and columns".into()));
        }
        if let Some(&r) = row_set.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {r}")));
        }
        if let Some(&c) = col_set.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {c}")));
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = row_set
            .iter()
            .map(|&r| {
                let row: Vec<&Rational> = col_set.iter().map(|&c| self.get(r, c)).collect();
                let den = common_denominator(row.iter().copied());
                let denr = Rational::from_integer(den.clone());
                scale *= den;
                row.iter().map(|v| (*v * &denr).to_integer()).collect()
            })
            .collect();
        let d = bareiss_det(&mut a);
        Ok(Rational::new(d, scale))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `None` when the matrix is not square or is singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let red = aug.rref();
        if red.rows() != n || (0..n).any(|r| !red.get(r, r).is_one()) {
            return None;
        }
        Some(red.select_columns(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// The unique solution of `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        Some(self.inverse()?.mul_vec(b))
    }
}

pub(crate) struct FractionFree {
    pub pivots: Vec<usize>,
    /// Common value of every pivot entry after elimination.
    pub pivot_value: BigInt,
}

/// In-place fraction-free Gauss-Jordan elimination. On return the first
/// `pivots.len()` rows are the nonzero rows; row `i` has `pivot_value` in
/// column `pivots[i]` and zeros in every other pivot column.
pub(crate) fn fraction_free_gauss_jordan(a: &mut [Vec<BigInt>], cols: usize) -> FractionFree {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                let num = &piv * &row[j] - &f * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                row[j] = num / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    FractionFree {
        pivots,
        pivot_value: prev,
    }
}

/// Bareiss determinant of a square integer matrix; destroys the input.
pub(crate) fn bareiss_det(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinant of a small integer matrix given as `i64` rows.
pub fn integer_det(rows: &[Vec<i64>]) -> BigInt {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_det(&mut a)
}

pub fn abs_int(v: &BigInt) -> BigInt {
    v.abs()
}
