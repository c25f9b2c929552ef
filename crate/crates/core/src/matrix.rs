//! Dense matrices over the Laurent ring.
//!
//! Vectors are rows; a matrix acts on the right (`v ↦ v·M`), so the row
//! space of a relation matrix is the submodule it generates.

use std::ops::{Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{ParseScalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly<T>>,
}

impl<T: Scalar> LaurentMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    /// Builds from a list of rows. With no rows the column count cannot be
    /// inferred; use [`LaurentMatrix::zeros`] for `0 × n` matrices.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly<T>>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(LaurentMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(diag: Vec<LaurentPoly<T>>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly<T> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: LaurentPoly<T>) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly<T>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly<T>>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.is_square()
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

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(LaurentMatrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension(format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(LaurentMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn map_coeffs<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> LaurentMatrix<U> {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.map_coeffs(&f)).collect(),
        }
    }

    /// Entrywise value at `t = 1`.
    pub fn eval_at_one(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).iter().map(LaurentPoly::eval_at_one).collect()).collect()
    }
}

impl<T: Scalar> Mul for &LaurentMatrix<T> {
    type Output = LaurentMatrix<T>;

    /// Panics on incompatible shapes; see [`LaurentMatrix::checked_mul`].
    fn mul(self, rhs: &LaurentMatrix<T>) -> LaurentMatrix<T> {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Scalar> Sub for &LaurentMatrix<T> {
    type Output = LaurentMatrix<T>;

    fn sub(self, rhs: &LaurentMatrix<T>) -> LaurentMatrix<T> {
        self.checked_sub(rhs).expect("matrix dimensions agree")
    }
}

/// Exchange format: nested arrays of polynomial text. An empty array has no
/// rows and no columns.
impl<T: Scalar> Serialize for LaurentMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de, T: ParseScalar> Deserialize<'de> for LaurentMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<LaurentPoly<T>>>::deserialize(d)?;
        Self::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
