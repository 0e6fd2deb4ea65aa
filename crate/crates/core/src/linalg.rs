//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors; `len` is the column length.
    pub fn from_columns(len: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), len);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
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

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
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
                        let cur = out[(i, j)].clone();
                        out[(i, j)] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, rhs);
        out
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            out.set_block(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
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
            let inv = m[(r, c)].inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
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
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}` as the columns of the result.
    ///
    /// One basis vector per free column, in increasing column order, with a
    /// `1` in its free position.
    pub fn nullspace(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(row, f)].clone();
            }
        }
        out
    }

    /// Rows `y` with `y * self = 0`, stacked as rows.
    pub fn left_nullspace(&self) -> Self {
        self.transpose().nullspace().transpose()
    }

    /// Columns of `self` forming a basis of its column space (the pivot columns).
    pub fn column_basis(&self) -> Self {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Self::identity(self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// A right inverse of a surjective (full row rank) matrix.
    pub fn right_inverse(&self) -> Option<Self> {
        self.solve(&Self::identity(self.rows))
    }

    /// Canonical form of the row space: nonzero rows of the RREF.
    pub fn row_space_key(&self) -> Self {
        let (r, pivots) = self.rref();
        r.block(0, 0, pivots.len(), self.cols)
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]{}x{}", self.rows, self.cols)
    }
}
