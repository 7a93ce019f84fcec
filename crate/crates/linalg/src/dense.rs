use serde::{Deserialize, Serialize};

use crate::error::LinalgError;
use crate::scalar::Scalar;

/// Row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", entries.len()),
            });
        }
        Ok(DenseMatrix { rows, cols, entries })
    }

    /// Builds from explicit rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::ShapeMismatch {
                    expected: format!("row of length {cols}"),
                    found: format!("row {i} of length {}", r.len()),
                });
            }
            entries.extend(r);
        }
        Ok(DenseMatrix { rows: n, cols, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect()).collect();
        Self::from_rows(cols, data).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{} rows on the right", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, entries }
    }
}

/// Multi-index array of rationals, row-major with the last axis fastest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseTensor {
    shape: Vec<usize>,
    entries: Vec<Scalar>,
}

impl DenseTensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        DenseTensor { shape: shape.to_vec(), entries: vec![Scalar::zero(); n] }
    }

    pub fn from_entries(shape: &[usize], entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        let n: usize = shape.iter().product();
        if entries.len() != n {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{n} entries for shape {shape:?}"),
                found: format!("{} entries", entries.len()),
            });
        }
        Ok(DenseTensor { shape: shape.to_vec(), entries })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut off = 0;
        for (i, d) in idx.iter().zip(&self.shape) {
            debug_assert!(i < d);
            off = off * d + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.entries[o] = v;
    }

    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        let o = self.offset(idx);
        self.entries[o] += v;
    }

    /// Slice along the last axis at the given leading multi-index.
    pub fn fiber(&self, prefix: &[usize]) -> &[Scalar] {
        let last = *self.shape.last().expect("tensor of rank zero has no fibers");
        let mut off = 0;
        for (i, d) in prefix.iter().zip(&self.shape) {
            off = off * d + i;
        }
        &self.entries[off * last..(off + 1) * last]
    }

    pub fn fiber_mut(&mut self, prefix: &[usize]) -> &mut [Scalar] {
        let last = *self.shape.last().expect("tensor of rank zero has no fibers");
        let mut off = 0;
        for (i, d) in prefix.iter().zip(&self.shape) {
            off = off * d + i;
        }
        &mut self.entries[off * last..(off + 1) * last]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &DenseTensor) -> DenseTensor {
        assert_eq!(self.shape, rhs.shape, "tensor shapes differ");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        DenseTensor { shape: self.shape.clone(), entries }
    }

    pub fn sub(&self, rhs: &DenseTensor) -> DenseTensor {
        assert_eq!(self.shape, rhs.shape, "tensor shapes differ");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        DenseTensor { shape: self.shape.clone(), entries }
    }

    pub fn scale(&self, c: &Scalar) -> DenseTensor {
        DenseTensor { shape: self.shape.clone(), entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// Visits every multi-index in row-major order.
    pub fn indices(&self) -> MultiIndexIter {
        MultiIndexIter::new(&self.shape)
    }
}

/// Row-major enumeration of all multi-indices of a shape.
pub struct MultiIndexIter {
    shape: Vec<usize>,
    cur: Vec<usize>,
    done: bool,
}

impl MultiIndexIter {
    pub fn new(shape: &[usize]) -> Self {
        let done = shape.iter().any(|&d| d == 0);
        MultiIndexIter { shape: shape.to_vec(), cur: vec![0; shape.len()], done }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut k = self.shape.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.cur[k] += 1;
            if self.cur[k] < self.shape[k] {
                break;
            }
            self.cur[k] = 0;
        }
        Some(out)
    }
}
