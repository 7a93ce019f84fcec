use rayon::prelude::*;

use crate::dense::DenseMatrix;
use crate::error::LinalgError;
use crate::scalar::Scalar;

/// Sorted list of nonzero coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVector {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn new() -> Self {
        SparseVector { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVector { entries: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        SparseVector { entries }
    }

    /// Entries must be strictly increasing in index; zeros are dropped.
    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVector { entries: entries.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVector {
        if c.is_zero() {
            return SparseVector::new();
        }
        SparseVector { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVector) -> SparseVector {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { entries: out }
    }
}

struct PivotRow {
    value: SparseVector,
    combo: Option<SparseVector>,
}

/// Incremental row echelon basis. Rows are kept with a unit leading entry and
/// indexed by their leading column; an optional combination vector records
/// how each row was built from the inserted generators.
pub struct Echelon {
    rows: Vec<PivotRow>,
    by_lead: std::collections::HashMap<usize, usize>,
    track: bool,
}

/// Outcome of reducing a vector against an echelon basis.
pub struct Reduced {
    pub residue: SparseVector,
    pub combo: Option<SparseVector>,
}

impl Echelon {
    pub fn new(track_combinations: bool) -> Self {
        Echelon { rows: Vec::new(), by_lead: Default::default(), track: track_combinations }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.by_lead.keys().copied().collect();
        v.sort_unstable();
        v
    }

    /// Eliminates leading entries while they hit pivots. Stops at the first
    /// leading column without a pivot, so an empty residue means membership.
    pub fn reduce(&self, mut v: SparseVector, mut combo: Option<SparseVector>) -> Reduced {
        while let Some((lead, x)) = v.leading().cloned() {
            let Some(&k) = self.by_lead.get(&lead) else { break };
            let row = &self.rows[k];
            let c = -x;
            v = v.add_scaled(&c, &row.value);
            if let (Some(acc), Some(rc)) = (combo.as_mut(), row.combo.as_ref()) {
                *acc = acc.add_scaled(&c, rc);
            }
        }
        Reduced { residue: v, combo }
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v.clone(), None).residue.is_empty()
    }

    /// Inserts a generator. Returns the combination that vanishes when the
    /// generator was dependent on earlier ones.
    pub fn insert(&mut self, v: SparseVector, combo: Option<SparseVector>) -> Option<SparseVector> {
        let combo = if self.track { combo.or_else(|| Some(SparseVector::new())) } else { None };
        let red = self.reduce(v, combo);
        match red.residue.leading().cloned() {
            None => red.combo,
            Some((lead, x)) => {
                let inv = x.recip().expect("leading entries are nonzero");
                let value = red.residue.scale(&inv);
                let combo = red.combo.map(|c| c.scale(&inv));
                self.by_lead.insert(lead, self.rows.len());
                self.rows.push(PivotRow { value, combo });
                None
            }
        }
    }

    /// Inserts `v` and reports whether it was independent of the basis.
    pub fn extend(&mut self, v: SparseVector) -> bool {
        let before = self.rank();
        self.insert(v, None);
        self.rank() > before
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVector> {
        self.rows.iter().map(|r| &r.value)
    }
}

/// Matrix stored as sparse columns; the natural output of evaluating a
/// linear map on unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatrix {
    nrows: usize,
    cols: Vec<SparseVector>,
}

impl ColumnMatrix {
    pub fn new(nrows: usize, cols: Vec<SparseVector>) -> Self {
        ColumnMatrix { nrows, cols }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ColumnMatrix { nrows, cols: vec![SparseVector::new(); ncols] }
    }

    /// Column `j` is `f(j)`, computed in parallel.
    pub fn from_fn<F>(nrows: usize, ncols: usize, f: F) -> Self
    where
        F: Fn(usize) -> Vec<Scalar> + Sync,
    {
        let cols = (0..ncols)
            .into_par_iter()
            .map(|j| {
                let c = f(j);
                debug_assert_eq!(c.len(), nrows);
                SparseVector::from_dense(&c)
            })
            .collect();
        ColumnMatrix { nrows, cols }
    }

    /// Matrix of a linear map given on dense vectors.
    pub fn of_map<F>(nrows: usize, ncols: usize, f: F) -> Self
    where
        F: Fn(&[Scalar]) -> Vec<Scalar> + Sync,
    {
        Self::from_fn(nrows, ncols, |j| {
            let mut e = vec![Scalar::zero(); ncols];
            e[j] = Scalar::one();
            f(&e)
        })
    }

    pub fn from_dense(m: &DenseMatrix) -> Self {
        let cols = (0..m.cols()).map(|j| SparseVector::from_dense(&m.column(j))).collect();
        ColumnMatrix { nrows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.nrows, self.cols.len());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.entries() {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVector::is_empty)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols.len(), "vector length does not match matrix");
        let mut out = vec![Scalar::zero(); self.nrows];
        for (x, c) in v.iter().zip(&self.cols) {
            if x.is_zero() {
                continue;
            }
            for (i, a) in c.entries() {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn apply_sparse(&self, v: &SparseVector) -> SparseVector {
        let mut acc = SparseVector::new();
        for (j, x) in v.entries() {
            acc = acc.add_scaled(x, &self.cols[*j]);
        }
        acc
    }

    /// `self * rhs`.
    pub fn compose(&self, rhs: &ColumnMatrix) -> Result<ColumnMatrix, LinalgError> {
        if self.cols.len() != rhs.nrows {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{} rows on the right", self.cols.len()),
                found: format!("{} rows", rhs.nrows),
            });
        }
        let cols = rhs.cols.par_iter().map(|c| self.apply_sparse(c)).collect();
        Ok(ColumnMatrix { nrows: self.nrows, cols })
    }

    fn echelon(&self, track: bool) -> (Echelon, Vec<SparseVector>) {
        let mut e = Echelon::new(track);
        let mut kernel = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            let combo = track.then(|| SparseVector::unit(j));
            if let Some(k) = e.insert(c.clone(), combo) {
                kernel.push(k);
            }
        }
        (e, kernel)
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).0.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols.len() - self.rank()
    }

    /// Basis of the null space; each vector has its last nonzero coordinate
    /// equal to one at a distinct column.
    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        self.echelon(true).1
    }

    /// Echelon basis of the column space.
    pub fn image(&self) -> Echelon {
        self.echelon(false).0
    }

    /// Some `x` with `self * x = b`, chosen with free columns set to zero
    /// when `reverse` is false, or scanning columns from the right otherwise.
    pub fn solve(&self, b: &[Scalar], reverse: bool) -> Option<Vec<Scalar>> {
        self.solver(reverse).solve(b)
    }

    /// Eliminates once for repeated solves against the same matrix.
    pub fn solver(&self, reverse: bool) -> Solver {
        let mut e = Echelon::new(true);
        let order: Vec<usize> = if reverse {
            (0..self.cols.len()).rev().collect()
        } else {
            (0..self.cols.len()).collect()
        };
        for j in order {
            e.insert(self.cols[j].clone(), Some(SparseVector::unit(j)));
        }
        Solver { echelon: e, nrows: self.nrows, ncols: self.cols.len() }
    }

    /// Column space of `self` concatenated with `other`.
    pub fn hstack(&self, other: &ColumnMatrix) -> ColumnMatrix {
        assert_eq!(self.nrows, other.nrows, "row counts differ");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        ColumnMatrix { nrows: self.nrows, cols }
    }
}

/// Prepared elimination of a [`ColumnMatrix`].
pub struct Solver {
    echelon: Echelon,
    nrows: usize,
    ncols: usize,
}

impl Solver {
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.nrows, "right-hand side length does not match matrix");
        self.solve_sparse(SparseVector::from_dense(b)).map(|x| x.to_dense(self.ncols))
    }

    pub fn solve_sparse(&self, b: SparseVector) -> Option<SparseVector> {
        let red = self.echelon.reduce(b, Some(SparseVector::new()));
        if !red.residue.is_empty() {
            return None;
        }
        // residue = b - sum(c_k rows) = 0 and combo tracks -sum(c_k combo_k)
        Some(red.combo.expect("tracked").scale(&Scalar::from_int(-1)))
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVector::from_dense(&[q(1, 1), q(0, 1), q(2, 1)]);
        let b = SparseVector::from_dense(&[q(1, 2), q(3, 1), q(1, 1)]);
        let c = a.add_scaled(&q(-2, 1), &b);
        assert_eq!(c.to_dense(3), vec![q(0, 1), q(-6, 1), q(0, 1)]);
        assert_eq!(c.nnz(), 1);
    }

    #[test]
    fn solve_and_kernel() {
        let m = ColumnMatrix::from_dense(&DenseMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]));
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply_sparse(&k[0]).is_empty());
        let b = m.apply(&[q(1, 1), q(1, 1), q(1, 1)]);
        for rev in [false, true] {
            let x = m.solve(&b, rev).unwrap();
            assert_eq!(m.apply(&x), b);
        }
        assert!(m.solve(&[q(1, 1), q(0, 1), q(0, 1)], false).is_none());
    }
}
