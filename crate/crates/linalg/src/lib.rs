//! Exact linear algebra over the rationals.

mod dense;
mod error;
mod scalar;
mod sparse;

pub use dense::{DenseMatrix, DenseTensor, MultiIndexIter};
pub use error::LinalgError;
pub use scalar::{q, ParseScalarError, Scalar};
pub use sparse::{ColumnMatrix, Echelon, Reduced, Solver, SparseVector};

pub fn rank(m: &DenseMatrix) -> usize {
    ColumnMatrix::from_dense(m).rank()
}

pub fn kernel_dim(m: &DenseMatrix) -> usize {
    m.cols() - rank(m)
}

/// Dimension of `ker d_out / im d_in`, after confirming `d_out * d_in = 0`.
pub fn cohomology_dim(d_in: &DenseMatrix, d_out: &DenseMatrix) -> Result<usize, LinalgError> {
    cohomology_dim_columns(&ColumnMatrix::from_dense(d_in), &ColumnMatrix::from_dense(d_out))
}

pub fn cohomology_dim_columns(d_in: &ColumnMatrix, d_out: &ColumnMatrix) -> Result<usize, LinalgError> {
    if d_in.nrows() != d_out.ncols() {
        return Err(LinalgError::ShapeMismatch {
            expected: format!("incoming differential with {} rows", d_out.ncols()),
            found: format!("{} rows", d_in.nrows()),
        });
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(LinalgError::CompositionNonzero);
    }
    Ok(d_out.kernel_dim() - d_in.rank())
}
