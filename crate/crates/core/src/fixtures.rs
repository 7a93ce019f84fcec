//! Built-in fixtures used by tests, the CLI, and the acceptance suite.

use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};

use crate::algebra::{adjoint_bimodule, Algebra, Bimodule};
use crate::labels::LabelSet;
use crate::linear::LinearMap;
use crate::operators::{OperatorFamily, RMatrixFamily};

/// `P_k(t^n) = t^(k+n+1)/(k+n+1)` on `Q[t]/(t^n)`, zero once the degree
/// reaches the truncation, one map per shift `k` in `shifts`.
pub fn integration_family(n: usize, shifts: &[usize]) -> OperatorFamily {
    let a = Arc::new(Algebra::truncated_polynomial(n));
    let module = Arc::new(adjoint_bimodule(&a));
    let labels = LabelSet::new(shifts.iter().map(|k| k.to_string())).expect("distinct shifts");
    let maps = shifts
        .iter()
        .map(|&k| {
            let mut m = DenseMatrix::zeros(n, n);
            for j in 0..n {
                let d = k + j + 1;
                if d < n {
                    m.set(d, j, Scalar::new(1, d as i64));
                }
            }
            LinearMap::new(m)
        })
        .collect();
    OperatorFamily::new(labels, module, maps).expect("consistent shapes")
}

/// `Q[t]/(t^6)` with labels `0` and `1`.
pub fn p1() -> OperatorFamily {
    integration_family(6, &[0, 1])
}

/// Everything zero: algebra, actions and operators.
pub fn zero_context(adim: usize, mdim: usize, q: usize) -> OperatorFamily {
    let a = Arc::new(Algebra::zero(adim, "e"));
    let module = Arc::new(Bimodule::zero(a, mdim));
    OperatorFamily::zero(LabelSet::numbered(q), module)
}

/// Upper triangular 2x2 matrices with basis `e11, e12, e22`.
pub fn upper_triangular() -> Algebra {
    let mut mult = DenseTensor::zeros(&[3, 3, 3]);
    let one = Scalar::one();
    // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
    mult.set(&[0, 0, 0], one.clone());
    mult.set(&[0, 1, 1], one.clone());
    mult.set(&[1, 2, 1], one.clone());
    mult.set(&[2, 2, 2], one);
    Algebra::new(vec!["e11".into(), "e12".into(), "e22".into()], mult).expect("3x3x3")
}

/// The one-dimensional algebra with `e·e = e`.
pub fn idempotent_line() -> Algebra {
    let mut mult = DenseTensor::zeros(&[1, 1, 1]);
    mult.set(&[0, 0, 0], Scalar::one());
    Algebra::new(vec!["e".into()], mult).expect("1x1x1")
}

/// Weight-zero operator on upper triangular matrices sending `e22` to `e12`.
pub fn upper_triangular_rb() -> OperatorFamily {
    let a = Arc::new(upper_triangular());
    let module = Arc::new(adjoint_bimodule(&a));
    let mut m = DenseMatrix::zeros(3, 3);
    m.set(1, 2, Scalar::one());
    OperatorFamily::new(LabelSet::numbered(1), module, vec![LinearMap::new(m)]).expect("3x3")
}

/// Skew-symmetric solution of the matching AYBE on upper triangular matrices,
/// found by exhaustive search over coefficients in {-1, 0, 1}: label `0`
/// carries `s = e11⊗e12 - e12⊗e11` and label `1` carries `-2s`.
pub fn aybe_solution() -> RMatrixFamily {
    let a = Arc::new(upper_triangular());
    let mut s = DenseMatrix::zeros(3, 3);
    s.set(0, 1, Scalar::one());
    s.set(1, 0, Scalar::from_int(-1));
    let t = s.scale(&Scalar::from_int(-2));
    RMatrixFamily::new(LabelSet::numbered(2), a, vec![s, t]).expect("3x3 tensors")
}
