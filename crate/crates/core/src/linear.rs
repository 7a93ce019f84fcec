//! Coordinate-vector helpers and multilinear evaluation on dense tensors.

use matchrb_linalg::{DenseMatrix, DenseTensor, MultiIndexIter, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c * x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    debug_assert_eq!(y.len(), x.len());
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn add_into(y: &mut [Scalar], x: &[Scalar]) {
    for (a, b) in y.iter_mut().zip(x) {
        *a += b;
    }
}

pub fn sub_into(y: &mut [Scalar], x: &[Scalar]) {
    for (a, b) in y.iter_mut().zip(x) {
        *a -= b;
    }
}

pub fn scaled(x: &[Scalar], c: &Scalar) -> Vector {
    x.iter().map(|a| a * c).collect()
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn nonzeros(v: &[Scalar]) -> Vec<(usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// An argument to a multilinear map: a basis index or a coordinate vector.
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a> {
    Basis(usize),
    Vec(&'a [Scalar]),
}

/// Evaluates a tensor of shape `[d_1, .., d_k, out]` on `k` arguments.
pub fn eval(t: &DenseTensor, args: &[Arg]) -> Vector {
    let out = *t.shape().last().expect("tensor has an output axis");
    debug_assert_eq!(args.len() + 1, t.shape().len());
    let mut acc = zeros(out);
    let lists: Vec<Vec<(usize, Scalar)>> = args
        .iter()
        .map(|a| match a {
            Arg::Basis(i) => vec![(*i, Scalar::one())],
            Arg::Vec(v) => v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect(),
        })
        .collect();
    if lists.iter().any(Vec::is_empty) {
        return acc;
    }
    let mut idx = vec![0usize; args.len()];
    let mut pos = vec![0usize; args.len()];
    loop {
        let mut coef = Scalar::one();
        for (k, l) in lists.iter().enumerate() {
            idx[k] = l[pos[k]].0;
            if !l[pos[k]].1.is_one() {
                coef = &coef * &l[pos[k]].1;
            }
        }
        axpy(&mut acc, &coef, t.fiber(&idx));
        let mut k = args.len();
        loop {
            if k == 0 {
                return acc;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < lists[k].len() {
                break;
            }
            pos[k] = 0;
        }
    }
}

/// Tensor of shape `[inputs.., out]` whose fiber at each input multi-index
/// is `f(index)`.
pub fn build_tensor(inputs: &[usize], out: usize, mut f: impl FnMut(&[usize]) -> Vector) -> DenseTensor {
    let mut shape = inputs.to_vec();
    shape.push(out);
    let mut t = DenseTensor::zeros(&shape);
    for idx in MultiIndexIter::new(inputs) {
        let v = f(&idx);
        debug_assert_eq!(v.len(), out);
        t.fiber_mut(&idx).clone_from_slice(&v);
    }
    t
}

/// Bilinear shorthand on coordinate vectors.
pub fn bilinear(t: &DenseTensor, x: &[Scalar], y: &[Scalar]) -> Vector {
    eval(t, &[Arg::Vec(x), Arg::Vec(y)])
}

/// Linear map `M -> A` given by a `target x source` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    pub matrix: DenseMatrix,
}

impl LinearMap {
    pub fn new(matrix: DenseMatrix) -> Self {
        LinearMap { matrix }
    }

    pub fn zero(target: usize, source: usize) -> Self {
        LinearMap { matrix: DenseMatrix::zeros(target, source) }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: DenseMatrix::identity(n) }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// Image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(c) }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn check_shape(&self, target: usize, source: usize) -> Result<()> {
        if self.target_dim() != target || self.source_dim() != source {
            return Err(Error::Shape(format!(
                "expected a {target}x{source} map, found {}x{}",
                self.target_dim(),
                self.source_dim()
            )));
        }
        Ok(())
    }
}
