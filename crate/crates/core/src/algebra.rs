//! Associative algebras and bimodules given by structure constants.

use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};

use crate::error::{Error, Result};
use crate::linear::{axpy, bilinear, zeros, Vector};
use crate::report::CertificateReport;

/// `e_i e_j = sum_k mult[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    basis: Vec<String>,
    mult: DenseTensor,
}

impl Algebra {
    pub fn new(basis: Vec<String>, mult: DenseTensor) -> Result<Self> {
        let d = basis.len();
        if mult.shape() != [d, d, d] {
            return Err(Error::Shape(format!("multiplication tensor must be {d}x{d}x{d}, found {:?}", mult.shape())));
        }
        Ok(Algebra { basis, mult })
    }

    pub fn zero(dim: usize, prefix: &str) -> Self {
        let basis = (0..dim).map(|i| format!("{prefix}{i}")).collect();
        Algebra { basis, mult: DenseTensor::zeros(&[dim, dim, dim]) }
    }

    /// `Q[t]/(t^n)` with monomial basis `1, t, .., t^(n-1)`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let basis = (0..n).map(monomial_name).collect();
        let mut mult = DenseTensor::zeros(&[n, n, n]);
        for i in 0..n {
            for j in 0..n - i {
                mult.set(&[i, j, i + j], Scalar::one());
            }
        }
        Algebra { basis, mult }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn mult(&self) -> &DenseTensor {
        &self.mult
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.fiber(&[i, j])
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        bilinear(&self.mult, a, b)
    }

    /// Product of a basis element with a vector on the left.
    pub fn mul_basis_left(&self, i: usize, b: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim());
        for (j, x) in b.iter().enumerate() {
            axpy(&mut out, x, self.mult.fiber(&[i, j]));
        }
        out
    }

    pub fn mul_basis_right(&self, a: &[Scalar], j: usize) -> Vector {
        let mut out = zeros(self.dim());
        for (i, x) in a.iter().enumerate() {
            axpy(&mut out, x, self.mult.fiber(&[i, j]));
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.product_basis(i, j) == self.product_basis(j, i)))
    }

    /// Change of basis: new basis vector `f_i` has old coordinates given by
    /// column `i` of the invertible matrix `g`.
    pub fn transport(&self, g: &DenseMatrix, g_inv: &DenseMatrix) -> Algebra {
        let d = self.dim();
        let mut mult = DenseTensor::zeros(&[d, d, d]);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&g.column(i), &g.column(j));
                mult.fiber_mut(&[i, j]).clone_from_slice(&g_inv.apply(&p));
            }
        }
        let basis = (0..d).map(|i| format!("f{i}")).collect();
        Algebra { basis, mult }
    }
}

pub fn monomial_name(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "t".to_string(),
        _ => format!("t^{i}"),
    }
}

/// Associativity on every basis triple.
pub fn check_algebra(a: &Algebra) -> CertificateReport {
    let mut rep = CertificateReport::new("algebra");
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let ij = a.product_basis(i, j).to_vec();
            for k in 0..d {
                let lhs = a.mul_basis_right(&ij, k);
                let rhs = a.mul_basis_left(i, a.product_basis(j, k));
                rep.compare("associativity", names(a, &[i, j, k]), lhs, rhs);
            }
        }
    }
    rep
}

fn names(a: &Algebra, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| a.name(i).to_string()).collect()
}

/// Left action `[adim, mdim, mdim]`, right action `[mdim, adim, mdim]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub algebra: Arc<Algebra>,
    basis: Vec<String>,
    left: DenseTensor,
    right: DenseTensor,
}

impl Bimodule {
    pub fn new(algebra: Arc<Algebra>, basis: Vec<String>, left: DenseTensor, right: DenseTensor) -> Result<Self> {
        let (a, m) = (algebra.dim(), basis.len());
        if left.shape() != [a, m, m] || right.shape() != [m, a, m] {
            return Err(Error::Shape(format!(
                "actions must be {a}x{m}x{m} and {m}x{a}x{m}, found {:?} and {:?}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(Bimodule { algebra, basis, left, right })
    }

    pub fn zero(algebra: Arc<Algebra>, dim: usize) -> Self {
        let a = algebra.dim();
        let basis = (0..dim).map(|i| format!("m{i}")).collect();
        Bimodule { algebra, basis, left: DenseTensor::zeros(&[a, dim, dim]), right: DenseTensor::zeros(&[dim, a, dim]) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn left(&self) -> &DenseTensor {
        &self.left
    }

    pub fn right(&self) -> &DenseTensor {
        &self.right
    }

    /// `a ·_M u`.
    pub fn act_left(&self, a: &[Scalar], u: &[Scalar]) -> Vector {
        bilinear(&self.left, a, u)
    }

    /// `u ·_M a`.
    pub fn act_right(&self, u: &[Scalar], a: &[Scalar]) -> Vector {
        bilinear(&self.right, u, a)
    }

    pub fn left_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.left.fiber(&[i, j])
    }

    pub fn right_basis(&self, j: usize, i: usize) -> &[Scalar] {
        self.right.fiber(&[j, i])
    }

    /// True when this is literally the adjoint bimodule of its algebra.
    pub fn is_adjoint(&self) -> bool {
        let a = &self.algebra;
        self.dim() == a.dim() && self.left == *a.mult() && self.right == *a.mult()
    }

    /// Transport along an algebra change of basis `(g, g_inv)` on the
    /// algebra side and `(h, h_inv)` on the module side.
    pub fn transport(
        &self,
        algebra: Arc<Algebra>,
        g: &DenseMatrix,
        h: &DenseMatrix,
        h_inv: &DenseMatrix,
    ) -> Bimodule {
        let (a, m) = (self.algebra.dim(), self.dim());
        let mut left = DenseTensor::zeros(&[a, m, m]);
        let mut right = DenseTensor::zeros(&[m, a, m]);
        for i in 0..a {
            for j in 0..m {
                let l = self.act_left(&g.column(i), &h.column(j));
                left.fiber_mut(&[i, j]).clone_from_slice(&h_inv.apply(&l));
                let r = self.act_right(&h.column(j), &g.column(i));
                right.fiber_mut(&[j, i]).clone_from_slice(&h_inv.apply(&r));
            }
        }
        let basis = (0..m).map(|i| format!("g{i}")).collect();
        Bimodule { algebra, basis, left, right }
    }
}

/// The three bimodule identities on every basis triple.
pub fn check_bimodule(m: &Bimodule) -> CertificateReport {
    let mut rep = CertificateReport::new("bimodule");
    let a = &m.algebra;
    let (da, dm) = (a.dim(), m.dim());
    let ea = |i: usize| crate::linear::unit(da, i);
    let em = |i: usize| crate::linear::unit(dm, i);
    for i in 0..da {
        for j in 0..da {
            let ij = a.product_basis(i, j).to_vec();
            for u in 0..dm {
                let nm = vec![a.name(i).to_string(), a.name(j).to_string(), m.name(u).to_string()];
                // (ab)u = a(bu)
                let lhs = m.act_left(&ij, &em(u));
                let rhs = m.act_left(&ea(i), m.left_basis(j, u));
                rep.compare("left", nm, lhs, rhs);
                // (au)b = a(ub)
                let nm = vec![a.name(i).to_string(), m.name(u).to_string(), a.name(j).to_string()];
                let lhs = m.act_right(m.left_basis(i, u), &ea(j));
                let rhs = m.act_left(&ea(i), m.right_basis(u, j));
                rep.compare("middle", nm, lhs, rhs);
                // (ua)b = u(ab)
                let nm = vec![m.name(u).to_string(), a.name(i).to_string(), a.name(j).to_string()];
                let lhs = m.act_right(m.right_basis(u, i), &ea(j));
                let rhs = m.act_right(&em(u), &ij);
                rep.compare("right", nm, lhs, rhs);
            }
        }
    }
    rep
}

pub fn adjoint_bimodule(a: &Arc<Algebra>) -> Bimodule {
    Bimodule {
        algebra: a.clone(),
        basis: a.basis_names().to_vec(),
        left: a.mult().clone(),
        right: a.mult().clone(),
    }
}

/// Dual bimodule on `M*`: `(a·α)(u) = α(u·a)` and `(α·a)(u) = α(a·u)`.
pub fn dual_bimodule(m: &Bimodule) -> Bimodule {
    let (da, dm) = (m.algebra.dim(), m.dim());
    let mut left = DenseTensor::zeros(&[da, dm, dm]);
    let mut right = DenseTensor::zeros(&[dm, da, dm]);
    for i in 0..da {
        for j in 0..dm {
            for k in 0..dm {
                // (e_i · δ_j)(u_k) = δ_j(u_k · e_i)
                left.set(&[i, j, k], m.right.get(&[k, i, j]).clone());
                // (δ_j · e_i)(u_k) = δ_j(e_i · u_k)
                right.set(&[j, i, k], m.left.get(&[i, k, j]).clone());
            }
        }
    }
    let basis = m.basis.iter().map(|n| format!("{n}*")).collect();
    Bimodule { algebra: m.algebra.clone(), basis, left, right }
}

pub fn coadjoint_bimodule(a: &Arc<Algebra>) -> Bimodule {
    dual_bimodule(&adjoint_bimodule(a))
}

/// Algebra on `A ⊕ M` with `(a,u)(b,v) = (ab, a·v + u·b)`.
pub fn semidirect_product(m: &Bimodule) -> Algebra {
    let a = &m.algebra;
    let (da, dm) = (a.dim(), m.dim());
    let n = da + dm;
    let mut mult = DenseTensor::zeros(&[n, n, n]);
    for i in 0..da {
        for j in 0..da {
            for (k, c) in a.product_basis(i, j).iter().enumerate() {
                mult.set(&[i, j, k], c.clone());
            }
        }
        for u in 0..dm {
            for (k, c) in m.left_basis(i, u).iter().enumerate() {
                mult.set(&[i, da + u, da + k], c.clone());
            }
            for (k, c) in m.right_basis(u, i).iter().enumerate() {
                mult.set(&[da + u, i, da + k], c.clone());
            }
        }
    }
    let mut basis = a.basis_names().to_vec();
    basis.extend(m.basis_names().iter().cloned());
    Algebra { basis, mult }
}

/// `φ(ab) = φ(a)φ(b)` on basis pairs.
pub fn check_algebra_morphism(phi: &crate::linear::LinearMap, src: &Algebra, dst: &Algebra) -> CertificateReport {
    let mut rep = CertificateReport::new("algebra-morphism");
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = phi.apply(src.product_basis(i, j));
            let rhs = dst.mul(&phi.column(i), &phi.column(j));
            rep.compare("multiplicative", names(src, &[i, j]), lhs, rhs);
        }
    }
    rep
}
