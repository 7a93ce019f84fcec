//! Matching dendriform algebras and their passage to and from matching
//! relative Rota-Baxter algebras.

use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};

use crate::algebra::{adjoint_bimodule, semidirect_product, Algebra, Bimodule};
use crate::error::{require, Error, Result};
use crate::labels::LabelSet;
use crate::linear::{add, bilinear, unit, LinearMap, Vector};
use crate::operators::{check_morphism_pair, check_mrrba, OperatorFamily};
use crate::report::CertificateReport;

/// Operations `≺_x, ≻_x` on `D`, one pair per label, as `[dim, dim, dim]`
/// structure tensors. An ordinary dendriform algebra is the one-label case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDendriform {
    basis: Vec<String>,
    pub labels: LabelSet,
    prec: Vec<DenseTensor>,
    succ: Vec<DenseTensor>,
}

impl MatchingDendriform {
    pub fn new(basis: Vec<String>, labels: LabelSet, prec: Vec<DenseTensor>, succ: Vec<DenseTensor>) -> Result<Self> {
        let d = basis.len();
        if prec.len() != labels.len() || succ.len() != labels.len() {
            return Err(Error::Shape(format!("expected {} operations of each kind", labels.len())));
        }
        if let Some(t) = prec.iter().chain(&succ).find(|t| t.shape() != [d, d, d]) {
            return Err(Error::Shape(format!("operation tensors must be {d}x{d}x{d}, found {:?}", t.shape())));
        }
        Ok(MatchingDendriform { basis, labels, prec, succ })
    }

    pub fn zero(dim: usize, labels: LabelSet) -> Self {
        let basis = (0..dim).map(|i| format!("d{i}")).collect();
        let z = vec![DenseTensor::zeros(&[dim, dim, dim]); labels.len()];
        MatchingDendriform { basis, labels, prec: z.clone(), succ: z }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn q(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn prec_tensor(&self, x: usize) -> &DenseTensor {
        &self.prec[x]
    }

    pub fn succ_tensor(&self, x: usize) -> &DenseTensor {
        &self.succ[x]
    }

    pub fn prec_tensor_mut(&mut self, x: usize) -> &mut DenseTensor {
        &mut self.prec[x]
    }

    pub fn succ_tensor_mut(&mut self, x: usize) -> &mut DenseTensor {
        &mut self.succ[x]
    }

    pub fn prec(&self, x: usize, a: &[Scalar], b: &[Scalar]) -> Vector {
        bilinear(&self.prec[x], a, b)
    }

    pub fn succ(&self, x: usize, a: &[Scalar], b: &[Scalar]) -> Vector {
        bilinear(&self.succ[x], a, b)
    }

    /// The single-label structure `(≺_x, ≻_x)`.
    pub fn single(&self, x: usize) -> MatchingDendriform {
        MatchingDendriform {
            basis: self.basis.clone(),
            labels: LabelSet::new([self.labels.name(x)]).expect("one label"),
            prec: vec![self.prec[x].clone()],
            succ: vec![self.succ[x].clone()],
        }
    }

    /// `a ⋆_x b = a ≺_x b + a ≻_x b`, associative whenever the axioms hold.
    pub fn sum_product(&self, x: usize) -> Algebra {
        Algebra::new(self.basis.clone(), self.prec[x].add(&self.succ[x])).expect("square tensor")
    }
}

/// The three matching dendriform axioms on all label pairs and basis triples.
/// Fails with [`Error::MdaFails`] unless `check_mda` passes.
pub fn require_mda(d: &MatchingDendriform) -> Result<()> {
    let report = check_mda(d);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::MdaFails(Box::new(report)))
    }
}

pub fn check_mda(d: &MatchingDendriform) -> CertificateReport {
    let mut rep = CertificateReport::new("mda");
    let n = d.dim();
    let e = |i: usize| unit(n, i);
    for x in 0..d.q() {
        for y in 0..d.q() {
            for a in 0..n {
                for b in 0..n {
                    let (ea, eb) = (e(a), e(b));
                    let ab_px = d.prec(x, &ea, &eb);
                    let ab_py = d.prec(y, &ea, &eb);
                    let ab_sx = d.succ(x, &ea, &eb);
                    for c in 0..n {
                        let ec = e(c);
                        let index = vec![
                            format!("x={}", d.labels.name(x)),
                            format!("y={}", d.labels.name(y)),
                            d.name(a).to_string(),
                            d.name(b).to_string(),
                            d.name(c).to_string(),
                        ];
                        // (a ≺x b) ≺y c = a ≺x (b ≺y c) + a ≺y (b ≻x c)
                        let lhs = d.prec(y, &ab_px, &ec);
                        let rhs = add(&d.prec(x, &ea, &d.prec(y, &eb, &ec)), &d.prec(y, &ea, &d.succ(x, &eb, &ec)));
                        rep.compare("prec-prec", index.clone(), lhs, rhs);
                        // (a ≻x b) ≺y c = a ≻x (b ≺y c)
                        let lhs = d.prec(y, &ab_sx, &ec);
                        let rhs = d.succ(x, &ea, &d.prec(y, &eb, &ec));
                        rep.compare("succ-prec", index.clone(), lhs, rhs);
                        // (a ≺y b) ≻x c + (a ≻x b) ≻y c = a ≻x (b ≻y c)
                        let lhs = add(&d.succ(x, &ab_py, &ec), &d.succ(y, &ab_sx, &ec));
                        let rhs = d.succ(x, &ea, &d.succ(y, &eb, &ec));
                        rep.compare("succ-succ", index, lhs, rhs);
                    }
                }
            }
        }
    }
    rep
}

/// `u ≺_x v = u·P_x(v)` and `u ≻_x v = P_x(u)·v` on the module.
pub fn induce_dendriform(f: &OperatorFamily) -> Result<MatchingDendriform> {
    require(check_mrrba(f))?;
    let m = &f.module;
    let dm = m.dim();
    let mut prec = Vec::with_capacity(f.q());
    let mut succ = Vec::with_capacity(f.q());
    for x in 0..f.q() {
        let mut p = DenseTensor::zeros(&[dm, dm, dm]);
        let mut s = DenseTensor::zeros(&[dm, dm, dm]);
        for u in 0..dm {
            for v in 0..dm {
                p.fiber_mut(&[u, v]).clone_from_slice(&m.act_right(&unit(dm, u), &f.image(x, v)));
                s.fiber_mut(&[u, v]).clone_from_slice(&m.act_left(&f.image(x, u), &unit(dm, v)));
            }
        }
        prec.push(p);
        succ.push(s);
    }
    MatchingDendriform::new(m.basis_names().to_vec(), f.labels.clone(), prec, succ)
}

/// `f(a ≺_x b) = f(a) ≺'_x f(b)` and likewise for `≻`.
pub fn check_mda_morphism(f: &LinearMap, src: &MatchingDendriform, dst: &MatchingDendriform) -> Result<CertificateReport> {
    if src.labels != dst.labels {
        return Err(Error::LabelSetMismatch);
    }
    f.check_shape(dst.dim(), src.dim())?;
    let mut rep = CertificateReport::new("mda-morphism");
    let n = src.dim();
    for x in 0..src.q() {
        for a in 0..n {
            for b in 0..n {
                let index = vec![format!("x={}", src.labels.name(x)), src.name(a).to_string(), src.name(b).to_string()];
                let (fa, fb) = (f.column(a), f.column(b));
                let lhs = f.apply(src.prec_tensor(x).fiber(&[a, b]));
                rep.compare("prec", index.clone(), lhs, dst.prec(x, &fa, &fb));
                let lhs = f.apply(src.succ_tensor(x).fiber(&[a, b]));
                rep.compare("succ", index, lhs, dst.succ(x, &fa, &fb));
            }
        }
    }
    Ok(rep)
}

/// Position of `e_a ⊗ x` in `D ⊗ K[X]`: basis index major, label minor.
fn tensor_index(q: usize, a: usize, x: usize) -> usize {
    a * q + x
}

fn tensor_basis(d: &MatchingDendriform) -> Vec<String> {
    let mut out = Vec::with_capacity(d.dim() * d.q());
    for a in 0..d.dim() {
        for x in 0..d.q() {
            out.push(format!("{}⊗{}", d.name(a), d.labels.name(x)));
        }
    }
    out
}

/// Writes `coef ⊗ x` into a vector on `D ⊗ K[X]`.
fn place(out: &mut [Scalar], q: usize, coef: &[Scalar], x: usize) {
    for (a, c) in coef.iter().enumerate() {
        if !c.is_zero() {
            out[tensor_index(q, a, x)] += c;
        }
    }
}

/// Ordinary dendriform structure on `D ⊗ K[X]` with
/// `(a⊗x) ≺ (b⊗y) = (a ≺_y b)⊗x` and `(a⊗x) ≻ (b⊗y) = (a ≻_x b)⊗y`.
pub fn extend_to_labelled_dendriform(d: &MatchingDendriform) -> Result<MatchingDendriform> {
    require_mda(d)?;
    let (n, q) = (d.dim(), d.q());
    let big = n * q;
    let mut prec = DenseTensor::zeros(&[big, big, big]);
    let mut succ = DenseTensor::zeros(&[big, big, big]);
    for a in 0..n {
        for x in 0..q {
            for b in 0..n {
                for y in 0..q {
                    let (i, j) = (tensor_index(q, a, x), tensor_index(q, b, y));
                    place(prec.fiber_mut(&[i, j]), q, d.prec_tensor(y).fiber(&[a, b]), x);
                    place(succ.fiber_mut(&[i, j]), q, d.succ_tensor(x).fiber(&[a, b]), y);
                }
            }
        }
    }
    MatchingDendriform::new(tensor_basis(d), LabelSet::new(["·"])?, vec![prec], vec![succ])
}

/// The matching relative Rota-Baxter algebra `(D⊗K[X], D, {id_x})`: the
/// algebra `(a⊗x)•(b⊗y) = (a ≺_y b)⊗x + (a ≻_x b)⊗y` acting on `D` by
/// `(a⊗x)·b = a ≻_x b` and `b·(a⊗x) = b ≺_x a`, with `id_x(a) = a⊗x`.
pub fn functor_g(d: &MatchingDendriform) -> Result<OperatorFamily> {
    require_mda(d)?;
    let (n, q) = (d.dim(), d.q());
    let big = n * q;
    let mut mult = DenseTensor::zeros(&[big, big, big]);
    let mut left = DenseTensor::zeros(&[big, n, n]);
    let mut right = DenseTensor::zeros(&[n, big, n]);
    for a in 0..n {
        for x in 0..q {
            let i = tensor_index(q, a, x);
            for b in 0..n {
                for y in 0..q {
                    let out = mult.fiber_mut(&[i, tensor_index(q, b, y)]);
                    place(out, q, d.prec_tensor(y).fiber(&[a, b]), x);
                    place(out, q, d.succ_tensor(x).fiber(&[a, b]), y);
                }
                left.fiber_mut(&[i, b]).clone_from_slice(d.succ_tensor(x).fiber(&[a, b]));
                right.fiber_mut(&[b, i]).clone_from_slice(d.prec_tensor(x).fiber(&[b, a]));
            }
        }
    }
    let algebra = Arc::new(Algebra::new(tensor_basis(d), mult)?);
    let module = Arc::new(Bimodule::new(algebra, d.basis_names().to_vec(), left, right)?);
    let maps = (0..q)
        .map(|x| {
            let mut m = DenseMatrix::zeros(big, n);
            for a in 0..n {
                m.set(tensor_index(q, a, x), a, Scalar::one());
            }
            LinearMap::new(m)
        })
        .collect();
    OperatorFamily::new(d.labels.clone(), module, maps)
}

/// `P^ψ(a⊗x) = P_x(ψ(a))`, with the certificate that `(P^ψ, ψ)` is a
/// morphism from `functor_g(d)` to `target`.
pub fn adjunction_transport(
    psi: &LinearMap,
    d: &MatchingDendriform,
    target: &OperatorFamily,
) -> Result<(LinearMap, CertificateReport)> {
    let induced = induce_dendriform(target)?;
    require(check_mda_morphism(psi, d, &induced)?)?;
    let (n, q) = (d.dim(), d.q());
    let mut m = DenseMatrix::zeros(target.adim(), n * q);
    for a in 0..n {
        let pa = psi.column(a);
        for x in 0..q {
            for (k, c) in target.apply(x, &pa).into_iter().enumerate() {
                m.set(k, tensor_index(q, a, x), c);
            }
        }
    }
    let p_psi = LinearMap::new(m);
    let rep = check_morphism_pair(&p_psi, psi, &functor_g(d)?, target)?;
    Ok((p_psi, rep))
}

/// Embeds `D` into the matching Rota-Baxter algebra on `(D⊗K[X]) ⊕ D` with
/// `P_x(b⊗y, b') = (b'⊗x, 0)` via `a ↦ (0, a)`. The report covers the
/// operator identity and the morphism property of the inclusion.
pub fn semidirect_embedding(d: &MatchingDendriform) -> Result<(Arc<Algebra>, OperatorFamily, LinearMap, CertificateReport)> {
    let g = functor_g(d)?;
    let total = Arc::new(semidirect_product(&g.module));
    let (n, q) = (d.dim(), d.q());
    let (big, dim) = (n * q, total.dim());
    let maps = (0..q)
        .map(|x| {
            let mut m = DenseMatrix::zeros(dim, dim);
            for b in 0..n {
                m.set(tensor_index(q, b, x), big + b, Scalar::one());
            }
            LinearMap::new(m)
        })
        .collect();
    let family = OperatorFamily::new(d.labels.clone(), Arc::new(adjoint_bimodule(&total)), maps)?;
    let mut iota = DenseMatrix::zeros(dim, n);
    for a in 0..n {
        iota.set(big + a, a, Scalar::one());
    }
    let iota = LinearMap::new(iota);
    let mut rep = CertificateReport::new("semidirect-embedding");
    let mrb = check_mrrba(&family);
    let passed = mrb.passed();
    rep.absorb(mrb);
    if passed {
        rep.absorb(check_mda_morphism(&iota, d, &induce_dendriform(&family)?)?);
    }
    Ok((total, family, iota, rep))
}
