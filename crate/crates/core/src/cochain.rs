//! Cochains of the operator complex and the mixed complex, the graded Lie
//! bracket on labelled cochains, and all differentials as maps on cochains.

use std::sync::Arc;

use matchrb_linalg::{DenseTensor, Scalar};

use crate::algebra::{adjoint_bimodule, Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::linear::{axpy, build_tensor, eval, unit, zeros, Arg, Vector};
use crate::operators::{check_mrrba, OperatorFamily};
use crate::report::CertificateReport;

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v
}

/// Arguments `basis.., value, basis..` for a multilinear evaluation.
fn args_with<'a>(before: &[usize], v: &'a [Scalar], after: &[usize]) -> Vec<Arg<'a>> {
    before.iter().map(|&i| Arg::Basis(i)).chain([Arg::Vec(v)]).chain(after.iter().map(|&i| Arg::Basis(i))).collect()
}

/// An element of `g^n`: one map `M^⊗n -> A` per label `n`-tuple. Degree zero
/// stores a single algebra element.
#[derive(Clone, Debug)]
pub struct LabeledCochain {
    degree: usize,
    labels: LabelSet,
    module: Arc<Bimodule>,
    components: Vec<DenseTensor>,
}

impl PartialEq for LabeledCochain {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.degree == other.degree && self.components == other.components
    }
}

impl LabeledCochain {
    /// Components in lexicographic label-tuple order, each of shape
    /// `[mdim; n] + [adim]`.
    pub fn new(labels: LabelSet, module: Arc<Bimodule>, degree: usize, components: Vec<DenseTensor>) -> Result<Self> {
        if components.len() != labels.tuple_count(degree) {
            return Err(Error::Shape(format!(
                "degree {degree} needs {} components, found {}",
                labels.tuple_count(degree),
                components.len()
            )));
        }
        let shape = Self::component_shape(&module, degree);
        if let Some(c) = components.iter().find(|c| c.shape() != shape.as_slice()) {
            return Err(Error::Shape(format!("component shape {:?}, expected {shape:?}", c.shape())));
        }
        Ok(LabeledCochain { degree, labels, module, components })
    }

    fn component_shape(module: &Bimodule, degree: usize) -> Vec<usize> {
        let mut s = vec![module.dim(); degree];
        s.push(module.algebra.dim());
        s
    }

    pub fn zero(labels: LabelSet, module: Arc<Bimodule>, degree: usize) -> Self {
        let c = DenseTensor::zeros(&Self::component_shape(&module, degree));
        let components = vec![c; labels.tuple_count(degree)];
        LabeledCochain { degree, labels, module, components }
    }

    /// Builds each component fiber from `f(labels, basis indices)`.
    pub fn from_fn(
        labels: LabelSet,
        module: Arc<Bimodule>,
        degree: usize,
        mut f: impl FnMut(&[usize], &[usize]) -> Vector,
    ) -> Self {
        let (dm, da) = (module.dim(), module.algebra.dim());
        let components = labels.tuples(degree).map(|xs| build_tensor(&vec![dm; degree], da, |us| f(&xs, us))).collect();
        LabeledCochain { degree, labels, module, components }
    }

    /// The degree-one cochain `⊕ P_x` of a family.
    pub fn from_family(f: &OperatorFamily) -> Self {
        LabeledCochain::from_fn(f.labels.clone(), f.module.clone(), 1, |xs, us| f.image(xs[0], us[0]))
    }

    /// The degree-zero cochain holding `a`.
    pub fn from_element(labels: LabelSet, module: Arc<Bimodule>, a: &[Scalar]) -> Self {
        LabeledCochain::from_fn(labels, module, 0, |_, _| a.to_vec())
    }

    pub fn dimension(labels: &LabelSet, module: &Bimodule, degree: usize) -> usize {
        labels.tuple_count(degree) * module.dim().pow(degree as u32) * module.algebra.dim()
    }

    pub fn from_vector(labels: LabelSet, module: Arc<Bimodule>, degree: usize, v: &[Scalar]) -> Result<Self> {
        let dim = Self::dimension(&labels, &module, degree);
        if v.len() != dim {
            return Err(Error::Shape(format!("degree {degree} cochain has {dim} coordinates, found {}", v.len())));
        }
        let shape = Self::component_shape(&module, degree);
        let per: usize = shape.iter().product();
        let components = (0..labels.tuple_count(degree))
            .map(|k| DenseTensor::from_entries(&shape, v[k * per..(k + 1) * per].to_vec()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LabeledCochain { degree, labels, module, components })
    }

    pub fn to_vector(&self) -> Vector {
        self.components.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn module(&self) -> &Arc<Bimodule> {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.module.algebra
    }

    pub fn component(&self, xs: &[usize]) -> &DenseTensor {
        &self.components[self.labels.tuple_index(xs)]
    }

    pub fn component_mut(&mut self, xs: &[usize]) -> &mut DenseTensor {
        let k = self.labels.tuple_index(xs);
        &mut self.components[k]
    }

    pub fn components(&self) -> &[DenseTensor] {
        &self.components
    }

    /// `f_{xs}(e_{us})`.
    pub fn value(&self, xs: &[usize], us: &[usize]) -> &[Scalar] {
        self.component(xs).fiber(us)
    }

    pub fn eval(&self, xs: &[usize], args: &[Arg]) -> Vector {
        eval(self.component(xs), args)
    }

    pub fn same_context(&self, other: &LabeledCochain) -> bool {
        self.labels == other.labels && (Arc::ptr_eq(&self.module, &other.module) || self.module == other.module)
    }

    fn check_context(&self, other: &LabeledCochain) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip(&self, other: &LabeledCochain, f: impl Fn(&DenseTensor, &DenseTensor) -> DenseTensor) -> Result<Self> {
        self.check_context(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!("degrees {} and {} differ", self.degree, other.degree)));
        }
        let components = self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect();
        Ok(LabeledCochain { components, ..self.clone() })
    }

    pub fn add(&self, other: &LabeledCochain) -> Result<Self> {
        self.zip(other, DenseTensor::add)
    }

    pub fn sub(&self, other: &LabeledCochain) -> Result<Self> {
        self.zip(other, DenseTensor::sub)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LabeledCochain { components: self.components.iter().map(|t| t.scale(c)).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(DenseTensor::is_zero)
    }
}

/// `P ⋄ Q`, the graded pre-Lie product whose commutator is the bracket.
pub fn diamond(p: &LabeledCochain, q: &LabeledCochain) -> Result<LabeledCochain> {
    p.check_context(q)?;
    let (m, n) = (p.degree, q.degree);
    let module = p.module.clone();
    let (dm, alg) = (module.dim(), module.algebra.clone());
    Ok(LabeledCochain::from_fn(p.labels.clone(), module.clone(), m + n, |xs, us| {
        let mut out = zeros(alg.dim());
        for i in 1..=m {
            // P(.., Q(u_i..u_{i+n-1})·u_{i+n}, ..) at P's i-th slot
            let qv = q.value(&xs[i - 1..i - 1 + n], &us[i - 1..i - 1 + n]);
            if !crate::linear::is_zero(qv) {
                let v = module.act_left(qv, &unit(dm, us[i - 1 + n]));
                let pl = concat(&xs[..i - 1], &xs[i - 1 + n..]);
                let val = p.eval(&pl, &args_with(&us[..i - 1], &v, &us[i + n..]));
                axpy(&mut out, &sign((i - 1) * n), &val);
            }
            // P(.., u_i·Q(u_{i+1}..u_{i+n}), ..)
            let qv = q.value(&xs[i..i + n], &us[i..i + n]);
            if !crate::linear::is_zero(qv) {
                let v = module.act_right(&unit(dm, us[i - 1]), qv);
                let pl = concat(&xs[..i], &xs[i + n..]);
                let val = p.eval(&pl, &args_with(&us[..i - 1], &v, &us[i + n..]));
                axpy(&mut out, &-sign(i * n), &val);
            }
        }
        let prod = alg.mul(p.value(&xs[..m], &us[..m]), q.value(&xs[m..], &us[m..]));
        axpy(&mut out, &sign(m * n), &prod);
        out
    }))
}

/// `⟦P, Q⟧ = P ⋄ Q - (-1)^{mn} Q ⋄ P`.
pub fn bracket(p: &LabeledCochain, q: &LabeledCochain) -> Result<LabeledCochain> {
    let a = diamond(p, q)?;
    let b = diamond(q, p)?;
    a.sub(&b.scale(&sign(p.degree * q.degree)))
}

fn mc_report(checker: &str, f: &OperatorFamily, c: &LabeledCochain) -> CertificateReport {
    let mut rep = CertificateReport::new(checker);
    for xs in f.labels.tuples(2) {
        for u in 0..f.mdim() {
            for v in 0..f.mdim() {
                let index = vec![
                    format!("x={}", f.labels.name(xs[0])),
                    format!("y={}", f.labels.name(xs[1])),
                    f.module.name(u).to_string(),
                    f.module.name(v).to_string(),
                ];
                rep.vanish("maurer-cartan", index, c.value(&xs, &[u, v]).to_vec());
            }
        }
    }
    rep
}

/// `⟦P, P⟧ = 0` for `P = ⊕ P_x`.
/// Fails with [`Error::NotMaurerCartan`] unless `check_mc` passes.
pub fn require_mc(f: &OperatorFamily) -> Result<()> {
    let report = check_mc(f);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::NotMaurerCartan(Box::new(report)))
    }
}

pub fn check_mc(f: &OperatorFamily) -> CertificateReport {
    let p = LabeledCochain::from_family(f);
    mc_report("maurer-cartan", f, &bracket(&p, &p).expect("same context"))
}

/// `d_P(P') + ½⟦P', P'⟧ = 0`, compared against the operator identity for
/// the summed family `{P_x + P'_x}`.
pub fn check_mc_twist(base: &OperatorFamily, twist: &OperatorFamily) -> Result<CertificateReport> {
    if !base.same_context(twist) || base.labels != twist.labels {
        return Err(Error::ContextMismatch);
    }
    require_mc(base)?;
    let p = LabeledCochain::from_family(base);
    let pt = LabeledCochain::from_family(twist);
    let lhs = bracket(&p, &pt)?.add(&bracket(&pt, &pt)?.scale(&Scalar::new(1, 2)))?;
    let mut rep = mc_report("maurer-cartan-twist", base, &lhs);
    let sum = check_mrrba(&base.sum(twist)?);
    if rep.passed() != sum.passed() {
        rep.fail("agrees-with-sum", vec![format!("sum check {}", if sum.passed() { "passes" } else { "fails" })]);
    }
    Ok(rep)
}

/// Operator images `P_x(e_u)` cached for repeated evaluation.
pub(crate) struct Images {
    pub(crate) family: OperatorFamily,
    imgs: Vec<Vec<Vector>>,
}

impl Images {
    pub(crate) fn new(family: &OperatorFamily) -> Self {
        let imgs = (0..family.q()).map(|x| (0..family.mdim()).map(|u| family.image(x, u)).collect()).collect();
        Images { family: family.clone(), imgs }
    }

    fn get(&self, x: usize, u: usize) -> &[Scalar] {
        &self.imgs[x][u]
    }
}

pub(crate) fn delta_op_with(im: &Images, f: &LabeledCochain) -> LabeledCochain {
    let fam = &im.family;
    let n = f.degree;
    let module = fam.module.clone();
    let (dm, alg) = (module.dim(), module.algebra.clone());
    LabeledCochain::from_fn(fam.labels.clone(), module.clone(), n + 1, |xs, us| {
        let mut out = zeros(alg.dim());
        // P_{x1}(u1)·f(u2..) - P_{x1}(u1·f(u2..))
        let tail = f.value(&xs[1..], &us[1..]);
        if !crate::linear::is_zero(tail) {
            axpy(&mut out, &Scalar::one(), &alg.mul(im.get(xs[0], us[0]), tail));
            let w = module.act_right(&unit(dm, us[0]), tail);
            axpy(&mut out, &Scalar::from_int(-1), &fam.apply(xs[0], &w));
        }
        for i in 1..=n {
            let s = sign(i);
            // f(.., u_i·P_{x_{i+1}}(u_{i+1}), ..) labelled by x_i
            let pv = im.get(xs[i], us[i]);
            if !crate::linear::is_zero(pv) {
                let v = module.act_right(&unit(dm, us[i - 1]), pv);
                let fl = concat(&xs[..i], &xs[i + 1..]);
                axpy(&mut out, &s, &f.eval(&fl, &args_with(&us[..i - 1], &v, &us[i + 1..])));
            }
            // f(.., P_{x_i}(u_i)·u_{i+1}, ..) labelled by x_{i+1}
            let pv = im.get(xs[i - 1], us[i - 1]);
            if !crate::linear::is_zero(pv) {
                let v = module.act_left(pv, &unit(dm, us[i]));
                let fl = concat(&xs[..i - 1], &xs[i..]);
                axpy(&mut out, &s, &f.eval(&fl, &args_with(&us[..i - 1], &v, &us[i + 1..])));
            }
        }
        // (-1)^{n+1} { f(u1..un)·P(u_{n+1}) - P(f(u1..un)·u_{n+1}) }
        let head = f.value(&xs[..n], &us[..n]);
        if !crate::linear::is_zero(head) {
            let s = sign(n + 1);
            axpy(&mut out, &s, &alg.mul(head, im.get(xs[n], us[n])));
            let w = module.act_left(head, &unit(dm, us[n]));
            axpy(&mut out, &-s, &fam.apply(xs[n], &w));
        }
        out
    })
}

fn check_cochain_context(f: &OperatorFamily, c: &LabeledCochain) -> Result<()> {
    if c.labels != f.labels || !(Arc::ptr_eq(&c.module, &f.module) || *c.module == *f.module) {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// `δ_{P}(f) = (-1)^n ⟦P, f⟧`, evaluated from its explicit expansion.
pub fn delta_op(f: &OperatorFamily, c: &LabeledCochain) -> Result<LabeledCochain> {
    check_cochain_context(f, c)?;
    require_mc(f)?;
    Ok(delta_op_with(&Images::new(f), c))
}

/// Hochschild coboundary of `f ∈ Hom(A^⊗n, M)`, given with shape `[a; n] + [m]`.
pub fn hochschild_delta(a: &Algebra, m: &Bimodule, f: &DenseTensor) -> Result<DenseTensor> {
    let n = f.shape().len().checked_sub(1).ok_or_else(|| Error::Shape("cochain tensor needs an output axis".into()))?;
    let (da, dm) = (a.dim(), m.dim());
    let mut expect = vec![da; n];
    expect.push(dm);
    if f.shape() != expect.as_slice() {
        return Err(Error::Shape(format!("Hochschild cochain of shape {expect:?} expected, found {:?}", f.shape())));
    }
    Ok(build_tensor(&vec![da; n + 1], dm, |idx| {
        let mut out = zeros(dm);
        let tail = f.fiber(&idx[1..]);
        if !crate::linear::is_zero(tail) {
            axpy(&mut out, &Scalar::one(), &m.act_left(&unit(da, idx[0]), tail));
        }
        for i in 1..=n {
            let prod = a.product_basis(idx[i - 1], idx[i]);
            if !crate::linear::is_zero(prod) {
                axpy(&mut out, &sign(i), &eval(f, &args_with(&idx[..i - 1], prod, &idx[i + 1..])));
            }
        }
        let head = f.fiber(&idx[..n]);
        if !crate::linear::is_zero(head) {
            axpy(&mut out, &sign(n + 1), &m.act_right(head, &unit(da, idx[n])));
        }
        out
    }))
}

/// Shape `[a,..,m,..,a] + [m]` of the summand of `Hom(𝒜^{n-1,1}, M)` with the
/// module slot at 1-based `position`.
pub fn mixed_shape(da: usize, dm: usize, arity: usize, position: usize) -> Vec<usize> {
    let mut s = vec![da; arity];
    s[position - 1] = dm;
    s.push(dm);
    s
}

/// The twisted coboundary `Hom(𝒜^{n-1,1}, M) -> Hom(𝒜^{n,1}, M)` for
/// `α ∈ Hom(A^⊗n, A)`; `beta[p-1]` is the summand with the module at slot `p`.
pub fn hochschild_delta_alpha(m: &Bimodule, alpha: &DenseTensor, beta: &[DenseTensor]) -> Result<Vec<DenseTensor>> {
    let a = &m.algebra;
    let (da, dm) = (a.dim(), m.dim());
    let n = alpha.shape().len().saturating_sub(1);
    if n == 0 || alpha.shape() != [vec![da; n], vec![da]].concat().as_slice() {
        return Err(Error::Shape(format!("α must have shape [{da}; n≥1] + [{da}], found {:?}", alpha.shape())));
    }
    if beta.len() != n {
        return Err(Error::Shape(format!("β needs {n} position summands, found {}", beta.len())));
    }
    for (p, b) in beta.iter().enumerate() {
        if b.shape() != mixed_shape(da, dm, n, p + 1).as_slice() {
            return Err(Error::Shape(format!("β summand {} has shape {:?}", p + 1, b.shape())));
        }
    }
    Ok((1..=n + 1)
        .map(|p| {
            build_tensor(&mixed_shape(da, dm, n + 1, p)[..n + 1], dm, |idx| {
                let mut out = zeros(dm);
                // first slot acts on the value of the rest
                if p == 1 {
                    let v = alpha.fiber(&idx[1..]);
                    if !crate::linear::is_zero(v) {
                        axpy(&mut out, &Scalar::one(), &m.act_right(&unit(dm, idx[0]), v));
                    }
                } else {
                    let v = beta[p - 2].fiber(&idx[1..]);
                    if !crate::linear::is_zero(v) {
                        axpy(&mut out, &Scalar::one(), &m.act_left(&unit(da, idx[0]), v));
                    }
                }
                for i in 1..=n {
                    let (l, r) = (idx[i - 1], idx[i]);
                    // merged slot i carries the module when p is i or i+1
                    let (merged, target) = if p == i {
                        (m.right_basis(l, r), i)
                    } else if p == i + 1 {
                        (m.left_basis(l, r), i)
                    } else {
                        (a.product_basis(l, r), if p < i { p } else { p - 1 })
                    };
                    if !crate::linear::is_zero(merged) {
                        let val = eval(&beta[target - 1], &args_with(&idx[..i - 1], merged, &idx[i + 1..]));
                        axpy(&mut out, &sign(i), &val);
                    }
                }
                // last slot acted on by the value of the rest
                let s = sign(n + 1);
                if p == n + 1 {
                    let v = alpha.fiber(&idx[..n]);
                    if !crate::linear::is_zero(v) {
                        axpy(&mut out, &s, &m.act_left(v, &unit(dm, idx[n])));
                    }
                } else {
                    let v = beta[p - 1].fiber(&idx[..n]);
                    if !crate::linear::is_zero(v) {
                        axpy(&mut out, &s, &m.act_right(v, &unit(da, idx[n])));
                    }
                }
                out
            })
        })
        .collect())
}

pub(crate) fn h_map_with(im: &Images, alpha: &DenseTensor, beta: &[DenseTensor]) -> LabeledCochain {
    let fam = &im.family;
    let n = beta.len();
    let s = sign(n);
    LabeledCochain::from_fn(fam.labels.clone(), fam.module.clone(), n, |xs, us| {
        let pus: Vec<&[Scalar]> = (0..n).map(|j| im.get(xs[j], us[j])).collect();
        let mut out = eval(alpha, &pus.iter().map(|v| Arg::Vec(v)).collect::<Vec<_>>());
        for i in 0..n {
            let args: Vec<Arg> = (0..n).map(|j| if j == i { Arg::Basis(us[j]) } else { Arg::Vec(pus[j]) }).collect();
            let b = eval(&beta[i], &args);
            if !crate::linear::is_zero(&b) {
                axpy(&mut out, &Scalar::from_int(-1), &fam.apply(xs[i], &b));
            }
        }
        out.iter().map(|v| v * &s).collect()
    })
}

/// `h(α, β)_{x1..xn}(u..) = (-1)^n { α(P u..) - Σ_i P_{x_i} β(P u.., u_i, ..P u) }`.
pub fn h_map(f: &OperatorFamily, alpha: &DenseTensor, beta: &[DenseTensor]) -> Result<LabeledCochain> {
    require_mc(f)?;
    let n = beta.len();
    let (da, dm) = (f.adim(), f.mdim());
    if n == 0 || alpha.shape() != [vec![da; n], vec![da]].concat().as_slice() {
        return Err(Error::Shape(format!("α of arity {n} expected over A of dim {da}")));
    }
    for (p, b) in beta.iter().enumerate() {
        if b.shape() != mixed_shape(da, dm, n, p + 1).as_slice() {
            return Err(Error::Shape(format!("β summand {} has shape {:?}", p + 1, b.shape())));
        }
    }
    Ok(h_map_with(&Images::new(f), alpha, beta))
}

/// `(α, β, γ)` in `Hom(A^⊗n, A) ⊕ Hom(𝒜^{n-1,1}, M) ⊕ g^{n-1}`; degree one
/// carries no `γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedCochain {
    pub alpha: DenseTensor,
    pub beta: Vec<DenseTensor>,
    pub gamma: Option<LabeledCochain>,
}

/// `dim C^n` of the mixed complex; zero in degree zero.
pub fn mrrba_dim(a: usize, m: usize, q: usize, n: usize) -> usize {
    match n {
        0 => 0,
        1 => a * a + m * m,
        _ => a.pow(n as u32 + 1) + n * a.pow(n as u32 - 1) * m * m + q.pow(n as u32 - 1) * m.pow(n as u32 - 1) * a,
    }
}

impl MixedCochain {
    pub fn degree(&self) -> usize {
        self.beta.len()
    }

    pub fn zero(f: &OperatorFamily, n: usize) -> Result<Self> {
        let v = vec![Scalar::zero(); mrrba_dim(f.adim(), f.mdim(), f.q(), n)];
        Self::from_vector(f, n, &v)
    }

    pub fn from_vector(f: &OperatorFamily, n: usize, v: &[Scalar]) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, range: "n ≥ 1".into() });
        }
        let (da, dm) = (f.adim(), f.mdim());
        let dim = mrrba_dim(da, dm, f.q(), n);
        if v.len() != dim {
            return Err(Error::Shape(format!("degree {n} mixed cochain has {dim} coordinates, found {}", v.len())));
        }
        let mut rest = v;
        let mut take = |shape: &[usize]| -> Result<DenseTensor> {
            let len: usize = shape.iter().product();
            let (head, tail) = rest.split_at(len);
            rest = tail;
            Ok(DenseTensor::from_entries(shape, head.to_vec())?)
        };
        let alpha = take(&[vec![da; n], vec![da]].concat())?;
        let beta = (1..=n).map(|p| take(&mixed_shape(da, dm, n, p))).collect::<Result<Vec<_>>>()?;
        let gamma = if n >= 2 {
            Some(LabeledCochain::from_vector(f.labels.clone(), f.module.clone(), n - 1, rest)?)
        } else {
            None
        };
        Ok(MixedCochain { alpha, beta, gamma })
    }

    pub fn to_vector(&self) -> Vector {
        let mut v: Vector = self.alpha.entries().to_vec();
        for b in &self.beta {
            v.extend_from_slice(b.entries());
        }
        if let Some(g) = &self.gamma {
            v.extend(g.to_vector());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.iter().all(DenseTensor::is_zero) && self.gamma.as_ref().is_none_or(|g| g.is_zero())
    }
}

/// Shared data for repeated evaluation of the mixed differential.
pub(crate) struct MixedContext {
    pub(crate) images: Images,
    adjoint: Bimodule,
}

impl MixedContext {
    pub(crate) fn new(f: &OperatorFamily) -> Self {
        MixedContext { images: Images::new(f), adjoint: adjoint_bimodule(f.algebra()) }
    }

    pub(crate) fn delta(&self, c: &MixedCochain) -> MixedCochain {
        let fam = &self.images.family;
        let alpha = hochschild_delta(fam.algebra(), &self.adjoint, &c.alpha).expect("α shape");
        let beta = hochschild_delta_alpha(&fam.module, &c.alpha, &c.beta).expect("β shapes");
        let mut gamma = h_map_with(&self.images, &c.alpha, &c.beta);
        if let Some(g) = &c.gamma {
            gamma = gamma.add(&delta_op_with(&self.images, g)).expect("same context");
        }
        MixedCochain { alpha, beta, gamma: Some(gamma) }
    }
}

/// `δ(α, β, γ) = (δ_Hoch α, δ^α β, δ_P γ + h(α, β))`.
pub fn delta_mrrba(f: &OperatorFamily, c: &MixedCochain) -> Result<MixedCochain> {
    require_mc(f)?;
    let n = c.degree();
    let expect = MixedCochain::zero(f, n)?;
    let shapes_match = expect.alpha.shape() == c.alpha.shape()
        && expect.beta.iter().zip(&c.beta).all(|(a, b)| a.shape() == b.shape())
        && match (&expect.gamma, &c.gamma) {
            (None, None) => true,
            (Some(e), Some(g)) => e.same_context(g) && e.degree() == g.degree(),
            _ => false,
        };
    if !shapes_match {
        return Err(Error::Shape(format!("mixed cochain does not match degree {n} over this family")));
    }
    Ok(MixedContext::new(f).delta(c))
}
