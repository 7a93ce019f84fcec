//! Formal one-parameter deformations truncated at a fixed order, for
//! matching relative Rota-Baxter algebras and matching dendriform algebras.
//!
//! A deformation is stored as its coefficient lists; index 0 is the base
//! structure. Every check works coefficient by coefficient in `t`.

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};

use crate::cochain::{delta_mrrba, require_mc, LabeledCochain, MixedCochain};
use crate::dendriform::{require_mda, MatchingDendriform};
use crate::error::{Error, Result};
use crate::linear::{add_into, bilinear, build_tensor, unit, zeros, LinearMap, Vector};
use crate::operad::{delta_mda, multiplication_from_mda, OperadElement};
use crate::operators::OperatorFamily;
use crate::report::CertificateReport;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 2;

/// `(μ_t, l_t, r_t, {P_t,x})` modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MrrbaDeformation {
    pub base: OperatorFamily,
    pub mu: Vec<DenseTensor>,
    pub left: Vec<DenseTensor>,
    pub right: Vec<DenseTensor>,
    /// `operators[n][x]` is the order-`n` coefficient of the operator for
    /// label `x`.
    pub operators: Vec<Vec<LinearMap>>,
}

fn shape_error(what: &str, expected: &[usize], found: &[usize]) -> Error {
    Error::Shape(format!("{what}: expected shape {expected:?}, found {found:?}"))
}

fn check_series(what: &str, series: &[DenseTensor], order: usize, shape: &[usize], base: &DenseTensor) -> Result<()> {
    if series.len() != order + 1 {
        return Err(Error::Invalid(format!("{what} has {} coefficients, expected {}", series.len(), order + 1)));
    }
    if let Some(t) = series.iter().find(|t| t.shape() != shape) {
        return Err(shape_error(what, shape, t.shape()));
    }
    if &series[0] != base {
        return Err(Error::Invalid(format!("{what}: order-0 coefficient differs from the base structure")));
    }
    Ok(())
}

impl MrrbaDeformation {
    pub fn new(
        base: OperatorFamily,
        mu: Vec<DenseTensor>,
        left: Vec<DenseTensor>,
        right: Vec<DenseTensor>,
        operators: Vec<Vec<LinearMap>>,
    ) -> Result<Self> {
        let order = mu.len().checked_sub(1).ok_or_else(|| Error::Invalid("empty deformation".into()))?;
        let (da, dm) = (base.adim(), base.mdim());
        let module = &base.module;
        check_series("mu", &mu, order, &[da, da, da], module.algebra.mult())?;
        check_series("left action", &left, order, &[da, dm, dm], module.left())?;
        check_series("right action", &right, order, &[dm, da, dm], module.right())?;
        if operators.len() != order + 1 {
            return Err(Error::Invalid(format!("operators have {} coefficients, expected {}", operators.len(), order + 1)));
        }
        for maps in &operators {
            if maps.len() != base.q() {
                return Err(Error::LabelSetMismatch);
            }
            for p in maps {
                p.check_shape(da, dm)?;
            }
        }
        if operators[0] != base.maps {
            return Err(Error::Invalid("operators: order-0 coefficient differs from the base family".into()));
        }
        Ok(MrrbaDeformation { base, mu, left, right, operators })
    }

    /// All higher coefficients zero.
    pub fn constant(base: &OperatorFamily, order: usize) -> Self {
        let (da, dm, q) = (base.adim(), base.mdim(), base.q());
        let module = &base.module;
        let series = |t0: &DenseTensor| {
            let mut v = vec![t0.clone()];
            v.extend((0..order).map(|_| DenseTensor::zeros(t0.shape())));
            v
        };
        let mut operators = vec![base.maps.clone()];
        operators.extend((0..order).map(|_| vec![LinearMap::zero(da, dm); q]));
        MrrbaDeformation {
            base: base.clone(),
            mu: series(module.algebra.mult()),
            left: series(module.left()),
            right: series(module.right()),
            operators,
        }
    }

    pub fn order(&self) -> usize {
        self.mu.len() - 1
    }
}

fn sum_orders(n: usize, mut term: impl FnMut(usize, usize) -> Vector, dim: usize) -> Vector {
    let mut out = zeros(dim);
    for i in 0..=n {
        add_into(&mut out, &term(i, n - i));
    }
    out
}

/// Coefficient equations of the deformation for every order `≤ max_order`.
fn check_mrrba_upto(d: &MrrbaDeformation, max_order: usize) -> CertificateReport {
    let mut rep = CertificateReport::new("mrrba-deformation");
    let module = &d.base.module;
    let alg = &module.algebra;
    let (da, dm, q) = (d.base.adim(), d.base.mdim(), d.base.q());
    let labels = &d.base.labels;
    let an = |i: usize| alg.name(i).to_string();
    let mn = |i: usize| module.name(i).to_string();
    // images[n][x][u] = P_{n,x}(u)
    let images: Vec<Vec<Vec<Vector>>> =
        d.operators.iter().map(|maps| maps.iter().map(|p| (0..dm).map(|u| p.column(u)).collect()).collect()).collect();
    let ea = |i: usize| unit(da, i);
    let em = |i: usize| unit(dm, i);
    for n in 0..=max_order.min(d.order()) {
        let ord = format!("order={n}");
        for a in 0..da {
            for b in 0..da {
                let mu_ab: Vec<Vector> = d.mu.iter().map(|m| m.fiber(&[a, b]).to_vec()).collect();
                for c in 0..da {
                    let lhs = sum_orders(n, |i, j| bilinear(&d.mu[i], &mu_ab[j], &ea(c)), da);
                    let rhs = sum_orders(n, |i, j| bilinear(&d.mu[i], &ea(a), d.mu[j].fiber(&[b, c])), da);
                    rep.compare("associativity", vec![ord.clone(), an(a), an(b), an(c)], lhs, rhs);
                }
                for u in 0..dm {
                    let lhs = sum_orders(n, |i, j| bilinear(&d.left[i], &mu_ab[j], &em(u)), dm);
                    let rhs = sum_orders(n, |i, j| bilinear(&d.left[i], &ea(a), d.left[j].fiber(&[b, u])), dm);
                    rep.compare("left-action", vec![ord.clone(), an(a), an(b), mn(u)], lhs, rhs);
                    let lhs = sum_orders(n, |i, j| bilinear(&d.right[i], d.right[j].fiber(&[u, a]), &ea(b)), dm);
                    let rhs = sum_orders(n, |i, j| bilinear(&d.right[i], &em(u), &mu_ab[j]), dm);
                    rep.compare("right-action", vec![ord.clone(), mn(u), an(a), an(b)], lhs, rhs);
                }
            }
            for u in 0..dm {
                for b in 0..da {
                    let lhs = sum_orders(n, |i, j| bilinear(&d.right[i], d.left[j].fiber(&[a, u]), &ea(b)), dm);
                    let rhs = sum_orders(n, |i, j| bilinear(&d.left[i], &ea(a), d.right[j].fiber(&[u, b])), dm);
                    rep.compare("middle-action", vec![ord.clone(), an(a), mn(u), an(b)], lhs, rhs);
                }
            }
        }
        for x in 0..q {
            for y in 0..q {
                for u in 0..dm {
                    for v in 0..dm {
                        let mut lhs = zeros(da);
                        let mut rhs = zeros(da);
                        for i in 0..=n {
                            for j in 0..=n - i {
                                let k = n - i - j;
                                add_into(&mut lhs, &bilinear(&d.mu[i], &images[j][x][u], &images[k][y][v]));
                                let ru = bilinear(&d.right[j], &em(u), &images[k][y][v]);
                                add_into(&mut rhs, &d.operators[i][x].apply(&ru));
                                let lv = bilinear(&d.left[j], &images[k][x][u], &em(v));
                                add_into(&mut rhs, &d.operators[i][y].apply(&lv));
                            }
                        }
                        let index = vec![ord.clone(), format!("x={}", labels.name(x)), format!("y={}", labels.name(y)), mn(u), mn(v)];
                        rep.compare("matching-rota-baxter", index, lhs, rhs);
                    }
                }
            }
        }
    }
    rep
}

/// Every coefficient equation up to the truncation order.
pub fn check_mrrba_deformation(d: &MrrbaDeformation) -> CertificateReport {
    check_mrrba_upto(d, d.order())
}

/// `φ ∈ Hom(A, A)` as the tensor `[a] + [a]` of a degree-one cochain.
fn map_tensor(m: &DenseMatrix) -> DenseTensor {
    build_tensor(&[m.cols()], m.rows(), |idx| m.column(idx[0]))
}

fn tensor_map(t: &DenseTensor) -> LinearMap {
    let (src, tgt) = (t.shape()[0], t.shape()[1]);
    let mut m = DenseMatrix::zeros(tgt, src);
    for j in 0..src {
        for (i, v) in t.fiber(&[j]).iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    LinearMap::new(m)
}

fn operator_cochain(base: &OperatorFamily, maps: &[LinearMap]) -> LabeledCochain {
    LabeledCochain::from_fn(base.labels.clone(), base.module.clone(), 1, |xs, us| maps[xs[0]].column(us[0]))
}

/// `(μ_1, β_1, P_1)` with `β_1` packed as (right action, left action) in
/// module-slot order; zero when the deformation has order 0.
fn infinitesimal(d: &MrrbaDeformation) -> MixedCochain {
    if d.order() == 0 {
        return MixedCochain::zero(&d.base, 2).expect("degree two");
    }
    MixedCochain {
        alpha: d.mu[1].clone(),
        beta: vec![d.right[1].clone(), d.left[1].clone()],
        gamma: Some(operator_cochain(&d.base, &d.operators[1])),
    }
}

fn cocycle_report(checker: &str, f: &OperatorFamily, c: &MixedCochain) -> Result<CertificateReport> {
    let dc = delta_mrrba(f, c)?;
    let mut rep = CertificateReport::new(checker);
    rep.vanish("hochschild", vec!["alpha".into()], dc.alpha.into_entries());
    for (p, b) in dc.beta.into_iter().enumerate() {
        rep.vanish("bimodule", vec![format!("module-slot={}", p + 1)], b.into_entries());
    }
    rep.vanish("operator", vec!["gamma".into()], dc.gamma.map(|g| g.to_vector()).unwrap_or_default());
    Ok(rep)
}

/// The infinitesimal and its cocycle certificate. Fails unless the
/// deformation equations hold at orders 0 and 1.
pub fn extract_infinitesimal(d: &MrrbaDeformation) -> Result<(MixedCochain, CertificateReport)> {
    require_mc(&d.base)?;
    let rep = check_mrrba_upto(d, 1);
    if !rep.passed() {
        return Err(Error::DeformationInvalid(Box::new(rep)));
    }
    let c = infinitesimal(d);
    let cert = cocycle_report("infinitesimal-cocycle", &d.base, &c)?;
    Ok((c, cert))
}

/// The order-1 deformation with infinitesimal `z`.
pub fn cocycle_to_deformation(f: &OperatorFamily, z: &MixedCochain) -> Result<MrrbaDeformation> {
    require_mc(f)?;
    if z.degree() != 2 {
        return Err(Error::DegreeMismatch(format!("infinitesimals have degree 2, found {}", z.degree())));
    }
    let rep = cocycle_report("cocycle", f, z)?;
    if !rep.passed() {
        return Err(Error::NotCocycle(Box::new(rep)));
    }
    let mut d = MrrbaDeformation::constant(f, 1);
    d.mu[1] = z.alpha.clone();
    d.right[1] = z.beta[0].clone();
    d.left[1] = z.beta[1].clone();
    let gamma = z.gamma.as_ref().expect("degree two carries γ");
    d.operators[1] = (0..f.q()).map(|x| tensor_map(gamma.component(&[x]))).collect();
    Ok(d)
}

fn identity_series(dim: usize, maps: &[DenseMatrix], order: usize) -> Result<Vec<DenseMatrix>> {
    let mut v: Vec<DenseMatrix> = maps.iter().take(order + 1).cloned().collect();
    if v.is_empty() || v[0] != DenseMatrix::identity(dim) {
        return Err(Error::Invalid("the order-0 coefficient of an equivalence must be the identity".into()));
    }
    if let Some(m) = v.iter().find(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Shape(format!("expected {dim}x{dim} coefficients, found {}x{}", m.rows(), m.cols())));
    }
    v.resize(order + 1, DenseMatrix::zeros(dim, dim));
    Ok(v)
}

/// The constant series `id`.
fn identity_padded(dim: usize, order: usize) -> Vec<DenseMatrix> {
    let mut v = vec![DenseMatrix::identity(dim)];
    v.resize(order + 1, DenseMatrix::zeros(dim, dim));
    v
}

/// Inverse of a series with identity constant term, modulo `t^{N+1}`.
fn series_inverse(s: &[DenseMatrix]) -> Vec<DenseMatrix> {
    let dim = s[0].rows();
    let mut inv = vec![DenseMatrix::identity(dim)];
    for n in 1..s.len() {
        let mut acc = DenseMatrix::zeros(dim, dim);
        for i in 1..=n {
            acc = acc.add(&s[i].mul(&inv[n - i]).expect("square"));
        }
        inv.push(acc.scale(&Scalar::from_int(-1)));
    }
    inv
}

fn series_product(a: &[DenseMatrix], b: &[DenseMatrix], n: usize) -> DenseMatrix {
    let mut acc = DenseMatrix::zeros(a[0].rows(), b[0].cols());
    for i in 0..=n {
        acc = acc.add(&a[i].mul(&b[n - i]).expect("composable"));
    }
    acc
}

/// Coefficient `n` of `out_t(T_t(in1_t ·, in2_t ·))` on basis inputs.
fn transform_coefficient(t: &[DenseTensor], out: &[DenseMatrix], in1: &[DenseMatrix], in2: &[DenseMatrix], n: usize) -> DenseTensor {
    let s = t[0].shape();
    build_tensor(&s[..2], s[2], |idx| {
        let mut acc = zeros(s[2]);
        for i in 0..=n {
            for j in 0..=n - i {
                for k in 0..=n - i - j {
                    let l = n - i - j - k;
                    let v = bilinear(&t[j], &in1[k].column(idx[0]), &in2[l].column(idx[1]));
                    add_into(&mut acc, &out[i].apply(&v));
                }
            }
        }
        acc
    })
}

/// The deformation `d'` for which `(φ_t, ψ_t)` is an isomorphism `d -> d'`.
pub fn transport(d: &MrrbaDeformation, phi: &[DenseMatrix], psi: &[DenseMatrix]) -> Result<MrrbaDeformation> {
    let n = d.order();
    let phi = identity_series(d.base.adim(), phi, n)?;
    let psi = identity_series(d.base.mdim(), psi, n)?;
    let (phi_inv, psi_inv) = (series_inverse(&phi), series_inverse(&psi));
    let mut out = d.clone();
    for k in 1..=n {
        out.mu[k] = transform_coefficient(&d.mu, &phi, &phi_inv, &phi_inv, k);
        out.left[k] = transform_coefficient(&d.left, &psi, &phi_inv, &psi_inv, k);
        out.right[k] = transform_coefficient(&d.right, &psi, &psi_inv, &phi_inv, k);
        for x in 0..d.base.q() {
            let p: Vec<DenseMatrix> = d.operators.iter().map(|maps| maps[x].matrix.clone()).collect();
            let mut acc = DenseMatrix::zeros(d.base.adim(), d.base.mdim());
            for i in 0..=k {
                acc = acc.add(&phi[i].mul(&series_product(&p, &psi_inv, k - i)).expect("composable"));
            }
            out.operators[k][x] = LinearMap::new(acc);
        }
    }
    Ok(out)
}

/// Checks that `(φ_t, ψ_t)` is a morphism `d -> d'` coefficientwise. When it
/// holds at order 1, also checks that the infinitesimals differ by
/// `δ(φ_1, ψ_1)`.
pub fn check_equivalence(d: &MrrbaDeformation, other: &MrrbaDeformation, phi: &[DenseMatrix], psi: &[DenseMatrix]) -> Result<CertificateReport> {
    if !d.base.same_context(&other.base) || d.base.maps != other.base.maps {
        return Err(Error::ContextMismatch);
    }
    if d.order() != other.order() {
        return Err(Error::Invalid(format!("orders {} and {} differ", d.order(), other.order())));
    }
    let order = d.order();
    let (da, dm, q) = (d.base.adim(), d.base.mdim(), d.base.q());
    let phi = identity_series(da, phi, order)?;
    let psi = identity_series(dm, psi, order)?;
    let module = &d.base.module;
    let (an, mn) = (|i: usize| module.algebra.name(i).to_string(), |i: usize| module.name(i).to_string());
    let mut rep = CertificateReport::new("mrrba-equivalence");
    for n in 0..=order {
        let ord = format!("order={n}");
        // φ_t ∘ μ_t = μ'_t ∘ (φ_t ⊗ φ_t), and the same for both actions
        let pairs: [(&str, &[DenseTensor], &[DenseTensor], &[DenseMatrix], &[DenseMatrix], &[DenseMatrix]); 3] = [
            ("algebra-morphism", &d.mu, &other.mu, &phi, &phi, &phi),
            ("left-action", &d.left, &other.left, &psi, &phi, &psi),
            ("right-action", &d.right, &other.right, &psi, &psi, &phi),
        ];
        for (name, src, dst, out, in1, in2) in pairs {
            let shape = src[0].shape();
            let (id1, id2) = (identity_padded(shape[0], order), identity_padded(shape[1], order));
            let out_id = identity_padded(shape[2], order);
            let lhs = transform_coefficient(src, out, &id1, &id2, n);
            let rhs = transform_coefficient(dst, &out_id, in1, in2, n);
            for s in 0..shape[0] {
                for t in 0..shape[1] {
                    let names = match name {
                        "algebra-morphism" => vec![an(s), an(t)],
                        "left-action" => vec![an(s), mn(t)],
                        _ => vec![mn(s), an(t)],
                    };
                    let index = [vec![ord.clone()], names].concat();
                    rep.compare(name, index, lhs.fiber(&[s, t]).to_vec(), rhs.fiber(&[s, t]).to_vec());
                }
            }
        }
        for x in 0..q {
            let p: Vec<DenseMatrix> = d.operators.iter().map(|maps| maps[x].matrix.clone()).collect();
            let p2: Vec<DenseMatrix> = other.operators.iter().map(|maps| maps[x].matrix.clone()).collect();
            let lhs = series_product(&phi, &p, n);
            let rhs = series_product(&p2, &psi, n);
            for u in 0..dm {
                let index = vec![ord.clone(), format!("x={}", d.base.labels.name(x)), mn(u)];
                rep.compare("operator-intertwining", index, lhs.column(u), rhs.column(u));
            }
        }
        // invertibility modulo t^{n+1}
        for (name, s) in [("phi-invertible", &phi), ("psi-invertible", &psi)] {
            let prod = series_product(s, &series_inverse(s), n);
            let expect = if n == 0 { DenseMatrix::identity(s[0].rows()) } else { DenseMatrix::zeros(s[0].rows(), s[0].rows()) };
            rep.compare(name, vec![ord.clone()], prod.entries().to_vec(), expect.entries().to_vec());
        }
    }
    let low_order_ok = rep.failures.iter().all(|f| f.index.first().is_none_or(|o| o != "order=0" && o != "order=1"));
    if order >= 1 && low_order_ok {
        let diff_lhs = infinitesimal(d).to_vector();
        let diff_rhs = infinitesimal(other).to_vector();
        let diff: Vector = diff_lhs.iter().zip(&diff_rhs).map(|(a, b)| a - b).collect();
        let cob = MixedCochain { alpha: map_tensor(&phi[1]), beta: vec![map_tensor(&psi[1])], gamma: None };
        rep.compare("coboundary", vec!["order=1".into()], diff, delta_mrrba(&d.base, &cob)?.to_vector());
    }
    Ok(rep)
}

/// `{≺_t,x, ≻_t,x}` modulo `t^{N+1}`; `prec[n][x]` is the order-`n`
/// coefficient for label `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct MdaDeformation {
    pub base: MatchingDendriform,
    pub prec: Vec<Vec<DenseTensor>>,
    pub succ: Vec<Vec<DenseTensor>>,
}

impl MdaDeformation {
    pub fn new(base: MatchingDendriform, prec: Vec<Vec<DenseTensor>>, succ: Vec<Vec<DenseTensor>>) -> Result<Self> {
        if prec.is_empty() || prec.len() != succ.len() {
            return Err(Error::Invalid("prec and succ need the same nonzero number of coefficients".into()));
        }
        let d = base.dim();
        let shape = [d, d, d];
        for level in prec.iter().chain(&succ) {
            if level.len() != base.q() {
                return Err(Error::LabelSetMismatch);
            }
            if let Some(t) = level.iter().find(|t| t.shape() != shape) {
                return Err(shape_error("dendriform coefficient", &shape, t.shape()));
            }
        }
        for x in 0..base.q() {
            if &prec[0][x] != base.prec_tensor(x) || &succ[0][x] != base.succ_tensor(x) {
                return Err(Error::Invalid("order-0 coefficient differs from the base structure".into()));
            }
        }
        Ok(MdaDeformation { base, prec, succ })
    }

    pub fn constant(base: &MatchingDendriform, order: usize) -> Self {
        let q = base.q();
        let d = base.dim();
        let zero = vec![DenseTensor::zeros(&[d, d, d]); q];
        let mut prec = vec![(0..q).map(|x| base.prec_tensor(x).clone()).collect::<Vec<_>>()];
        let mut succ = vec![(0..q).map(|x| base.succ_tensor(x).clone()).collect::<Vec<_>>()];
        prec.extend((0..order).map(|_| zero.clone()));
        succ.extend((0..order).map(|_| zero.clone()));
        MdaDeformation { base: base.clone(), prec, succ }
    }

    pub fn order(&self) -> usize {
        self.prec.len() - 1
    }

    /// The order-`n` coefficients as a (not necessarily dendriform) structure.
    fn coefficient(&self, n: usize) -> MatchingDendriform {
        let basis = self.base.basis_names().to_vec();
        MatchingDendriform::new(basis, self.base.labels.clone(), self.prec[n].clone(), self.succ[n].clone()).expect("shapes checked")
    }
}

fn check_mda_upto(d: &MdaDeformation, max_order: usize) -> CertificateReport {
    let mut rep = CertificateReport::new("mda-deformation");
    let dim = d.base.dim();
    let q = d.base.q();
    let e = |i: usize| unit(dim, i);
    let pr = |n: usize, x: usize, a: &[Scalar], b: &[Scalar]| bilinear(&d.prec[n][x], a, b);
    let sc = |n: usize, x: usize, a: &[Scalar], b: &[Scalar]| bilinear(&d.succ[n][x], a, b);
    for n in 0..=max_order.min(d.order()) {
        for x in 0..q {
            for y in 0..q {
                for a in 0..dim {
                    for b in 0..dim {
                        for c in 0..dim {
                            let (ea, eb, ec) = (e(a), e(b), e(c));
                            let index = vec![
                                format!("order={n}"),
                                format!("x={}", d.base.labels.name(x)),
                                format!("y={}", d.base.labels.name(y)),
                                d.base.name(a).to_string(),
                                d.base.name(b).to_string(),
                                d.base.name(c).to_string(),
                            ];
                            let lhs = sum_orders(n, |i, j| pr(j, y, &pr(i, x, &ea, &eb), &ec), dim);
                            let rhs = sum_orders(
                                n,
                                |i, j| {
                                    let mut v = pr(i, x, &ea, &pr(j, y, &eb, &ec));
                                    add_into(&mut v, &pr(i, y, &ea, &sc(j, x, &eb, &ec)));
                                    v
                                },
                                dim,
                            );
                            rep.compare("prec-prec", index.clone(), lhs, rhs);
                            let lhs = sum_orders(n, |i, j| pr(j, y, &sc(i, x, &ea, &eb), &ec), dim);
                            let rhs = sum_orders(n, |i, j| sc(i, x, &ea, &pr(j, y, &eb, &ec)), dim);
                            rep.compare("succ-prec", index.clone(), lhs, rhs);
                            let lhs = sum_orders(
                                n,
                                |i, j| {
                                    let mut v = sc(j, x, &pr(i, y, &ea, &eb), &ec);
                                    add_into(&mut v, &sc(j, y, &sc(i, x, &ea, &eb), &ec));
                                    v
                                },
                                dim,
                            );
                            let rhs = sum_orders(n, |i, j| sc(i, x, &ea, &sc(j, y, &eb, &ec)), dim);
                            rep.compare("succ-succ", index, lhs, rhs);
                        }
                    }
                }
            }
        }
    }
    rep
}

pub fn check_mda_deformation(d: &MdaDeformation) -> CertificateReport {
    check_mda_upto(d, d.order())
}

fn mda_infinitesimal(d: &MdaDeformation) -> OperadElement {
    if d.order() == 0 {
        return OperadElement::zero(d.base.dim(), d.base.labels.clone(), 2).expect("arity two");
    }
    multiplication_from_mda(&d.coefficient(1))
}

/// `π_1` built from the order-1 coefficients, with its cocycle certificate.
pub fn extract_mda_infinitesimal(d: &MdaDeformation) -> Result<(OperadElement, CertificateReport)> {
    require_mda(&d.base)?;
    let rep = check_mda_upto(d, 1);
    if !rep.passed() {
        return Err(Error::DeformationInvalid(Box::new(rep)));
    }
    let pi = mda_infinitesimal(d);
    let mut cert = CertificateReport::new("mda-infinitesimal-cocycle");
    cert.vanish("cocycle", vec!["arity=3".into()], delta_mda(&d.base, &pi)?.to_vector());
    Ok((pi, cert))
}

/// The order-1 deformation with infinitesimal `π_1`.
pub fn mda_cocycle_to_deformation(base: &MatchingDendriform, pi: &OperadElement) -> Result<MdaDeformation> {
    let dpi = delta_mda(base, pi)?;
    if pi.arity() != 2 {
        return Err(Error::DegreeMismatch(format!("infinitesimals have arity 2, found {}", pi.arity())));
    }
    if !dpi.is_zero() {
        let mut rep = CertificateReport::new("mda-cocycle");
        rep.vanish("cocycle", vec!["arity=3".into()], dpi.to_vector());
        return Err(Error::NotCocycle(Box::new(rep)));
    }
    let mut d = MdaDeformation::constant(base, 1);
    // position 1 keeps the label of ≺, position 2 that of ≻
    d.prec[1] = pi.position(1).to_vec();
    d.succ[1] = pi.position(2).to_vec();
    Ok(d)
}

/// `ψ ∈ Hom(D, D)` as the arity-1 element with that single component.
pub fn lift_endomorphism(base: &MatchingDendriform, psi: &DenseMatrix) -> Result<OperadElement> {
    OperadElement::from_vector(base.dim(), base.labels.clone(), 1, map_tensor(psi).entries())
}

/// The deformation `d'` for which `ψ_t` is an isomorphism `d -> d'`.
pub fn transport_mda(d: &MdaDeformation, psi: &[DenseMatrix]) -> Result<MdaDeformation> {
    let n = d.order();
    let psi = identity_series(d.base.dim(), psi, n)?;
    let inv = series_inverse(&psi);
    let mut out = d.clone();
    for x in 0..d.base.q() {
        let prec: Vec<DenseTensor> = d.prec.iter().map(|l| l[x].clone()).collect();
        let succ: Vec<DenseTensor> = d.succ.iter().map(|l| l[x].clone()).collect();
        for k in 1..=n {
            out.prec[k][x] = transform_coefficient(&prec, &psi, &inv, &inv, k);
            out.succ[k][x] = transform_coefficient(&succ, &psi, &inv, &inv, k);
        }
    }
    Ok(out)
}

/// Checks that `ψ_t` is a morphism `d -> d'` coefficientwise, and at order 1
/// that `π_1 - π'_1 = δ(ψ_1)`.
pub fn check_mda_equivalence(d: &MdaDeformation, other: &MdaDeformation, psi: &[DenseMatrix]) -> Result<CertificateReport> {
    if d.base != other.base {
        return Err(Error::ContextMismatch);
    }
    if d.order() != other.order() {
        return Err(Error::Invalid(format!("orders {} and {} differ", d.order(), other.order())));
    }
    let order = d.order();
    let dim = d.base.dim();
    let psi = identity_series(dim, psi, order)?;
    let id = identity_padded(dim, order);
    let mut rep = CertificateReport::new("mda-equivalence");
    for n in 0..=order {
        for x in 0..d.base.q() {
            for (name, src, dst) in [("prec-morphism", &d.prec, &other.prec), ("succ-morphism", &d.succ, &other.succ)] {
                let s: Vec<DenseTensor> = src.iter().map(|l| l[x].clone()).collect();
                let t: Vec<DenseTensor> = dst.iter().map(|l| l[x].clone()).collect();
                let lhs = transform_coefficient(&s, &psi, &id, &id, n);
                let rhs = transform_coefficient(&t, &id, &psi, &psi, n);
                for a in 0..dim {
                    for b in 0..dim {
                        let index = vec![format!("order={n}"), format!("x={}", d.base.labels.name(x)), d.base.name(a).into(), d.base.name(b).into()];
                        rep.compare(name, index, lhs.fiber(&[a, b]).to_vec(), rhs.fiber(&[a, b]).to_vec());
                    }
                }
            }
        }
    }
    if order >= 1 && rep.passed() {
        let diff = mda_infinitesimal(d).sub(&mda_infinitesimal(other))?;
        let cob = delta_mda(&d.base, &lift_endomorphism(&d.base, &psi[1])?)?;
        rep.compare("coboundary", vec!["order=1".into()], diff.to_vector(), cob.to_vector());
    }
    Ok(rep)
}
