//! Operator families `{P_x : M -> A}`, the matching identity, r-matrices and
//! the constructions that produce operator families.

use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};

use crate::algebra::{adjoint_bimodule, check_algebra_morphism, coadjoint_bimodule, Algebra, Bimodule};
use crate::error::{require, Error, Result};
use crate::labels::LabelSet;
use crate::linear::{add, unit, zeros, LinearMap, Vector};
use crate::report::CertificateReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorFamily {
    pub labels: LabelSet,
    pub module: Arc<Bimodule>,
    pub maps: Vec<LinearMap>,
}

impl OperatorFamily {
    pub fn new(labels: LabelSet, module: Arc<Bimodule>, maps: Vec<LinearMap>) -> Result<Self> {
        if maps.len() != labels.len() {
            return Err(Error::Shape(format!("{} labels but {} maps", labels.len(), maps.len())));
        }
        let (a, m) = (module.algebra.dim(), module.dim());
        for p in &maps {
            p.check_shape(a, m)?;
        }
        Ok(OperatorFamily { labels, module, maps })
    }

    pub fn zero(labels: LabelSet, module: Arc<Bimodule>) -> Self {
        let (a, m) = (module.algebra.dim(), module.dim());
        let maps = vec![LinearMap::zero(a, m); labels.len()];
        OperatorFamily { labels, module, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.module.algebra
    }

    pub fn q(&self) -> usize {
        self.labels.len()
    }

    pub fn adim(&self) -> usize {
        self.module.algebra.dim()
    }

    pub fn mdim(&self) -> usize {
        self.module.dim()
    }

    pub fn apply(&self, x: usize, u: &[Scalar]) -> Vector {
        self.maps[x].apply(u)
    }

    /// `P_x(e_j)`.
    pub fn image(&self, x: usize, j: usize) -> Vector {
        self.maps[x].column(j)
    }

    /// The one-label family for label `x`.
    pub fn single(&self, x: usize) -> OperatorFamily {
        OperatorFamily {
            labels: LabelSet::new([self.labels.name(x)]).expect("one label"),
            module: self.module.clone(),
            maps: vec![self.maps[x].clone()],
        }
    }

    pub fn scale_label(&self, x: usize, c: &Scalar) -> OperatorFamily {
        let mut f = self.clone();
        f.maps[x] = f.maps[x].scale(c);
        f
    }

    /// Label-wise sum of two families over the same context.
    pub fn sum(&self, other: &OperatorFamily) -> Result<OperatorFamily> {
        if self.labels != other.labels || self.module != other.module {
            return Err(Error::ContextMismatch);
        }
        let maps = self.maps.iter().zip(&other.maps).map(|(p, q)| p.add(q)).collect();
        Ok(OperatorFamily { labels: self.labels.clone(), module: self.module.clone(), maps })
    }

    pub fn same_context(&self, other: &OperatorFamily) -> bool {
        self.labels == other.labels && self.module == other.module
    }

    /// Rewrites the family in new bases: columns of `g` for the algebra and of
    /// `h` for the module, with their inverses.
    pub fn transport(&self, g: &DenseMatrix, g_inv: &DenseMatrix, h: &DenseMatrix, h_inv: &DenseMatrix) -> Result<OperatorFamily> {
        let a = Arc::new(self.algebra().transport(g, g_inv));
        let module = Arc::new(self.module.transport(a, g, h, h_inv));
        let maps = self.maps.iter().map(|p| Ok(LinearMap::new(g_inv.mul(&p.matrix.mul(h)?)?))).collect::<Result<Vec<_>>>()?;
        OperatorFamily::new(self.labels.clone(), module, maps)
    }
}

/// `P_x(u)·P_y(v) = P_x(u·P_y(v)) + P_y(P_x(u)·v)` for all labels and basis pairs.
pub fn check_mrrba(f: &OperatorFamily) -> CertificateReport {
    let mut rep = CertificateReport::new("mrrba");
    let (a, m) = (f.algebra(), &f.module);
    let q = f.q();
    let dm = m.dim();
    let imgs: Vec<Vec<Vector>> = (0..q).map(|x| (0..dm).map(|u| f.image(x, u)).collect()).collect();
    for x in 0..q {
        for y in 0..q {
            for u in 0..dm {
                for v in 0..dm {
                    let (pu, pv) = (&imgs[x][u], &imgs[y][v]);
                    let lhs = a.mul(pu, pv);
                    let t1 = f.apply(x, &m.act_right(&unit(dm, u), pv));
                    let t2 = f.apply(y, &m.act_left(pu, &unit(dm, v)));
                    let index = vec![
                        format!("x={}", f.labels.name(x)),
                        format!("y={}", f.labels.name(y)),
                        m.name(u).to_string(),
                        m.name(v).to_string(),
                    ];
                    rep.compare("matching-rota-baxter", index, lhs, add(&t1, &t2));
                }
            }
        }
    }
    rep
}

/// `P^τ_x = P_{τ(x)}`; `tau[i]` names the image of the `i`-th label.
pub fn relabel(f: &OperatorFamily, tau: &[String]) -> Result<OperatorFamily> {
    if tau.len() != f.q() {
        return Err(Error::Invalid(format!("relabeling needs {} images, got {}", f.q(), tau.len())));
    }
    let maps = tau.iter().map(|t| f.labels.index_of(t).map(|k| f.maps[k].clone())).collect::<Result<_>>()?;
    Ok(OperatorFamily { labels: f.labels.clone(), module: f.module.clone(), maps })
}

/// `{P, -P}` with labels `+` and `-`.
pub fn family_from_rb_pair(module: Arc<Bimodule>, p: LinearMap) -> Result<OperatorFamily> {
    let single = OperatorFamily::new(LabelSet::new(["+"])?, module.clone(), vec![p.clone()])?;
    require(check_mrrba(&single))?;
    let neg = p.scale(&Scalar::from_int(-1));
    OperatorFamily::new(LabelSet::new(["+", "-"])?, module, vec![p, neg])
}

/// `P_x(u) = P(a_x · u)` for central elements `a_x`.
pub fn family_from_central_elements(
    module: Arc<Bimodule>,
    p: LinearMap,
    labels: LabelSet,
    elems: Vec<Vector>,
) -> Result<OperatorFamily> {
    let a = module.algebra.clone();
    if elems.len() != labels.len() {
        return Err(Error::Shape(format!("{} labels but {} elements", labels.len(), elems.len())));
    }
    let single = OperatorFamily::new(LabelSet::new(["P"])?, module.clone(), vec![p.clone()])?;
    require(check_mrrba(&single))?;
    let dm = module.dim();
    let mut maps = Vec::new();
    for (x, e) in elems.iter().enumerate() {
        if e.len() != a.dim() {
            return Err(Error::Shape("central element has the wrong length".into()));
        }
        for b in 0..a.dim() {
            let eb = unit(a.dim(), b);
            if a.mul(e, &eb) != a.mul(&eb, e) {
                return Err(Error::NotCentral { label: labels.name(x).into(), witness: a.name(b).into() });
            }
        }
        let mut mat = DenseMatrix::zeros(a.dim(), dm);
        for u in 0..dm {
            let col = p.apply(&module.act_left(e, &unit(dm, u)));
            for (i, c) in col.into_iter().enumerate() {
                mat.set(i, u, c);
            }
        }
        maps.push(LinearMap::new(mat));
    }
    OperatorFamily::new(labels, module, maps)
}

/// `r^x = sum r^x[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixFamily {
    pub labels: LabelSet,
    pub algebra: Arc<Algebra>,
    pub tensors: Vec<DenseMatrix>,
}

impl RMatrixFamily {
    pub fn new(labels: LabelSet, algebra: Arc<Algebra>, tensors: Vec<DenseMatrix>) -> Result<Self> {
        let d = algebra.dim();
        if tensors.len() != labels.len() || tensors.iter().any(|t| t.rows() != d || t.cols() != d) {
            return Err(Error::Shape(format!("need one {d}x{d} tensor per label")));
        }
        Ok(RMatrixFamily { labels, algebra, tensors })
    }
}

/// Coefficients in `A⊗A⊗A` of `r^y_13 r^x_12 - r^x_12 r^y_23 + r^y_23 r^x_13`.
pub fn aybe_tensor(alg: &Algebra, rx: &DenseMatrix, ry: &DenseMatrix) -> DenseTensor {
    let d = alg.dim();
    let mut t = DenseTensor::zeros(&[d, d, d]);
    let nz = |r: &DenseMatrix| -> Vec<(usize, usize, Scalar)> {
        let mut v = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if !r.get(i, j).is_zero() {
                    v.push((i, j, r.get(i, j).clone()));
                }
            }
        }
        v
    };
    let (nx, ny) = (nz(rx), nz(ry));
    for (a, b, cy) in &ny {
        for (c, dd, cx) in &nx {
            let coef = cy * cx;
            // r^y_(1) r^x_(1) ⊗ r^x_(2) ⊗ r^y_(2)
            for (i, p) in alg.product_basis(*a, *c).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(&[i, *dd, *b], &(&coef * p));
                }
            }
        }
    }
    for (a, b, cx) in &nx {
        for (c, dd, cy) in &ny {
            let coef = cx * cy;
            // - r^x_(1) ⊗ r^x_(2) r^y_(1) ⊗ r^y_(2)
            for (j, p) in alg.product_basis(*b, *c).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(&[*a, j, *dd], &-(&coef * p));
                }
            }
            // + r^x_(1) ⊗ r^y_(1) ⊗ r^y_(2) r^x_(2)
            for (k, p) in alg.product_basis(*dd, *b).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(&[*a, *c, k], &(&coef * p));
                }
            }
        }
    }
    t
}

pub fn check_matching_aybe(r: &RMatrixFamily) -> CertificateReport {
    let mut rep = CertificateReport::new("aybe");
    let alg = &r.algebra;
    let d = alg.dim();
    for x in 0..r.labels.len() {
        for y in 0..r.labels.len() {
            let t = aybe_tensor(alg, &r.tensors[x], &r.tensors[y]);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let index = vec![
                            format!("x={}", r.labels.name(x)),
                            format!("y={}", r.labels.name(y)),
                            alg.name(i).to_string(),
                            alg.name(j).to_string(),
                            alg.name(k).to_string(),
                        ];
                        rep.vanish("matching-aybe", index, vec![t.get(&[i, j, k]).clone()]);
                    }
                }
            }
        }
    }
    rep
}

pub fn check_skew_symmetric(r: &RMatrixFamily) -> CertificateReport {
    let mut rep = CertificateReport::new("skew");
    let alg = &r.algebra;
    for (x, t) in r.tensors.iter().enumerate() {
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let index = vec![format!("x={}", r.labels.name(x)), alg.name(i).to_string(), alg.name(j).to_string()];
                rep.compare("skew-symmetry", index, vec![t.get(i, j).clone()], vec![-t.get(j, i)]);
            }
        }
    }
    rep
}

/// `P_x(u) = sum r^x_(1) · u · r^x_(2)`; the result lies in `A` only when
/// `M` is the adjoint bimodule, so other modules are rejected.
pub fn operators_from_rmatrix(r: &RMatrixFamily, module: Arc<Bimodule>) -> Result<OperatorFamily> {
    if module.algebra != r.algebra || !module.is_adjoint() {
        return Err(Error::NotAdjoint);
    }
    require(check_matching_aybe(r))?;
    let alg = &r.algebra;
    let d = alg.dim();
    let mut maps = Vec::new();
    for t in &r.tensors {
        let mut mat = DenseMatrix::zeros(d, d);
        for u in 0..d {
            let mut col = zeros(d);
            for a in 0..d {
                for b in 0..d {
                    let c = t.get(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    let au = alg.product_basis(a, u).to_vec();
                    let aub = alg.mul_basis_right(&au, b);
                    crate::linear::axpy(&mut col, c, &aub);
                }
            }
            for (i, v) in col.into_iter().enumerate() {
                mat.set(i, u, v);
            }
        }
        maps.push(LinearMap::new(mat));
    }
    OperatorFamily::new(r.labels.clone(), module, maps)
}

/// `P_x(α) = sum α(r^x_(2)) r^x_(1)` on the coadjoint bimodule.
pub fn operators_on_dual(r: &RMatrixFamily) -> Result<(OperatorFamily, CertificateReport)> {
    require(check_skew_symmetric(r))?;
    require(check_matching_aybe(r))?;
    let d = r.algebra.dim();
    let module = Arc::new(coadjoint_bimodule(&r.algebra));
    let mut consistency = CertificateReport::new("dual-operator-forms");
    let mut maps = Vec::new();
    for (x, t) in r.tensors.iter().enumerate() {
        let mut mat = DenseMatrix::zeros(d, d);
        for j in 0..d {
            for i in 0..d {
                mat.set(i, j, t.get(i, j).clone());
            }
            // second form: -sum α(r_(1)) r_(2), so δ_j ↦ -sum_b r[j][b] e_b
            let first = mat.column(j);
            let second: Vector = (0..d).map(|b| -t.get(j, b)).collect();
            let index = vec![format!("x={}", r.labels.name(x)), module.name(j).to_string()];
            consistency.compare("two-forms-agree", index, first, second);
        }
        maps.push(LinearMap::new(mat));
    }
    Ok((OperatorFamily::new(r.labels.clone(), module, maps)?, consistency))
}

/// The algebra `M_P` with `u ⋆ v = P(u)·v + u·P(v)` and the `M_P`-bimodule on
/// `A` with `l̄(u,a) = P(u)·a - P(u·a)` and `r̄(a,u) = a·P(u) - P(a·u)`.
pub fn star_product(f: &OperatorFamily) -> Result<(Arc<Algebra>, Bimodule)> {
    if f.q() != 1 {
        return Err(Error::MultiLabelNotSupported);
    }
    let m = &f.module;
    let a = f.algebra();
    let (da, dm) = (a.dim(), m.dim());
    let mut mult = DenseTensor::zeros(&[dm, dm, dm]);
    for u in 0..dm {
        for v in 0..dm {
            let s = add(&m.act_left(&f.image(0, u), &unit(dm, v)), &m.act_right(&unit(dm, u), &f.image(0, v)));
            mult.fiber_mut(&[u, v]).clone_from_slice(&s);
        }
    }
    let mp = Arc::new(Algebra::new(m.basis_names().to_vec(), mult)?);
    let mut left = DenseTensor::zeros(&[dm, da, da]);
    let mut right = DenseTensor::zeros(&[da, dm, da]);
    for u in 0..dm {
        for b in 0..da {
            let pu = f.image(0, u);
            let l = crate::linear::sub(&a.mul(&pu, &unit(da, b)), &f.apply(0, m.right_basis(u, b)));
            left.fiber_mut(&[u, b]).clone_from_slice(&l);
            let r = crate::linear::sub(&a.mul(&unit(da, b), &pu), &f.apply(0, m.left_basis(b, u)));
            right.fiber_mut(&[b, u]).clone_from_slice(&r);
        }
    }
    let bim = Bimodule::new(mp.clone(), a.basis_names().to_vec(), left, right)?;
    Ok((mp, bim))
}

/// Morphism of matching relative Rota-Baxter algebras: `φ` multiplicative,
/// `ψ` intertwines both actions, and `φ ∘ P_x = P'_x ∘ ψ`.
pub fn check_morphism_pair(
    phi: &LinearMap,
    psi: &LinearMap,
    src: &OperatorFamily,
    dst: &OperatorFamily,
) -> Result<CertificateReport> {
    if src.labels != dst.labels {
        return Err(Error::LabelSetMismatch);
    }
    phi.check_shape(dst.adim(), src.adim())?;
    psi.check_shape(dst.mdim(), src.mdim())?;
    let mut rep = check_algebra_morphism(phi, src.algebra(), dst.algebra());
    rep.checker = "morphism".into();
    let (ma, mb) = (&src.module, &dst.module);
    let (da, dm) = (src.adim(), src.mdim());
    for i in 0..da {
        for u in 0..dm {
            let index = vec![src.algebra().name(i).to_string(), ma.name(u).to_string()];
            let lhs = psi.apply(ma.left_basis(i, u));
            let rhs = mb.act_left(&phi.column(i), &psi.column(u));
            rep.compare("left-action", index.clone(), lhs, rhs);
            let lhs = psi.apply(ma.right_basis(u, i));
            let rhs = mb.act_right(&psi.column(u), &phi.column(i));
            rep.compare("right-action", index, lhs, rhs);
        }
    }
    for x in 0..src.q() {
        for u in 0..dm {
            let lhs = phi.apply(&src.image(x, u));
            let rhs = dst.apply(x, &psi.column(u));
            rep.compare("operator", vec![format!("x={}", src.labels.name(x)), ma.name(u).to_string()], lhs, rhs);
        }
    }
    Ok(rep)
}

/// Family over the adjoint bimodule of `a` built from explicit matrices.
pub fn adjoint_family(a: Arc<Algebra>, labels: LabelSet, maps: Vec<DenseMatrix>) -> Result<OperatorFamily> {
    let module = Arc::new(adjoint_bimodule(&a));
    OperatorFamily::new(labels, module, maps.into_iter().map(LinearMap::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use crate::fixtures;
    use matchrb_linalg::q;

    #[test]
    fn p1_passes() {
        assert!(check_mrrba(&fixtures::p1()).passed());
    }

    #[test]
    fn per_label_scaling_preserves_the_identity() {
        // every term is bilinear in (P_x, P_y), so scalings are symmetries
        let f = fixtures::p1().scale_label(1, &q(2, 1));
        assert!(check_mrrba(&f).passed());
    }

    #[test]
    fn additive_perturbation_fails_on_mixed_labels() {
        let mut f = fixtures::p1();
        let mut m = f.maps[1].matrix.clone();
        m.set(2, 0, q(1, 1));
        f.maps[1] = LinearMap::new(m);
        let rep = check_mrrba(&f);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|fl| fl.index[0][2..] != fl.index[1][2..]));
    }

    #[test]
    fn zero_product_context_passes_with_any_maps() {
        let a = Arc::new(Algebra::zero(2, "e"));
        let module = Arc::new(Bimodule::zero(a, 2));
        let maps = vec![LinearMap::new(DenseMatrix::from_int_rows(&[&[1, 2], &[3, 4]]))];
        let f = OperatorFamily::new(LabelSet::numbered(1), module, maps).unwrap();
        assert!(check_mrrba(&f).passed());
    }

    #[test]
    fn relabelings_of_p1_pass() {
        let f = fixtures::p1();
        for tau in [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]] {
            let tau: Vec<String> = tau.iter().map(|s| s.to_string()).collect();
            let g = relabel(&f, &tau).unwrap();
            assert!(check_mrrba(&g).passed());
        }
        let id = relabel(&f, &["0".to_string(), "1".to_string()]).unwrap();
        assert_eq!(id, f);
        assert!(matches!(relabel(&f, &["0".into(), "z".into()]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn rb_pair_of_p1_operator() {
        let f = fixtures::p1();
        let pair = family_from_rb_pair(f.module.clone(), f.maps[0].clone()).unwrap();
        assert!(check_mrrba(&pair).passed());
    }

    #[test]
    fn central_elements_reproduce_p1() {
        let f = fixtures::p1();
        let elems = vec![unit(6, 0), unit(6, 1)];
        let g = family_from_central_elements(f.module.clone(), f.maps[0].clone(), f.labels.clone(), elems).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn noncentral_element_is_rejected() {
        let a = Arc::new(fixtures::upper_triangular());
        let module = Arc::new(adjoint_bimodule(&a));
        let p = LinearMap::zero(3, 3);
        let err = family_from_central_elements(module, p, LabelSet::numbered(1), vec![unit(3, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotCentral { .. }));
    }

    #[test]
    fn star_product_of_p1_label_zero() {
        let f = fixtures::p1().single(0);
        let (mp, bim) = star_product(&f).unwrap();
        assert!(check_algebra(&mp).passed());
        assert!(crate::algebra::check_bimodule(&bim).passed());
        // t ⋆ t^2 = (1/3 + 1/2) t^4
        assert_eq!(mp.product_basis(1, 2)[4], q(5, 6));
        assert!(matches!(star_product(&fixtures::p1()), Err(Error::MultiLabelNotSupported)));
    }

    #[test]
    fn skew_examples() {
        let a = Arc::new(Algebra::zero(2, "e"));
        let r = RMatrixFamily::new(
            LabelSet::numbered(1),
            a.clone(),
            vec![DenseMatrix::from_int_rows(&[&[0, 1], &[-1, 0]])],
        )
        .unwrap();
        assert!(check_skew_symmetric(&r).passed());
        let (f, cons) = operators_on_dual(&r).unwrap();
        assert!(cons.passed());
        assert_eq!(f.image(0, 1), vec![q(1, 1), q(0, 1)]);
        assert_eq!(f.image(0, 0), vec![q(0, 1), q(-1, 1)]);
        assert!(check_mrrba(&f).passed());
        let diag = RMatrixFamily::new(LabelSet::numbered(1), a, vec![DenseMatrix::from_int_rows(&[&[1, 0], &[0, 0]])]).unwrap();
        let rep = check_skew_symmetric(&diag);
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].index[1..], ["e0".to_string(), "e0".to_string()]);
    }

    #[test]
    fn oracle_rmatrix_fixture_induces_operators() {
        let r = fixtures::aybe_solution();
        assert!(check_matching_aybe(&r).passed());
        let module = Arc::new(adjoint_bimodule(&r.algebra));
        let f = operators_from_rmatrix(&r, module).unwrap();
        assert!(f.maps.iter().any(|m| !m.matrix.is_zero()));
        assert!(check_mrrba(&f).passed());
    }

    #[test]
    fn morphism_pair_examples() {
        let f = fixtures::p1();
        let id = LinearMap::identity(6);
        assert!(check_morphism_pair(&id, &id, &f, &f).unwrap().passed());
        let zero = LinearMap::zero(6, 6);
        assert!(!check_morphism_pair(&id, &zero, &f, &f).unwrap().passed());
    }
}
