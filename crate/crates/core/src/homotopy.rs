//! Graded modules, truncated A∞-algebras and bimodules, and the homotopy
//! versions of matching dendriform and matching relative Rota-Baxter
//! algebras.
//!
//! Structure maps are stored as full tensors over the total space. Each
//! constructor checks that every nonzero entry respects its internal degree,
//! so an entry outside the forced output degree is rejected up front rather
//! than silently ignored.
//!
//! Signs are exactly `(-1)^{i(l+1) + l(|a_1| + .. + |a_{i-1}|)}` on each
//! `∘_i` term. Evaluation introduces no further Koszul swaps.

use std::sync::Arc;

use matchrb_linalg::{DenseTensor, MultiIndexIter, Scalar};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Bimodule};
use crate::dendriform::MatchingDendriform;
use crate::error::{require, Error, Result};
use crate::labels::LabelSet;
use crate::linear::{build_tensor, eval, zeros, Arg, LinearMap, Vector};
use crate::operad::{compose_tensors, multiplication_from_mda, partial_compose, OperadElement};
use crate::operators::OperatorFamily;
use crate::report::CertificateReport;

/// Default arity bound for the truncated identities.
pub const DEFAULT_ARITY_BOUND: usize = 3;

/// A finite-dimensional graded module with one degree per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSpace {
    basis: Vec<String>,
    degrees: Vec<i64>,
}

impl GradedSpace {
    pub fn new(basis: Vec<String>, degrees: Vec<i64>) -> Result<Self> {
        if basis.len() != degrees.len() {
            return Err(Error::Shape(format!("{} basis names for {} degrees", basis.len(), degrees.len())));
        }
        Ok(GradedSpace { basis, degrees })
    }

    /// Blocks of `(degree, dim)` laid out in order, named `{prefix}{i}`.
    pub fn from_blocks(blocks: &[(i64, usize)], prefix: &str) -> Self {
        let degrees: Vec<i64> = blocks.iter().flat_map(|&(d, n)| std::iter::repeat(d).take(n)).collect();
        let basis = (0..degrees.len()).map(|i| format!("{prefix}{i}")).collect();
        GradedSpace { basis, degrees }
    }

    /// Everything in degree 0.
    pub fn concentrated(basis: Vec<String>) -> Self {
        let degrees = vec![0; basis.len()];
        GradedSpace { basis, degrees }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Declared degrees in increasing order with their dimensions.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        let mut sorted = self.degrees.clone();
        sorted.sort_unstable();
        for d in sorted {
            match out.last_mut() {
                Some((e, n)) if *e == d => *n += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn is_concentrated(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0)
    }
}

fn sign(e: i64) -> Scalar {
    Scalar::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Rejects nonzero entries whose output degree is not the input degree sum
/// plus `internal`.
fn check_degrees(t: &DenseTensor, inputs: &[&GradedSpace], output: &GradedSpace, internal: i64, what: &str) -> Result<()> {
    let mut shape: Vec<usize> = inputs.iter().map(|s| s.dim()).collect();
    shape.push(output.dim());
    if t.shape() != shape.as_slice() {
        return Err(Error::Shape(format!("{what}: expected shape {shape:?}, found {:?}", t.shape())));
    }
    for (idx, v) in t.indices().zip(t.entries()) {
        if v.is_zero() {
            continue;
        }
        let k = inputs.len();
        let ins: i64 = (0..k).map(|j| inputs[j].degree(idx[j])).sum();
        let out = output.degree(idx[k]);
        if out != ins + internal {
            return Err(Error::DegreeMismatch(format!(
                "{what}: entry {idx:?} maps input degree {ins} to degree {out}, internal degree must be {internal}"
            )));
        }
    }
    Ok(())
}

fn arity_degree(k: usize) -> i64 {
    k as i64 - 2
}

/// `μ_1, .., μ_K` with `deg μ_k = k - 2`; `mus[k - 1]` has arity `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityAlgebra {
    pub space: GradedSpace,
    mus: Vec<DenseTensor>,
}

impl AInfinityAlgebra {
    pub fn new(space: GradedSpace, mus: Vec<DenseTensor>) -> Result<Self> {
        for (k, mu) in mus.iter().enumerate().map(|(j, m)| (j + 1, m)) {
            check_degrees(mu, &vec![&space; k], &space, arity_degree(k), &format!("mu_{k}"))?;
        }
        Ok(AInfinityAlgebra { space, mus })
    }

    /// An ordinary algebra in degree 0, with `μ_1 = 0` and `μ_2` its product.
    pub fn from_algebra(a: &Algebra) -> Self {
        let d = a.dim();
        let space = GradedSpace::concentrated(a.basis_names().to_vec());
        AInfinityAlgebra { space, mus: vec![DenseTensor::zeros(&[d, d]), a.mult().clone()] }
    }

    pub fn max_arity(&self) -> usize {
        self.mus.len()
    }

    pub fn mu(&self, k: usize) -> Option<&DenseTensor> {
        self.mus.get(k - 1)
    }

    pub fn mus(&self) -> &[DenseTensor] {
        &self.mus
    }
}

/// `η_k` with one module slot; `etas[k - 1][p - 1]` carries the module at
/// input `p` and has the module as output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityBimodule {
    pub algebra: Arc<AInfinityAlgebra>,
    pub space: GradedSpace,
    etas: Vec<Vec<DenseTensor>>,
}

impl AInfinityBimodule {
    pub fn new(algebra: Arc<AInfinityAlgebra>, space: GradedSpace, etas: Vec<Vec<DenseTensor>>) -> Result<Self> {
        for (k, slots) in etas.iter().enumerate().map(|(j, s)| (j + 1, s)) {
            if slots.len() != k {
                return Err(Error::Shape(format!("eta_{k} needs {k} module slots, found {}", slots.len())));
            }
            for (p, eta) in slots.iter().enumerate() {
                let inputs: Vec<&GradedSpace> = (0..k).map(|j| if j == p { &space } else { &algebra.space }).collect();
                check_degrees(eta, &inputs, &space, arity_degree(k), &format!("eta_{k} at slot {}", p + 1))?;
            }
        }
        Ok(AInfinityBimodule { algebra, space, etas })
    }

    /// An ordinary bimodule in degree 0: `η_2` is the right action at slot 1
    /// and the left action at slot 2.
    pub fn from_bimodule(m: &Bimodule) -> Self {
        let dm = m.dim();
        let algebra = Arc::new(AInfinityAlgebra::from_algebra(&m.algebra));
        let space = GradedSpace::concentrated(m.basis_names().to_vec());
        let etas = vec![vec![DenseTensor::zeros(&[dm, dm])], vec![m.right().clone(), m.left().clone()]];
        AInfinityBimodule { algebra, space, etas }
    }

    pub fn max_arity(&self) -> usize {
        self.etas.len()
    }

    /// `η_k` with the module at input `p`.
    pub fn eta(&self, k: usize, p: usize) -> Option<&DenseTensor> {
        self.etas.get(k - 1).map(|s| &s[p - 1])
    }

    pub fn etas(&self) -> &[Vec<DenseTensor>] {
        &self.etas
    }
}

/// Adds `sign · t` into `total`, where the sign depends on the degrees of
/// the first `i - 1` inputs of each entry.
fn accumulate(total: &mut DenseTensor, t: &DenseTensor, i: usize, l: usize, slot_degree: &dyn Fn(usize, usize) -> i64) {
    let fixed = (i * (l + 1)) as i64;
    for (idx, v) in t.indices().zip(t.entries()) {
        if v.is_zero() {
            continue;
        }
        let prefix: i64 = (0..i - 1).map(|j| slot_degree(j, idx[j])).sum();
        let s = sign(fixed + l as i64 * prefix);
        total.add_at(&idx, &(&s * v));
    }
}

fn degree_label(degs: impl Iterator<Item = i64>) -> String {
    let parts: Vec<String> = degs.map(|d| d.to_string()).collect();
    format!("degrees=({})", parts.join(","))
}

/// The Stasheff identities for every `n ≤ bound` on all basis tuples.
pub fn check_a_infinity(a: &AInfinityAlgebra, bound: usize) -> CertificateReport {
    let mut rep = CertificateReport::new("a-infinity");
    let s = &a.space;
    let d = s.dim();
    for n in 1..=bound {
        let mut total = DenseTensor::zeros(&vec![d; n + 1]);
        for k in 1..=n {
            let l = n + 1 - k;
            let (Some(outer), Some(inner)) = (a.mu(k), a.mu(l)) else { continue };
            for i in 1..=k {
                let t = compose_tensors(outer, inner, i);
                accumulate(&mut total, &t, i, l, &|_, b| s.degree(b));
            }
        }
        for idx in MultiIndexIter::new(&vec![d; n]) {
            let mut index = vec![format!("n={n}")];
            index.extend(idx.iter().map(|&b| s.name(b).to_string()));
            index.push(degree_label(idx.iter().map(|&b| s.degree(b))));
            rep.vanish("stasheff", index, total.fiber(&idx).to_vec());
        }
    }
    rep.note(format!("identities certified for n ≤ {bound}"));
    rep
}

/// The mixed identities with one module input, for every `n ≤ bound`.
/// Requires the algebra to pass [`check_a_infinity`] at the same bound.
pub fn check_a_infinity_bimodule(m: &AInfinityBimodule, bound: usize) -> Result<CertificateReport> {
    require(check_a_infinity(&m.algebra, bound))?;
    let mut rep = CertificateReport::new("a-infinity-bimodule");
    let (sa, sm) = (&m.algebra.space, &m.space);
    let (da, dm) = (sa.dim(), sm.dim());
    for n in 1..=bound {
        for p in 1..=n {
            let mut shape = vec![da; n];
            shape[p - 1] = dm;
            let mut total = DenseTensor::zeros(&[shape.clone(), vec![dm]].concat());
            let slot_space = |j: usize| if j == p - 1 { sm } else { sa };
            for k in 1..=n {
                let l = n + 1 - k;
                for i in 1..=k {
                    // the module input lands in the inner map when i ≤ p < i + l
                    let (outer, inner) = if i <= p && p < i + l {
                        (m.eta(k, i), m.eta(l, p - i + 1))
                    } else {
                        let outer_slot = if p < i { p } else { p - l + 1 };
                        (m.eta(k, outer_slot), m.algebra.mu(l))
                    };
                    let (Some(outer), Some(inner)) = (outer, inner) else { continue };
                    let t = compose_tensors(outer, inner, i);
                    accumulate(&mut total, &t, i, l, &|j, b| slot_space(j).degree(b));
                }
            }
            for idx in MultiIndexIter::new(&shape) {
                let mut index = vec![format!("n={n}"), format!("module-slot={p}")];
                index.extend(idx.iter().enumerate().map(|(j, &b)| slot_space(j).name(b).to_string()));
                index.push(degree_label(idx.iter().enumerate().map(|(j, &b)| slot_space(j).degree(b))));
                rep.vanish("stasheff-mixed", index, total.fiber(&idx).to_vec());
            }
        }
    }
    rep.note(format!("identities certified for n ≤ {bound}"));
    Ok(rep)
}

/// A homotopy matching dendriform algebra: `pis[k - 1]` is an arity-`k`
/// operad element of internal degree `k - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyMda {
    pub space: GradedSpace,
    pub labels: LabelSet,
    pis: Vec<OperadElement>,
}

impl HomotopyMda {
    pub fn new(space: GradedSpace, labels: LabelSet, pis: Vec<OperadElement>) -> Result<Self> {
        for (k, pi) in pis.iter().enumerate().map(|(j, p)| (j + 1, p)) {
            if pi.arity() != k || pi.dim() != space.dim() {
                return Err(Error::Shape(format!("pi_{k} has arity {} over dimension {}", pi.arity(), pi.dim())));
            }
            if pi.labels() != &labels {
                return Err(Error::LabelSetMismatch);
            }
            for (r, comps) in pi.tensors().iter().enumerate() {
                for t in comps {
                    check_degrees(t, &vec![&space; k], &space, arity_degree(k), &format!("pi_{k} at position {}", r + 1))?;
                }
            }
        }
        Ok(HomotopyMda { space, labels, pis })
    }

    /// A matching dendriform algebra in degree 0, with `π_1 = 0`.
    pub fn from_dendriform(d: &MatchingDendriform) -> Self {
        let space = GradedSpace::concentrated(d.basis_names().to_vec());
        let zero = OperadElement::zero(d.dim(), d.labels.clone(), 1).expect("arity one");
        HomotopyMda { space, labels: d.labels.clone(), pis: vec![zero, multiplication_from_mda(d)] }
    }

    pub fn max_arity(&self) -> usize {
        self.pis.len()
    }

    pub fn pi(&self, k: usize) -> Option<&OperadElement> {
        self.pis.get(k - 1)
    }

    pub fn pis(&self) -> &[OperadElement] {
        &self.pis
    }
}

/// The homotopy dendriform identities for every `n ≤ bound`, position,
/// label tuple and basis tuple.
pub fn check_homotopy_mda(h: &HomotopyMda, bound: usize) -> Result<CertificateReport> {
    let mut rep = CertificateReport::new("homotopy-mda");
    let s = &h.space;
    let d = s.dim();
    for n in 1..=bound {
        let mut total = OperadElement::zero(d, h.labels.clone(), n)?;
        for k in 1..=n {
            let l = n + 1 - k;
            let (Some(outer), Some(inner)) = (h.pi(k), h.pi(l)) else { continue };
            for i in 1..=k {
                let term = partial_compose(outer, inner, i)?;
                for (acc, t) in total.tensors_mut().iter_mut().flatten().zip(term.tensors().iter().flatten()) {
                    accumulate(acc, t, i, l, &|_, b| s.degree(b));
                }
            }
        }
        for r in 1..=n {
            for (t, rest) in h.labels.tuples(n - 1).enumerate() {
                let fibers = &total.position(r)[t];
                for us in MultiIndexIter::new(&vec![d; n]) {
                    let mut index = vec![format!("n={n}")];
                    index.extend(rest.iter().map(|&x| h.labels.name(x).to_string()));
                    index.push(format!("position={r}"));
                    index.extend(us.iter().map(|&b| s.name(b).to_string()));
                    index.push(degree_label(us.iter().map(|&b| s.degree(b))));
                    rep.vanish("homotopy-mda", index, fibers.fiber(&us).to_vec());
                }
            }
        }
    }
    rep.note(format!("identities certified for n ≤ {bound}"));
    Ok(rep)
}

/// Degree-0 operators `P_x: M -> A` over an A∞-bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyMrrba {
    pub labels: LabelSet,
    pub module: Arc<AInfinityBimodule>,
    pub maps: Vec<LinearMap>,
}

impl HomotopyMrrba {
    pub fn new(labels: LabelSet, module: Arc<AInfinityBimodule>, maps: Vec<LinearMap>) -> Result<Self> {
        if maps.len() != labels.len() {
            return Err(Error::Shape(format!("{} operators for {} labels", maps.len(), labels.len())));
        }
        let (sa, sm) = (&module.algebra.space, &module.space);
        for (x, p) in maps.iter().enumerate() {
            p.check_shape(sa.dim(), sm.dim())?;
            for u in 0..sm.dim() {
                for (a, v) in p.column(u).iter().enumerate() {
                    if !v.is_zero() && sa.degree(a) != sm.degree(u) {
                        return Err(Error::DegreeMismatch(format!(
                            "operator {} sends {} (degree {}) to {} (degree {})",
                            labels.name(x),
                            sm.name(u),
                            sm.degree(u),
                            sa.name(a),
                            sa.degree(a)
                        )));
                    }
                }
            }
        }
        Ok(HomotopyMrrba { labels, module, maps })
    }

    /// An ordinary operator family in degree 0.
    pub fn from_family(f: &OperatorFamily) -> Self {
        let module = Arc::new(AInfinityBimodule::from_bimodule(&f.module));
        HomotopyMrrba { labels: f.labels.clone(), module, maps: f.maps.clone() }
    }

    pub fn max_arity(&self) -> usize {
        self.module.algebra.max_arity().max(self.module.max_arity())
    }

    fn images(&self) -> Vec<Vec<Vector>> {
        let dm = self.module.space.dim();
        self.maps.iter().map(|p| (0..dm).map(|u| p.column(u)).collect()).collect()
    }
}

/// `μ_k(P_{x_1}u_1, .., P_{x_k}u_k) = Σ_r P_{x_r} η_k(P_{x_1}u_1, .., u_r, .., P_{x_k}u_k)`
/// for every `k ≤ bound`. Requires the A∞ and bimodule checks to pass.
pub fn check_homotopy_mrrba(h: &HomotopyMrrba, bound: usize) -> Result<CertificateReport> {
    require(check_a_infinity_bimodule(&h.module, bound)?)?;
    let mut rep = CertificateReport::new("homotopy-mrrba");
    let (sa, sm) = (&h.module.algebra.space, &h.module.space);
    let (da, dm) = (sa.dim(), sm.dim());
    let imgs = h.images();
    for k in 1..=bound.min(h.max_arity()) {
        for xs in h.labels.tuples(k) {
            for us in MultiIndexIter::new(&vec![dm; k]) {
                let args: Vec<Arg> = (0..k).map(|j| Arg::Vec(&imgs[xs[j]][us[j]])).collect();
                let lhs = h.module.algebra.mu(k).map_or_else(|| zeros(da), |mu| eval(mu, &args));
                let mut rhs = zeros(da);
                for r in 1..=k {
                    let Some(eta) = h.module.eta(k, r) else { continue };
                    let mut mixed = args.clone();
                    mixed[r - 1] = Arg::Basis(us[r - 1]);
                    let inner = eval(eta, &mixed);
                    crate::linear::add_into(&mut rhs, &h.maps[xs[r - 1]].apply(&inner));
                }
                let mut index = vec![format!("k={k}")];
                index.extend(xs.iter().enumerate().map(|(j, &x)| format!("x{}={}", j + 1, h.labels.name(x))));
                index.extend(us.iter().map(|&u| sm.name(u).to_string()));
                index.push(degree_label(us.iter().map(|&u| sm.degree(u))));
                rep.compare("homotopy-rota-baxter", index, lhs, rhs);
            }
        }
    }
    rep.note(format!("identities certified for k ≤ {bound}"));
    Ok(rep)
}

/// `π_k^[r]_{x_1..x_k}(u_1, .., u_k) = η_k(P_{x_1}u_1, .., u_r, .., P_{x_k}u_k)`
/// on the module. Requires [`check_homotopy_mrrba`] to pass up to the
/// largest stored arity.
pub fn induce_homotopy_dendriform(h: &HomotopyMrrba) -> Result<HomotopyMda> {
    let bound = h.max_arity();
    require(check_homotopy_mrrba(h, bound)?)?;
    let sm = h.module.space.clone();
    let dm = sm.dim();
    let imgs = h.images();
    let pis = (1..=h.module.max_arity())
        .map(|k| {
            OperadElement::from_fn(dm, h.labels.clone(), k, |r, xs, us| {
                let eta = h.module.eta(k, r).expect("stored arity");
                let args: Vec<Arg> =
                    (0..k).map(|j| if j == r - 1 { Arg::Basis(us[j]) } else { Arg::Vec(&imgs[xs[j]][us[j]]) }).collect();
                eval(eta, &args)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    HomotopyMda::new(sm, h.labels.clone(), pis)
}

fn tensor_index(q: usize, a: usize, x: usize) -> usize {
    a * q + x
}

/// The homotopy matching relative Rota-Baxter algebra on `D ⊗ K[X]`:
/// `μ_k(a_1⊗x_1, ..) = Σ_r π_k^[r](a_1, .., a_k)⊗x_r`, the module `D` with
/// `η_k` at slot `r` given by `π_k^[r]`, and `P_x(a) = a⊗x`. Requires
/// [`check_homotopy_mda`] to pass up to the largest stored arity.
pub fn homotopy_functor_g(h: &HomotopyMda) -> Result<HomotopyMrrba> {
    require(check_homotopy_mda(h, h.max_arity())?)?;
    let (d, q) = (h.space.dim(), h.labels.len());
    let big = d * q;
    let mut names = Vec::with_capacity(big);
    let mut degrees = Vec::with_capacity(big);
    for a in 0..d {
        for x in 0..q {
            names.push(format!("{}⊗{}", h.space.name(a), h.labels.name(x)));
            degrees.push(h.space.degree(a));
        }
    }
    let big_space = GradedSpace::new(names, degrees)?;
    let split = |i: usize| (i / q, i % q);
    let mus = h
        .pis
        .iter()
        .enumerate()
        .map(|(j, pi)| {
            let k = j + 1;
            build_tensor(&vec![big; k], big, |idx| {
                let (us, xs): (Vec<usize>, Vec<usize>) = idx.iter().map(|&i| split(i)).unzip();
                let mut out = zeros(big);
                for r in 1..=k {
                    for (a, v) in pi.value(r, &xs, &us).iter().enumerate() {
                        if !v.is_zero() {
                            out[tensor_index(q, a, xs[r - 1])] += v;
                        }
                    }
                }
                out
            })
        })
        .collect();
    let algebra = Arc::new(AInfinityAlgebra::new(big_space, mus)?);
    let etas = h
        .pis
        .iter()
        .enumerate()
        .map(|(j, pi)| {
            let k = j + 1;
            (1..=k)
                .map(|r| {
                    let mut shape = vec![big; k];
                    shape[r - 1] = d;
                    build_tensor(&shape, d, |idx| {
                        // the module slot carries no label; π^[r] ignores x_r
                        let (us, xs): (Vec<usize>, Vec<usize>) =
                            idx.iter().enumerate().map(|(p, &i)| if p == r - 1 { (i, 0) } else { split(i) }).unzip();
                        pi.value(r, &xs, &us).to_vec()
                    })
                })
                .collect()
        })
        .collect();
    let module = Arc::new(AInfinityBimodule::new(algebra, h.space.clone(), etas)?);
    let maps = (0..q)
        .map(|x| {
            let mut m = crate::DenseMatrix::zeros(big, d);
            for a in 0..d {
                m.set(tensor_index(q, a, x), a, Scalar::one());
            }
            LinearMap::new(m)
        })
        .collect();
    HomotopyMrrba::new(h.labels.clone(), module, maps)
}
