//! JSON documents for every fixture kind.
//!
//! Documents refer to one another by name (a bimodule names its algebra, a
//! family names its bimodule), so each `build` method takes the already
//! resolved dependencies. Scalars are strings `"p/q"`; tensors are sparse
//! lists `[i_1, .., i_k, out, "p/q"]` with absent entries zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{adjoint_bimodule, Algebra, Bimodule};
use crate::deformation::{MdaDeformation, MrrbaDeformation};
use crate::dendriform::MatchingDendriform;
use crate::error::{Error, Result};
use crate::homotopy::{AInfinityAlgebra, AInfinityBimodule, GradedSpace, HomotopyMda, HomotopyMrrba};
use crate::labels::LabelSet;
use crate::linear::LinearMap;
use crate::operad::OperadElement;
use crate::operators::{OperatorFamily, RMatrixFamily};

/// One nonzero tensor entry: indices followed by the value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Value>", into = "Vec<Value>")]
pub struct SparseEntry {
    pub index: Vec<usize>,
    pub value: Scalar,
}

impl TryFrom<Vec<Value>> for SparseEntry {
    type Error = String;

    fn try_from(mut v: Vec<Value>) -> std::result::Result<Self, String> {
        let last = v.pop().ok_or("empty sparse entry")?;
        let value: Scalar = serde_json::from_value(last).map_err(|e| e.to_string())?;
        let index = v
            .into_iter()
            .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(|| format!("index {x} is not a nonnegative integer")))
            .collect::<std::result::Result<_, _>>()?;
        Ok(SparseEntry { index, value })
    }
}

impl From<SparseEntry> for Vec<Value> {
    fn from(e: SparseEntry) -> Self {
        let mut v: Vec<Value> = e.index.into_iter().map(Value::from).collect();
        v.push(Value::String(e.value.to_string()));
        v
    }
}

pub fn sparse_of(t: &DenseTensor) -> Vec<SparseEntry> {
    t.indices()
        .zip(t.entries())
        .filter(|(_, v)| !v.is_zero())
        .map(|(index, v)| SparseEntry { index, value: v.clone() })
        .collect()
}

pub fn tensor_from_sparse(shape: &[usize], entries: &[SparseEntry]) -> Result<DenseTensor> {
    let mut t = DenseTensor::zeros(shape);
    for e in entries {
        if e.index.len() != shape.len() || e.index.iter().zip(shape).any(|(i, n)| i >= n) {
            return Err(Error::Shape(format!("entry {:?} outside shape {shape:?}", e.index)));
        }
        t.add_at(&e.index, &e.value);
    }
    Ok(t)
}

fn rows_of(m: &DenseMatrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn matrix_from_rows(rows: &[Vec<Scalar>], expect: (usize, usize), what: &str) -> Result<DenseMatrix> {
    if rows.len() != expect.0 || rows.iter().any(|r| r.len() != expect.1) {
        return Err(Error::Shape(format!("{what}: expected a {}x{} matrix", expect.0, expect.1)));
    }
    Ok(DenseMatrix::from_entries(expect.0, expect.1, rows.concat())?)
}

fn basis_or(basis: &Option<Vec<String>>, dim: usize, prefix: &str) -> Result<Vec<String>> {
    match basis {
        Some(b) if b.len() == dim => Ok(b.clone()),
        Some(b) => Err(Error::Shape(format!("{} basis names for dimension {dim}", b.len()))),
        None => Ok((0..dim).map(|i| format!("{prefix}{i}")).collect()),
    }
}

fn by_label<'a, T>(labels: &LabelSet, map: &'a BTreeMap<String, T>) -> Result<Vec<&'a T>> {
    if let Some(extra) = map.keys().find(|k| labels.index_of(k).is_err()) {
        return Err(Error::UnknownLabel(extra.clone()));
    }
    labels.names().iter().map(|x| map.get(x).ok_or_else(|| Error::Invalid(format!("no entry for label {x:?}")))).collect()
}

fn label_map<T>(labels: &LabelSet, mut f: impl FnMut(usize) -> T) -> BTreeMap<String, T> {
    (0..labels.len()).map(|x| (labels.name(x).to_string(), f(x))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mult: Vec<SparseEntry>,
}

impl AlgebraDoc {
    pub fn of(a: &Algebra) -> Self {
        AlgebraDoc { dim: a.dim(), basis: Some(a.basis_names().to_vec()), mult: sparse_of(a.mult()) }
    }

    pub fn build(&self) -> Result<Algebra> {
        let d = self.dim;
        Algebra::new(basis_or(&self.basis, d, "e")?, tensor_from_sparse(&[d, d, d], &self.mult)?)
    }
}

/// With `adjoint: true` the actions are the algebra product and the other
/// fields are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleDoc {
    pub algebra: String,
    #[serde(default)]
    pub adjoint: bool,
    #[serde(default)]
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub left: Vec<SparseEntry>,
    #[serde(default)]
    pub right: Vec<SparseEntry>,
}

impl BimoduleDoc {
    pub fn of(m: &Bimodule, algebra: &str) -> Self {
        BimoduleDoc {
            algebra: algebra.to_string(),
            adjoint: false,
            dim: m.dim(),
            basis: Some(m.basis_names().to_vec()),
            left: sparse_of(m.left()),
            right: sparse_of(m.right()),
        }
    }

    pub fn build(&self, algebra: Arc<Algebra>) -> Result<Bimodule> {
        if self.adjoint {
            return Ok(adjoint_bimodule(&algebra));
        }
        let (da, dm) = (algebra.dim(), self.dim);
        let left = tensor_from_sparse(&[da, dm, dm], &self.left)?;
        let right = tensor_from_sparse(&[dm, da, dm], &self.right)?;
        Bimodule::new(algebra, basis_or(&self.basis, dm, "g")?, left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub module: String,
    pub labels: Vec<String>,
    pub maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl FamilyDoc {
    pub fn of(f: &OperatorFamily, module: &str) -> Self {
        FamilyDoc {
            module: module.to_string(),
            labels: f.labels.names().to_vec(),
            maps: label_map(&f.labels, |x| rows_of(&f.maps[x].matrix)),
        }
    }

    pub fn build(&self, module: Arc<Bimodule>) -> Result<OperatorFamily> {
        let labels = LabelSet::new(self.labels.clone())?;
        let shape = (module.algebra.dim(), module.dim());
        let maps = by_label(&labels, &self.maps)?
            .into_iter()
            .zip(labels.names())
            .map(|(rows, x)| Ok(LinearMap::new(matrix_from_rows(rows, shape, &format!("operator {x}"))?)))
            .collect::<Result<_>>()?;
        OperatorFamily::new(labels, module, maps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixDoc {
    pub algebra: String,
    pub labels: Vec<String>,
    pub tensors: BTreeMap<String, Vec<SparseEntry>>,
}

impl RMatrixDoc {
    pub fn of(r: &RMatrixFamily, algebra: &str) -> Self {
        let tensors = label_map(&r.labels, |x| {
            let m = &r.tensors[x];
            let mut out = Vec::new();
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m.get(i, j).is_zero() {
                        out.push(SparseEntry { index: vec![i, j], value: m.get(i, j).clone() });
                    }
                }
            }
            out
        });
        RMatrixDoc { algebra: algebra.to_string(), labels: r.labels.names().to_vec(), tensors }
    }

    pub fn build(&self, algebra: Arc<Algebra>) -> Result<RMatrixFamily> {
        let labels = LabelSet::new(self.labels.clone())?;
        let a = algebra.dim();
        let tensors = by_label(&labels, &self.tensors)?
            .into_iter()
            .map(|entries| {
                let t = tensor_from_sparse(&[a, a], entries)?;
                Ok(DenseMatrix::from_entries(a, a, t.into_entries())?)
            })
            .collect::<Result<_>>()?;
        RMatrixFamily::new(labels, algebra, tensors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DendriformDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub labels: Vec<String>,
    pub prec: BTreeMap<String, Vec<SparseEntry>>,
    pub succ: BTreeMap<String, Vec<SparseEntry>>,
}

impl DendriformDoc {
    pub fn of(d: &MatchingDendriform) -> Self {
        DendriformDoc {
            dim: d.dim(),
            basis: Some(d.basis_names().to_vec()),
            labels: d.labels.names().to_vec(),
            prec: label_map(&d.labels, |x| sparse_of(d.prec_tensor(x))),
            succ: label_map(&d.labels, |x| sparse_of(d.succ_tensor(x))),
        }
    }

    pub fn build(&self) -> Result<MatchingDendriform> {
        let labels = LabelSet::new(self.labels.clone())?;
        let n = self.dim;
        let tensors = |m: &BTreeMap<String, Vec<SparseEntry>>| -> Result<Vec<DenseTensor>> {
            by_label(&labels, m)?.into_iter().map(|e| tensor_from_sparse(&[n, n, n], e)).collect()
        };
        let (prec, succ) = (tensors(&self.prec)?, tensors(&self.succ)?);
        MatchingDendriform::new(basis_or(&self.basis, n, "d")?, labels, prec, succ)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub matrix: Vec<Vec<Scalar>>,
}

impl MapDoc {
    pub fn of(m: &LinearMap) -> Self {
        MapDoc { matrix: rows_of(&m.matrix) }
    }

    pub fn build(&self) -> Result<LinearMap> {
        let rows = self.matrix.len();
        let cols = self.matrix.first().map_or(0, Vec::len);
        Ok(LinearMap::new(matrix_from_rows(&self.matrix, (rows, cols), "linear map")?))
    }
}

/// Coordinate vectors in the algebra, one per label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementsDoc {
    pub labels: Vec<String>,
    pub elements: BTreeMap<String, Vec<Scalar>>,
}

impl ElementsDoc {
    pub fn build(&self) -> Result<(LabelSet, Vec<Vec<Scalar>>)> {
        let labels = LabelSet::new(self.labels.clone())?;
        let elems = by_label(&labels, &self.elements)?.into_iter().cloned().collect();
        Ok((labels, elems))
    }
}

/// Coefficients of orders `1..=order`; order 0 is the referenced base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationDoc {
    pub base: String,
    pub order: usize,
    pub mu: Vec<Vec<SparseEntry>>,
    pub l: Vec<Vec<SparseEntry>>,
    pub r: Vec<Vec<SparseEntry>>,
    #[serde(rename = "P")]
    pub operators: BTreeMap<String, Vec<Vec<Vec<Scalar>>>>,
}

impl DeformationDoc {
    pub fn of(d: &MrrbaDeformation, base: &str) -> Self {
        let higher = |s: &[DenseTensor]| s[1..].iter().map(sparse_of).collect();
        DeformationDoc {
            base: base.to_string(),
            order: d.order(),
            mu: higher(&d.mu),
            l: higher(&d.left),
            r: higher(&d.right),
            operators: label_map(&d.base.labels, |x| d.operators[1..].iter().map(|level| rows_of(&level[x].matrix)).collect()),
        }
    }

    pub fn build(&self, base: OperatorFamily) -> Result<MrrbaDeformation> {
        let n = self.order;
        let (da, dm) = (base.adim(), base.mdim());
        let series = |t0: &DenseTensor, higher: &[Vec<SparseEntry>], what: &str| -> Result<Vec<DenseTensor>> {
            if higher.len() != n {
                return Err(Error::Invalid(format!("{what} lists {} coefficients for order {n}", higher.len())));
            }
            let mut out = vec![t0.clone()];
            for e in higher {
                out.push(tensor_from_sparse(t0.shape(), e)?);
            }
            Ok(out)
        };
        let module = base.module.clone();
        let mu = series(module.algebra.mult(), &self.mu, "mu")?;
        let left = series(module.left(), &self.l, "l")?;
        let right = series(module.right(), &self.r, "r")?;
        let per_label = by_label(&base.labels, &self.operators)?;
        let mut operators = vec![base.maps.clone()];
        for k in 0..n {
            let level = per_label
                .iter()
                .map(|s| {
                    let rows = s.get(k).ok_or_else(|| Error::Invalid(format!("P lists fewer than {n} coefficients")))?;
                    Ok(LinearMap::new(matrix_from_rows(rows, (da, dm), "P")?))
                })
                .collect::<Result<_>>()?;
            operators.push(level);
        }
        MrrbaDeformation::new(base, mu, left, right, operators)
    }
}

/// Dendriform deformation: `prec[k][label]` for orders `1..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdaDeformationDoc {
    pub base: String,
    pub order: usize,
    pub prec: Vec<BTreeMap<String, Vec<SparseEntry>>>,
    pub succ: Vec<BTreeMap<String, Vec<SparseEntry>>>,
}

impl MdaDeformationDoc {
    pub fn of(d: &MdaDeformation, base: &str) -> Self {
        let labels = &d.base.labels;
        let higher = |s: &[Vec<DenseTensor>]| s[1..].iter().map(|level| label_map(labels, |x| sparse_of(&level[x]))).collect();
        MdaDeformationDoc { base: base.to_string(), order: d.order(), prec: higher(&d.prec), succ: higher(&d.succ) }
    }

    pub fn build(&self, base: MatchingDendriform) -> Result<MdaDeformation> {
        let n = base.dim();
        let series = |t0: Vec<DenseTensor>, higher: &[BTreeMap<String, Vec<SparseEntry>>]| -> Result<Vec<Vec<DenseTensor>>> {
            if higher.len() != self.order {
                return Err(Error::Invalid(format!("{} coefficients for order {}", higher.len(), self.order)));
            }
            let mut out = vec![t0];
            for level in higher {
                out.push(by_label(&base.labels, level)?.into_iter().map(|e| tensor_from_sparse(&[n, n, n], e)).collect::<Result<_>>()?);
            }
            Ok(out)
        };
        let prec = series((0..base.q()).map(|x| base.prec_tensor(x).clone()).collect(), &self.prec)?;
        let succ = series((0..base.q()).map(|x| base.succ_tensor(x).clone()).collect(), &self.succ)?;
        MdaDeformation::new(base, prec, succ)
    }
}

/// Declared degrees with their dimensions; the basis is laid out degree by
/// degree in the listed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDoc {
    pub degrees: Vec<i64>,
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

impl GradedDoc {
    /// Fails unless the space is already laid out degree by degree.
    pub fn of(s: &GradedSpace) -> Result<Self> {
        let mut degrees: Vec<i64> = Vec::new();
        for &d in s.degrees() {
            if degrees.last() != Some(&d) {
                if degrees.contains(&d) {
                    return Err(Error::Invalid("graded basis is not grouped by degree".into()));
                }
                degrees.push(d);
            }
        }
        let dims = s.dims().into_iter().map(|(d, n)| (d.to_string(), n)).collect();
        Ok(GradedDoc { degrees, dims, basis: Some(s.basis_names().to_vec()) })
    }

    pub fn build(&self, prefix: &str) -> Result<GradedSpace> {
        let blocks = self
            .degrees
            .iter()
            .map(|d| {
                let n = self.dims.get(&d.to_string()).ok_or_else(|| Error::Invalid(format!("no dimension for degree {d}")))?;
                Ok((*d, *n))
            })
            .collect::<Result<Vec<_>>>()?;
        let space = GradedSpace::from_blocks(&blocks, prefix);
        match &self.basis {
            Some(b) => GradedSpace::new(b.clone(), space.degrees().to_vec()),
            None => Ok(space),
        }
    }
}

/// `components[r][reduced label tuple]`, the tuple written as label names
/// joined by commas.
pub type Components = BTreeMap<String, BTreeMap<String, Vec<SparseEntry>>>;

fn tuple_key(labels: &LabelSet, t: &[usize]) -> String {
    t.iter().map(|&x| labels.name(x)).collect::<Vec<_>>().join(",")
}

fn components_of(e: &OperadElement) -> Components {
    (1..=e.arity())
        .map(|r| {
            let comps = e.position(r);
            let tuples = e.labels().tuples(e.arity() - 1).zip(comps).map(|(t, c)| (tuple_key(e.labels(), &t), sparse_of(c))).collect();
            (r.to_string(), tuples)
        })
        .collect()
}

fn element_from_components(dim: usize, labels: &LabelSet, arity: usize, c: &Components) -> Result<OperadElement> {
    let mut e = OperadElement::zero(dim, labels.clone(), arity)?;
    for (r, tuples) in c {
        let r: usize = r.parse().map_err(|_| Error::Invalid(format!("position {r:?} is not a number")))?;
        if r == 0 || r > arity {
            return Err(Error::PositionOutOfRange { position: r, arity });
        }
        for (key, entries) in tuples {
            let mut xs: Vec<usize> =
                if key.is_empty() { vec![] } else { key.split(',').map(|x| labels.index_of(x.trim())).collect::<Result<_>>()? };
            if xs.len() + 1 != arity {
                return Err(Error::Invalid(format!("label tuple {key:?} needs {} labels", arity - 1)));
            }
            xs.insert(r - 1, 0);
            *e.component_mut(r, &xs) = tensor_from_sparse(&vec![dim; arity + 1], entries)?;
        }
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadDoc {
    pub arity: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub components: Components,
}

impl OperadDoc {
    pub fn of(e: &OperadElement) -> Self {
        OperadDoc { arity: e.arity(), dim: e.dim(), labels: e.labels().names().to_vec(), components: components_of(e) }
    }

    pub fn build(&self) -> Result<OperadElement> {
        element_from_components(self.dim, &LabelSet::new(self.labels.clone())?, self.arity, &self.components)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyMdaDoc {
    pub space: GradedDoc,
    pub labels: Vec<String>,
    /// Arity `k` to its components.
    pub maps: BTreeMap<String, Components>,
}

fn arity_keyed<T>(map: &BTreeMap<String, T>) -> Result<Vec<Option<&T>>> {
    let mut top = 0;
    for k in map.keys() {
        let k: usize = k.parse().map_err(|_| Error::Invalid(format!("arity {k:?} is not a number")))?;
        if k == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, range: "arity ≥ 1".into() });
        }
        top = top.max(k);
    }
    Ok((1..=top).map(|k| map.get(&k.to_string())).collect())
}

impl HomotopyMdaDoc {
    pub fn of(h: &HomotopyMda) -> Result<Self> {
        Ok(HomotopyMdaDoc {
            space: GradedDoc::of(&h.space)?,
            labels: h.labels.names().to_vec(),
            maps: h.pis().iter().map(|p| (p.arity().to_string(), components_of(p))).collect(),
        })
    }

    pub fn build(&self) -> Result<HomotopyMda> {
        let space = self.space.build("d")?;
        let labels = LabelSet::new(self.labels.clone())?;
        let empty = Components::new();
        let pis = arity_keyed(&self.maps)?
            .into_iter()
            .enumerate()
            .map(|(j, c)| element_from_components(space.dim(), &labels, j + 1, c.unwrap_or(&empty)))
            .collect::<Result<_>>()?;
        HomotopyMda::new(space, labels, pis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyMrrbaDoc {
    pub algebra: GradedDoc,
    pub module: GradedDoc,
    pub labels: Vec<String>,
    /// Arity `k` to the sparse `μ_k`.
    pub mus: BTreeMap<String, Vec<SparseEntry>>,
    /// Arity `k`, then module slot `p`, to the sparse `η_k`.
    pub etas: BTreeMap<String, BTreeMap<String, Vec<SparseEntry>>>,
    pub maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl HomotopyMrrbaDoc {
    pub fn of(h: &HomotopyMrrba) -> Result<Self> {
        let m = &h.module;
        Ok(HomotopyMrrbaDoc {
            algebra: GradedDoc::of(&m.algebra.space)?,
            module: GradedDoc::of(&m.space)?,
            labels: h.labels.names().to_vec(),
            mus: m.algebra.mus().iter().enumerate().map(|(j, t)| ((j + 1).to_string(), sparse_of(t))).collect(),
            etas: m
                .etas()
                .iter()
                .enumerate()
                .map(|(j, slots)| ((j + 1).to_string(), slots.iter().enumerate().map(|(p, t)| ((p + 1).to_string(), sparse_of(t))).collect()))
                .collect(),
            maps: label_map(&h.labels, |x| rows_of(&h.maps[x].matrix)),
        })
    }

    pub fn build(&self) -> Result<HomotopyMrrba> {
        let sa = self.algebra.build("a")?;
        let sm = self.module.build("m")?;
        let (da, dm) = (sa.dim(), sm.dim());
        let mus = arity_keyed(&self.mus)?
            .into_iter()
            .enumerate()
            .map(|(j, e)| tensor_from_sparse(&vec![da; j + 2], e.map_or(&[][..], Vec::as_slice)))
            .collect::<Result<_>>()?;
        let algebra = Arc::new(AInfinityAlgebra::new(sa, mus)?);
        let empty = BTreeMap::new();
        let etas = arity_keyed(&self.etas)?
            .into_iter()
            .enumerate()
            .map(|(j, slots)| {
                let k = j + 1;
                let slots = slots.unwrap_or(&empty);
                (1..=k)
                    .map(|p| {
                        let mut shape = vec![da; k + 1];
                        shape[p - 1] = dm;
                        shape[k] = dm;
                        tensor_from_sparse(&shape, slots.get(&p.to_string()).map_or(&[][..], Vec::as_slice))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let module = Arc::new(AInfinityBimodule::new(algebra, sm, etas)?);
        let labels = LabelSet::new(self.labels.clone())?;
        let maps = by_label(&labels, &self.maps)?
            .into_iter()
            .map(|rows| Ok(LinearMap::new(matrix_from_rows(rows, (da, dm), "operator")?)))
            .collect::<Result<_>>()?;
        HomotopyMrrba::new(labels, module, maps)
    }
}

/// Every fixture kind, tagged by `"kind"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Algebra(AlgebraDoc),
    Bimodule(BimoduleDoc),
    OperatorFamily(FamilyDoc),
    RMatrix(RMatrixDoc),
    Dendriform(DendriformDoc),
    LinearMap(MapDoc),
    Elements(ElementsDoc),
    Deformation(DeformationDoc),
    MdaDeformation(MdaDeformationDoc),
    OperadElement(OperadDoc),
    HomotopyMda(HomotopyMdaDoc),
    HomotopyMrrba(HomotopyMrrbaDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Bimodule(_) => "bimodule",
            Document::OperatorFamily(_) => "operator-family",
            Document::RMatrix(_) => "r-matrix",
            Document::Dendriform(_) => "dendriform",
            Document::LinearMap(_) => "linear-map",
            Document::Elements(_) => "elements",
            Document::Deformation(_) => "deformation",
            Document::MdaDeformation(_) => "mda-deformation",
            Document::OperadElement(_) => "operad-element",
            Document::HomotopyMda(_) => "homotopy-mda",
            Document::HomotopyMrrba(_) => "homotopy-mrrba",
        }
    }

    /// Names of the documents this one refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Document::Bimodule(d) => vec![&d.algebra],
            Document::OperatorFamily(d) => vec![&d.module],
            Document::RMatrix(d) => vec![&d.algebra],
            Document::Deformation(d) => vec![&d.base],
            Document::MdaDeformation(d) => vec![&d.base],
            _ => vec![],
        }
    }
}
