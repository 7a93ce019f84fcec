//! Cochain complexes materialized as cached sparse matrices, and the
//! cohomology dimensions they produce.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use matchrb_linalg::{ColumnMatrix, DenseTensor, Scalar};
use serde::{Deserialize, Serialize};

use crate::algebra::{adjoint_bimodule, Algebra, Bimodule};
use crate::cochain::{delta_op_with, require_mc, hochschild_delta, mrrba_dim, Images, LabeledCochain, MixedCochain, MixedContext};
use crate::error::{Error, Result};
use crate::linear::Vector;
use crate::operators::OperatorFamily;
use crate::report::CertificateReport;

/// Bound on materialized degrees unless a complex is built otherwise.
pub const DEFAULT_MAX_DEGREE: usize = 3;

type DimFn = Box<dyn Fn(usize) -> usize + Send + Sync>;
type DeltaFn = Box<dyn Fn(usize, &[Scalar]) -> Vector + Send + Sync>;

/// A cochain complex `C^0 -> C^1 -> ..` given by its dimensions and a
/// differential on coordinate vectors. Matrices are built on first use.
pub struct Complex {
    name: String,
    dim: DimFn,
    delta: DeltaFn,
    min_degree: usize,
    max_degree: usize,
    cache: Mutex<HashMap<usize, Arc<ColumnMatrix>>>,
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Complex").field("name", &self.name).field("max_degree", &self.max_degree).finish()
    }
}

/// Cohomology of one degree, in the CLI report layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub complex: String,
    pub degree: usize,
    pub dim_cochain: usize,
    pub dim_kernel: usize,
    pub dim_image_prev: usize,
    pub dim_cohomology: usize,
    pub delta_squared_zero: bool,
}

impl Complex {
    pub fn new(
        name: impl Into<String>,
        dim: impl Fn(usize) -> usize + Send + Sync + 'static,
        delta: impl Fn(usize, &[Scalar]) -> Vector + Send + Sync + 'static,
    ) -> Self {
        Complex {
            name: name.into(),
            dim: Box::new(dim),
            delta: Box::new(delta),
            min_degree: 0,
            max_degree: DEFAULT_MAX_DEGREE,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    /// Replaces every degree below `min_degree` by the zero space.
    pub fn truncated(mut self, min_degree: usize) -> Self {
        self.min_degree = min_degree;
        self.cache = Mutex::new(HashMap::new());
        self
    }

    pub fn dim(&self, n: usize) -> usize {
        if n < self.min_degree {
            0
        } else {
            (self.dim)(n)
        }
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeOutOfRange { degree: n, range: format!("0..={}", self.max_degree) });
        }
        Ok(())
    }

    /// `δ_n` on a coordinate vector without building the matrix.
    pub fn apply(&self, n: usize, v: &[Scalar]) -> Vector {
        if n < self.min_degree {
            return vec![Scalar::zero(); self.dim(n + 1)];
        }
        (self.delta)(n, v)
    }

    /// Matrix of `δ_n : C^n -> C^{n+1}`.
    pub fn differential(&self, n: usize) -> Result<Arc<ColumnMatrix>> {
        self.check_degree(n)?;
        if let Some(m) = self.cache.lock().expect("cache lock").get(&n) {
            return Ok(m.clone());
        }
        let (rows, cols) = (self.dim(n + 1), self.dim(n));
        let m = if n < self.min_degree {
            ColumnMatrix::zeros(rows, cols)
        } else {
            ColumnMatrix::of_map(rows, cols, |v| (self.delta)(n, v))
        };
        let m = Arc::new(m);
        self.cache.lock().expect("cache lock").insert(n, m.clone());
        Ok(m)
    }

    /// The incoming differential `δ_{n-1}`, empty in degree zero.
    pub fn incoming(&self, n: usize) -> Result<Arc<ColumnMatrix>> {
        if n == 0 {
            Ok(Arc::new(ColumnMatrix::zeros(self.dim(0), 0)))
        } else {
            self.differential(n - 1)
        }
    }

    /// Whether `δ_n ∘ δ_{n-1} = 0`.
    pub fn delta_squared_zero(&self, n: usize) -> Result<bool> {
        let d_out = self.differential(n)?;
        let d_in = self.incoming(n)?;
        Ok(d_out.compose(&d_in)?.is_zero())
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        let d_out = self.differential(n)?;
        let d_in = self.incoming(n)?;
        let dim_kernel = d_out.kernel_dim();
        let dim_image_prev = d_in.rank();
        let delta_squared_zero = d_out.compose(&d_in)?.is_zero();
        Ok(CohomologyReport {
            complex: self.name.clone(),
            degree: n,
            dim_cochain: self.dim(n),
            dim_kernel,
            dim_image_prev,
            dim_cohomology: dim_kernel.saturating_sub(dim_image_prev),
            delta_squared_zero,
        })
    }
}

/// `Hom(A^⊗n, M)` with the Hochschild coboundary.
pub fn hochschild_complex(m: Arc<Bimodule>) -> Complex {
    let (da, dm) = (m.algebra.dim(), m.dim());
    let name = "hochschild";
    Complex::new(
        name,
        move |n| da.pow(n as u32) * dm,
        move |n, v| {
            let mut shape = vec![da; n];
            shape.push(dm);
            let f = DenseTensor::from_entries(&shape, v.to_vec()).expect("coordinate length");
            hochschild_delta(&m.algebra, &m, &f).expect("cochain shape").into_entries()
        },
    )
}

/// Hochschild complex of `A` with coefficients in itself.
pub fn hochschild_adjoint_complex(a: &Arc<Algebra>) -> Complex {
    hochschild_complex(Arc::new(adjoint_bimodule(a)))
}

/// `g^n` with `δ_P`; requires the Maurer-Cartan property.
pub fn op_complex(f: &OperatorFamily) -> Result<Complex> {
    require_mc(f)?;
    let im = Arc::new(Images::new(f));
    let (labels, module) = (f.labels.clone(), f.module.clone());
    let (l2, m2) = (labels.clone(), module.clone());
    Ok(Complex::new(
        "operator",
        move |n| LabeledCochain::dimension(&l2, &m2, n),
        move |n, v| {
            let c = LabeledCochain::from_vector(labels.clone(), module.clone(), n, v).expect("coordinate length");
            delta_op_with(&im, &c).to_vector()
        },
    ))
}

/// The full complex of a matching relative Rota-Baxter algebra.
pub fn mrrba_complex(f: &OperatorFamily) -> Result<Complex> {
    require_mc(f)?;
    let ctx = Arc::new(MixedContext::new(f));
    let (a, m, q) = (f.adim(), f.mdim(), f.q());
    Ok(Complex::new(
        "mrrba",
        move |n| mrrba_dim(a, m, q, n),
        move |n, v| {
            let fam = &ctx.images.family;
            if n == 0 {
                return vec![Scalar::zero(); mrrba_dim(a, m, q, 1)];
            }
            let c = MixedCochain::from_vector(fam, n, v).expect("coordinate length");
            ctx.delta(&c).to_vector()
        },
    ))
}

/// `dim C^n` of the matching Rota-Baxter complex over an algebra of
/// dimension `a` with `q` labels.
pub fn mrba_dim(a: usize, q: usize, n: usize) -> usize {
    match n {
        0 => 0,
        1 => a * a,
        _ => a.pow(n as u32 + 1) + q.pow(n as u32 - 1) * a.pow(n as u32),
    }
}

/// `E(α, γ) = (α, α, .., α, γ)`; `v` holds `α` then `γ`.
fn embed(f: &OperatorFamily, n: usize, v: &[Scalar]) -> MixedCochain {
    let a = f.adim();
    let alen = a.pow(n as u32 + 1);
    let mut w: Vector = v[..alen].to_vec();
    for _ in 0..n {
        w.extend_from_slice(&v[..alen]);
    }
    w.extend_from_slice(&v[alen..]);
    MixedCochain::from_vector(f, n, &w).expect("adjoint shapes")
}

/// Splits an image of `E` back into `(α, γ)`; `None` when some `β` summand
/// differs from `α`.
fn project(c: &MixedCochain) -> Option<Vector> {
    if c.beta.iter().any(|b| b.entries() != c.alpha.entries()) {
        return None;
    }
    let mut v = c.alpha.entries().to_vec();
    if let Some(g) = &c.gamma {
        v.extend(g.to_vector());
    }
    Some(v)
}

/// Matching Rota-Baxter complex and the certificate that the mixed
/// differential preserves the image of `E`.
pub struct MrbaSubcomplex {
    pub complex: Complex,
    pub certificate: CertificateReport,
}

fn require_adjoint(f: &OperatorFamily) -> Result<()> {
    if f.module.is_adjoint() {
        Ok(())
    } else {
        Err(Error::NotAdjoint)
    }
}

/// `C^n_mRBA = Hom(A^⊗n, A) ⊕ g^{n-1}` with the differential induced through
/// `E`. Containment is certified on every basis cochain up to `check_degree`.
pub fn mrba_subcomplex(f: &OperatorFamily, check_degree: usize) -> Result<MrbaSubcomplex> {
    require_adjoint(f)?;
    require_mc(f)?;
    let ctx = Arc::new(MixedContext::new(f));
    let (a, q) = (f.adim(), f.q());
    let mut certificate = CertificateReport::new("mrba-containment");
    for n in 1..=check_degree {
        let dim = mrba_dim(a, q, n);
        let bad: Vec<usize> = {
            use rayon::prelude::*;
            (0..dim)
                .into_par_iter()
                .filter(|&j| {
                    let mut e = vec![Scalar::zero(); dim];
                    e[j] = Scalar::one();
                    project(&ctx.delta(&embed(f, n, &e))).is_none()
                })
                .collect()
        };
        certificate.checked += dim;
        for j in bad {
            certificate.fail("image-of-embedding", vec![format!("degree={n}"), format!("basis={j}")]);
        }
    }
    let fam = f.clone();
    let complex = Complex::new(
        "mrba",
        move |n| mrba_dim(a, q, n),
        move |n, v| {
            if n == 0 {
                return vec![Scalar::zero(); mrba_dim(a, q, 1)];
            }
            project(&ctx.delta(&embed(&fam, n, v))).expect("differential preserves the image of E")
        },
    );
    Ok(MrbaSubcomplex { complex, certificate })
}

/// `E` as a matrix `C^n_mRBA -> C^n_mrRBA`.
pub fn embedding_matrix(f: &OperatorFamily, n: usize) -> Result<ColumnMatrix> {
    require_adjoint(f)?;
    let (a, m, q) = (f.adim(), f.mdim(), f.q());
    Ok(ColumnMatrix::of_map(mrrba_dim(a, m, q, n), mrba_dim(a, q, n), |v| embed(f, n, v).to_vector()))
}

pub fn cohomology_mrrba(f: &OperatorFamily, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, range: "n ≥ 1".into() });
    }
    Ok(mrrba_complex(f)?.cohomology(n)?.dim_cohomology)
}

pub fn cohomology_op(f: &OperatorFamily, n: usize) -> Result<usize> {
    Ok(op_complex(f)?.cohomology(n)?.dim_cohomology)
}
