//! Seeded random fixtures for property tests and the CLI.
//!
//! Passing families are drawn from a pool of known solutions and moved by a
//! random integral change of basis, so they cover more than the templates
//! while staying valid by construction.

use std::sync::Arc;

use matchrb_linalg::{DenseMatrix, DenseTensor, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{adjoint_bimodule, Algebra, Bimodule};
use crate::cochain::LabeledCochain;
use crate::dendriform::{induce_dendriform, MatchingDendriform};
use crate::fixtures;
use crate::labels::LabelSet;
use crate::linear::LinearMap;
use crate::operators::{operators_from_rmatrix, OperatorFamily};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `-2..=2`.
pub fn small_scalar(rng: &mut impl Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-2..=2))
}

pub fn nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    let choices = [Scalar::from_int(1), Scalar::from_int(-1), Scalar::from_int(2), Scalar::new(1, 2), Scalar::new(-3, 2)];
    choices.choose(rng).expect("nonempty").clone()
}

pub fn small_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, small_scalar(rng));
        }
    }
    m
}

pub fn small_tensor(rng: &mut impl Rng, shape: &[usize]) -> DenseTensor {
    let mut t = DenseTensor::zeros(shape);
    for e in t.entries_mut() {
        *e = small_scalar(rng);
    }
    t
}

/// A random integral matrix with integral inverse, as a product of
/// elementary matrices; returns `(g, g^{-1})`.
pub fn unimodular(rng: &mut impl Rng, d: usize) -> (DenseMatrix, DenseMatrix) {
    let mut g = DenseMatrix::identity(d);
    let mut g_inv = DenseMatrix::identity(d);
    if d < 2 {
        return (g, g_inv);
    }
    for _ in 0..2 * d {
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        let c = Scalar::from_int(*[-1, 1, 2].choose(rng).expect("nonempty"));
        let mut e = DenseMatrix::identity(d);
        e.set(i, j, c.clone());
        let mut e_inv = DenseMatrix::identity(d);
        e_inv.set(i, j, -c);
        g = g.mul(&e).expect("square");
        g_inv = e_inv.mul(&g_inv).expect("square");
    }
    (g, g_inv)
}

fn scaled_labels(f: OperatorFamily, rng: &mut impl Rng) -> OperatorFamily {
    (0..f.q()).fold(f, |f, x| f.scale_label(x, &nonzero_scalar(rng)))
}

/// Same operator on every label, each with its own multiplier.
fn repeated(module: Arc<Bimodule>, p: LinearMap, q: usize, rng: &mut impl Rng) -> OperatorFamily {
    let f = OperatorFamily::new(LabelSet::numbered(q), module, vec![p; q]).expect("shapes agree");
    scaled_labels(f, rng)
}

/// A family passing the matching Rota-Baxter identity, with `q ≤ 2` labels
/// and dimensions at most 3.
pub fn rota_baxter_family(rng: &mut impl Rng, q: usize) -> OperatorFamily {
    assert!((1..=2).contains(&q), "templates cover one or two labels");
    let template = rng.gen_range(0..5);
    let f = match template {
        0 => {
            let n = rng.gen_range(2..=3);
            let mut shifts: Vec<usize> = (0..n).collect();
            shifts.shuffle(rng);
            shifts.truncate(q);
            scaled_labels(fixtures::integration_family(n, &shifts), rng)
        }
        1 => {
            let f = fixtures::upper_triangular_rb();
            repeated(f.module.clone(), f.maps[0].clone(), q, rng)
        }
        2 => {
            let r = fixtures::aybe_solution();
            let module = Arc::new(adjoint_bimodule(&r.algebra));
            let f = operators_from_rmatrix(&r, module).expect("solution of the matching equation");
            let f = if q == 1 { f.single(rng.gen_range(0..2)) } else { f };
            scaled_labels(f, rng)
        }
        3 => {
            // Zero products make every family a solution.
            let (a, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let z = fixtures::zero_context(a, m, q);
            let maps = (0..q).map(|_| LinearMap::new(small_matrix(rng, a, m))).collect();
            OperatorFamily::new(z.labels.clone(), z.module.clone(), maps).expect("shapes agree")
        }
        _ => {
            // Images in the square-zero ideal spanned by t^2 of Q[t]/(t^3),
            // over a module with trivial actions.
            let a = Arc::new(Algebra::truncated_polynomial(3));
            let m = rng.gen_range(1..=2);
            let module = Arc::new(Bimodule::zero(a, m));
            let maps = (0..q)
                .map(|_| {
                    let mut p = DenseMatrix::zeros(3, m);
                    for j in 0..m {
                        p.set(2, j, small_scalar(rng));
                    }
                    LinearMap::new(p)
                })
                .collect();
            OperatorFamily::new(LabelSet::numbered(q), module, maps).expect("shapes agree")
        }
    };
    let (g, g_inv) = unimodular(rng, f.adim());
    let (h, h_inv) = if f.module.is_adjoint() { (g.clone(), g_inv.clone()) } else { unimodular(rng, f.mdim()) };
    f.transport(&g, &g_inv, &h, &h_inv).expect("invertible change of basis")
}

/// Adds `±1` to one random entry of one label.
pub fn perturbed(rng: &mut impl Rng, f: &OperatorFamily) -> OperatorFamily {
    let mut g = f.clone();
    let x = rng.gen_range(0..f.q());
    let (i, j) = (rng.gen_range(0..f.adim()), rng.gen_range(0..f.mdim()));
    let delta = Scalar::from_int(*[-1, 1].choose(rng).expect("nonempty"));
    let v = g.maps[x].matrix.get(i, j) + &delta;
    g.maps[x].matrix.set(i, j, v);
    g
}

/// Passing families and perturbations of them in equal proportion.
pub fn operator_family(rng: &mut impl Rng, q: usize) -> OperatorFamily {
    let f = rota_baxter_family(rng, q);
    if rng.gen_bool(0.5) {
        perturbed(rng, &f)
    } else {
        f
    }
}

pub fn cochain(rng: &mut impl Rng, labels: &LabelSet, module: &Arc<Bimodule>, degree: usize) -> LabeledCochain {
    LabeledCochain::from_fn(labels.clone(), module.clone(), degree, |_, _| (0..module.algebra.dim()).map(|_| small_scalar(rng)).collect())
}

/// Induced structures of passing families, half of them perturbed in one
/// entry of one operation.
pub fn dendriform(rng: &mut impl Rng, q: usize) -> MatchingDendriform {
    let f = rota_baxter_family(rng, q);
    let mut d = induce_dendriform(&f).expect("passing family");
    if rng.gen_bool(0.5) {
        let dim = d.dim();
        let x = rng.gen_range(0..q);
        let idx = [rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)];
        let t = if rng.gen_bool(0.5) { d.prec_tensor_mut(x) } else { d.succ_tensor_mut(x) };
        let v = t.get(&idx) + &Scalar::one();
        t.set(&idx, v);
    }
    d
}
