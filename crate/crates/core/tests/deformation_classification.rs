use std::sync::Arc;

use matchrb::algebra::adjoint_bimodule;
use matchrb::cochain::{delta_mrrba, MixedCochain};
use matchrb::complex::mrrba_complex;
use matchrb::deformation::{check_equivalence, check_mrrba_deformation, cocycle_to_deformation, extract_infinitesimal, transport, MrrbaDeformation};
use matchrb::{fixtures, random, DenseMatrix, LabelSet, LinearMap, OperatorFamily, Scalar};
use matchrb_linalg::ColumnMatrix;
use rayon::prelude::*;

fn neg(m: &DenseMatrix) -> DenseMatrix {
    m.scale(&Scalar::from_int(-1))
}

#[test]
fn every_kernel_cocycle_over_p1_deforms() {
    let f = fixtures::p1();
    let c = mrrba_complex(&f).unwrap();
    let basis = c.differential(2).unwrap().kernel_basis();
    assert!(!basis.is_empty());
    let failures: Vec<usize> = basis
        .par_iter()
        .enumerate()
        .filter_map(|(k, z)| {
            let z = MixedCochain::from_vector(&f, 2, &z.to_dense(c.dim(2))).unwrap();
            let d = cocycle_to_deformation(&f, &z).unwrap();
            (!check_mrrba_deformation(&d).passed()).then_some(k)
        })
        .collect();
    assert!(failures.is_empty(), "kernel vectors {failures:?} fail");
}

#[test]
fn coboundaries_deform_trivially() {
    let mut rng = random::rng(41);
    for f in [fixtures::p1(), fixtures::upper_triangular_rb(), fixtures::integration_family(3, &[0, 1])] {
        let (da, dm) = (f.adim(), f.mdim());
        let phi = random::small_matrix(&mut rng, da, da);
        let psi = random::small_matrix(&mut rng, dm, dm);
        let one = MixedCochain { alpha: tensor_of(&phi), beta: vec![tensor_of(&psi)], gamma: None };
        let z = delta_mrrba(&f, &one).unwrap();
        let d = cocycle_to_deformation(&f, &z).unwrap();
        let constant = MrrbaDeformation::constant(&f, 1);
        // the constant infinitesimal minus z is δ(-φ, -ψ)
        let rep = check_equivalence(&constant, &d, &[DenseMatrix::identity(da), neg(&phi)], &[DenseMatrix::identity(dm), neg(&psi)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures.first());
        assert!(rep.checked > 0);
    }
}

fn tensor_of(m: &DenseMatrix) -> matchrb::DenseTensor {
    matchrb::linear::build_tensor(&[m.cols()], m.rows(), |idx| m.column(idx[0]))
}

fn compose_series(outer: &[DenseMatrix], inner: &[DenseMatrix]) -> Vec<DenseMatrix> {
    (0..outer.len())
        .map(|n| (0..=n).fold(DenseMatrix::zeros(outer[0].rows(), inner[0].cols()), |acc, i| acc.add(&outer[i].mul(&inner[n - i]).unwrap())))
        .collect()
}

#[test]
fn equivalence_is_an_equivalence_relation_on_samples() {
    let f = fixtures::upper_triangular_rb();
    let mut rng = random::rng(42);
    let z = {
        let c = mrrba_complex(&f).unwrap();
        let k = c.differential(2).unwrap().kernel_basis();
        MixedCochain::from_vector(&f, 2, &k[k.len() / 2].to_dense(c.dim(2))).unwrap()
    };
    let d = cocycle_to_deformation(&f, &z).unwrap();
    let id = DenseMatrix::identity(3);
    let (a1, b1) = (random::small_matrix(&mut rng, 3, 3), random::small_matrix(&mut rng, 3, 3));
    let (a2, b2) = (random::small_matrix(&mut rng, 3, 3), random::small_matrix(&mut rng, 3, 3));
    let (phi1, psi1) = (vec![id.clone(), a1.clone()], vec![id.clone(), b1.clone()]);
    let (phi2, psi2) = (vec![id.clone(), a2], vec![id.clone(), b2]);
    let d1 = transport(&d, &phi1, &psi1).unwrap();
    let d2 = transport(&d1, &phi2, &psi2).unwrap();
    assert!(check_equivalence(&d, &d, &[id.clone()], &[id.clone()]).unwrap().passed());
    assert!(check_equivalence(&d, &d1, &phi1, &psi1).unwrap().passed());
    // order-1 inverse of id + tφ is id - tφ
    assert!(check_equivalence(&d1, &d, &[id.clone(), neg(&a1)], &[id.clone(), neg(&b1)]).unwrap().passed());
    let rep = check_equivalence(&d, &d2, &compose_series(&phi2, &phi1), &compose_series(&psi2, &psi1)).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
}

/// Bases of dimension one with two labels.
fn dim_one_bases() -> Vec<OperatorFamily> {
    let line = Arc::new(fixtures::idempotent_line());
    let adjoint = Arc::new(adjoint_bimodule(&line));
    vec![OperatorFamily::zero(LabelSet::numbered(2), adjoint), fixtures::zero_context(1, 1, 2)]
}

fn grid_deformation(f: &OperatorFamily, code: usize) -> MrrbaDeformation {
    let digit = |k: u32| Scalar::from_int((code / 3usize.pow(k) % 3) as i64 - 1);
    let mut d = MrrbaDeformation::constant(f, 1);
    d.mu[1].set(&[0, 0, 0], digit(0));
    d.left[1].set(&[0, 0, 0], digit(1));
    d.right[1].set(&[0, 0, 0], digit(2));
    for x in 0..2 {
        d.operators[1][x] = LinearMap::new(DenseMatrix::from_int_rows(&[&[0]]));
        d.operators[1][x].matrix.set(0, 0, digit(3 + x as u32));
    }
    d
}

fn scalar_matrix(v: i64) -> DenseMatrix {
    DenseMatrix::from_int_rows(&[&[v]])
}

#[test]
fn classes_in_second_cohomology_classify_first_order_deformations_on_dim_one_grids() {
    for f in dim_one_bases() {
        let c = mrrba_complex(&f).unwrap();
        let coboundaries: ColumnMatrix = (*c.differential(1).unwrap()).clone();
        let valid: Vec<(MrrbaDeformation, Vec<Scalar>)> = (0..243)
            .map(|code| grid_deformation(&f, code))
            .filter(|d| check_mrrba_deformation(d).passed())
            .map(|d| {
                let (z, cert) = extract_infinitesimal(&d).unwrap();
                assert!(cert.passed());
                (d, z.to_vector())
            })
            .collect();
        assert!(valid.len() > 1);
        let sub = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> { a.iter().zip(b).map(|(x, y)| x - y).collect() };

        // well defined: equivalent deformations share a class
        for (d, z) in &valid {
            for (p, s) in [(1, 0), (0, -1), (1, 1), (-1, 1)] {
                let moved = transport(d, &[scalar_matrix(1), scalar_matrix(p)], &[scalar_matrix(1), scalar_matrix(s)]).unwrap();
                assert!(check_mrrba_deformation(&moved).passed());
                let (z2, _) = extract_infinitesimal(&moved).unwrap();
                assert!(coboundaries.solve(&sub(z, &z2.to_vector()), false).is_some());
            }
        }

        // injective: equal classes come from equivalent deformations, and
        // different classes admit no first-order equivalence
        for (d, z) in &valid {
            for (d2, z2) in &valid {
                match coboundaries.solve(&sub(z, z2), false) {
                    Some(w) => {
                        // δ_1 acts on (φ_1, ψ_1), one coordinate each
                        let phi = DenseMatrix::from_entries(1, 1, vec![w[0].clone()]).unwrap();
                        let psi = DenseMatrix::from_entries(1, 1, vec![w[1].clone()]).unwrap();
                        let rep = check_equivalence(d, d2, &[scalar_matrix(1), phi], &[scalar_matrix(1), psi]).unwrap();
                        assert!(rep.passed(), "{:?}", rep.failures.first());
                    }
                    None => {
                        for (p, s) in [(0, 0), (1, 0), (0, 1), (-1, 1), (2, -1)] {
                            let rep = check_equivalence(d, d2, &[scalar_matrix(1), scalar_matrix(p)], &[scalar_matrix(1), scalar_matrix(s)]).unwrap();
                            assert!(!rep.passed());
                        }
                    }
                }
            }
        }
    }
}
