//! Exhaustive small-grid search for matching AYBE solutions, used to certify
//! the frozen r-matrix fixture.

use std::sync::Arc;

use matchrb::algebra::adjoint_bimodule;
use matchrb::fixtures;
use matchrb::operators::{aybe_tensor, check_matching_aybe, check_mrrba, operators_from_rmatrix, RMatrixFamily};
use matchrb::{DenseMatrix, LabelSet, Scalar};

fn grid_solutions(a: &matchrb::algebra::Algebra) -> Vec<DenseMatrix> {
    let d = a.dim();
    let mut out = Vec::new();
    for code in 0..3usize.pow((d * d) as u32) {
        let mut c = code;
        let mut m = DenseMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, Scalar::from_int((c % 3) as i64 - 1));
                c /= 3;
            }
        }
        if !m.is_zero() && aybe_tensor(a, &m, &m).is_zero() {
            out.push(m);
        }
    }
    out
}

#[test]
fn fixture_is_on_the_searched_solution_set() {
    let r = fixtures::aybe_solution();
    let sols = grid_solutions(&r.algebra);
    assert_eq!(sols.len(), 22);
    assert!(sols.contains(&r.tensors[0]));
    assert!(check_matching_aybe(&r).passed());
}

#[test]
fn every_grid_solution_induces_a_rota_baxter_operator() {
    let a = Arc::new(fixtures::upper_triangular());
    let module = Arc::new(adjoint_bimodule(&a));
    for s in grid_solutions(&a) {
        let r = RMatrixFamily::new(LabelSet::numbered(1), a.clone(), vec![s]).unwrap();
        let f = operators_from_rmatrix(&r, module.clone()).unwrap();
        assert!(check_mrrba(&f).passed());
    }
}

#[test]
fn scaled_pairs_of_solutions_solve_the_mixed_equation() {
    let a = Arc::new(fixtures::upper_triangular());
    let module = Arc::new(adjoint_bimodule(&a));
    for s in grid_solutions(&a).into_iter().take(6) {
        let t = s.scale(&Scalar::new(3, 2));
        let r = RMatrixFamily::new(LabelSet::numbered(2), a.clone(), vec![s, t]).unwrap();
        assert!(check_matching_aybe(&r).passed());
        assert!(check_mrrba(&operators_from_rmatrix(&r, module.clone()).unwrap()).passed());
    }
}
