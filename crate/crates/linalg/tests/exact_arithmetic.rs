use matchrb_linalg::{cohomology_dim, q, rank, ColumnMatrix, DenseMatrix, Scalar, SparseVector};
use num_rational::BigRational;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = DenseMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-3i64..=3, 1i64..=3), r * c)
            .prop_map(move |v| DenseMatrix::from_entries(r, c, v.into_iter().map(|(n, d)| q(n, d)).collect()).unwrap())
    })
}

fn vector(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-4i64..=4, 1i64..=2), len).prop_map(|v| v.into_iter().map(|(n, d)| q(n, d)).collect())
}

fn with_vectors() -> impl Strategy<Value = (DenseMatrix, Vec<Scalar>, Vec<Scalar>)> {
    small_matrix().prop_flat_map(|m| {
        let (r, c) = (m.rows(), m.cols());
        (Just(m), vector(c), vector(r))
    })
}

proptest! {
    #[test]
    fn image_vectors_are_solved_by_both_pivot_orders((m, x, _) in with_vectors()) {
        let b = m.apply(&x);
        let cm = ColumnMatrix::from_dense(&m);
        for reverse in [false, true] {
            let y = cm.solve(&b, reverse).expect("b lies in the image");
            prop_assert_eq!(m.apply(&y), b.clone());
        }
    }

    #[test]
    fn vectors_outside_the_image_have_no_solution((m, _, b) in with_vectors()) {
        let cm = ColumnMatrix::from_dense(&m);
        let grows = cm.hstack(&ColumnMatrix::new(m.rows(), vec![SparseVector::from_dense(&b)])).rank() > cm.rank();
        prop_assert_eq!(cm.solve(&b, false).is_none(), grows);
    }

    /// `m` followed by a matrix whose rows span its left kernel is exact.
    #[test]
    fn image_followed_by_its_cokernel_is_exact(m in small_matrix()) {
        let left_kernel = ColumnMatrix::from_dense(&m.transpose()).kernel_basis();
        let rows: Vec<Vec<Scalar>> = left_kernel.iter().map(|v| v.to_dense(m.rows())).collect();
        let d_out = DenseMatrix::from_rows(m.rows(), rows).unwrap();
        prop_assert_eq!(d_out.rows(), m.rows() - rank(&m));
        prop_assert_eq!(cohomology_dim(&m, &d_out), Ok(0));
    }

    /// Arithmetic near the machine-word boundary agrees with big rationals.
    #[test]
    fn overflowing_arithmetic_matches_big_rationals(
        a in (i64::MAX - 1000)..=i64::MAX, b in 1i64..=i64::MAX, c in i64::MIN..=(i64::MIN + 1000), d in 2i64..=97,
    ) {
        let (x, y) = (Scalar::new(a, b), Scalar::new(c, d));
        let (bx, by) = (x.to_big(), y.to_big());
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        // values that fit again come back in the small form
        let back = &(&x * &y) / &y;
        prop_assert_eq!(back.clone(), x);
        prop_assert_eq!(back.to_big(), BigRational::new(a.into(), b.into()));
    }
}

#[test]
fn serialized_scalars_are_reduced_fractions() {
    let v = vec![q(6, -4), Scalar::from_int(0), Scalar::from_int(7)];
    let text = serde_json::to_string(&v).unwrap();
    assert_eq!(text, r#"["-3/2","0","7"]"#);
    let back: Vec<Scalar> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);
    assert!(serde_json::from_str::<Scalar>(r#""1/0""#).is_err());
}
