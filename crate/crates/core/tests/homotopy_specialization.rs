use std::collections::BTreeSet;
use std::sync::Arc;

use matchrb::algebra::{check_algebra, check_bimodule};
use matchrb::dendriform::{check_mda, MatchingDendriform};
use matchrb::homotopy::{
    check_a_infinity, check_a_infinity_bimodule, check_homotopy_mda, check_homotopy_mrrba, homotopy_functor_g,
    induce_homotopy_dendriform, AInfinityAlgebra, AInfinityBimodule, GradedSpace, HomotopyMda, HomotopyMrrba,
};
use matchrb::operad::{multiplication_from_mda, OperadElement};
use matchrb::operators::check_mrrba;
use matchrb::{random, Algebra, Bimodule, CertificateReport, DenseTensor, LabelSet, Scalar};
use rand::Rng;

const SEEDS: u64 = 24;

type Located = BTreeSet<(String, Vec<String>)>;

fn located(rep: &CertificateReport) -> Located {
    rep.failures.iter().map(|f| (f.identity.clone(), f.index.clone())).collect()
}

/// Drops the leading arity tag and the trailing degree tuple.
fn core_index(index: &[String]) -> Vec<String> {
    index[1..index.len() - 1].to_vec()
}

fn bump(rng: &mut impl Rng, t: &mut DenseTensor) {
    let idx: Vec<usize> = t.shape().iter().map(|&n| rng.gen_range(0..n)).collect();
    let v = t.get(&idx) + &Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
    t.set(&idx, v);
}

#[test]
fn degree_zero_stasheff_failures_are_associativity_failures() {
    let mut failing = 0;
    for seed in 0..SEEDS {
        let mut rng = random::rng(seed);
        let f = random::rota_baxter_family(&mut rng, 1);
        let mut mult = f.algebra().mult().clone();
        if seed % 4 != 0 {
            bump(&mut rng, &mut mult);
        }
        let a = Algebra::new(f.algebra().basis_names().to_vec(), mult).unwrap();
        let ungraded = check_algebra(&a);
        let ours = check_a_infinity(&AInfinityAlgebra::from_algebra(&a), 3);
        assert!(ours.failures.iter().all(|x| x.index[0] == "n=3"));
        let expected: Located = ungraded.failures.iter().map(|x| ("associativity".to_string(), x.index.clone())).collect();
        let got: Located = ours.failures.iter().map(|x| ("associativity".to_string(), core_index(&x.index))).collect();
        assert_eq!(got, expected, "seed {seed}");
        failing += usize::from(!ungraded.passed());
    }
    assert!(failing > 0);
}

#[test]
fn degree_zero_mixed_failures_are_bimodule_failures() {
    let mut failing = 0;
    for seed in 0..SEEDS {
        let mut rng = random::rng(100 + seed);
        let f = random::rota_baxter_family(&mut rng, 1);
        let m = &f.module;
        let (mut left, mut right) = (m.left().clone(), m.right().clone());
        match seed % 3 {
            0 => {}
            1 => bump(&mut rng, &mut left),
            _ => bump(&mut rng, &mut right),
        }
        let m = Bimodule::new(m.algebra.clone(), m.basis_names().to_vec(), left, right).unwrap();
        let ungraded = check_bimodule(&m);
        let ours = check_a_infinity_bimodule(&AInfinityBimodule::from_bimodule(&m), 3).unwrap();
        assert!(ours.failures.iter().all(|x| x.index[0] == "n=3"));
        // the module slot fixes which bimodule identity is meant
        let got: Located = ours
            .failures
            .iter()
            .map(|x| {
                let name = match x.index[1].as_str() {
                    "module-slot=1" => "right",
                    "module-slot=2" => "middle",
                    _ => "left",
                };
                (name.to_string(), x.index[2..x.index.len() - 1].to_vec())
            })
            .collect();
        assert_eq!(got, located(&ungraded), "seed {seed}");
        failing += usize::from(!ungraded.passed());
    }
    assert!(failing > 0);
}

#[test]
fn degree_zero_operator_failures_are_rota_baxter_failures() {
    let mut failing = 0;
    for seed in 0..SEEDS {
        let mut rng = random::rng(200 + seed);
        let f = random::operator_family(&mut rng, 1 + (seed % 2) as usize);
        let ungraded = check_mrrba(&f);
        let ours = check_homotopy_mrrba(&HomotopyMrrba::from_family(&f), 3).unwrap();
        assert!(ours.failures.iter().all(|x| x.index[0] == "k=2"));
        let got: Located = ours
            .failures
            .iter()
            .map(|x| {
                let mut index: Vec<String> = x.index[1..3].iter().map(|s| s.replacen("x1", "x", 1).replacen("x2", "y", 1)).collect();
                index.extend_from_slice(&x.index[3..x.index.len() - 1]);
                ("matching-rota-baxter".to_string(), index)
            })
            .collect();
        assert_eq!(got, located(&ungraded), "seed {seed}");
        failing += usize::from(!ungraded.passed());
    }
    assert!(failing > 0);
}

#[test]
fn degree_zero_homotopy_dendriform_failures_are_dendriform_failures() {
    let mut failing = 0;
    for seed in 0..SEEDS {
        let mut rng = random::rng(300 + seed);
        let d = random::dendriform(&mut rng, 1 + (seed % 2) as usize);
        let ungraded = check_mda(&d);
        let ours = check_homotopy_mda(&HomotopyMda::from_dendriform(&d), 3).unwrap();
        assert!(ours.failures.iter().all(|x| x.index[0] == "n=3"));
        // position r keeps the two labels other than x_r, which play x and y
        let got: Located = ours
            .failures
            .iter()
            .map(|x| {
                let name = match x.index[3].as_str() {
                    "position=1" => "prec-prec",
                    "position=2" => "succ-prec",
                    _ => "succ-succ",
                };
                let mut index = vec![format!("x={}", x.index[1]), format!("y={}", x.index[2])];
                index.extend_from_slice(&x.index[4..x.index.len() - 1]);
                (name.to_string(), index)
            })
            .collect();
        assert_eq!(got, located(&ungraded), "seed {seed}");
        failing += usize::from(!ungraded.passed());
    }
    assert!(failing > 0);
}

/// `D = span{d0, d1}` with `|d0| = 0`, `|d1| = 1`, the differential
/// `d1 ↦ d0`, and `a ≺_y b = c_y·ab` for the graded-commutative product with
/// unit `d0` and `d1·d1 = 0`; `≻` vanishes.
fn two_degree_fixture() -> HomotopyMda {
    let labels = LabelSet::numbered(2);
    let space = GradedSpace::from_blocks(&[(0, 1), (1, 1)], "d");
    let mut product = DenseTensor::zeros(&[2, 2, 2]);
    product.set(&[0, 0, 0], Scalar::one());
    product.set(&[0, 1, 1], Scalar::one());
    product.set(&[1, 0, 1], Scalar::one());
    let prec = (1..=2).map(|c| product.scale(&Scalar::from_int(c))).collect();
    let succ = vec![DenseTensor::zeros(&[2, 2, 2]); 2];
    let d = MatchingDendriform::new(space.basis_names().to_vec(), labels.clone(), prec, succ).unwrap();
    let differential = OperadElement::from_fn(2, labels.clone(), 1, |_, _, us| {
        if us[0] == 1 {
            vec![Scalar::one(), Scalar::zero()]
        } else {
            vec![Scalar::zero(); 2]
        }
    })
    .unwrap();
    HomotopyMda::new(space, labels, vec![differential, multiplication_from_mda(&d)]).unwrap()
}

#[test]
fn two_degree_fixture_round_trips_through_the_functor() {
    let h = two_degree_fixture();
    assert!(check_homotopy_mda(&h, 4).unwrap().passed());
    let g = homotopy_functor_g(&h).unwrap();
    assert!(g.module.etas().iter().take(2).all(|slots| slots.iter().any(|t| t.entries().iter().any(|v| !v.is_zero()))));
    assert!(check_a_infinity(&g.module.algebra, 4).passed());
    assert!(check_a_infinity_bimodule(&g.module, 4).unwrap().passed());
    assert!(check_homotopy_mrrba(&g, 4).unwrap().passed());
    let back = induce_homotopy_dendriform(&g).unwrap();
    assert_eq!(back, h);
    assert!(check_homotopy_mda(&back, 3).unwrap().passed());
}

#[test]
fn corrupting_a_degree_respecting_entry_is_located() {
    let g = homotopy_functor_g(&two_degree_fixture()).unwrap();
    let mut etas = g.module.etas().to_vec();
    // η_2 at slot 2 on (d0⊗0, d0): degree 0 + 0 into d0 is allowed
    let v = etas[1][1].get(&[0, 0, 0]) + &Scalar::one();
    etas[1][1].set(&[0, 0, 0], v);
    let broken = AInfinityBimodule::new(g.module.algebra.clone(), g.module.space.clone(), etas).unwrap();
    let rep = check_a_infinity_bimodule(&broken, 3).unwrap();
    assert!(!rep.passed());
    let f = &rep.failures[0];
    assert!(f.index[0].starts_with("n=") && f.index[1].starts_with("module-slot=") && f.index.last().unwrap().starts_with("degrees="));
    let bad = HomotopyMrrba::new(g.labels.clone(), Arc::new(broken), g.maps.clone()).unwrap();
    assert!(check_homotopy_mrrba(&bad, 3).is_err());
}

#[test]
fn a_sign_flip_in_the_derivation_rule_is_detected() {
    // negating d1·d0 alone breaks the graded Leibniz rule at (d1, d0)
    let h = two_degree_fixture();
    let mut pis = h.pis().to_vec();
    let labels = h.labels.clone();
    for x in 0..2 {
        let t = pis[1].component_mut(1, &[0, x]);
        let v = &Scalar::from_int(-1) * t.get(&[1, 0, 1]);
        t.set(&[1, 0, 1], v);
    }
    let broken = HomotopyMda::new(h.space.clone(), labels, pis).unwrap();
    let rep = check_homotopy_mda(&broken, 3).unwrap();
    assert!(!rep.passed());
    assert!(matches!(homotopy_functor_g(&broken), Err(matchrb::Error::Precondition(_))));
}
