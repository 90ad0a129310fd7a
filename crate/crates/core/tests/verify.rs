mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvalg::sample::random_poly;
use solvalg::verify::{
    check_filtered_type, check_graded_type, find_weights, verify_degree_laws, verify_degree_laws_with, DegreeLawReport,
    DegreeWitness, TypeVerdict, WeightMode,
};
use solvalg::{check_pbw_confluence, check_solvable, AlgebraPresentation, DegreeFunction, Exec, Field, Multiplier, Polynomial};

fn uniform3() -> DegreeFunction {
    DegreeFunction::uniform(3)
}

#[test]
fn graded_instance_verdicts() {
    let p = graded_instance();
    assert_eq!(check_graded_type(&p, &d214()).unwrap().verdict, TypeVerdict::Graded);
    assert_eq!(check_filtered_type(&p, &d214()).unwrap().verdict, TypeVerdict::Graded);
    for report in [check_graded_type(&p, &uniform3()).unwrap(), check_filtered_type(&p, &uniform3()).unwrap()] {
        assert_eq!(report.verdict, TypeVerdict::Neither);
        let w = DegreeWitness { i: 0, j: 2, term: m(&[0, 2, 1]), degree: 3, required: 2 };
        assert!(report.witnesses.contains(&w));
    }
}

#[test]
fn uniform_weights_without_mu_term() {
    // Without the a2²a3 term the only tail term is a2^6, still too heavy.
    let p = example_algebra(1, 0, &[(1, 6)]);
    let report = check_graded_type(&p, &uniform3()).unwrap();
    assert_eq!(report.verdict, TypeVerdict::Neither);
    assert_eq!(report.witnesses, vec![DegreeWitness { i: 0, j: 2, term: m(&[0, 6, 0]), degree: 6, required: 2 }]);
}

#[test]
fn filtered_instance_verdict() {
    let report = check_filtered_type(&filtered_instance(), &d214()).unwrap();
    assert_eq!(report.verdict, TypeVerdict::FilteredOnly);
    assert_eq!(report.witnesses, vec![DegreeWitness { i: 0, j: 2, term: m(&[0, 5, 0]), degree: 5, required: 6 }]);
}

#[test]
fn low_degree_tails_are_never_neither() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for mask in 1u32..128 {
        for mu in [0, 1, -3] {
            let f: Vec<(i64, u32)> = (0..7).filter(|e| mask & (1 << e) != 0).map(|e| (rng.gen_range(1..6), e)).collect();
            let p = example_algebra(rng.gen_range(1..4), mu, &f);
            let verdict = check_filtered_type(&p, &d214()).unwrap().verdict;
            assert_ne!(verdict, TypeVerdict::Neither);
            assert_eq!(verdict == TypeVerdict::Graded, mask == 1 << 6);
        }
    }
}

#[test]
fn example_instances_are_solvable_and_confluent() {
    let ord = gr_order();
    let mut instances = vec![graded_instance(), filtered_instance(), example_algebra(1, 0, &[(1, 6)])];
    for e in 0..=6 {
        instances.push(example_algebra(2, 1, &[(1, e)]));
    }
    for p in &instances {
        assert!(check_solvable(p, &ord).unwrap().passed());
        assert!(check_pbw_confluence(p, solvalg::DEFAULT_BUDGET).unwrap().passed());
    }
}

#[test]
fn weight_discovery_on_example_instance() {
    assert_eq!(find_weights(&graded_instance(), WeightMode::Graded, 16), Some(d214()));
    // Without μ the only equation is m_1 + m_3 = 6 m_2.
    let w = find_weights(&example_algebra(1, 0, &[(1, 6)]), WeightMode::Graded, 16).unwrap();
    assert_eq!(w.weights(), &[1, 1, 5]);
    // f = a2^5 is graded too, for m_1 = 2 m_2 and m_3 = 3 m_2.
    let w = find_weights(&filtered_instance(), WeightMode::Graded, 16).unwrap();
    assert_eq!(w.weights(), &[2, 1, 3]);
    assert_eq!(find_weights(&example_algebra(1, 1, &[(1, 2)]), WeightMode::Graded, 16), None);
    let w = find_weights(&filtered_instance(), WeightMode::Filtered, 16).unwrap();
    assert_ne!(check_filtered_type(&filtered_instance(), &w).unwrap().verdict, TypeVerdict::Neither);
    let comm = AlgebraPresentation::commutative(3, Field::Rational);
    assert_eq!(find_weights(&comm, WeightMode::Graded, 1), Some(uniform3()));
}

#[test]
fn weight_discovery_respects_bound() {
    assert_eq!(find_weights(&graded_instance(), WeightMode::Graded, 3), None);
    assert_eq!(find_weights(&graded_instance(), WeightMode::Graded, 4), Some(d214()));
    assert_eq!(find_weights(&graded_instance(), WeightMode::Graded, 0), None);
}

/// Independent minimality oracle: every vector in `[1, bound]^n` in order
/// of increasing sum, then lex.
fn brute_force_weights(p: &AlgebraPresentation, mode: WeightMode, bound: u64) -> Option<DegreeFunction> {
    let n = p.nvars();
    let mut all: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..n {
        all = all.into_iter().flat_map(|v| (1..=bound).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    all.sort_by_key(|v| (v.iter().sum::<u64>(), v.clone()));
    all.into_iter().map(|v| DegreeFunction::from_weights(v).unwrap()).find(|d| {
        let verdict = check_graded_type(p, d).unwrap().verdict;
        match mode {
            WeightMode::Graded => verdict == TypeVerdict::Graded,
            WeightMode::Filtered => verdict != TypeVerdict::Neither,
        }
    })
}

fn presentation_from(tails: &[Vec<(i64, [u32; 3])>]) -> AlgebraPresentation {
    let mut p = AlgebraPresentation::commutative(3, Field::Rational);
    for ((i, j), terms) in [(0, 1), (0, 2), (1, 2)].into_iter().zip(tails) {
        let mut tail = Polynomial::zero(3);
        for (c, e) in terms {
            tail.add_term(m(e), q(*c));
        }
        p.set_relation(i, j, q(1), tail).unwrap();
    }
    p
}

fn tail_strategy() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
    prop::collection::vec((1i64..4, [0u32..4, 0u32..4, 0u32..4]), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn found_weights_are_sound_and_minimal(tails in prop::collection::vec(tail_strategy(), 3), graded in any::<bool>()) {
        let p = presentation_from(&tails);
        let mode = if graded { WeightMode::Graded } else { WeightMode::Filtered };
        let found = find_weights(&p, mode, 6);
        if let Some(d) = &found {
            let verdict = check_graded_type(&p, d).unwrap().verdict;
            match mode {
                WeightMode::Graded => prop_assert_eq!(verdict, TypeVerdict::Graded),
                WeightMode::Filtered => prop_assert_ne!(verdict, TypeVerdict::Neither),
            }
        }
        prop_assert_eq!(found, brute_force_weights(&p, mode, 6));
    }
}

#[test]
fn graded_type_products_are_homogeneous() {
    let p = graded_instance();
    let d = d214();
    let mut mult = Multiplier::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..300 {
        let f = d.leading_homogeneous(&random_poly(&mut rng, 3, Field::Rational, 2, 4)).unwrap();
        let g = d.leading_homogeneous(&random_poly(&mut rng, 3, Field::Rational, 2, 4)).unwrap();
        let fg = mult.mul(&f, &g).unwrap();
        let expected = d.deg_poly(&f).unwrap() + d.deg_poly(&g).unwrap();
        assert!(d.is_homogeneous_of(&fg, expected).unwrap());
    }
}

#[test]
fn degree_laws_hold_on_example_instances() {
    let comm = AlgebraPresentation::commutative(3, Field::Rational);
    assert_eq!(verify_degree_laws(&comm, &d214(), 2).unwrap(), DegreeLawReport::Pass);
    assert_eq!(verify_degree_laws(&graded_instance(), &d214(), 2).unwrap(), DegreeLawReport::Pass);
    assert_eq!(verify_degree_laws(&filtered_instance(), &d214(), 1).unwrap(), DegreeLawReport::Pass);
}

#[test]
fn degree_laws_detect_heavy_tail() {
    // Under uniform weights a3 a1 produces a2^6 of degree 6 > 2.
    let report = verify_degree_laws(&graded_instance(), &uniform3(), 1).unwrap();
    match report {
        DegreeLawReport::Additivity { product_degree, expected, .. } => assert!(product_degree > expected),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for (p, d) in [(graded_instance(), d214()), (graded_instance(), uniform3()), (filtered_instance(), d214())] {
        let seq = verify_degree_laws_with(&p, &d, 1, Exec::Sequential).unwrap();
        let par = verify_degree_laws_with(&p, &d, 1, Exec::default()).unwrap();
        assert_eq!(seq, par);
    }
}

#[test]
fn dimension_mismatch_is_reported() {
    let d = DegreeFunction::uniform(2);
    assert!(check_graded_type(&graded_instance(), &d).is_err());
    assert!(verify_degree_laws(&graded_instance(), &d, 1).is_err());
}
