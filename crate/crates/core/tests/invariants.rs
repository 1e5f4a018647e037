use std::collections::BTreeSet;

use proptest::prelude::*;

use cylindric::diagrams::{in_lambda_plus_kappa, is_dominant, is_generic_partition, PeriodicSkewDiagram};
use cylindric::plane_partitions::{enumerate_antidominant, generic_bijection, generic_bijection_inverse};
use cylindric::qalgebra::{char_equal, int, rat, Rational};
use cylindric::representation::{character_l, character_standard, d_lambda, window, TableauModule};
use cylindric::tableaux::{content_vector, enumerate_restricted, enumerate_st_gamma, is_standard, rho};

fn partition() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=4, 1..=3).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

fn basis(d: &PeriodicSkewDiagram, max_weight: i64) -> Vec<Vec<i64>> {
    enumerate_st_gamma(d, max_weight).into_iter().flat_map(|f| f.tableaux).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straight_shapes_are_cylinders_exactly_in_lambda_plus(lambda in partition(), s in 1i64..=6, r in 1i64..=2) {
        let kappa = rat(s, r);
        let d = PeriodicSkewDiagram::new_unchecked(
            &lambda.iter().map(|&x| int(x)).collect::<Vec<_>>(),
            &vec![int(0); lambda.len()],
            kappa.clone(),
        ).unwrap();
        prop_assert_eq!(d.is_valid(), d.check_periodic_window(3));
        if r == 1 {
            prop_assert_eq!(d.is_valid(), in_lambda_plus_kappa(&lambda, &kappa));
        }
    }

    #[test]
    fn dominant_pairs_give_cylinders(a in prop::collection::vec(0i64..=6, 2), b in prop::collection::vec(0i64..=3, 2), kappa in 2i64..=5) {
        let (hi, lo) = (a[0].max(a[1]), a[0].min(a[1]));
        let lambda = vec![int(hi), int(lo)];
        let mu = vec![int(hi - b[0]), int(lo - b[1])];
        let k = int(kappa);
        prop_assume!(b[0] + b[1] > 0 && is_dominant(&lambda, &k) && is_dominant(&mu, &k));
        let d = PeriodicSkewDiagram::new_unchecked(&lambda, &mu, k).unwrap();
        prop_assert!(d.is_valid());
        prop_assert!(d.check_periodic_window(3));
    }

    #[test]
    fn generic_bijection_inverts(n in 1usize..=4, seed in 0usize..1000, pick in 0usize..50) {
        let zetas = enumerate_antidominant(n, 4);
        let zeta = &zetas[pick % zetas.len()];
        let mut t: Vec<i64> = (1..=n as i64).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            t.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let img = generic_bijection(n, zeta, &t);
        prop_assert_eq!(generic_bijection_inverse(&img), (zeta.clone(), t));
    }

    #[test]
    fn generic_kappa_character_is_standard(lambda in partition(), extra in 0i64..=3) {
        let kappa = int(lambda[0] + lambda.len() as i64 + extra);
        prop_assert!(is_generic_partition(&lambda, &kappa));
        let a = character_l(&lambda, &kappa, 4).unwrap();
        let b = character_standard(&lambda, &kappa, 4).unwrap();
        prop_assert!(char_equal(&a, &b));
    }
}

fn small_cases() -> Vec<PeriodicSkewDiagram> {
    vec![
        PeriodicSkewDiagram::from_partitions(&[1, 1], &[], int(3)).unwrap(),
        PeriodicSkewDiagram::from_partitions(&[2, 1], &[], int(3)).unwrap(),
        PeriodicSkewDiagram::from_partitions(&[2, 1], &[], rat(5, 2)).unwrap(),
        PeriodicSkewDiagram::from_partitions(&[3, 1], &[1], int(4)).unwrap(),
    ]
}

#[test]
fn restricted_tableaux_are_standard_and_positive() {
    for d in small_cases().into_iter().filter(|d| d.is_integral()) {
        for t in enumerate_restricted(&d).unwrap() {
            assert!(is_standard(&d, &t));
            assert!(rho(&t).iter().all(|&x| x >= 0), "{t:?}");
        }
    }
}

#[test]
fn contents_separate_tableaux() {
    for d in small_cases() {
        let b = basis(&d, 3);
        let distinct: BTreeSet<Vec<Rational>> = b.iter().map(|t| content_vector(&d, t)).collect();
        assert_eq!(distinct.len(), b.len(), "{}", d.describe());
    }
}

#[test]
fn degree_is_rho_plus_offset() {
    for (lambda, kappa) in [(vec![1, 1], int(3)), (vec![2, 1], int(3)), (vec![2, 1], rat(5, 2)), (vec![3, 1], int(4))] {
        let d = PeriodicSkewDiagram::from_partitions(&lambda, &[], kappa.clone()).unwrap();
        let m = TableauModule::new(d.clone());
        for t in basis(&d, 3) {
            let expected = int(rho(&t).iter().sum()) + d_lambda(&lambda, &kappa);
            assert_eq!(m.degree(&t), expected, "{t:?}");
        }
    }
}

#[test]
fn intertwiners_reach_every_tableau() {
    for d in small_cases() {
        let m = TableauModule::new(d.clone());
        let start: Vec<i64> = (1..=d.n() as i64).collect();
        let orbit = m.intertwiner_orbit(&start, &window(5));
        for t in basis(&d, 2) {
            assert!(orbit.contains(&t), "{} misses {t:?}", d.describe());
        }
    }
}

#[test]
fn consequence_relations_hold() {
    for d in small_cases() {
        let b = basis(&d, 2);
        let reports = TableauModule::new(d.clone()).verify_relations(&b, &window(2), &["X", "Y"], false).unwrap();
        for r in reports {
            assert!(r.passed(), "{} {:?}", d.describe(), r);
            assert!(r.checked > 0);
        }
    }
}
