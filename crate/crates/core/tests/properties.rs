use num_bigint::BigUint;
use proptest::prelude::*;

use cyclenum::classical::{entringer_triangle, viennot_counts};
use cyclenum::count::{count_p, count_q, count_r};
use cyclenum::density::{densities, is_partition};
use cyclenum::engine::{evolve_p, evolve_q, evolve_r};
use cyclenum::oracle::enumerate_cyclic_orders;
use cyclenum::{CyclicOrder, Sign, SignWord};

fn word_strategy(min: usize, max: usize) -> impl Strategy<Value = SignWord> {
    prop::collection::vec(any::<bool>(), min..=max)
        .prop_map(|bits| SignWord::new(bits.into_iter().map(Sign::from_bool).collect()))
}

#[test]
fn every_enumerated_order_is_a_cyclic_order() {
    for n in 3..=7 {
        let mut count = 0;
        for z in enumerate_cyclic_orders(n).unwrap() {
            assert!(z.validate_cyclic_axioms(), "{z}");
            count += 1;
        }
        assert_eq!(count, (1..n).product::<usize>());
    }
}

#[test]
fn identity_cycle_has_all_plus_pattern() {
    for n in 3..=12 {
        let z = CyclicOrder::from_sequence(&(1..=n).collect::<Vec<_>>()).unwrap();
        assert_eq!(z.cyclic_descent_pattern(), SignWord::all_plus(n - 2));
    }
}

#[test]
fn three_counting_routes_agree() {
    for len in 1..=7 {
        for w in SignWord::all_of_len(len) {
            assert_eq!(viennot_counts(&w.involution()), count_p(&w).unwrap(), "{w}");
        }
    }
}

#[test]
fn entringer_rows_sum_to_all_plus_counts() {
    let rows = entringer_triangle(12);
    for n in 2..=12 {
        assert_eq!(
            rows[n - 1].sum(),
            count_p(&SignWord::all_plus(n - 1)).unwrap()
        );
    }
}

#[test]
fn density_rows_are_partitions() {
    for row in densities(30, 10) {
        assert!(is_partition(&row), "n = {}", row.n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_identities(w in word_strategy(2, 20)) {
        let p = evolve_p(&w).unwrap().sum();
        let (qp, qm) = evolve_q(&w).unwrap();
        let r: Vec<BigUint> = evolve_r(&w).unwrap().iter().map(|x| x.sum()).collect();
        prop_assert_eq!(qp.sum() + qm.sum(), p.clone());
        prop_assert_eq!(r.iter().sum::<BigUint>(), p);
        prop_assert_eq!(&r[0] + &r[1] + &r[2], qp.sum());
    }

    #[test]
    fn sign_classes_cover_each_q_class(w in word_strategy(1, 15)) {
        for eta in [Sign::Plus, Sign::Minus] {
            let split = count_r(&w, eta, Sign::Plus).unwrap() + count_r(&w, eta, Sign::Minus).unwrap();
            prop_assert_eq!(split, count_q(&w, eta).unwrap());
        }
    }

    #[test]
    fn reversal_swaps_all_signs(w in word_strategy(1, 15)) {
        // Reading the circle backwards flips every triple.
        let flipped = SignWord::new(w.signs().iter().map(|&s| -s).collect());
        prop_assert_eq!(count_p(&w).unwrap(), count_p(&flipped).unwrap());
    }

    #[test]
    fn deletion_restricts_triples(seq in Just((1..=8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let z = CyclicOrder::from_sequence(&seq).unwrap();
        let small = z.delete_max().unwrap();
        for x in 1..=7 {
            for y in (1..=7).filter(|&y| y != x) {
                for t in (1..=7).filter(|&t| t != x && t != y) {
                    prop_assert_eq!(small.in_order(x, y, t).unwrap(), z.in_order(x, y, t).unwrap());
                }
            }
        }
    }
}
