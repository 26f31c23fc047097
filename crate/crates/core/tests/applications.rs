mod common;

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use combinv::brick::{add_largest_brick, enumerate_obt, marked_row_counts, obt_system, remove_largest_brick, w_of};
use combinv::framework::{build_a, check_sorting_condition, local_terms};
use combinv::kostka::{enumerate_ssyt, kostka_system};
use combinv::rational::{from_big, int};
use combinv::refine::{cbt_find, nsym_h_to_psi, nsym_psi_to_h, refines, self_inverse_matrix, weighted_factors};
use combinv::rimhook::{border_rimhook_of_cell, cell_of_border_rimhook, enumerate_rht, rimhook_system};
use combinv::scalars::{big_w, big_z};
use combinv::shapes::{
    compositions, multiset_difference, partitions, rearrangements, sub_multisets, Composition, Partition,
};
use combinv::tableau::{is_horizontal_strip, skew_cells};
use combinv::{Exec, ShapeKey};

use common::{comp, part};

#[test]
fn ssyt_prefixes_are_strips() {
    for n in 1..=6 {
        for lambda in partitions(n) {
            for beta in compositions(n) {
                for t in enumerate_ssyt(&lambda, &beta).unwrap() {
                    for k in 1..=beta.len() {
                        let outer = t.restrict(k).unwrap();
                        let inner = t.restrict(k - 1).unwrap();
                        assert!(Partition::new(outer.shape().to_vec()).is_ok());
                        assert!(is_horizontal_strip(&skew_cells(outer.shape(), inner.shape())));
                    }
                }
            }
        }
    }
}

#[test]
fn sorting_condition() {
    for n in 0..=7 {
        assert!(check_sorting_condition(&build_a(&kostka_system(), n)), "kostka {n}");
        assert!(check_sorting_condition(&build_a(&rimhook_system(), n)), "rimhook {n}");
        assert!(check_sorting_condition(&build_a(&obt_system(), n)), "brick {n}");
    }
}

#[test]
fn rimhook_diagonal_has_n_terms() {
    for n in 1..=10 {
        for lambda in partitions(n) {
            assert_eq!(local_terms(&rimhook_system(), &lambda, &lambda).unwrap().len(), n, "{lambda}");
        }
    }
}

#[test]
fn border_numbering_round_trip() {
    for n in 1..=8 {
        for nu in partitions(n) {
            let mut seen = HashSet::new();
            for c in 1..=n {
                let (hook, rest) = border_rimhook_of_cell(&nu, c).unwrap();
                assert_eq!(rest.size() + hook.size(), n);
                assert_eq!(cell_of_border_rimhook(&nu, &hook).unwrap(), c);
                seen.insert(rest);
            }
            assert_eq!(seen.len(), n);
        }
    }
}

#[test]
fn rht_signs_match_hooks() {
    let found = enumerate_rht(&part(&[4, 3, 3, 1]), &comp(&[3, 4, 4])).unwrap();
    assert_eq!(found.len(), 2);
    assert!(found.iter().all(|(_, s)| *s == -1));
    assert_eq!(enumerate_rht(&part(&[3, 1]), &comp(&[4])).unwrap().len(), 1);
}

#[test]
fn refinement_is_a_partial_order() {
    for n in 1..=6 {
        let cs = compositions(n);
        for a in &cs {
            assert!(refines(a, a));
            for b in &cs {
                if a != b && refines(a, b) {
                    assert!(!refines(b, a));
                }
                assert_eq!(cbt_find(b, a).unwrap().is_some(), refines(a, b));
            }
        }
        for (a, b, c) in cs.iter().tuple_combinations() {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                if refines(x, y) && refines(y, z) {
                    assert!(refines(x, z));
                }
            }
        }
    }
}

#[test]
fn weighted_factor_examples() {
    let (z, l) = weighted_factors(&comp(&[4, 5, 5, 3]), &comp(&[3, 1, 3, 2, 5, 1, 2])).unwrap();
    assert_eq!((z, l), (BigUint::from(2700u32), BigUint::from(20u32)));
    let beta = comp(&[2, 3, 1]);
    assert_eq!(weighted_factors(&comp(&[6]), &beta).unwrap().0, big_z(&[2, 3, 1]));
    assert!(weighted_factors(&comp(&[1, 5]), &beta).is_err());
}

#[test]
fn self_inverse_and_nsym() {
    for n in 0..=6 {
        let a = self_inverse_matrix(n);
        assert!(a.mul(&a, Exec::default()).unwrap().is_identity());
        let h = nsym_h_to_psi(n);
        let p = nsym_psi_to_h(n);
        assert!(h.mul(&p, Exec::default()).unwrap().is_identity(), "{n}");
        assert!(p.mul(&h, Exec::default()).unwrap().is_identity(), "{n}");
    }
}

#[test]
fn brick_splitting_recursion() {
    for n in 1..=7 {
        for beta in compositions(n) {
            let (star, l) = beta.truncate().unwrap();
            for mu in partitions(n) {
                let mut sum = BigUint::from(0u8);
                for delta in sub_multisets(&mu) {
                    if delta.size() != star.size() {
                        continue;
                    }
                    let inner = if star.is_empty() { BigUint::one() } else { w_of(&star, &delta).unwrap() };
                    sum += big_w(&multiset_difference(&mu, &delta)).unwrap() * inner;
                }
                assert_eq!(w_of(&beta, &mu).unwrap(), sum, "{beta} {mu}");
                assert_eq!(l, beta.last_part().unwrap());
            }
        }
    }
}

#[test]
fn largest_brick_round_trip() {
    for n in 1..=6 {
        for lambda in partitions(n) {
            for beta in compositions(n) {
                let all = enumerate_obt(&lambda, &beta).unwrap();
                let mut images = HashSet::new();
                for t in &all {
                    let (k, rest) = remove_largest_brick(t).unwrap();
                    assert_eq!(&add_largest_brick(&lambda, k, &rest).unwrap(), t);
                    assert!(images.insert((k, rest)));
                }
            }
        }
    }
}

#[test]
fn marked_rows_balance() {
    for n in 1..=8 {
        for mu in partitions(n) {
            let (left, right) = marked_row_counts(&mu);
            assert_eq!(left, right);
            assert_eq!(from_big(left) / int(mu.len() as i64), from_big(big_w(&mu).unwrap()));
            assert_eq!(
                rearrangements(&mu).len(),
                rearrangements(&mu).into_iter().collect::<HashSet<Composition>>().len()
            );
        }
    }
}
