mod oracle;

use fock_crystal::crystal::{crystal_e, crystal_f, signature, BoxOrder};
use fock_crystal::fock::{apply_e, apply_f, apply_h, depth, Depth, FockVector};
use fock_crystal::multipartition::{enumerate, residue, Multicharge, Multipartition};
use fock_crystal::weight::{lambda_s, pair_coroot, wt};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..6, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        v
    })
}

/// A charge together with a multipartition of matching level.
fn setup() -> impl Strategy<Value = (Multicharge, Multipartition)> {
    (2usize..6, prop::collection::vec(-5i64..6, 1..4)).prop_flat_map(|(e, s)| {
        let l = s.len();
        prop::collection::vec(partition(), l).prop_map(move |parts| {
            (
                Multicharge::new(e, s.clone()).unwrap(),
                Multipartition::from_parts(parts).unwrap(),
            )
        })
    })
}

fn order() -> impl Strategy<Value = BoxOrder> {
    prop_oneof![Just(BoxOrder::Default), Just(BoxOrder::Mirror)]
}

proptest! {
    #[test]
    fn boxes_round_trip((c, mp) in setup()) {
        for b in mp.removable_boxes(&c, None) {
            let smaller = mp.remove_box(&b).unwrap();
            prop_assert!(smaller.is_addable(&b));
            prop_assert_eq!(smaller.add_box(&b).unwrap(), mp.clone());
        }
        for b in mp.addable_boxes(&c, None) {
            let bigger = mp.add_box(&b).unwrap();
            prop_assert!(bigger.is_removable(&b));
            prop_assert_eq!(bigger.remove_box(&b).unwrap(), mp.clone());
        }
    }

    #[test]
    fn addable_and_removable_are_disjoint((c, mp) in setup()) {
        let add = mp.addable_boxes(&c, None);
        let rem = mp.removable_boxes(&c, None);
        prop_assert!(add.iter().all(|b| !rem.contains(b)));
        prop_assert_eq!(add.len(), oracle::addable(&oracle::parts_of(&mp)).len());
        prop_assert_eq!(rem.len(), oracle::removable(&oracle::parts_of(&mp)).len());
        for b in add.iter().chain(&rem) {
            prop_assert!(residue(b, &c).unwrap() < c.e());
        }
    }

    #[test]
    fn coroot_pairing_counts_boxes((c, mp) in setup()) {
        let w = wt(&mp, &c);
        let parts = oracle::parts_of(&mp);
        for i in 0..c.e() {
            let add = mp.addable_boxes(&c, Some(i)).len() as i64;
            let rem = mp.removable_boxes(&c, Some(i)).len() as i64;
            prop_assert_eq!(pair_coroot(i, &w), add - rem);
            prop_assert_eq!(pair_coroot(i, &w), oracle::pairing(&parts, c.e(), c.charge(), i));
        }
        // Adding boxes never changes the level.
        prop_assert_eq!(w.level(), lambda_s(&c).level());
    }

    #[test]
    fn signature_statistics((c, mp) in setup(), order in order()) {
        let w = wt(&mp, &c);
        for i in 0..c.e() {
            let sig = signature(i, &mp, &c, order);
            let add = mp.addable_boxes(&c, Some(i)).len() as i64;
            let rem = mp.removable_boxes(&c, Some(i)).len() as i64;
            prop_assert_eq!(sig.phi as i64 - sig.epsilon as i64, add - rem);
            prop_assert_eq!(sig.phi as i64 - sig.epsilon as i64, pair_coroot(i, &w));

            // epsilon is the length of the i-string above mp.
            let mut cur = mp.clone();
            for _ in 0..sig.epsilon {
                cur = crystal_e(i, &cur, &c, order).expect("string continues");
            }
            prop_assert!(crystal_e(i, &cur, &c, order).is_none());

            if let Some(up) = crystal_f(i, &mp, &c, order) {
                prop_assert_eq!(crystal_e(i, &up, &c, order), Some(mp.clone()));
            }
            if let Some(down) = crystal_e(i, &mp, &c, order) {
                prop_assert_eq!(crystal_f(i, &down, &c, order), Some(mp.clone()));
            }
        }
    }

    #[test]
    fn epsilon_bounded_by_depth((c, mp) in setup(), order in order()) {
        let v = FockVector::basis(mp.clone());
        for i in 0..c.e() {
            let eps = signature(i, &mp, &c, order).epsilon;
            match depth(i, &v, &c) {
                Depth::Finite(d) => prop_assert!(eps <= d),
                Depth::NegInfinity => prop_assert!(false, "basis vectors are nonzero"),
            }
        }
    }

    #[test]
    fn commutator_on_random_vectors((c, mp) in setup()) {
        let v = FockVector::basis(mp);
        for i in 0..c.e() {
            let lhs = apply_e(i, &apply_f(i, &v, &c), &c).sub(&apply_f(i, &apply_e(i, &v, &c), &c));
            prop_assert_eq!(lhs, apply_h(i, &v, &c));
        }
    }

    #[test]
    fn text_round_trips((_c, mp) in setup()) {
        prop_assert_eq!(Multipartition::parse(&mp.format()).unwrap(), mp.clone());
        let v = FockVector::basis(mp);
        prop_assert_eq!(FockVector::from_json(&v.to_json()).unwrap(), v);
    }
}

#[test]
fn enumeration_matches_generating_function() {
    for l in 1..=3 {
        for n in 0..=10 {
            let mps = enumerate(n, l);
            assert_eq!(
                mps.len() as u64,
                oracle::multipartition_count(n, l),
                "n={n} l={l}"
            );
            assert!(mps.iter().all(|mp| mp.rank() == n && mp.level() == l));
            let mut sorted = mps.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), mps.len());
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate(6, 2), enumerate(6, 2));
}
