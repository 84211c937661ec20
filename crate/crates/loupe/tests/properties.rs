mod common;

use common::*;
use loupe::identities::{check_law, Law};
use loupe::isotopes::principal_isotope;
use loupe::loop_core::{direct_product, find_isomorphism, quotient_loop, FiniteLoop};
use loupe::smarandache::{hyper_partition_check, HyperKind};
use loupe::substructures::{all_subloops, is_normal_subloop};
use loupe::Caps;
use proptest::prelude::*;
use proptest::sample::select;

fn any_ln() -> impl Strategy<Value = (u64, u64)> {
    select(vec![5u64, 7, 9, 11, 13, 15, 21, 25]).prop_flat_map(|n| (Just(n), select(ln_multipliers(n))))
}

/// A relabeling of `0..size` that keeps 0 fixed.
fn relabeling(size: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..size).collect::<Vec<_>>()).prop_shuffle().prop_map(|rest| {
        let mut p = vec![0];
        p.extend(rest);
        p
    })
}

fn relabel(l: &FiniteLoop, p: &[usize]) -> FiniteLoop {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    FiniteLoop::from_fn(l.order(), None, |x, y| p[l.mul(inv[x], inv[y])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn table_matches_formula((n, m) in any_ln()) {
        let l = ln(n, m);
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    prop_assert_eq!(l.mul(i as usize, j as usize) as u64, ln_product(n, m, i, j));
                }
            }
        }
    }

    #[test]
    fn divisions_invert_products((n, m) in any_ln(), a in 0usize..26, b in 0usize..26) {
        let l = ln(n, m);
        let (a, b) = (a % l.order(), b % l.order());
        prop_assert_eq!(l.mul(a, l.left_divide(a, b)), b);
        prop_assert_eq!(l.mul(l.right_divide(a, b), a), b);
        let assoc = l.associator(a, b, 0);
        prop_assert_eq!(assoc, 0);
    }

    #[test]
    fn relabeled_copies_are_isomorphic(((n, m), p) in any_ln().prop_flat_map(|(n, m)| (Just((n, m)), relabeling(n as usize + 1)))) {
        let l = ln(n, m);
        let copy = relabel(&l, &p);
        let w = find_isomorphism(&l, &copy).expect("isomorphic");
        prop_assert!(w.verify(&l, &copy));
        prop_assert!(w.inverse().verify(&copy, &l));
        prop_assert_eq!(check_law(&l, Law::WIP).holds, check_law(&copy, Law::WIP).holds);
    }

    #[test]
    fn isotopes_are_loops_with_identity_ba((n, m) in any_ln(), a in 0usize..26, b in 0usize..26) {
        let l = ln(n, m);
        let (a, b) = (a % l.order(), b % l.order());
        let iso = principal_isotope(&l, a, b).unwrap();
        prop_assert_eq!(iso.order(), l.order());
        prop_assert_eq!(iso.label(0), l.label(l.mul(b, a)));
    }

    #[test]
    fn generated_subloops_are_closed((n, m) in any_ln(), seed in prop::collection::vec(0usize..26, 1..3)) {
        let l = ln(n, m);
        let seed: Vec<usize> = seed.into_iter().map(|x| x % l.order()).collect();
        let s = l.generated_subloop(seed.iter().copied());
        for &x in &seed {
            prop_assert!(s.contains(x));
        }
        for &x in s.elements() {
            for &y in s.elements() {
                prop_assert!(s.contains(l.mul(x, y)));
            }
        }
    }

    #[test]
    fn hyperloop_families_partition((n, m) in any_ln()) {
        prop_assert!(hyper_partition_check(&ln(n, m), HyperKind::Hyper).holds);
    }
}

#[test]
fn quotients_by_normal_subloops() {
    let z2 = loupe::loop_core::cyclic_group(2).unwrap();
    for base in [ln(5, 2), ln(9, 2), ln(15, 8), ln(7, 3)] {
        let l = direct_product(&base, &z2).unwrap();
        let census = all_subloops(&l, &Caps::default()).unwrap();
        assert!(census.normal_subloops().count() >= 3);
        for s in census.normal_subloops() {
            assert!(is_normal_subloop(&l, s).holds);
            let q = quotient_loop(&l, s).unwrap();
            assert_eq!(q.order() * s.order(), l.order());
        }
    }
}
