mod common;

use std::collections::BTreeSet;

use common::*;
use loupe::coloring::{
    coloring_to_loop, enumerate_involutory_right_alt, loop_to_coloring, representation_block, validate_proper,
    EdgeColoring,
};
use loupe::identities::{check_law, check_strict, Law, StrictForm};
use loupe::isotopes::{is_g_loop, is_s_g_loop, principal_isotope, s_principal_isotope};
use loupe::ln_family::{h_subloop, LnParams};
use loupe::loop_core::{cyclic_group, symmetric_group, validate_loop};
use loupe::representation::{
    right_regular_representation, right_translation, s_pseudo_representation, s_representation, validate_albert,
    Permutation,
};
use loupe::{Caps, Error, FiniteLoop};

/// Reads an `I` / `(e a) (x y) ...` block into the loop with `x·a = R_a(x)`.
fn loop_from_block(block: &str) -> FiniteLoop {
    let rows: Vec<Vec<Vec<usize>>> = block
        .lines()
        .skip(1)
        .map(|line| {
            line.split(')')
                .filter(|c| !c.trim().is_empty())
                .map(|c| {
                    c.trim()
                        .trim_start_matches('(')
                        .split_whitespace()
                        .map(|t| if t == "e" { 0 } else { t.parse().unwrap() })
                        .collect()
                })
                .collect()
        })
        .collect();
    let n = rows.len() + 1;
    let mut image = vec![(0..n).collect::<Vec<_>>(); n];
    for cycles in rows {
        let a = cycles[0][1];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                image[a][x] = cycle[(i + 1) % cycle.len()];
            }
        }
    }
    let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|a| image[a][x]).collect()).collect();
    let labels = (0..n).map(|x| if x == 0 { "e".to_string() } else { x.to_string() }).collect();
    validate_loop(&table, Some(labels)).unwrap()
}

#[test]
fn translations_and_albert() {
    let l = ln(7, 4);
    let r7 = right_translation(&l, 7);
    assert_eq!(r7.render(|x| l.label(x)), "(e 7)(1 4 2)(3 5 6)");
    assert!(right_translation(&l, 0).is_identity());
    assert_eq!(representation_block(&l), L7_4_REPRESENTATION);
    for (name, l) in corpus() {
        assert!(validate_albert(&right_regular_representation(&l)).holds, "{name}");
    }
    assert!(!validate_albert(&[Permutation::identity(4)]).holds);
}

#[test]
fn cycles_avoid_lengths_ruled_out_by_gcd() {
    for (n, m, l) in ln_family(25) {
        let lengths: BTreeSet<usize> = right_regular_representation(&l)[1..]
            .iter()
            .flat_map(|r| r.cycles().into_iter().filter(|c| !c.contains(&0)).map(|c| c.len()))
            .collect();
        let n_i = n as i64;
        for k in 1..n as u32 {
            let pow = (0..k).fold(1i64, |acc, _| acc * (m as i64 - 1) % n_i);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let value = (pow + sign).rem_euclid(n_i) as u64;
            if gcd(value, n) == 1 {
                assert!(!lengths.contains(&(k as usize)), "L_{n}({m}) has a {k}-cycle");
            }
        }
    }
}

#[test]
fn involutory_right_alternative_translations() {
    let mut loops = enumerate_involutory_right_alt(8, 10_000_000).unwrap();
    loops.extend(ln_family(15).into_iter().filter(|(_, m, _)| *m == 2).map(|(_, _, l)| l));
    for l in loops {
        let reps = right_regular_representation(&l);
        let mut seen = BTreeSet::new();
        for r in &reps[1..] {
            for c in r.cycles() {
                assert_eq!(c.len(), 2);
                assert!(seen.insert(c));
            }
        }
    }
}

#[test]
fn s_representations() {
    let caps = Caps::default();
    for (n, m, l) in ln_family(13).into_iter().filter(|(n, _, _)| [5, 7, 11, 13].contains(n)) {
        let b = l.subloop(&[0, 1]).unwrap();
        assert!(matches!(s_representation(&l, &b), Err(Error::NotAnSSubloop)), "L_{n}({m})");
        assert!(!s_pseudo_representation(&l, &caps).unwrap().is_empty());
    }
    let l = ln(7, 4);
    let pseudo = s_pseudo_representation(&l, &caps).unwrap();
    let b = l.subloop(&[0, 1]).unwrap();
    let set = &pseudo[&b];
    assert!(set[0].is_identity());
    assert_eq!(set[1].render(|x| l.label(x)), "(e 1)(2 5 3)(4 6 7)");
    let all: BTreeSet<&Permutation> = pseudo.values().flatten().collect();
    let (p1, p2) = (&pseudo[&b][1], &pseudo[&l.subloop(&[0, 2]).unwrap()][1]);
    assert!(!all.contains(&p1.then(p2)));

    let l = ln(15, 2);
    let h = l.subloop(&[0, 1, 4, 7, 10, 13]).unwrap();
    assert_eq!(s_representation(&l, &h).unwrap().len(), 6);
    assert!(matches!(s_pseudo_representation(&l, &caps), Err(Error::HasSSubloops)));
}

#[test]
fn colorings() {
    for block in SIX_BLOCKS {
        let l = loop_from_block(block);
        assert_eq!(representation_block(&l), block);
        let c = loop_to_coloring(&l).unwrap();
        assert!(validate_proper(&c).holds);
        assert_eq!(coloring_to_loop(&c, None).unwrap(), l);
        assert_eq!(EdgeColoring::from_text(&c.to_text()).unwrap(), c);
    }
    let c = loop_to_coloring(&ln(5, 2)).unwrap();
    assert!(validate_proper(&c).holds);
    assert!((1..6).all(|a| c.color(0, a) == Some(a)));
    assert!(matches!(loop_to_coloring(&ln(5, 3)), Err(Error::NotRightAlternative { .. })));
    assert!(matches!(loop_to_coloring(&cyclic_group(6).unwrap()), Err(Error::NotInvolutory(_))));
    assert!(matches!(loop_to_coloring(&ln(5, 3).restrict(&ln(5, 3).trivial())), Err(Error::OddOrder(1))));
    let constant = EdgeColoring::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
    assert_eq!(validate_proper(&constant).witness, Some(vec![0, 1]));
    assert!(matches!(coloring_to_loop(&constant, None), Err(Error::ImproperColoring { .. })));
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_involutory_right_alt(4, 1_000).unwrap().len(), 1);
    assert_eq!(count_one_factorizations(4), 1);
    assert_eq!(count_one_factorizations(6), 6);
    let eight = enumerate_involutory_right_alt(8, 10_000_000).unwrap();
    assert_eq!(eight.len() as u64, count_one_factorizations(8));
    assert_eq!(eight.len(), 6240);
    for l in &eight {
        assert!(check_law(l, Law::RightAlternative).holds);
        assert!(validate_proper(&loop_to_coloring(l).unwrap()).holds);
    }
    assert!(matches!(enumerate_involutory_right_alt(8, 10), Err(Error::SizeCapExceeded { .. })));
    assert!(matches!(enumerate_involutory_right_alt(5, 1_000), Err(Error::OddOrder(5))));
}

#[test]
fn principal_isotopes() {
    let l = ln(5, 3);
    let iso = principal_isotope(&l, 4, 0).unwrap();
    let (labels, table) = parsed_label_table(L5_3_ISOTOPE);
    let order: Vec<&str> = labels.iter().map(String::as_str).collect();
    assert_eq!(label_table(&iso, &order), table);
    assert_eq!(iso.label(0), "4");
    assert!(check_strict(&iso, StrictForm::StrictNonCommutative).holds);
    assert_eq!(principal_isotope(&l, 0, 0).unwrap(), l);
    for (name, l) in corpus().into_iter().filter(|(_, l)| l.order() <= 8) {
        for a in l.elements() {
            for b in l.elements() {
                let iso = principal_isotope(&l, a, b).unwrap();
                assert_eq!(iso.label(0), l.label(l.mul(b, a)), "{name} ({a},{b})");
            }
        }
    }
}

#[test]
fn g_loops() {
    let caps = Caps::default();
    for g in [cyclic_group(4).unwrap(), symmetric_group(3).unwrap(), cyclic_group(1).unwrap()] {
        assert!(is_g_loop(&g, &caps).unwrap().holds);
    }
    assert!(!is_g_loop(&ln(5, 2), &caps).unwrap().holds);
    let small = Caps { isotopes: 4, ..caps };
    assert!(matches!(is_g_loop(&ln(5, 2), &small), Err(Error::CapExceeded { .. })));
    for (n, m, l) in ln_family(15) {
        assert!(!is_s_g_loop(&l, &caps).unwrap().holds, "L_{n}({m})");
    }
}

#[test]
fn s_isotopes() {
    let l = ln(15, 2);
    let h = h_subloop(LnParams::new(15, 2).unwrap(), 1, 3).unwrap();
    assert_eq!(s_principal_isotope(&l, &h, 1, 0).unwrap().order(), 6);
    let b = l.subloop(&[0, 1]).unwrap();
    assert!(matches!(s_principal_isotope(&l, &b, 1, 0), Err(Error::NotAnSSubloop)));

    let l = ln(15, 8);
    let p = LnParams::new(15, 8).unwrap();
    for i in 1..=3 {
        let h = h_subloop(p, i, 3).unwrap();
        let sub = l.restrict(&h);
        let commutative = check_law(&sub, Law::Commutative).holds;
        for &a in h.elements() {
            let iso = s_principal_isotope(&l, &h, a, a).unwrap();
            assert_eq!(check_law(&iso, Law::Commutative).holds, commutative);
        }
    }
}
