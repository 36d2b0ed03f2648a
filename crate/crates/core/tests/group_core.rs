use std::collections::BTreeMap;

use davenport_core::construct::{cyclic, dicyclic, dihedral, direct_product, heisenberg};
use davenport_core::error::Error;
use davenport_core::morphism::{automorphisms, automorphisms_with_cap, is_isomorphic};
use davenport_core::subgroups::all_subgroups;
use davenport_core::{fingerprint, validate_cayley, ElementSet, FiniteGroup};
use proptest::prelude::*;

fn quaternion() -> FiniteGroup {
    dicyclic(8).unwrap()
}

fn klein() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

fn small_zoo() -> Vec<FiniteGroup> {
    vec![
        cyclic(1),
        cyclic(6),
        klein(),
        dihedral(6).unwrap(),
        dihedral(8).unwrap(),
        quaternion(),
        dicyclic(12).unwrap(),
        dihedral(12).unwrap(),
        direct_product(&cyclic(2), &cyclic(6)),
        direct_product(&cyclic(2), &quaternion()),
        dihedral(16).unwrap(),
    ]
}

fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .filter(|&x| (0..n).all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}

fn closure(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut set = vec![false; g.order()];
    set[0] = true;
    let mut items = vec![0];
    for &s in seed {
        if !set[s] {
            set[s] = true;
            items.push(s);
        }
    }
    let mut i = 0;
    while i < items.len() {
        for j in 0..items.len() {
            for p in [g.mul(items[i], items[j]), g.mul(items[j], items[i])] {
                if !set[p] {
                    set[p] = true;
                    items.push(p);
                }
            }
        }
        i += 1;
    }
    items.sort_unstable();
    items
}

fn brute_commutator(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut comms = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
            comms.push(c);
        }
    }
    closure(g, &comms)
}

/// Every subset containing the identity that is closed under products.
fn brute_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let elems: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1))
            .collect();
        if !n.is_multiple_of(elems.len()) {
            continue;
        }
        let mut member = vec![false; n];
        for &x in &elems {
            member[x] = true;
        }
        if elems
            .iter()
            .all(|&x| elems.iter().all(|&y| member[g.mul(x, y)]))
        {
            out.push(elems);
        }
    }
    out.sort();
    out
}

fn set_vec(s: &ElementSet) -> Vec<usize> {
    s.iter().collect()
}

#[test]
fn validate_cayley_examples() {
    let g = validate_cayley(&[vec![0]]).unwrap();
    assert_eq!(g.order(), 1);

    let z3: Vec<Vec<usize>> = (0..3)
        .map(|i| (0..3).map(|j| (i + j) % 3).collect())
        .collect();
    let g = validate_cayley(&z3).unwrap();
    assert_eq!((g.order(), g.exponent()), (3, 3));

    let err = validate_cayley(&[vec![0, 1], vec![1, 1]]).unwrap_err();
    assert!(
        matches!(err, Error::NotAssociative { .. } | Error::NoInverse { .. }),
        "{err}"
    );
}

#[test]
fn validate_cayley_errors() {
    assert!(matches!(
        validate_cayley(&[vec![0, 2], vec![1, 0]]),
        Err(Error::NotClosed { .. })
    ));
    assert!(matches!(
        validate_cayley(&[vec![1, 1], vec![1, 1]]),
        Err(Error::NoIdentity)
    ));
    assert!(validate_cayley(&[vec![0, 1]]).is_err());
    assert!(validate_cayley(&[]).is_err());
}

#[test]
fn identity_is_moved_to_zero() {
    // Z/3 written with the identity at index 2.
    let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    let g = validate_cayley(&rows).unwrap();
    assert_eq!(g.identity(), 0);
    for j in 0..3 {
        assert_eq!(g.mul(0, j), j);
        assert_eq!(g.mul(j, 0), j);
    }
    assert_eq!(g.exponent(), 3);
}

#[test]
fn every_constructor_output_revalidates() {
    for g in small_zoo() {
        let h = validate_cayley(&g.to_rows()).unwrap();
        assert_eq!(h.to_rows(), g.to_rows(), "{}", g.name());
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }
}

#[test]
fn element_order_examples() {
    assert_eq!(cyclic(6).element_order(0), 1);
    assert_eq!(cyclic(6).element_order(1), 6);
    let d8 = dihedral(8).unwrap();
    let r = d8.element_by_name("r").unwrap();
    assert_eq!(d8.element_order(r), 4);
}

#[test]
fn center_matches_brute_force() {
    assert_eq!(klein().center().len(), 4);
    assert_eq!(dihedral(8).unwrap().center().len(), 2);
    assert_eq!(quaternion().center().len(), 2);
    for g in small_zoo() {
        assert_eq!(set_vec(&g.center()), brute_center(&g), "{}", g.name());
    }
}

#[test]
fn commutator_subgroup_matches_brute_force() {
    assert_eq!(klein().commutator_subgroup().len(), 1);
    assert_eq!(dihedral(6).unwrap().commutator_subgroup().len(), 3);
    assert_eq!(quaternion().commutator_subgroup().len(), 2);
    for g in small_zoo() {
        let d = g.commutator_subgroup();
        assert_eq!(set_vec(&d), brute_commutator(&g), "{}", g.name());
        assert!(g.is_normal(&d));
        assert_eq!(d.len() == 1, g.is_abelian(), "{}", g.name());
    }
}

#[test]
fn exponent_examples() {
    assert_eq!(cyclic(12).exponent(), 12);
    assert_eq!(klein().exponent(), 2);
    let h27 = heisenberg(3).unwrap();
    assert_eq!((h27.order(), h27.exponent()), (27, 3));
}

#[test]
fn orders_divide_exponent_divides_order() {
    for g in small_zoo() {
        let e = g.exponent();
        assert_eq!(g.order() % e, 0);
        for x in 0..g.order() {
            assert_eq!(e % g.element_order(x), 0);
        }
    }
}

#[test]
fn subgroup_generated_examples() {
    let d8 = dihedral(8).unwrap();
    assert_eq!(set_vec(&d8.subgroup_generated(&d8.empty_set())), vec![0]);
    let r = d8.element_by_name("r").unwrap();
    let s = d8.element_by_name("s").unwrap();
    assert_eq!(d8.subgroup_generated(&ElementSet::singleton(8, r)).len(), 4);
    assert_eq!(
        d8.subgroup_generated(&ElementSet::from_elements(8, [r, s]))
            .len(),
        8
    );
}

#[test]
fn subgroup_counts() {
    assert_eq!(all_subgroups(&cyclic(6)).unwrap().len(), 4);
    assert_eq!(all_subgroups(&quaternion()).unwrap().len(), 6);
    assert_eq!(all_subgroups(&cyclic(1)).unwrap().len(), 1);
    let mut sizes: Vec<usize> = all_subgroups(&cyclic(6))
        .unwrap()
        .iter()
        .map(|s| s.len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 3, 6]);
}

#[test]
fn subgroups_match_brute_force_up_to_16() {
    for g in small_zoo() {
        let mut ours: Vec<Vec<usize>> = all_subgroups(&g).unwrap().iter().map(set_vec).collect();
        ours.sort();
        assert_eq!(ours, brute_subgroups(&g), "{}", g.name());
        for s in &ours {
            assert_eq!(g.order() % s.len(), 0);
        }
    }
}

#[test]
fn subgroup_cap_is_an_error() {
    let big = cyclic(65);
    assert!(matches!(
        all_subgroups(&big),
        Err(Error::CapExceeded { .. })
    ));
}

fn order_multiset(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for x in 0..g.order() {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = g.mul(p, x);
            k += 1;
        }
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

#[test]
fn fingerprint_examples() {
    let d8 = fingerprint(&dihedral(8).unwrap());
    assert_eq!(d8.order_multiset, BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
    assert_eq!((d8.center_order, d8.derived_order), (2, 2));

    let q8 = fingerprint(&quaternion());
    assert_eq!(q8.order_multiset, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    assert_ne!(d8, q8);

    let c5 = fingerprint(&cyclic(5));
    assert_eq!(c5.order_multiset, BTreeMap::from([(1, 1), (5, 4)]));
    assert_eq!(c5.abelianization, vec![5]);
}

#[test]
fn fingerprint_fields_match_brute_force() {
    for g in small_zoo() {
        let f = fingerprint(&g);
        assert_eq!(f.order, g.order());
        assert_eq!(f.order_multiset, order_multiset(&g));
        assert_eq!(f.center_order, brute_center(&g).len());
        assert_eq!(f.derived_order, brute_commutator(&g).len());
        let lcm = f.order_multiset.keys().fold(1, |a, &b| a / gcd(a, b) * b);
        assert_eq!(f.exponent, lcm);
        assert_eq!(f.class_sizes.iter().sum::<usize>(), g.order());
        let ab: usize = f.abelianization.iter().product();
        assert_eq!(ab * f.derived_order, g.order());
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn isomorphism_examples() {
    assert!(!is_isomorphic(&dihedral(8).unwrap(), &quaternion()).unwrap());
    assert!(!is_isomorphic(&cyclic(4), &klein()).unwrap());
    assert!(is_isomorphic(&direct_product(&cyclic(2), &cyclic(3)), &cyclic(6)).unwrap());
    assert!(is_isomorphic(
        &dihedral(12).unwrap(),
        &direct_product(&cyclic(2), &dihedral(6).unwrap())
    )
    .unwrap());
}

#[test]
fn automorphism_counts() {
    assert_eq!(automorphisms(&cyclic(5)).unwrap().len(), 4);
    assert_eq!(automorphisms(&klein()).unwrap().len(), 6);
    assert_eq!(automorphisms(&cyclic(8)).unwrap().len(), 4);
    assert_eq!(automorphisms(&dihedral(8).unwrap()).unwrap().len(), 8);
    assert_eq!(automorphisms(&quaternion()).unwrap().len(), 24);
    let c2q8 = direct_product(&cyclic(2), &quaternion());
    assert_eq!(automorphisms(&c2q8).unwrap().len(), 192);
}

#[test]
fn automorphisms_form_a_group() {
    let g = dihedral(12).unwrap();
    let auts = automorphisms(&g).unwrap();
    let n = g.order();
    assert_eq!(auts[0], (0..n).collect::<Vec<_>>());
    for f in &auts {
        for a in 0..n {
            for b in 0..n {
                assert_eq!(f[g.mul(a, b)], g.mul(f[a], f[b]));
            }
        }
    }
    for f in &auts {
        for h in &auts {
            let comp: Vec<usize> = (0..n).map(|x| f[h[x]]).collect();
            assert!(auts.contains(&comp));
        }
    }
}

#[test]
fn automorphism_cap_is_an_error() {
    let g = direct_product(&cyclic(3), &heisenberg(3).unwrap());
    assert!(matches!(automorphisms(&g), Err(Error::CapExceeded { .. })));
    assert!(matches!(
        automorphisms_with_cap(&cyclic(9), 8),
        Err(Error::CapExceeded { .. })
    ));
}

fn relabelling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|rest| std::iter::once(0).chain(rest).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fingerprint_survives_relabelling(perm in relabelling(16)) {
        let g = direct_product(&cyclic(2), &quaternion());
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(fingerprint(&h), fingerprint(&g));
        let h = validate_cayley(&h.to_rows()).unwrap();
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn relabelled_dihedral_keeps_structure(perm in relabelling(12)) {
        let g = dihedral(12).unwrap();
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(fingerprint(&h), fingerprint(&g));
        prop_assert_eq!(h.center().len(), 2);
        prop_assert_eq!(all_subgroups(&h).unwrap().len(), all_subgroups(&g).unwrap().len());
    }
}
