use super::*;
use crate::construct::{cyclic, dicyclic, dihedral, direct_product};

#[test]
fn cyclic_small() {
    let cfg = SearchConfig::default();
    let g = cyclic(7);
    assert_eq!(small_davenport(&g, &cfg).unwrap().value, 6);
    assert_eq!(large_davenport(&g, &cfg).unwrap().value, 7);
}

#[test]
fn dihedral8() {
    let cfg = SearchConfig::default();
    let g = dihedral(8).unwrap();
    assert_eq!(small_davenport(&g, &cfg).unwrap().value, 4);
    assert_eq!(large_davenport(&g, &cfg).unwrap().value, 6);
    let q = dicyclic(8).unwrap();
    assert_eq!(large_davenport(&q, &cfg).unwrap().value, 6);
}

#[test]
fn invariant_factors_with_mixed_primes() {
    let c3c6 = direct_product(&cyclic(3), &cyclic(6));
    assert_eq!(invariant_factors(&c3c6).unwrap(), vec![3, 6]);
    let g = direct_product(&direct_product(&cyclic(2), &cyclic(6)), &cyclic(10));
    assert_eq!(invariant_factors(&g).unwrap(), vec![2, 2, 30]);
    assert_eq!(
        abelian_davenport(&c3c6).unwrap(),
        AbelianValue {
            value: 8,
            exact: true
        }
    );
}
