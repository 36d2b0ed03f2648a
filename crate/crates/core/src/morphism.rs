//! Homomorphism extension, isomorphism testing and automorphism enumeration.

use std::collections::VecDeque;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::fingerprint::fingerprint;
use crate::group::FiniteGroup;

pub const DEFAULT_ISOMORPHISM_CAP: usize = 64;
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 32;
/// Largest automorphism group we are willing to list explicitly.
pub const AUTOMORPHISM_COUNT_CAP: usize = 250_000;

const UNSET: usize = usize::MAX;

/// Extends `gens[i] -> images[i]` to a homomorphism `src -> dst`.
///
/// Returns `None` if the assignment is inconsistent or if the generators do
/// not generate `src`.
pub fn extend_homomorphism(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let map = partial_map(src, dst, gens, images, false)?;
    if map.contains(&UNSET) {
        return None;
    }
    Some(map)
}

/// Walks the Cayley graph of `<gens>` from the identity, checking every edge.
/// With `injective`, also rejects maps that identify two elements.
fn partial_map(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    injective: bool,
) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; src.order()];
    let mut used = if injective {
        Some(ElementSet::singleton(dst.order(), 0))
    } else {
        None
    };
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let fy = dst.mul(map[x], img);
            if map[y] == UNSET {
                if let Some(used) = used.as_mut() {
                    if !used.insert(fy) {
                        return None;
                    }
                }
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// A small generating set chosen greedily by descending element order.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut elems: Vec<usize> = (1..g.order()).collect();
    elems.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(g.order(), 0);
    for x in elems {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span =
                g.subgroup_generated(&ElementSet::from_elements(g.order(), gens.iter().copied()));
        }
    }
    gens
}

/// Backtracking over generator images; `visit` returns false to stop early.
fn search_isomorphisms(
    g: &FiniteGroup,
    h: &FiniteGroup,
    visit: &mut dyn FnMut(Vec<usize>) -> bool,
) {
    let gens = generating_set(g);
    let mut images = Vec::with_capacity(gens.len());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (1..h.order())
                .filter(|&y| h.element_order(y) == g.element_order(x))
                .collect()
        })
        .collect();
    fn rec(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        cands: &[Vec<usize>],
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(Vec<usize>) -> bool,
    ) -> bool {
        let depth = images.len();
        if depth == gens.len() {
            if let Some(map) = partial_map(g, h, gens, images, true) {
                if map.iter().all(|&x| x != UNSET) {
                    return visit(map);
                }
            }
            return true;
        }
        for &y in &cands[depth] {
            images.push(y);
            let ok = partial_map(g, h, &gens[..=depth], images, true).is_some();
            if ok && !rec(g, h, gens, cands, images, visit) {
                images.pop();
                return false;
            }
            images.pop();
        }
        true
    }
    if gens.is_empty() {
        visit(vec![0; g.order().min(1)]);
        return;
    }
    rec(g, h, &gens, &candidates, &mut images, visit);
}

/// Some isomorphism `g -> h` as an element map, if one exists.
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    let cap = DEFAULT_ISOMORPHISM_CAP;
    for x in [g, h] {
        if x.order() > cap {
            return Err(Error::CapExceeded {
                what: "isomorphism test order",
                requested: x.order() as u128,
                cap: cap as u128,
            });
        }
    }
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    let mut found = None;
    search_isomorphisms(g, h, &mut |m| {
        found = Some(m);
        false
    });
    Ok(found)
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    Ok(isomorphism(g, h)?.is_some())
}

/// All automorphisms as element permutations, identity first.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    automorphisms_with_cap(g, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn automorphisms_with_cap(g: &FiniteGroup, order_cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.order() > order_cap {
        return Err(Error::CapExceeded {
            what: "automorphism enumeration order",
            requested: g.order() as u128,
            cap: order_cap as u128,
        });
    }
    let mut out = Vec::new();
    let mut overflow = false;
    search_isomorphisms(g, g, &mut |m| {
        if out.len() >= AUTOMORPHISM_COUNT_CAP {
            overflow = true;
            return false;
        }
        out.push(m);
        true
    });
    if overflow {
        return Err(Error::CapExceeded {
            what: "automorphism count",
            requested: AUTOMORPHISM_COUNT_CAP as u128 + 1,
            cap: AUTOMORPHISM_COUNT_CAP as u128,
        });
    }
    out.sort();
    Ok(out)
}

/// Orbits of a set of element permutations acting on the group, as sorted lists.
pub fn orbits(order: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![UNSET; order];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..order {
        if orbit_of[x] != UNSET {
            continue;
        }
        let id = out.len();
        let mut orb = vec![x];
        orbit_of[x] = id;
        let mut i = 0;
        while i < orb.len() {
            let y = orb[i];
            for p in perms {
                let z = p[y];
                if orbit_of[z] == UNSET {
                    orbit_of[z] = id;
                    orb.push(z);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, dicyclic, dihedral, direct_product};

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(5)).unwrap().len(), 4);
        assert_eq!(automorphisms(&cyclic(8)).unwrap().len(), 4);
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(automorphisms(&v4).unwrap().len(), 6);
        assert_eq!(automorphisms(&dihedral(8).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&dicyclic(8).unwrap()).unwrap().len(), 24);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = dihedral(12).unwrap();
        let auts = automorphisms(&g).unwrap();
        let id: Vec<usize> = (0..g.order()).collect();
        assert!(auts.contains(&id));
        for a in &auts {
            for b in &auts {
                let ab: Vec<usize> = (0..g.order()).map(|x| a[b[x]]).collect();
                assert!(auts.binary_search(&ab).is_ok());
            }
        }
    }

    #[test]
    fn iso_negatives() {
        assert!(!is_isomorphic(&dihedral(8).unwrap(), &dicyclic(8).unwrap()).unwrap());
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert!(!is_isomorphic(&cyclic(4), &v4).unwrap());
    }

    #[test]
    fn iso_caps() {
        let big = cyclic(65);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            automorphisms(&cyclic(33)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn extension_rejects_bad_images() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        // a -> generator of C2 is fine, C4 -> C2
        assert!(extend_homomorphism(&c4, &c2, &[1], &[1]).is_some());
        // C2 -> C4 sending the generator to an element of order 4 is not
        assert!(extend_homomorphism(&c2, &c4, &[1], &[1]).is_none());
    }
}
