//! Subgroup lattice enumeration.

use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_SUBGROUP_CAP: usize = 64;

/// Every subgroup exactly once, sorted by (order, bit pattern).
///
/// Starts from the cyclic subgroups and repeatedly joins each known subgroup
/// with each cyclic one until no new subgroup appears. Every subgroup is a
/// join of cyclic subgroups added one at a time, so the fixpoint is complete.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<ElementSet>> {
    all_subgroups_with_cap(g, DEFAULT_SUBGROUP_CAP)
}

pub fn all_subgroups_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<ElementSet>> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "subgroup enumeration order",
            requested: g.order() as u128,
            cap: cap as u128,
        });
    }
    let n = g.order();
    let mut cyclics: Vec<ElementSet> = Vec::new();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for x in 0..n {
        let c = g.subgroup_generated(&ElementSet::singleton(n, x));
        if seen.insert(c.clone()) {
            cyclics.push(c);
        }
    }
    let mut all: Vec<ElementSet> = cyclics.clone();
    let mut frontier = cyclics.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.is_subset(h) {
                    continue;
                }
                let j = join(g, h, c);
                if seen.insert(j.clone()) {
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all)
}

fn join(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut gens = a.clone();
    gens.union_with(b);
    g.subgroup_generated(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alternating, cyclic, dicyclic, dihedral, direct_product};

    /// Every subset closed under multiplication, by exhaustive enumeration.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
        let n = g.order();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let set = ElementSet::from_elements(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if g.is_subgroup(&set) {
                out.push(set);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn cyclic_six() {
        let subs = all_subgroups(&cyclic(6)).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.len()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(all_subgroups(&cyclic(1)).unwrap().len(), 1);
    }

    #[test]
    fn quaternion_eight() {
        assert_eq!(all_subgroups(&dicyclic(8).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn agrees_with_brute_force() {
        let groups = vec![
            dihedral(8).unwrap(),
            dicyclic(8).unwrap(),
            dihedral(12).unwrap(),
            alternating(4).unwrap(),
            direct_product(&cyclic(2), &direct_product(&cyclic(2), &cyclic(2))),
            direct_product(&cyclic(2), &dihedral(8).unwrap()),
            dihedral(16).unwrap(),
        ];
        for g in groups {
            let fast = all_subgroups(&g).unwrap();
            assert_eq!(fast, brute_force_subgroups(&g), "{}", g.name());
            for s in &fast {
                assert_eq!(g.order() % s.len(), 0);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            all_subgroups(&cyclic(65)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
