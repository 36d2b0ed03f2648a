//! Isomorphism invariants used to identify constructed groups.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_multiset: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// invariant factors `n1 | n2 | ...` of `G/G'`, each > 1
    pub abelianization: Vec<usize>,
    /// sorted conjugacy class sizes
    pub class_sizes: Vec<usize>,
    pub exponent: usize,
}

impl fmt::Display for GroupFingerprint {
    /// Compact single-line form, e.g. `o8 e4 z2 d2 ab[2,2] ord{1:1,2:5,4:2} cls{1:2,2:3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let ords: Vec<String> = self
            .order_multiset
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        let mut classes: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &self.class_sizes {
            *classes.entry(c).or_default() += 1;
        }
        let cls: Vec<String> = classes.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(
            f,
            "o{} e{} z{} d{} ab[{}] ord{{{}}} cls{{{}}}",
            self.order,
            self.exponent,
            self.center_order,
            self.derived_order,
            join(&self.abelianization),
            ords.join(","),
            cls.join(",")
        )
    }
}

pub fn fingerprint(g: &FiniteGroup) -> GroupFingerprint {
    let mut order_multiset = BTreeMap::new();
    for x in 0..g.order() {
        *order_multiset.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let derived = g.commutator_subgroup();
    let (quotient, _) = g.quotient(&derived).expect("commutator subgroup is normal");
    let abelianization = abelian_invariants(&quotient).expect("abelianization is abelian");
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    GroupFingerprint {
        order: g.order(),
        order_multiset,
        center_order: g.center().len(),
        derived_order: derived.len(),
        abelianization,
        class_sizes,
        exponent: g.exponent(),
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors `n1 | ... | nr` (each > 1) of an abelian group; empty for the trivial group.
///
/// For each prime p the count of solutions of `x^(p^i) = 1` gives the number
/// of cyclic p-factors of order at least `p^i`.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order();
    // per prime: list of p-power cyclic factor orders, descending
    let mut per_prime: Vec<Vec<usize>> = Vec::new();
    for p in prime_factors(n) {
        let mut logs = vec![0u32]; // log_p of |{x : x^(p^i) = 1}|
        let mut pk = 1usize;
        loop {
            pk *= p;
            let count = (0..n)
                .filter(|&x| pk.is_multiple_of(g.element_order(x)))
                .count();
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            if l == *logs.last().unwrap() {
                break;
            }
            logs.push(l);
        }
        // at_least[i] = number of factors of order >= p^(i+1)
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut parts = Vec::new();
        for (i, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            for _ in 0..(cnt - next) {
                parts.push(p.pow(i as u32 + 1));
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(parts);
    }
    let rank = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; rank];
    for parts in &per_prime {
        for (i, &q) in parts.iter().enumerate() {
            factors[i] *= q;
        }
    }
    factors.reverse();
    Ok(factors)
}
