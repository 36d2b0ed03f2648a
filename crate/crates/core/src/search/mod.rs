//! Exact computation of the small and large Davenport constants.
//!
//! `small_davenport` walks product-one free multisets depth first in
//! canonical order. `large_davenport` grows atoms one term at a time as
//! layers of (multiset, valid prefix product) states; see `atoms`.

mod atoms;
mod free;
mod walks;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::fingerprint::abelian_invariants;
use crate::group::FiniteGroup;
use crate::morphism::automorphisms_with_cap;
use crate::pi::{is_atom, is_product_one_free, product_one_ordering, DEFAULT_DP_CAP};
use crate::sequence::Sequence;
use crate::subgroups::all_subgroups;

pub use walks::large_davenport_by_walks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    SmallDavenport,
    LargeDavenport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryReduction {
    Off,
    FirstStepOrbits,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Groups up to this order are searched to exhaustion with no budget.
    pub max_order_exact: usize,
    pub dp_cap: usize,
    pub parallel_width: usize,
    /// Applies to the atom search; the free-sequence search never reduces.
    pub symmetry_reduction: SymmetryReduction,
    /// Stop extending sequences past this length (the result is then inexact
    /// if longer ones exist).
    pub length_cap: Option<usize>,
    /// Work budget for groups above `max_order_exact`, counted in search
    /// nodes (per root branch for the free-sequence search).
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_order_exact: 16,
            dp_cap: DEFAULT_DP_CAP,
            parallel_width: 1,
            symmetry_reduction: SymmetryReduction::FirstStepOrbits,
            length_cap: None,
            node_budget: 20_000_000,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_order_exact == 0
            || self.dp_cap == 0
            || self.parallel_width == 0
            || self.node_budget == 0
        {
            return Err(Error::BadParameter("search caps must be positive".into()));
        }
        if self.length_cap == Some(0) {
            return Err(Error::BadParameter("length cap must be positive".into()));
        }
        Ok(())
    }

    fn budget_for(&self, g: &FiniteGroup) -> Option<u64> {
        (g.order() > self.max_order_exact).then_some(self.node_budget)
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.parallel_width)
            .build()
            .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub quantity: Quantity,
    pub value: usize,
    pub witness: Sequence,
    /// For the large constant: a product-one ordering of the witness.
    pub ordering: Option<Vec<usize>>,
    pub exact: bool,
    pub nodes_explored: u64,
    pub engine: &'static str,
    pub elapsed: Duration,
}

/// `d(G)` with a lexicographically least witness.
pub fn small_davenport(g: &FiniteGroup, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    cfg.pool()?.install(|| small_in_pool(g, cfg))
}

/// As `small_davenport`, using whatever rayon pool is current.
pub(crate) fn small_in_pool(g: &FiniteGroup, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let start = Instant::now();
    let found = free::search(g, cfg);
    Ok(SearchOutcome {
        quantity: Quantity::SmallDavenport,
        value: found.witness.len(),
        witness: found.witness,
        ordering: None,
        exact: found.exact,
        nodes_explored: found.nodes,
        engine: if g.is_abelian() {
            "free-dfs-abelian"
        } else {
            "free-dfs"
        },
        elapsed: start.elapsed(),
    })
}

/// `D(G)` with a lexicographically least witness and its least product-one
/// ordering.
pub fn large_davenport(g: &FiniteGroup, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    cfg.pool()?.install(|| large_in_pool(g, cfg))
}

pub(crate) fn large_in_pool(g: &FiniteGroup, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let start = Instant::now();
    let (witness, exact, nodes, engine) = if g.order() == 1 {
        (Sequence::from_elements(1, [0]), true, 1, "trivial")
    } else if g.is_abelian() {
        // Over an abelian group every atom is S·(-σ(S)) for a zero-sum free S
        // and vice versa, so D = d + 1 with matching witnesses.
        let found = free::search(g, cfg);
        let mut u = found.witness.clone();
        let sum = found
            .witness
            .elements()
            .iter()
            .fold(0, |acc, &x| g.mul(acc, x));
        u.push(g.inv(sum));
        (
            lex_least_atom_over_free(g, cfg, found.witness.len() + 1).unwrap_or(u),
            found.exact,
            found.nodes,
            "free-extension",
        )
    } else if g.order() > atoms::MAX_ORDER {
        let (w, _) = fallback_atom(g);
        (w, false, 0, "bounds-only")
    } else {
        let symmetries = symmetry_group(g, cfg.symmetry_reduction);
        let found = atoms::search(g, cfg, &symmetries);
        (found.witness, found.exact, found.nodes, "atom-layers")
    };
    let ordering = product_one_ordering(g, &witness)?;
    Ok(SearchOutcome {
        quantity: Quantity::LargeDavenport,
        value: witness.len(),
        witness,
        ordering,
        exact,
        nodes_explored: nodes,
        engine,
        elapsed: start.elapsed(),
    })
}

/// Over an abelian group, the lex-least atom of length `len` is found by
/// scanning free sequences of length `len - 1`.
fn lex_least_atom_over_free(g: &FiniteGroup, cfg: &SearchConfig, len: usize) -> Option<Sequence> {
    let mut best: Option<Sequence> = None;
    let candidates = free::all_of_length(g, cfg, len - 1)?;
    for s in candidates {
        let sum = s.elements().iter().fold(0, |acc, &x| g.mul(acc, x));
        let mut u = s;
        u.push(g.inv(sum));
        if best.as_ref().is_none_or(|b| u.elements() < b.elements()) {
            best = Some(u);
        }
    }
    best
}

/// Largest cyclic atom `g^[ord g]`, the least element achieving the exponent.
fn fallback_atom(g: &FiniteGroup) -> (Sequence, usize) {
    let e = g.exponent();
    let x = (0..g.order())
        .find(|&x| g.element_order(x) == e)
        .unwrap_or(0);
    let mut s = Sequence::empty(g.order());
    s.push_n(x, e as u32);
    (s, e)
}

/// Automorphisms used to reduce the atom search: all of `Aut(G)` when it is
/// small enough to enumerate, else the inner automorphisms.
fn symmetry_group(g: &FiniteGroup, mode: SymmetryReduction) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..g.order()).collect();
    if mode == SymmetryReduction::Off {
        return vec![identity];
    }
    const MAX_SYMMETRIES: usize = 4096;
    if let Ok(auts) = automorphisms_with_cap(g, atoms::MAX_ORDER) {
        if auts.len() <= MAX_SYMMETRIES {
            return auts;
        }
    }
    let mut inner: Vec<Vec<usize>> = (0..g.order())
        .map(|h| (0..g.order()).map(|x| g.conj(h, x)).collect())
        .collect();
    inner.sort();
    inner.dedup();
    inner
}

/// Invariant factors `n_1 | ... | n_r`, all greater than 1.
pub fn invariant_factors(g: &FiniteGroup) -> Result<Vec<usize>> {
    abelian_invariants(g)
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|p| n.is_multiple_of(*p)).unwrap_or(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianValue {
    pub value: usize,
    pub exact: bool,
}

/// `Σ(n_i - 1) + 1` over the invariant factors; exact for p-groups, rank at
/// most 2, and `C2^k × C2n` with `k ≤ 3`, `n` odd.
pub fn abelian_davenport(g: &FiniteGroup) -> Result<AbelianValue> {
    let factors = invariant_factors(g)?;
    let value = factors.iter().map(|n| n - 1).sum::<usize>() + 1;
    let order = g.order();
    let p_group = order == 1 || {
        let p = smallest_prime_factor(order);
        let mut m = order;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    };
    let rank2 = factors.len() <= 2;
    let special = match factors.split_last() {
        Some((&last, twos)) => {
            twos.len() <= 3 && twos.iter().all(|&f| f == 2) && last % 2 == 0 && (last / 2) % 2 == 1
        }
        None => false,
    };
    Ok(AbelianValue {
        value,
        exact: p_group || rank2 || special,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub d_low: usize,
    pub large_low: usize,
    pub large_high: usize,
    /// Set when a closed formula pins `D(G)`.
    pub large_exact: Option<usize>,
}

pub fn bounds(g: &FiniteGroup) -> Bounds {
    let n = g.order();
    let mut d_low = 0;
    for x in 0..n {
        d_low = d_low.max(g.element_order(x) - 1);
    }
    if let Ok(subs) = all_subgroups(g) {
        for h in subs {
            if let Ok(sub) = subgroup_as_group(g, &h) {
                if let Ok(v) = abelian_davenport(&sub) {
                    d_low = d_low.max(v.value - 1);
                }
            }
        }
    }
    let mut large_low = (d_low + 1).max(g.exponent());
    let mut large_exact = None;
    if g.is_abelian() {
        if let Ok(v) = abelian_davenport(g) {
            if v.exact {
                large_exact = Some(v.value);
            }
        }
    } else if n.is_multiple_of(2) && (0..n).any(|x| g.element_order(x) == n / 2) {
        let v = n / 2 + g.commutator_subgroup().len();
        large_low = large_low.max(v);
        large_exact = Some(v);
    }
    if n == 1 {
        large_exact = Some(1);
    }
    Bounds {
        d_low,
        large_low: large_exact.unwrap_or(large_low),
        large_high: large_exact.unwrap_or(n.max(1)),
        large_exact,
    }
}

/// The subgroup `h` as a group in its own right, elements renumbered in
/// ascending order.
pub fn subgroup_as_group(g: &FiniteGroup, h: &ElementSet) -> Result<FiniteGroup> {
    let elems: Vec<usize> = h.iter().collect();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        index[x] = i;
    }
    let rows: Vec<Vec<usize>> = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| index[g.mul(a, b)]).collect())
        .collect();
    crate::group::validate_cayley(&rows)
}

/// Builds `U = S · h⁻¹ · (h g⁻¹)` where `g` is a product of `S` and checks
/// that `U` is an atom, certifying `d(H) + 2 ≤ D(G)` when `S` is longest.
pub fn ineq_witness(
    g: &FiniteGroup,
    h_set: &ElementSet,
    s_free: &Sequence,
    h: usize,
) -> Result<Sequence> {
    if !g.is_subgroup(h_set) || h_set.len() == g.order() || h_set.contains(h) {
        return Err(Error::HNotProper);
    }
    if s_free.support().iter().any(|&x| !h_set.contains(x)) || !is_product_one_free(g, s_free)? {
        return Err(Error::NotFree);
    }
    let prod = s_free.elements().iter().fold(0, |acc, &x| g.mul(acc, x));
    let mut u = s_free.clone();
    u.push(g.inv(h));
    u.push(g.mul(h, g.inv(prod)));
    debug_assert!(is_atom(g, &u)?);
    if !is_atom(g, &u)? {
        return Err(Error::DataCorrupt(
            "constructed sequence is not an atom".into(),
        ));
    }
    Ok(u)
}

#[cfg(test)]
mod tests;
