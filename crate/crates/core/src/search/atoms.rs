//! Layered search for the longest atom.
//!
//! A state is a multiset `T` (no identity) together with the set `V(T)` of
//! elements `p ≠ 1` such that `T · p⁻¹` is an atom. That holds iff
//! `p ∈ π(T)` and `p ∉ Q(T)`, where `Q(T)` is the union of `π(T W⁻¹)` over
//! nonempty product-one `W | T`. Removing the last term of a product-one
//! ordering of an atom gives another valid state, so layer `ℓ + 1` is
//! reached from layer `ℓ` by appending one term and re-checking validity.
//! `D(G)` is one more than the size of the last nonempty layer.

use std::collections::HashMap;

use rayon::prelude::*;

use super::SearchConfig;
use crate::group::FiniteGroup;
use crate::sequence::Sequence;

pub(super) const MAX_ORDER: usize = 128;

pub(super) struct Found {
    pub witness: Sequence,
    pub exact: bool,
    pub nodes: u64,
}

type Key = Vec<u8>;

struct Ctx<'a> {
    n: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    syms: &'a [Vec<usize>],
}

impl Ctx<'_> {
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn translate(&self, set: u128, g: usize) -> u128 {
        let mut out = 0u128;
        let mut s = set;
        while s != 0 {
            let x = s.trailing_zeros() as usize;
            s &= s - 1;
            out |= 1 << self.mul(x, g);
        }
        out
    }

    fn map_set(&self, set: u128, sigma: &[usize]) -> u128 {
        let mut out = 0u128;
        let mut s = set;
        while s != 0 {
            let x = s.trailing_zeros() as usize;
            s &= s - 1;
            out |= 1 << sigma[x];
        }
        out
    }

    /// Least image of `t` under the symmetries, and `set` mapped by every
    /// symmetry attaining it.
    fn canonical(&self, t: &[u8], set: u128) -> (Key, u128) {
        let mut best: Option<Key> = None;
        let mut acc = 0u128;
        let mut img = Vec::with_capacity(t.len());
        for sigma in self.syms {
            img.clear();
            img.extend(t.iter().map(|&x| sigma[x as usize] as u8));
            img.sort_unstable();
            match best.as_deref().map(|b| img.as_slice().cmp(b)) {
                Some(std::cmp::Ordering::Greater) => continue,
                Some(std::cmp::Ordering::Equal) => acc |= self.map_set(set, sigma),
                _ => {
                    best = Some(img.clone());
                    acc = self.map_set(set, sigma);
                }
            }
        }
        (best.unwrap(), acc)
    }

    /// `(π(T), Q(T))` for a sorted term list.
    fn pi_and_q(&self, t: &[u8]) -> (u128, u128) {
        let mut support = Vec::new();
        let mut mults: Vec<usize> = Vec::new();
        for &x in t {
            if support.last() == Some(&(x as usize)) {
                *mults.last_mut().unwrap() += 1;
            } else {
                support.push(x as usize);
                mults.push(1);
            }
        }
        let size: usize = mults.iter().map(|m| m + 1).product();
        let mut strides = Vec::with_capacity(support.len());
        let mut st = 1;
        for m in &mults {
            strides.push(st);
            st *= m + 1;
        }
        let mut sets = vec![0u128; size];
        sets[0] = 1;
        let mut digits = vec![0usize; support.len()];
        for r in 1..size {
            for (i, d) in digits.iter_mut().enumerate() {
                if *d < mults[i] {
                    *d += 1;
                    break;
                }
                *d = 0;
            }
            let mut cur = 0u128;
            for (i, &d) in digits.iter().enumerate() {
                if d > 0 {
                    cur |= self.translate(sets[r - strides[i]], support[i]);
                }
            }
            sets[r] = cur;
        }
        let full = size - 1;
        let mut q = 0u128;
        for r in 1..size {
            if sets[r] & 1 == 1 {
                q |= sets[full - r];
            }
        }
        (sets[full], q)
    }
}

fn insert_sorted(t: &[u8], x: u8) -> Key {
    let at = t.partition_point(|&y| y <= x);
    let mut out = Vec::with_capacity(t.len() + 1);
    out.extend_from_slice(&t[..at]);
    out.push(x);
    out.extend_from_slice(&t[at..]);
    out
}

fn merge(mut a: HashMap<Key, u128>, b: HashMap<Key, u128>) -> HashMap<Key, u128> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) |= v;
    }
    a
}

pub(super) fn search(g: &FiniteGroup, cfg: &SearchConfig, syms: &[Vec<usize>]) -> Found {
    let n = g.order();
    assert!((2..=MAX_ORDER).contains(&n));
    let ctx = Ctx {
        n,
        mul: (0..n * n).map(|i| g.mul(i / n, i % n) as u8).collect(),
        inv: (0..n).map(|x| g.inv(x) as u8).collect(),
        syms,
    };
    let budget = cfg.budget_for(g);
    let mut layer: Vec<(Key, u128)> = {
        let mut m: HashMap<Key, u128> = HashMap::new();
        for x in 1..n {
            let (k, v) = ctx.canonical(&[x as u8], 1 << x);
            *m.entry(k).or_insert(0) |= v;
        }
        let mut v: Vec<_> = m.into_iter().collect();
        v.sort_unstable();
        v
    };
    let mut nodes = layer.len() as u64;
    let mut exact = true;
    loop {
        let len = layer[0].0.len();
        if cfg.length_cap.is_some_and(|c| len + 1 >= c) && len + 1 < n {
            exact = false;
            break;
        }
        if budget.is_some_and(|b| nodes >= b) {
            exact = false;
            break;
        }
        // Raw successors, grouped by multiset before canonicalising.
        let raw: HashMap<Key, u128> = layer
            .par_iter()
            .fold(HashMap::new, |mut acc, (t, v)| {
                let mut ps = *v;
                while ps != 0 {
                    let p = ps.trailing_zeros() as usize;
                    ps &= ps - 1;
                    for x in 1..n {
                        let p2 = ctx.mul(p, x);
                        if p2 != 0 {
                            *acc.entry(insert_sorted(t, x as u8)).or_insert(0) |= 1u128 << p2;
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, merge);
        let canon: HashMap<Key, u128> = raw
            .into_par_iter()
            .fold(HashMap::new, |mut acc, (t, c)| {
                let (k, v) = ctx.canonical(&t, c);
                *acc.entry(k).or_insert(0) |= v;
                acc
            })
            .reduce(HashMap::new, merge);
        let mut next: Vec<(Key, u128)> = canon
            .into_par_iter()
            .filter_map(|(t, c)| {
                let (pi, q) = ctx.pi_and_q(&t);
                let v = c & pi & !q & !1;
                (v != 0).then_some((t, v))
            })
            .collect();
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        nodes += next.len() as u64;
        layer = next;
    }
    Found {
        witness: least_atom(&ctx, &layer),
        exact,
        nodes,
    }
}

/// Lexicographically least `σ(T · p⁻¹)` over the final layer.
fn least_atom(ctx: &Ctx, layer: &[(Key, u128)]) -> Sequence {
    let best = layer
        .par_iter()
        .filter_map(|(t, v)| {
            let mut best: Option<Key> = None;
            let mut ps = *v;
            while ps != 0 {
                let p = ps.trailing_zeros() as usize;
                ps &= ps - 1;
                let u = insert_sorted(t, ctx.inv[p]);
                for sigma in ctx.syms {
                    let mut img: Key = u.iter().map(|&x| sigma[x as usize] as u8).collect();
                    img.sort_unstable();
                    if best.as_ref().is_none_or(|b| img < *b) {
                        best = Some(img);
                    }
                }
            }
            best
        })
        .min()
        .expect("final layer is nonempty");
    Sequence::from_elements(ctx.n, best.into_iter().map(usize::from))
}
