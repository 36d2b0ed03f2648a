//! Subsequence products.
//!
//! `PiTable` holds `π(T)` for every sub-multiset `T | S`, indexed by a
//! mixed-radix rank over the support of `S`. The table is filled by
//! `π(T) = ∪_{g ∈ supp T} π(T g^[-1]) · g` in increasing rank order.

use crate::bitset::{words_for, ElementSet};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::sequence::Sequence;

/// Default ceiling on the number of sub-multisets a table may hold.
pub const DEFAULT_DP_CAP: usize = 1 << 24;

pub struct PiTable {
    n: usize,
    words: usize,
    support: Vec<usize>,
    mults: Vec<u32>,
    strides: Vec<usize>,
    sets: Vec<u64>,
}

/// Number of sub-multisets of `s`, or `None` on overflow.
pub fn submultiset_count(s: &Sequence) -> Option<u128> {
    s.multiplicities()
        .iter()
        .filter(|&&m| m > 0)
        .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128 + 1))
}

impl PiTable {
    pub fn new(g: &FiniteGroup, s: &Sequence) -> Result<Self> {
        Self::with_cap(g, s, DEFAULT_DP_CAP)
    }

    pub fn with_cap(g: &FiniteGroup, s: &Sequence, cap: usize) -> Result<Self> {
        let n = g.order();
        if s.group_order() != n {
            return Err(Error::BadParameter(format!(
                "sequence over a group of order {} used with a group of order {n}",
                s.group_order()
            )));
        }
        let size = submultiset_count(s).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                what: "sub-multiset table",
                requested: size,
                cap: cap as u128,
            });
        }
        let size = size as usize;
        let words = words_for(n);
        let support = s.support();
        let mults: Vec<u32> = support.iter().map(|&x| s.multiplicity(x)).collect();
        let mut strides = Vec::with_capacity(support.len());
        let mut st = 1;
        for &m in &mults {
            strides.push(st);
            st *= m as usize + 1;
        }
        let mut sets = vec![0u64; size * words];
        sets[0] = 1; // π(empty) = {1}
        let mut digits = vec![0u32; support.len()];
        for r in 1..size {
            // advance the mixed-radix counter
            for (i, d) in digits.iter_mut().enumerate() {
                if *d < mults[i] {
                    *d += 1;
                    break;
                }
                *d = 0;
            }
            let (before, cur) = sets.split_at_mut(r * words);
            let cur = &mut cur[..words];
            for (i, &d) in digits.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let child = r - strides[i];
                let src = &before[child * words..(child + 1) * words];
                right_translate_into(g, src, support[i], cur);
            }
        }
        Ok(PiTable {
            n,
            words,
            support,
            mults,
            strides,
            sets,
        })
    }

    /// Number of sub-multisets.
    pub fn size(&self) -> usize {
        self.sets.len() / self.words
    }

    pub fn full_rank(&self) -> usize {
        self.size() - 1
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Rank of `t`, which must divide the tabulated sequence.
    pub fn rank_of(&self, t: &Sequence) -> Option<usize> {
        let mut r = 0;
        let mut count = 0;
        for (i, &x) in self.support.iter().enumerate() {
            let d = t.multiplicity(x);
            if d > self.mults[i] {
                return None;
            }
            count += d as usize;
            r += d as usize * self.strides[i];
        }
        (count == t.len()).then_some(r)
    }

    pub fn sequence_at(&self, rank: usize) -> Sequence {
        let mut s = Sequence::empty(self.n);
        let mut r = rank;
        for (i, &x) in self.support.iter().enumerate() {
            let base = self.mults[i] as usize + 1;
            s.push_n(x, (r % base) as u32);
            r /= base;
        }
        s
    }

    pub(crate) fn words_at(&self, rank: usize) -> &[u64] {
        &self.sets[rank * self.words..(rank + 1) * self.words]
    }

    pub fn at(&self, rank: usize) -> ElementSet {
        ElementSet::from_words(self.n, self.words_at(rank))
    }

    pub fn contains(&self, rank: usize, g: usize) -> bool {
        self.words_at(rank)[g / 64] >> (g % 64) & 1 == 1
    }

    /// `π(S)`
    pub fn full(&self) -> ElementSet {
        self.at(self.full_rank())
    }

    /// `P(S)`: every product of a sub-multiset, including the empty one.
    pub fn all_products(&self) -> ElementSet {
        let mut acc = vec![0u64; self.words];
        for r in 0..self.size() {
            for (a, b) in acc.iter_mut().zip(self.words_at(r)) {
                *a |= b;
            }
        }
        ElementSet::from_words(self.n, &acc)
    }

    /// Does some nonempty `T | S` have `1 ∈ π(T)`?
    pub fn has_product_one_subsequence(&self) -> bool {
        (1..self.size()).any(|r| self.contains(r, 0))
    }

    /// Lexicographically least ordering of the sub-multiset at `rank`
    /// whose product is `target`.
    pub fn ordering_with_product(
        &self,
        g: &FiniteGroup,
        rank: usize,
        target: usize,
    ) -> Option<Vec<usize>> {
        if !self.contains(rank, target) {
            return None;
        }
        let mut rest = rank;
        let mut digits = self.digits(rank);
        let mut prefix = 0;
        let mut out = Vec::new();
        while rest != 0 {
            let mut chosen = None;
            for i in 0..self.support.len() {
                if digits[i] == 0 {
                    continue;
                }
                let p = g.mul(prefix, self.support[i]);
                let need = g.mul(g.inv(p), target);
                if self.contains(rest - self.strides[i], need) {
                    chosen = Some((i, p));
                    break;
                }
            }
            let (i, p) = chosen.expect("table entry promised a completion");
            digits[i] -= 1;
            rest -= self.strides[i];
            prefix = p;
            out.push(self.support[i]);
        }
        Some(out)
    }

    fn digits(&self, rank: usize) -> Vec<u32> {
        let mut r = rank;
        self.mults
            .iter()
            .map(|&m| {
                let base = m as usize + 1;
                let d = (r % base) as u32;
                r /= base;
                d
            })
            .collect()
    }

    /// Is the tabulated sequence an atom: product-one, nonempty, and with no
    /// split into two nonempty product-one parts?
    pub fn is_atom(&self) -> bool {
        let full = self.full_rank();
        if full == 0 || !self.contains(full, 0) {
            return false;
        }
        (1..full).all(|r| !(self.contains(r, 0) && self.contains(full - r, 0)))
    }
}

/// `dst |= src · g` where `src` is a raw bitset over `g`'s elements.
pub(crate) fn right_translate_into(group: &FiniteGroup, src: &[u64], g: usize, dst: &mut [u64]) {
    for (wi, &w) in src.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let x = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            let y = group.mul(x, g);
            dst[y / 64] |= 1 << (y % 64);
        }
    }
}

/// `π(S)`: every product of an ordering of `S`.
pub fn pi(g: &FiniteGroup, s: &Sequence) -> Result<ElementSet> {
    Ok(PiTable::new(g, s)?.full())
}

pub fn is_product_one(g: &FiniteGroup, s: &Sequence) -> Result<bool> {
    Ok(PiTable::new(g, s)?.contains_full(0))
}

impl PiTable {
    fn contains_full(&self, x: usize) -> bool {
        self.contains(self.full_rank(), x)
    }
}

pub fn is_product_one_free(g: &FiniteGroup, s: &Sequence) -> Result<bool> {
    Ok(!PiTable::new(g, s)?.has_product_one_subsequence())
}

pub fn is_atom(g: &FiniteGroup, s: &Sequence) -> Result<bool> {
    Ok(PiTable::new(g, s)?.is_atom())
}

/// `P(S)`, the products of all sub-multisets including the empty one.
pub fn subsequence_products(g: &FiniteGroup, s: &Sequence) -> Result<ElementSet> {
    Ok(PiTable::new(g, s)?.all_products())
}

/// Given `P(S)` for a product-one free `S`, is `S · x` still product-one free?
pub fn extension_stays_free(g: &FiniteGroup, products: &ElementSet, x: usize) -> bool {
    !products.contains(g.inv(x))
}

/// Lexicographically least ordering of `S` with product 1.
pub fn product_one_ordering(g: &FiniteGroup, s: &Sequence) -> Result<Option<Vec<usize>>> {
    let t = PiTable::new(g, s)?;
    Ok(t.ordering_with_product(g, t.full_rank(), 0))
}
