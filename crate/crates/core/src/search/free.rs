//! Depth-first search over product-one free multisets.
//!
//! Multisets are enumerated as non-decreasing index strings. `S · g` stays
//! free iff `g⁻¹ ∉ P(S)`, the set of products of all sub-multisets of `S`.
//! Over a non-abelian group `P(S)` needs the full sub-multiset table, which
//! is kept append-only: adding a copy of the largest element only adds a
//! block of new ranks at the end.

use rayon::prelude::*;

use super::SearchConfig;
use crate::bitset::words_for;
use crate::group::FiniteGroup;
use crate::pi::right_translate_into;
use crate::sequence::Sequence;

pub(super) struct Found {
    pub witness: Sequence,
    pub exact: bool,
    pub nodes: u64,
}

trait Context {
    fn products(&self) -> &[u64];
    /// Appends `g`, which must be at least every current term. Returns false
    /// (and leaves the context unchanged) if a cap prevents it.
    fn push(&mut self, g: usize) -> bool;
    fn pop(&mut self);
}

struct Abelian<'a> {
    g: &'a FiniteGroup,
    words: usize,
    stack: Vec<u64>,
}

impl Context for Abelian<'_> {
    fn products(&self) -> &[u64] {
        &self.stack[self.stack.len() - self.words..]
    }

    fn push(&mut self, x: usize) -> bool {
        let top = self.stack.len() - self.words;
        self.stack.extend_from_within(top..);
        let (old, new) = self.stack.split_at_mut(top + self.words);
        right_translate_into(self.g, &old[top..], x, new);
        true
    }

    fn pop(&mut self) {
        self.stack.truncate(self.stack.len() - self.words);
    }
}

struct General<'a> {
    g: &'a FiniteGroup,
    words: usize,
    cap: usize,
    support: Vec<usize>,
    mults: Vec<u32>,
    strides: Vec<usize>,
    /// `π(T)` for every `T | S`, by mixed-radix rank.
    table: Vec<u64>,
    /// `P` of each prefix of the current string.
    stack: Vec<u64>,
}

impl General<'_> {
    fn size(&self) -> usize {
        self.table.len() / self.words
    }
}

impl Context for General<'_> {
    fn products(&self) -> &[u64] {
        &self.stack[self.stack.len() - self.words..]
    }

    fn push(&mut self, x: usize) -> bool {
        let w = self.words;
        let size = self.size();
        let block = if self.support.last() == Some(&x) {
            *self.strides.last().unwrap()
        } else {
            size
        };
        if size + block > self.cap {
            return false;
        }
        if self.support.last() == Some(&x) {
            *self.mults.last_mut().unwrap() += 1;
        } else {
            self.support.push(x);
            self.mults.push(1);
            self.strides.push(size);
        }
        let top = self.stack.len() - w;
        self.stack.extend_from_within(top..);
        self.table.resize((size + block) * w, 0);
        for r in size..size + block {
            let (before, rest) = self.table.split_at_mut(r * w);
            let cur = &mut rest[..w];
            let mut rem = r;
            for i in 0..self.support.len() {
                let base = self.mults[i] as usize + 1;
                if rem % base != 0 {
                    let child = r - self.strides[i];
                    right_translate_into(
                        self.g,
                        &before[child * w..(child + 1) * w],
                        self.support[i],
                        cur,
                    );
                }
                rem /= base;
            }
            let p = self.stack.len() - w;
            for (a, b) in self.stack[p..].iter_mut().zip(cur.iter()) {
                *a |= b;
            }
        }
        true
    }

    fn pop(&mut self) {
        let w = self.words;
        let last = self.support.len() - 1;
        let new_size = if self.mults[last] == 1 {
            self.support.pop();
            self.mults.pop();
            self.strides.pop().unwrap()
        } else {
            self.mults[last] -= 1;
            self.size() - self.strides[last]
        };
        self.table.truncate(new_size * w);
        self.stack.truncate(self.stack.len() - w);
    }
}

struct Walker<'c, C: Context> {
    g: &'c FiniteGroup,
    ctx: C,
    terms: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    length_cap: Option<usize>,
    exact: bool,
    /// Collect every free string of exactly this length instead.
    collect: Option<(usize, Vec<Vec<usize>>)>,
}

impl<C: Context> Walker<'_, C> {
    fn extendable(&self, x: usize) -> bool {
        let inv = self.g.inv(x);
        self.ctx.products()[inv / 64] >> (inv % 64) & 1 == 0
    }

    fn dfs(&mut self, from: usize) {
        self.nodes += 1;
        if self.terms.len() > self.best.len() {
            self.best.clone_from(&self.terms);
        }
        if let Some((len, out)) = &mut self.collect {
            if self.terms.len() == *len {
                out.push(self.terms.clone());
                return;
            }
        }
        if self.budget.is_some_and(|b| self.nodes >= b) {
            self.exact = false;
            return;
        }
        let at_cap = self.length_cap.is_some_and(|c| self.terms.len() >= c);
        for x in from..self.g.order() {
            if !self.extendable(x) {
                continue;
            }
            if at_cap || !self.ctx.push(x) {
                self.exact = false;
                continue;
            }
            self.terms.push(x);
            self.dfs(x);
            self.terms.pop();
            self.ctx.pop();
            if self.budget.is_some_and(|b| self.nodes >= b) {
                self.exact = false;
                return;
            }
        }
    }
}

struct Branch {
    best: Vec<usize>,
    nodes: u64,
    exact: bool,
    collected: Vec<Vec<usize>>,
}

fn run_branch(g: &FiniteGroup, cfg: &SearchConfig, root: usize, collect: Option<usize>) -> Branch {
    let words = words_for(g.order());
    let mut base = vec![0u64; words];
    base[0] = 1;
    macro_rules! walk {
        ($ctx:expr) => {{
            let mut w = Walker {
                g,
                ctx: $ctx,
                terms: Vec::new(),
                best: Vec::new(),
                nodes: 0,
                budget: cfg.budget_for(g),
                length_cap: cfg.length_cap,
                exact: true,
                collect: collect.map(|l| (l, Vec::new())),
            };
            if w.extendable(root) && w.ctx.push(root) {
                w.terms.push(root);
                w.dfs(root);
            }
            Branch {
                best: w.best,
                nodes: w.nodes,
                exact: w.exact,
                collected: w.collect.map(|c| c.1).unwrap_or_default(),
            }
        }};
    }
    if g.is_abelian() {
        walk!(Abelian {
            g,
            words,
            stack: base
        })
    } else {
        walk!(General {
            g,
            words,
            cap: cfg.dp_cap,
            support: Vec::new(),
            mults: Vec::new(),
            strides: Vec::new(),
            table: base.clone(),
            stack: base,
        })
    }
}

pub(super) fn search(g: &FiniteGroup, cfg: &SearchConfig) -> Found {
    let n = g.order();
    let branches: Vec<Branch> = (1..n)
        .into_par_iter()
        .map(|r| run_branch(g, cfg, r, None))
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut exact = true;
    let mut nodes = 1;
    for b in branches {
        nodes += b.nodes;
        exact &= b.exact;
        if b.best.len() > best.len() {
            best = b.best;
        }
    }
    Found {
        witness: Sequence::from_elements(n, best),
        exact,
        nodes,
    }
}

/// Every free multiset of length `len`, or `None` if a cap interfered.
pub(super) fn all_of_length(
    g: &FiniteGroup,
    cfg: &SearchConfig,
    len: usize,
) -> Option<Vec<Sequence>> {
    let n = g.order();
    if len == 0 {
        return Some(vec![Sequence::empty(n)]);
    }
    let branches: Vec<Branch> = (1..n)
        .into_par_iter()
        .map(|r| run_branch(g, cfg, r, Some(len)))
        .collect();
    let mut out = Vec::new();
    for b in branches {
        if !b.exact {
            return None;
        }
        out.extend(
            b.collected
                .into_iter()
                .map(|t| Sequence::from_elements(n, t)),
        );
    }
    Some(out)
}
