//! Closed walks at the identity whose proper prefix products are distinct
//! and not the identity. Every product-one ordering of an atom is such a
//! walk, so the longest atom term multiset among them is `D(G)`. Only
//! practical for very small groups; kept as an independent check.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::pi::is_atom;
use crate::sequence::Sequence;

/// Longest atom found by walk enumeration, or `CapExceeded` past `max_walks`.
pub fn large_davenport_by_walks(g: &FiniteGroup, max_walks: u64) -> Result<Sequence> {
    let n = g.order();
    let mut st = State {
        g,
        visited: vec![false; n],
        terms: Vec::new(),
        seen: HashSet::new(),
        best: Sequence::empty(n),
        walks: 0,
        max_walks,
        error: None,
    };
    st.visited[0] = true;
    st.dfs(0);
    match st.error {
        Some(e) => Err(e),
        None => Ok(st.best),
    }
}

struct State<'a> {
    g: &'a FiniteGroup,
    visited: Vec<bool>,
    terms: Vec<usize>,
    seen: HashSet<Sequence>,
    best: Sequence,
    walks: u64,
    max_walks: u64,
    error: Option<Error>,
}

impl State<'_> {
    fn dfs(&mut self, p: usize) {
        for x in 0..self.g.order() {
            if self.error.is_some() {
                return;
            }
            let q = self.g.mul(p, x);
            if q == 0 {
                self.walks += 1;
                if self.walks > self.max_walks {
                    self.error = Some(Error::CapExceeded {
                        what: "closed walks",
                        requested: self.walks as u128,
                        cap: self.max_walks as u128,
                    });
                    return;
                }
                let mut u = Sequence::from_elements(self.g.order(), self.terms.iter().copied());
                u.push(x);
                if u.len() < self.best.len() || self.seen.contains(&u) {
                    continue;
                }
                let better = u.len() > self.best.len() || u.elements() < self.best.elements();
                if better && is_atom(self.g, &u).unwrap_or(false) {
                    self.best = u.clone();
                }
                self.seen.insert(u);
            } else if !self.visited[q] {
                self.visited[q] = true;
                self.terms.push(x);
                self.dfs(q);
                self.terms.pop();
                self.visited[q] = false;
            }
        }
    }
}
