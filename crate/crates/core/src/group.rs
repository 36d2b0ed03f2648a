//! Explicit finite groups given by a validated Cayley table.

use std::collections::VecDeque;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Largest order a Cayley table may have; entries are stored as `u16`.
pub const MAX_TABLE_ORDER: usize = u16::MAX as usize;

/// A finite group stored as its full multiplication table.
///
/// Element `0` is always the identity. Row `g`, column `h` holds `g * h`.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    elem_orders: Vec<u32>,
    name: String,
    gen_names: Vec<(String, usize)>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("gen_names", &self.gen_names)
            .finish()
    }
}

/// Validates an untrusted Cayley table and builds a group from it.
///
/// If the identity is not at index 0 the table is relabelled by swapping it
/// into place. Associativity is checked for every triple.
pub fn validate_cayley(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    if n > MAX_TABLE_ORDER {
        return Err(Error::CapExceeded {
            what: "cayley table order",
            requested: n as u128,
            cap: MAX_TABLE_ORDER as u128,
        });
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::NotClosed {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
        .ok_or(Error::NoIdentity)?;

    // swap labels 0 and e so that the identity sits at index 0
    let relabel = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]) as u16;
        }
    }

    let mut inverse = vec![0u16; n];
    for i in 0..n {
        let row = &table[i * n..(i + 1) * n];
        let mut found = None;
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                if found.is_some() {
                    return Err(Error::NoInverse {
                        element: relabel(i),
                    });
                }
                found = Some(j);
            }
        }
        match found {
            Some(j) if table[j * n + i] == 0 => inverse[i] = j as u16,
            _ => {
                return Err(Error::NoInverse {
                    element: relabel(i),
                })
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Err(Error::NotAssociative {
                        triple: (relabel(a), relabel(b), relabel(c)),
                    });
                }
            }
        }
    }

    let mut g = FiniteGroup::from_parts(n, table, inverse);
    g.name = format!("cayley({n})");
    Ok(g)
}

impl FiniteGroup {
    fn from_parts(order: usize, table: Vec<u16>, inverse: Vec<u16>) -> Self {
        let mut g = FiniteGroup {
            order,
            table,
            inverse,
            elem_orders: Vec::new(),
            name: String::new(),
            gen_names: Vec::new(),
        };
        g.elem_orders = (0..order).map(|x| g.compute_order(x)).collect();
        g
    }

    /// Builds a group from a table produced by one of our own constructors.
    /// Identity must be 0; associativity is not rechecked.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u16>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|j| table[j] as usize == j && table[j * order] as usize == j));
        let mut inverse = vec![0u16; order];
        for i in 0..order {
            let j = table[i * order..(i + 1) * order]
                .iter()
                .position(|&v| v == 0)
                .expect("constructor produced an element without inverse");
            inverse[i] = j as u16;
        }
        FiniteGroup::from_parts(order, table, inverse)
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Row `a` of the table: `row(a)[b] == mul(a, b)`.
    #[inline]
    pub fn row(&self, a: usize) -> &[u16] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.elem_orders[a] as i64;
        let e = k.rem_euclid(ord);
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gh = self.mul(g, h);
        self.mul(self.mul(self.inv(g), self.inv(h)), gh)
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.elem_orders[g] as usize
    }

    pub fn exponent(&self) -> usize {
        self.elem_orders
            .iter()
            .fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_elements(
            self.order,
            (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))),
        )
    }

    pub fn commutator_subgroup(&self) -> ElementSet {
        let mut comms = self.empty_set();
        for a in 0..self.order {
            for b in 0..self.order {
                comms.insert(self.commutator(a, b));
            }
        }
        self.subgroup_generated(&comms)
    }

    /// Closure of `gens` under multiplication; always contains the identity.
    pub fn subgroup_generated(&self, gens: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = gens.iter().collect();
        let mut set = ElementSet::singleton(self.order, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(0)
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &ElementSet) -> bool {
        self.is_subgroup(set)
            && (0..self.order).all(|h| set.iter().all(|n| set.contains(self.conj(h, n))))
    }

    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = self.empty_set();
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen.contains(g) {
                continue;
            }
            let class =
                ElementSet::from_elements(self.order, (0..self.order).map(|h| self.conj(h, g)));
            seen.union_with(&class);
            classes.push(class);
        }
        classes
    }

    /// Named elements (generators, or every element for tables loaded with labels).
    pub fn gen_names(&self) -> &[(String, usize)] {
        &self.gen_names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.gen_names
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    /// Replaces the name table. The named elements must generate the group.
    pub fn with_gen_names(mut self, names: Vec<(String, usize)>) -> Result<Self> {
        self.set_gen_names(names)?;
        Ok(self)
    }

    pub(crate) fn set_gen_names(&mut self, names: Vec<(String, usize)>) -> Result<()> {
        for (i, (n, g)) in names.iter().enumerate() {
            if *g >= self.order {
                return Err(Error::BadParameter(format!(
                    "name {n:?} points outside the group"
                )));
            }
            if !valid_name(n) {
                return Err(Error::BadParameter(format!("invalid generator name {n:?}")));
            }
            if names[..i].iter().any(|(m, _)| m == n) {
                return Err(Error::BadParameter(format!(
                    "duplicate generator name {n:?}"
                )));
            }
        }
        let span = ElementSet::from_elements(self.order, names.iter().map(|&(_, g)| g));
        if self.order > 1 && !names.is_empty() && self.subgroup_generated(&span).len() != self.order
        {
            return Err(Error::BadParameter(
                "named elements do not generate the group".into(),
            ));
        }
        self.gen_names = names;
        Ok(())
    }

    /// Adds an extra named element without touching the existing names.
    pub fn bind_name(mut self, name: &str, element: usize) -> Result<Self> {
        let mut names = self.gen_names.clone();
        names.push((name.to_string(), element));
        self.set_gen_names(names)?;
        Ok(self)
    }

    /// Renames generators according to `(old, new)` pairs.
    pub fn renamed(mut self, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut names = self.gen_names.clone();
        for (old, new) in pairs {
            let slot = names
                .iter_mut()
                .find(|(n, _)| n == old)
                .ok_or_else(|| Error::UnknownGenerator(old.to_string()))?;
            slot.0 = new.to_string();
        }
        self.set_gen_names(names)?;
        Ok(self)
    }

    /// A word in the named elements for every element, shortest first by BFS.
    /// Elements that carry their own name are rendered as that name.
    pub fn element_labels(&self) -> Vec<String> {
        let mut labels: Vec<Option<String>> = vec![None; self.order];
        labels[0] = Some("1".to_string());
        for (n, g) in &self.gen_names {
            if *g != 0 && labels[*g].is_none() {
                labels[*g] = Some(n.clone());
            }
        }
        // BFS words: each element reached as parent * generator
        let mut word: Vec<Option<Vec<usize>>> = vec![None; self.order];
        word[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, (_, g)) in self.gen_names.iter().enumerate() {
                let y = self.mul(x, *g);
                if word[y].is_none() {
                    let mut w = word[x].clone().unwrap();
                    w.push(gi);
                    word[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        (0..self.order)
            .map(|x| {
                if let Some(l) = &labels[x] {
                    return l.clone();
                }
                match &word[x] {
                    Some(w) => render_word(w, &self.gen_names),
                    None => format!("#{x}"),
                }
            })
            .collect()
    }

    /// Applies a relabelling `perm` (old index -> new index) with `perm[0] == 0`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return Err(Error::BadParameter(
                "relabelling must fix the identity".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParameter(
                    "relabelling is not a permutation".into(),
                ));
            }
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u16;
            }
        }
        let mut g = FiniteGroup::from_trusted_table(n, table);
        g.name = self.name.clone();
        g.gen_names = self
            .gen_names
            .iter()
            .map(|(s, x)| (s.clone(), perm[*x]))
            .collect();
        Ok(g)
    }

    /// The quotient by a normal subgroup, with cosets numbered by first representative.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::BadParameter(
                "quotient by a non-normal subset".into(),
            ));
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for k in normal.iter() {
                coset[self.mul(g, k)] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![0u16; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = coset[self.mul(reps[i], reps[j])] as u16;
            }
        }
        let mut q = FiniteGroup::from_trusted_table(m, table);
        q.name = format!("{}/N", self.name);
        let names = self
            .gen_names
            .iter()
            .map(|(s, g)| (s.clone(), coset[*g]))
            .collect();
        // names in a quotient may collide as elements; that is fine
        q.gen_names = names;
        Ok((q, coset))
    }

    /// The table as nested rows, for export and revalidation.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }
}

pub(crate) fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn render_word(w: &[usize], names: &[(String, usize)]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = &names[w[i]].0;
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
