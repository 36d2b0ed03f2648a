//! Constructors for the concrete group families and product constructions.
//!
//! Canonical generator names:
//! - `cyclic(n)`: `a`
//! - `dihedral(2n)`: `r` (rotation, order n), `s` (reflection)
//! - `dicyclic(4n)`, `semidihedral`, `modular_maximal_cyclic`, `metacyclic`: `a`, `b`
//! - `heisenberg(p)`: `a`, `b`, `c` with `c` central and `b a b^-1 = a c^-1`
//! - `from_permutations`: `p1`, `p2`, ...
//!
//! Products keep the names of the left factor and rename clashing names of
//! the right factor by appending the smallest free integer suffix (`a` -> `a2`).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::{gcd, FiniteGroup, MAX_TABLE_ORDER};
use crate::morphism::extend_homomorphism;

/// Order cap for permutation-group closure.
pub const DEFAULT_PERMUTATION_CAP: usize = 5040;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_TABLE_ORDER {
        return Err(Error::BadParameter(format!(
            "group order {n} outside 1..={MAX_TABLE_ORDER}"
        )));
    }
    Ok(())
}

fn names(list: &[(&str, usize)]) -> Vec<(String, usize)> {
    list.iter().map(|&(s, g)| (s.to_string(), g)).collect()
}

/// The cyclic group Z/n, element `i` being `a^i`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(
        (1..=MAX_TABLE_ORDER).contains(&n),
        "cyclic order {n} out of range"
    );
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u16;
        }
    }
    let mut g = FiniteGroup::from_trusted_table(n, table).with_name(format!("C{n}"));
    if n > 1 {
        g.set_gen_names(names(&[("a", 1)])).unwrap();
    }
    g
}

fn merge_names(left: &[(String, usize)], right: Vec<(String, usize)>) -> Vec<(String, usize)> {
    let mut out: Vec<(String, usize)> = left.to_vec();
    for (name, g) in right {
        let mut candidate = name.clone();
        let mut k = 2;
        while out.iter().any(|(n, _)| *n == candidate) {
            candidate = format!("{name}{k}");
            k += 1;
        }
        out.push((candidate, g));
    }
    out
}

/// Direct product; element `(x, y)` has index `x + |A| * y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    assert!(n <= MAX_TABLE_ORDER, "direct product too large");
    let mut table = vec![0u16; n * n];
    for x1 in 0..na {
        for y1 in 0..nb {
            let i = x1 + na * y1;
            for x2 in 0..na {
                for y2 in 0..nb {
                    let j = x2 + na * y2;
                    table[i * n + j] = (a.mul(x1, x2) + na * b.mul(y1, y2)) as u16;
                }
            }
        }
    }
    let mut g =
        FiniteGroup::from_trusted_table(n, table).with_name(format!("{}x{}", a.name(), b.name()));
    let right = b
        .gen_names()
        .iter()
        .map(|(s, y)| (s.clone(), na * y))
        .collect();
    let merged = merge_names(a.gen_names(), right);
    g.set_gen_names(merged)
        .expect("product of generating sets generates the product");
    g
}

/// `<a, b | a^m = 1, b^k = a^t, b a b^-1 = a^r>`, element `a^i b^j` at `i + m j`.
///
/// Requires `r^k = 1 (mod m)` and `r t = t (mod m)`, which make the normal form
/// consistent.
pub fn metacyclic(m: usize, k: usize, t: usize, r: usize) -> Result<FiniteGroup> {
    if m == 0 || k == 0 {
        return Err(Error::BadParameter(
            "metacyclic orders must be positive".into(),
        ));
    }
    check_order(m * k)?;
    let r = r % m;
    let t = t % m;
    if m > 1 && gcd(r, m) != 1 {
        return Err(Error::BadParameter(format!("{r} is not a unit mod {m}")));
    }
    let mut rpow = vec![1 % m; k + 1];
    for j in 1..=k {
        rpow[j] = rpow[j - 1] * r % m;
    }
    if rpow[k] != 1 % m || (r * t) % m != t {
        return Err(Error::BadParameter(format!(
            "metacyclic parameters (m={m}, k={k}, t={t}, r={r}) are inconsistent"
        )));
    }
    let n = m * k;
    let mut table = vec![0u16; n * n];
    for i1 in 0..m {
        for j1 in 0..k {
            for i2 in 0..m {
                for j2 in 0..k {
                    // a^i1 b^j1 a^i2 b^j2 = a^(i1 + r^j1 i2) b^(j1 + j2)
                    let mut i = (i1 + rpow[j1] * i2) % m;
                    let mut j = j1 + j2;
                    if j >= k {
                        j -= k;
                        i = (i + t) % m;
                    }
                    table[(i1 + m * j1) * n + (i2 + m * j2)] = (i + m * j) as u16;
                }
            }
        }
    }
    let mut g =
        FiniteGroup::from_trusted_table(n, table).with_name(format!("Meta({m},{k},{t},{r})"));
    let mut gens = Vec::new();
    if m > 1 {
        gens.push(("a", 1));
    }
    if k > 1 {
        gens.push(("b", m));
    }
    g.set_gen_names(names(&gens))?;
    Ok(g)
}

/// Dihedral group of order `order = 2n`, generators `r` and `s`.
/// `dihedral(2)` is C2 (with `r` the identity).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "dihedral order {order} must be even and >= 2"
        )));
    }
    let n = order / 2;
    let mut g = metacyclic(n, 2, 0, n - 1)?;
    if n == 1 {
        g.set_gen_names(names(&[("s", 1)]))?;
    } else {
        g.set_gen_names(names(&[("r", 1), ("s", n)]))?;
    }
    Ok(g.with_name(format!("D{order}")))
}

/// Dicyclic group of order `order = 4n`: `a^2n = 1, b^2 = a^n, b a b^-1 = a^-1`.
/// `dicyclic(4)` is C4 and `dicyclic(8)` is the quaternion group.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(4) {
        return Err(Error::BadParameter(format!(
            "dicyclic order {order} must be a multiple of 4"
        )));
    }
    let n = order / 4;
    let g = metacyclic(2 * n, 2, n, 2 * n - 1)?;
    Ok(g.with_name(format!("Q{order}")))
}

fn two_power_exponent(order: usize, what: &str) -> Result<u32> {
    if order < 16 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!(
            "{what} order {order} must be 2^n >= 16"
        )));
    }
    Ok(order.trailing_zeros())
}

/// Semidihedral group of order `2^n >= 16`: `b a b = a^(2^(n-2) - 1)`.
pub fn semidihedral(order: usize) -> Result<FiniteGroup> {
    let n = two_power_exponent(order, "semidihedral")?;
    let m = 1usize << (n - 1);
    let g = metacyclic(m, 2, 0, (1 << (n - 2)) - 1)?;
    Ok(g.with_name(format!("SD{order}")))
}

/// Modular maximal-cyclic group of order `2^n >= 16`: `b a b = a^(2^(n-2) + 1)`.
pub fn modular_maximal_cyclic(order: usize) -> Result<FiniteGroup> {
    let n = two_power_exponent(order, "modular maximal-cyclic")?;
    let m = 1usize << (n - 1);
    let g = metacyclic(m, 2, 0, (1 << (n - 2)) + 1)?;
    Ok(g.with_name(format!("M{order}")))
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Heisenberg group of order `p^3` for an odd prime `p`:
/// `a^p = b^p = c^p = 1`, `c` central, `b a b^-1 = a c^-1`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadParameter(format!(
            "heisenberg needs an odd prime, got {p}"
        )));
    }
    let ca = cyclic(p);
    let cc = cyclic(p).renamed(&[("a", "c")])?;
    let normal = direct_product(&ca, &cc);
    let acting = cyclic(p).renamed(&[("a", "b")])?;
    let a = normal.element_by_name("a").unwrap();
    let c = normal.element_by_name("c").unwrap();
    let a_cinv = normal.mul(a, normal.inv(c));
    let action = SemidirectAction::from_generator_images(normal, acting, &[vec![a_cinv, c]])?;
    let g = semidirect_product(&action)?;
    let (a, b, c) = (
        g.element_by_name("a").unwrap(),
        g.element_by_name("b").unwrap(),
        g.element_by_name("c").unwrap(),
    );
    let g = g.with_gen_names(names(&[("a", a), ("b", b), ("c", c)]))?;
    Ok(g.with_name(format!("H{}", p * p * p)))
}

/// An action of `acting` on `normal` by automorphisms: one permutation of
/// `normal`'s elements per element of `acting`.
#[derive(Clone, Debug)]
pub struct SemidirectAction {
    pub normal: FiniteGroup,
    pub acting: FiniteGroup,
    pub action: Vec<Vec<usize>>,
}

impl SemidirectAction {
    pub fn trivial(normal: FiniteGroup, acting: FiniteGroup) -> Self {
        let id: Vec<usize> = (0..normal.order()).collect();
        let action = vec![id; acting.order()];
        SemidirectAction {
            normal,
            acting,
            action,
        }
    }

    /// Builds the full action table from the images of `normal`'s named
    /// generators under each of `acting`'s named generators.
    ///
    /// `images[i][j]` is the image of the j-th named generator of `normal`
    /// under the i-th named generator of `acting`.
    pub fn from_generator_images(
        normal: FiniteGroup,
        acting: FiniteGroup,
        images: &[Vec<usize>],
    ) -> Result<Self> {
        let ngens: Vec<usize> = normal.gen_names().iter().map(|&(_, g)| g).collect();
        let hgens: Vec<usize> = acting.gen_names().iter().map(|&(_, g)| g).collect();
        if images.len() != hgens.len() || images.iter().any(|im| im.len() != ngens.len()) {
            return Err(Error::BadParameter(
                "generator image table has the wrong shape".into(),
            ));
        }
        let mut auts = Vec::with_capacity(hgens.len());
        for (i, im) in images.iter().enumerate() {
            let map = extend_homomorphism(&normal, &normal, &ngens, im)
                .ok_or(Error::NotAutomorphism(hgens[i]))?;
            auts.push(map);
        }
        // action[h * g] = action[h] o action[g]
        let mut action: Vec<Option<Vec<usize>>> = vec![None; acting.order()];
        action[0] = Some((0..normal.order()).collect());
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for (gi, &g) in hgens.iter().enumerate() {
                let hg = acting.mul(h, g);
                let ah = action[h].as_ref().unwrap();
                let composed: Vec<usize> = (0..normal.order()).map(|x| ah[auts[gi][x]]).collect();
                match &action[hg] {
                    None => {
                        action[hg] = Some(composed);
                        queue.push_back(hg);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::NotHomomorphism(h, g));
                    }
                    Some(_) => {}
                }
            }
        }
        let action = action
            .into_iter()
            .map(|a| {
                a.ok_or_else(|| Error::BadParameter("acting generators do not generate".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SemidirectAction {
            normal,
            acting,
            action,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let (n, h) = (&self.normal, &self.acting);
        if self.action.len() != h.order() {
            return Err(Error::BadParameter(
                "one permutation per acting element required".into(),
            ));
        }
        for (x, perm) in self.action.iter().enumerate() {
            let mut seen = vec![false; n.order()];
            if perm.len() != n.order()
                || perm
                    .iter()
                    .any(|&p| p >= n.order() || std::mem::replace(&mut seen[p], true))
            {
                return Err(Error::NotAutomorphism(x));
            }
            for a in 0..n.order() {
                for b in 0..n.order() {
                    if perm[n.mul(a, b)] != n.mul(perm[a], perm[b]) {
                        return Err(Error::NotAutomorphism(x));
                    }
                }
            }
        }
        for h1 in 0..h.order() {
            for h2 in 0..h.order() {
                let prod = &self.action[h.mul(h1, h2)];
                let (p1, p2) = (&self.action[h1], &self.action[h2]);
                if (0..n.order()).any(|x| prod[x] != p1[p2[x]]) {
                    return Err(Error::NotHomomorphism(h1, h2));
                }
            }
        }
        Ok(())
    }
}

/// `N ⋊ H` with `(n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 h2)`; element
/// `(n, h)` has index `n + |N| h`, so `h n h^-1 = act(h)(n)`.
pub fn semidirect_product(act: &SemidirectAction) -> Result<FiniteGroup> {
    act.validate()?;
    let (nn, nh) = (act.normal.order(), act.acting.order());
    let n = nn * nh;
    check_order(n)?;
    let mut table = vec![0u16; n * n];
    for h1 in 0..nh {
        let perm = &act.action[h1];
        for n1 in 0..nn {
            let i = n1 + nn * h1;
            for h2 in 0..nh {
                let hh = act.acting.mul(h1, h2);
                for n2 in 0..nn {
                    let j = n2 + nn * h2;
                    table[i * n + j] = (act.normal.mul(n1, perm[n2]) + nn * hh) as u16;
                }
            }
        }
    }
    let mut g = FiniteGroup::from_trusted_table(n, table).with_name(format!(
        "{}:{}",
        act.normal.name(),
        act.acting.name()
    ));
    let right = act
        .acting
        .gen_names()
        .iter()
        .map(|(s, y)| (s.clone(), nn * y))
        .collect();
    g.set_gen_names(merge_names(act.normal.gen_names(), right))?;
    Ok(g)
}

/// Parses cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`; `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let bad = |msg: &str| Error::BadParameter(format!("permutation {text:?}: {msg}"));
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let pts: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_>>()?;
        if pts.iter().any(|&p| p == 0 || p > degree) {
            return Err(bad("point out of range"));
        }
        let mut cycle_perm: Vec<usize> = (0..degree).collect();
        for (i, &p) in pts.iter().enumerate() {
            let q = pts[(i + 1) % pts.len()];
            cycle_perm[p - 1] = q - 1;
        }
        let mut check = vec![false; degree];
        for &p in &pts {
            if std::mem::replace(&mut check[p - 1], true) {
                return Err(bad("repeated point in cycle"));
            }
        }
        // apply earlier cycles first
        perm = perm.iter().map(|&x| cycle_perm[x]).collect();
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

/// The permutation group generated by `gens` (0-based image vectors),
/// multiplied left to right: `(p q)(x) = q(p(x))`.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<FiniteGroup> {
    from_permutations_with_cap(degree, gens, DEFAULT_PERMUTATION_CAP)
}

pub fn from_permutations_with_cap(
    degree: usize,
    gens: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteGroup> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree
            || g.iter()
                .any(|&x| x >= degree || std::mem::replace(&mut seen[x], true))
        {
            return Err(Error::BadParameter(
                "generator is not a permutation of the given degree".into(),
            ));
        }
    }
    let compose =
        |p: &[u8], q: &[usize]| -> Vec<u8> { p.iter().map(|&x| q[x as usize] as u8).collect() };
    if degree > 255 {
        return Err(Error::BadParameter("degree above 255".into()));
    }
    let identity: Vec<u8> = (0..degree as u8).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = compose(&elems[i], g);
            if !index.contains_key(&y) {
                if elems.len() >= cap.min(MAX_TABLE_ORDER) {
                    return Err(Error::CapExceeded {
                        what: "permutation group order",
                        requested: elems.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let as_usize: Vec<Vec<usize>> = elems
        .iter()
        .map(|e| e.iter().map(|&x| x as usize).collect())
        .collect();
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&compose(&elems[a], &as_usize[b])] as u16;
        }
    }
    let mut g = FiniteGroup::from_trusted_table(n, table).with_name(format!("Perm({degree})"));
    let named: Vec<(String, usize)> = gens
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let key: Vec<u8> = p.iter().map(|&x| x as u8).collect();
            (format!("p{}", i + 1), index[&key])
        })
        .collect();
    g.set_gen_names(named)?;
    Ok(g)
}

pub fn symmetric(degree: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::BadParameter(
            "symmetric group degree must be >= 1".into(),
        ));
    }
    let mut gens = Vec::new();
    if degree >= 2 {
        gens.push(parse_cycles(degree, "(1 2)")?);
    }
    if degree >= 3 {
        let cyc: Vec<String> = (1..=degree).map(|i| i.to_string()).collect();
        gens.push(parse_cycles(degree, &format!("({})", cyc.join(" ")))?);
    }
    Ok(from_permutations(degree, &gens)?.with_name(format!("S{degree}")))
}

pub fn alternating(degree: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::BadParameter(
            "alternating group degree must be >= 1".into(),
        ));
    }
    let gens: Vec<Vec<usize>> = (3..=degree)
        .map(|k| parse_cycles(degree, &format!("(1 2 {k})")))
        .collect::<Result<_>>()?;
    Ok(from_permutations(degree, &gens)?.with_name(format!("A{degree}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::fingerprint;
    use crate::group::validate_cayley;
    use crate::morphism::is_isomorphic;

    fn revalidate(g: &FiniteGroup) {
        let v = validate_cayley(&g.to_rows()).expect("constructor output must validate");
        assert_eq!(v.order(), g.order());
    }

    #[test]
    fn constructor_outputs_validate() {
        let groups = vec![
            cyclic(1),
            cyclic(7),
            direct_product(&cyclic(2), &cyclic(6)),
            dihedral(2).unwrap(),
            dihedral(6).unwrap(),
            dihedral(16).unwrap(),
            dicyclic(4).unwrap(),
            dicyclic(12).unwrap(),
            dicyclic(16).unwrap(),
            semidihedral(16).unwrap(),
            semidihedral(32).unwrap(),
            modular_maximal_cyclic(16).unwrap(),
            heisenberg(3).unwrap(),
            symmetric(4).unwrap(),
            alternating(4).unwrap(),
            metacyclic(7, 3, 0, 2).unwrap(),
        ];
        for g in &groups {
            revalidate(g);
        }
    }

    #[test]
    fn degenerate_parameters() {
        assert_eq!(dihedral(2).unwrap().order(), 2);
        assert!(is_isomorphic(&dicyclic(4).unwrap(), &cyclic(4)).unwrap());
        assert!(dihedral(7).is_err());
        assert!(semidihedral(8).is_err());
        assert!(heisenberg(2).is_err());
        assert!(heisenberg(9).is_err());
        assert!(metacyclic(7, 3, 0, 3).is_err());
    }

    #[test]
    fn product_names_are_suffixed() {
        let g = direct_product(&direct_product(&cyclic(2), &cyclic(2)), &cyclic(4));
        let names: Vec<&str> = g.gen_names().iter().map(|(s, _)| s.as_str()).collect();
        assert_eq!(names, vec!["a", "a2", "a3"]);
        assert_eq!(g.order(), 16);
        assert!(g.is_abelian());
        assert_eq!(direct_product(&cyclic(2), &cyclic(2)).exponent(), 2);
    }

    #[test]
    fn c3_times_heisenberg() {
        let g = direct_product(&cyclic(3), &heisenberg(3).unwrap());
        assert_eq!(g.order(), 81);
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn heisenberg_structure() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert!(!h.is_abelian());
        assert_eq!(h.center().len(), 3);
        let (a, b, c) = (
            h.element_by_name("a").unwrap(),
            h.element_by_name("b").unwrap(),
            h.element_by_name("c").unwrap(),
        );
        assert_eq!(h.conj(b, a), h.mul(a, h.inv(c)));
        assert_eq!(h.mul(a, c), h.mul(c, a));
        assert_eq!(h.mul(b, c), h.mul(c, b));
    }

    #[test]
    fn dihedral_odd_derived_and_dicyclic_involution() {
        for n in [3usize, 5, 7, 9] {
            assert_eq!(dihedral(2 * n).unwrap().commutator_subgroup().len(), n);
        }
        for order in [8usize, 12, 16, 20, 24] {
            let g = dicyclic(order).unwrap();
            let invols = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
            assert_eq!(invols, 1, "dicyclic({order})");
        }
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        for (n, h) in [
            (cyclic(4), cyclic(3)),
            (dihedral(6).unwrap(), cyclic(2)),
            (direct_product(&cyclic(2), &cyclic(2)), cyclic(4)),
        ] {
            let semi =
                semidirect_product(&SemidirectAction::trivial(n.clone(), h.clone())).unwrap();
            assert!(is_isomorphic(&semi, &direct_product(&n, &h)).unwrap());
        }
    }

    #[test]
    fn bad_actions_are_rejected() {
        // swapping 0 and 1 in C3 is not an automorphism
        let n = cyclic(3);
        let h = cyclic(2);
        let act = SemidirectAction {
            normal: n.clone(),
            acting: h.clone(),
            action: vec![vec![0, 1, 2], vec![1, 0, 2]],
        };
        assert!(matches!(
            semidirect_product(&act),
            Err(Error::NotAutomorphism(1))
        ));
        // inversion of C3 indexed by C3 is not a homomorphism C3 -> Aut(C3)
        let act = SemidirectAction {
            normal: n,
            acting: cyclic(3),
            action: vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]],
        };
        assert!(matches!(
            semidirect_product(&act),
            Err(Error::NotHomomorphism(..))
        ));
    }

    #[test]
    fn permutation_groups() {
        let s3 = from_permutations(
            3,
            &[
                parse_cycles(3, "(1 2 3)").unwrap(),
                parse_cycles(3, "(1 2)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(is_isomorphic(&s3, &dihedral(6).unwrap()).unwrap());
        let a4 = from_permutations(
            4,
            &[
                parse_cycles(4, "(1 2 3)").unwrap(),
                parse_cycles(4, "(1 2)(3 4)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        assert!(is_isomorphic(&a4, &alternating(4).unwrap()).unwrap());
        let trivial = from_permutations(1, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(matches!(
            from_permutations_with_cap(
                5,
                &[
                    parse_cycles(5, "(1 2 3 4 5)").unwrap(),
                    parse_cycles(5, "(1 2)").unwrap()
                ],
                100
            ),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn q8_differs_from_d8() {
        assert_ne!(
            fingerprint(&dicyclic(8).unwrap()),
            fingerprint(&dihedral(8).unwrap())
        );
    }
}
