//! Recipes for the groups identified by small-groups ids `(order, k)`.
//!
//! Each recipe is a construction whose structure is pinned by its
//! presentation; the stored fingerprint guards against a recipe drifting
//! to a different isomorphism class. Ids whose structure description does
//! not single out one presentation are deliberately absent.

use crate::construct::{
    alternating, cyclic, dicyclic, dihedral, direct_product, from_permutations, heisenberg,
    metacyclic, modular_maximal_cyclic, semidihedral, semidirect_product, symmetric,
    SemidirectAction,
};
use crate::error::{Error, Result};
use crate::fingerprint::fingerprint;
use crate::group::FiniteGroup;

pub struct RegistryEntry {
    pub id: (usize, usize),
    pub name: &'static str,
    pub build: fn() -> Result<FiniteGroup>,
    /// `GroupFingerprint` display form of the expected group.
    pub fingerprint: &'static str,
}

fn cyc(n: usize, name: &str) -> FiniteGroup {
    if n == 1 {
        return cyclic(1);
    }
    cyclic(n).renamed(&[("a", name)]).unwrap()
}

/// Direct product of cyclic groups.
fn ab(orders: &[usize]) -> Result<FiniteGroup> {
    let mut g = cyclic(orders[0]);
    for &n in &orders[1..] {
        g = direct_product(&g, &cyclic(n));
    }
    Ok(g)
}

fn named_abelian(factors: &[(usize, &str)]) -> FiniteGroup {
    let mut g = cyc(factors[0].0, factors[0].1);
    for &(n, name) in &factors[1..] {
        g = direct_product(&g, &cyc(n, name));
    }
    g
}

fn x(a: Result<FiniteGroup>, b: Result<FiniteGroup>) -> Result<FiniteGroup> {
    Ok(direct_product(&a?, &b?))
}

/// Central product of two groups of order 8 amalgamating their centres.
fn central8(a: FiniteGroup, b: FiniteGroup) -> Result<FiniteGroup> {
    let z = |g: &FiniteGroup| {
        g.center()
            .iter()
            .find(|&e| g.element_order(e) == 2)
            .unwrap()
    };
    let (za, zb) = (z(&a), z(&b));
    let na = a.order();
    let p = direct_product(&a, &b);
    let zz = za + na * zb;
    let normal = crate::bitset::ElementSet::from_elements(p.order(), [0, zz]);
    Ok(p.quotient(&normal)?.0)
}

fn pauli() -> Result<FiniteGroup> {
    central8(dihedral(8)?, cyclic(4).renamed(&[("a", "z")])?)
}

/// Semidirect product from generator images given as words over `normal`'s names.
fn semi(
    normal: FiniteGroup,
    acting: FiniteGroup,
    images: &[&[&[(&str, i64)]]],
) -> Result<FiniteGroup> {
    let eval = |word: &[(&str, i64)]| -> Result<usize> {
        let mut r = 0;
        for &(name, e) in word {
            let g = normal
                .element_by_name(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            r = normal.mul(r, normal.pow(g, e));
        }
        Ok(r)
    };
    let imgs = images
        .iter()
        .map(|per_gen| per_gen.iter().map(|w| eval(w)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    semidirect_product(&SemidirectAction::from_generator_images(
        normal, acting, &imgs,
    )?)
}

fn c2sq_c4() -> Result<FiniteGroup> {
    semi(
        named_abelian(&[(2, "a"), (2, "b")]),
        cyc(4, "c"),
        &[&[&[("b", 1)], &[("a", 1)]]],
    )
}

fn generalized_dihedral_c3sq() -> Result<FiniteGroup> {
    semi(
        named_abelian(&[(3, "a"), (3, "b")]),
        cyc(2, "t"),
        &[&[&[("a", -1)], &[("b", -1)]]],
    )
}

fn sl23() -> Result<FiniteGroup> {
    // SL(2,3) acting on the 8 non-zero vectors of F_3^2
    let vecs: Vec<(usize, usize)> = (0..9)
        .map(|i| (i % 3, i / 3))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[usize; 2]; 2]| -> Vec<usize> {
        vecs.iter()
            .map(|&(x, y)| {
                let img = (
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                );
                vecs.iter().position(|&v| v == img).unwrap()
            })
            .collect()
    };
    let g = from_permutations(8, &[act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])])?;
    g.renamed(&[("p1", "t"), ("p2", "w")])
}

fn c3_semi_d8() -> Result<FiniteGroup> {
    semi(
        cyc(3, "a"),
        dihedral(8)?,
        &[&[&[("a", -1)]], &[&[("a", 1)]]],
    )
}

fn c3sq_semi_c4(faithful: bool) -> Result<FiniteGroup> {
    let images: &[&[(&str, i64)]] = if faithful {
        &[&[("b", 1)], &[("a", -1)]]
    } else {
        &[&[("a", -1)], &[("b", -1)]]
    };
    semi(named_abelian(&[(3, "a"), (3, "b")]), cyc(4, "c"), &[images])
}

fn c2sq_semi_c9() -> Result<FiniteGroup> {
    semi(
        named_abelian(&[(2, "a"), (2, "b")]),
        cyc(9, "c"),
        &[&[&[("b", 1)], &[("a", 1), ("b", 1)]]],
    )
}

/// `C4^2 ⋊ C3` with `c a c^-1 = a b^-1`, `c b c^-1 = a^-1 b^2`.
pub fn order48_fixture() -> Result<FiniteGroup> {
    Ok(semi(
        named_abelian(&[(4, "a"), (4, "b")]),
        cyc(3, "c"),
        &[&[&[("a", 1), ("b", -1)], &[("a", -1), ("b", 2)]]],
    )?
    .with_name("C4^2:C3"))
}

/// `C2^4 ⋊ C5` with `e: a -> d, b -> ad, c -> bd, d -> cd`.
pub fn order80_fixture() -> Result<FiniteGroup> {
    Ok(semi(
        named_abelian(&[(2, "a"), (2, "b"), (2, "c"), (2, "d")]),
        cyc(5, "e"),
        &[&[
            &[("d", 1)],
            &[("a", 1), ("d", 1)],
            &[("b", 1), ("d", 1)],
            &[("c", 1), ("d", 1)],
        ]],
    )?
    .with_name("C2^4:C5"))
}

/// `C3^3 ⋊ C3` with `a` central, `d b d^-1 = c^-1`, `d c d^-1 = b c^-1`,
/// plus the named element `x = b^-1 c^-1`; isomorphic to `C3 x H27`.
pub fn order81_fixture() -> Result<FiniteGroup> {
    let g = semi(
        named_abelian(&[(3, "a"), (3, "b"), (3, "c")]),
        cyc(3, "d"),
        &[&[&[("a", 1)], &[("c", -1)], &[("b", 1), ("c", -1)]]],
    )?;
    let b = g.element_by_name("b").unwrap();
    let c = g.element_by_name("c").unwrap();
    let xv = g.mul(g.inv(b), g.inv(c));
    Ok(g.bind_name("x", xv)?.with_name("C3xH27"))
}

macro_rules! entry {
    ($m:expr, $k:expr, $name:expr, $build:expr, $fp:expr) => {
        RegistryEntry {
            id: ($m, $k),
            name: $name,
            build: $build,
            fingerprint: $fp,
        }
    };
}

pub static ENTRIES: &[RegistryEntry] = &[
    // abelian groups
    entry!(
        2,
        1,
        "C2",
        || ab(&[2]),
        "o2 e2 z2 d1 ab[2] ord{1:1,2:1} cls{1:2}"
    ),
    entry!(
        3,
        1,
        "C3",
        || ab(&[3]),
        "o3 e3 z3 d1 ab[3] ord{1:1,3:2} cls{1:3}"
    ),
    entry!(
        4,
        1,
        "C4",
        || ab(&[4]),
        "o4 e4 z4 d1 ab[4] ord{1:1,2:1,4:2} cls{1:4}"
    ),
    entry!(
        4,
        2,
        "C2^2",
        || ab(&[2, 2]),
        "o4 e2 z4 d1 ab[2,2] ord{1:1,2:3} cls{1:4}"
    ),
    entry!(
        5,
        1,
        "C5",
        || ab(&[5]),
        "o5 e5 z5 d1 ab[5] ord{1:1,5:4} cls{1:5}"
    ),
    entry!(
        6,
        2,
        "C6",
        || ab(&[6]),
        "o6 e6 z6 d1 ab[6] ord{1:1,2:1,3:2,6:2} cls{1:6}"
    ),
    entry!(
        7,
        1,
        "C7",
        || ab(&[7]),
        "o7 e7 z7 d1 ab[7] ord{1:1,7:6} cls{1:7}"
    ),
    entry!(
        8,
        1,
        "C8",
        || ab(&[8]),
        "o8 e8 z8 d1 ab[8] ord{1:1,2:1,4:2,8:4} cls{1:8}"
    ),
    entry!(
        8,
        2,
        "C2xC4",
        || ab(&[2, 4]),
        "o8 e4 z8 d1 ab[2,4] ord{1:1,2:3,4:4} cls{1:8}"
    ),
    entry!(
        8,
        5,
        "C2^3",
        || ab(&[2, 2, 2]),
        "o8 e2 z8 d1 ab[2,2,2] ord{1:1,2:7} cls{1:8}"
    ),
    entry!(
        9,
        1,
        "C9",
        || ab(&[9]),
        "o9 e9 z9 d1 ab[9] ord{1:1,3:2,9:6} cls{1:9}"
    ),
    entry!(
        9,
        2,
        "C3^2",
        || ab(&[3, 3]),
        "o9 e3 z9 d1 ab[3,3] ord{1:1,3:8} cls{1:9}"
    ),
    entry!(
        12,
        5,
        "C2xC6",
        || ab(&[2, 6]),
        "o12 e6 z12 d1 ab[2,6] ord{1:1,2:3,3:2,6:6} cls{1:12}"
    ),
    entry!(
        16,
        2,
        "C4^2",
        || ab(&[4, 4]),
        "o16 e4 z16 d1 ab[4,4] ord{1:1,2:3,4:12} cls{1:16}"
    ),
    entry!(
        16,
        5,
        "C2xC8",
        || ab(&[2, 8]),
        "o16 e8 z16 d1 ab[2,8] ord{1:1,2:3,4:4,8:8} cls{1:16}"
    ),
    entry!(
        16,
        10,
        "C2^2xC4",
        || ab(&[2, 2, 4]),
        "o16 e4 z16 d1 ab[2,2,4] ord{1:1,2:7,4:8} cls{1:16}"
    ),
    entry!(
        16,
        14,
        "C2^4",
        || ab(&[2, 2, 2, 2]),
        "o16 e2 z16 d1 ab[2,2,2,2] ord{1:1,2:15} cls{1:16}"
    ),
    entry!(
        18,
        5,
        "C3xC6",
        || ab(&[3, 6]),
        "o18 e6 z18 d1 ab[3,6] ord{1:1,2:1,3:8,6:8} cls{1:18}"
    ),
    entry!(
        24,
        15,
        "C2^2xC6",
        || ab(&[2, 2, 6]),
        "o24 e6 z24 d1 ab[2,2,6] ord{1:1,2:7,3:2,6:14} cls{1:24}"
    ),
    entry!(
        25,
        2,
        "C5^2",
        || ab(&[5, 5]),
        "o25 e5 z25 d1 ab[5,5] ord{1:1,5:24} cls{1:25}"
    ),
    entry!(
        27,
        5,
        "C3^3",
        || ab(&[3, 3, 3]),
        "o27 e3 z27 d1 ab[3,3,3] ord{1:1,3:26} cls{1:27}"
    ),
    entry!(
        32,
        21,
        "C2xC4^2",
        || ab(&[2, 4, 4]),
        "o32 e4 z32 d1 ab[2,4,4] ord{1:1,2:7,4:24} cls{1:32}"
    ),
    entry!(
        32,
        45,
        "C2^3xC4",
        || ab(&[2, 2, 2, 4]),
        "o32 e4 z32 d1 ab[2,2,2,4] ord{1:1,2:15,4:16} cls{1:32}"
    ),
    entry!(
        32,
        51,
        "C2^5",
        || ab(&[2, 2, 2, 2, 2]),
        "o32 e2 z32 d1 ab[2,2,2,2,2] ord{1:1,2:31} cls{1:32}"
    ),
    entry!(
        48,
        52,
        "C2^3xC6",
        || ab(&[2, 2, 2, 6]),
        "o48 e6 z48 d1 ab[2,2,2,6] ord{1:1,2:15,3:2,6:30} cls{1:48}"
    ),
    entry!(
        64,
        192,
        "C2^2xC4^2",
        || ab(&[2, 2, 4, 4]),
        "o64 e4 z64 d1 ab[2,2,4,4] ord{1:1,2:15,4:48} cls{1:64}"
    ),
    entry!(
        64,
        260,
        "C2^4xC4",
        || ab(&[2, 2, 2, 2, 4]),
        "o64 e4 z64 d1 ab[2,2,2,2,4] ord{1:1,2:31,4:32} cls{1:64}"
    ),
    entry!(
        64,
        267,
        "C2^6",
        || ab(&[2, 2, 2, 2, 2, 2]),
        "o64 e2 z64 d1 ab[2,2,2,2,2,2] ord{1:1,2:63} cls{1:64}"
    ),
    entry!(
        81,
        15,
        "C3^4",
        || ab(&[3, 3, 3, 3]),
        "o81 e3 z81 d1 ab[3,3,3,3] ord{1:1,3:80} cls{1:81}"
    ),
    entry!(
        128,
        2319,
        "C2^5xC4",
        || ab(&[2, 2, 2, 2, 2, 4]),
        "o128 e4 z128 d1 ab[2,2,2,2,2,4] ord{1:1,2:63,4:64} cls{1:128}"
    ),
    entry!(
        128,
        2328,
        "C2^7",
        || ab(&[2, 2, 2, 2, 2, 2, 2]),
        "o128 e2 z128 d1 ab[2,2,2,2,2,2,2] ord{1:1,2:127} cls{1:128}"
    ),
    entry!(
        256,
        56092,
        "C2^8",
        || ab(&[2, 2, 2, 2, 2, 2, 2, 2]),
        "o256 e2 z256 d1 ab[2,2,2,2,2,2,2,2] ord{1:1,2:255} cls{1:256}"
    ),
    // non-abelian groups
    entry!(
        6,
        1,
        "D6",
        || dihedral(6),
        "o6 e6 z1 d3 ab[2] ord{1:1,2:3,3:2} cls{1:1,2:1,3:1}"
    ),
    entry!(
        8,
        3,
        "D8",
        || dihedral(8),
        "o8 e4 z2 d2 ab[2,2] ord{1:1,2:5,4:2} cls{1:2,2:3}"
    ),
    entry!(
        8,
        4,
        "Q8",
        || dicyclic(8),
        "o8 e4 z2 d2 ab[2,2] ord{1:1,2:1,4:6} cls{1:2,2:3}"
    ),
    entry!(
        10,
        1,
        "D10",
        || dihedral(10),
        "o10 e10 z1 d5 ab[2] ord{1:1,2:5,5:4} cls{1:1,2:2,5:1}"
    ),
    entry!(
        12,
        1,
        "Q12",
        || dicyclic(12),
        "o12 e12 z2 d3 ab[4] ord{1:1,2:1,3:2,4:6,6:2} cls{1:2,2:2,3:2}"
    ),
    entry!(
        12,
        3,
        "A4",
        || alternating(4),
        "o12 e6 z1 d4 ab[3] ord{1:1,2:3,3:8} cls{1:1,3:1,4:2}"
    ),
    entry!(
        12,
        4,
        "D12",
        || dihedral(12),
        "o12 e6 z2 d3 ab[2,2] ord{1:1,2:7,3:2,6:2} cls{1:2,2:2,3:2}"
    ),
    entry!(
        14,
        1,
        "D14",
        || dihedral(14),
        "o14 e14 z1 d7 ab[2] ord{1:1,2:7,7:6} cls{1:1,2:3,7:1}"
    ),
    entry!(
        16,
        3,
        "C2^2:C4",
        c2sq_c4,
        "o16 e4 z4 d2 ab[2,4] ord{1:1,2:7,4:8} cls{1:4,2:6}"
    ),
    entry!(
        16,
        4,
        "C4:C4",
        || metacyclic(4, 4, 0, 3),
        "o16 e4 z4 d2 ab[2,4] ord{1:1,2:3,4:12} cls{1:4,2:6}"
    ),
    entry!(
        16,
        6,
        "M16",
        || modular_maximal_cyclic(16),
        "o16 e8 z4 d2 ab[2,4] ord{1:1,2:3,4:4,8:8} cls{1:4,2:6}"
    ),
    entry!(
        16,
        7,
        "D16",
        || dihedral(16),
        "o16 e8 z2 d4 ab[2,2] ord{1:1,2:9,4:2,8:4} cls{1:2,2:3,4:2}"
    ),
    entry!(
        16,
        8,
        "SD16",
        || semidihedral(16),
        "o16 e8 z2 d4 ab[2,2] ord{1:1,2:5,4:6,8:4} cls{1:2,2:3,4:2}"
    ),
    entry!(
        16,
        9,
        "Q16",
        || dicyclic(16),
        "o16 e8 z2 d4 ab[2,2] ord{1:1,2:1,4:10,8:4} cls{1:2,2:3,4:2}"
    ),
    entry!(
        16,
        11,
        "C2xD8",
        || x(ab(&[2]), dihedral(8)),
        "o16 e4 z4 d2 ab[2,2,2] ord{1:1,2:11,4:4} cls{1:4,2:6}"
    ),
    entry!(
        16,
        12,
        "C2xQ8",
        || x(ab(&[2]), dicyclic(8)),
        "o16 e4 z4 d2 ab[2,2,2] ord{1:1,2:3,4:12} cls{1:4,2:6}"
    ),
    entry!(
        16,
        13,
        "(C2xC4):C2",
        pauli,
        "o16 e4 z4 d2 ab[2,2,2] ord{1:1,2:7,4:8} cls{1:4,2:6}"
    ),
    entry!(
        18,
        1,
        "D18",
        || dihedral(18),
        "o18 e18 z1 d9 ab[2] ord{1:1,2:9,3:2,9:6} cls{1:1,2:4,9:1}"
    ),
    entry!(
        18,
        3,
        "C3xD6",
        || x(ab(&[3]), dihedral(6)),
        "o18 e6 z3 d3 ab[6] ord{1:1,2:3,3:8,6:6} cls{1:3,2:3,3:3}"
    ),
    entry!(
        18,
        4,
        "C3^2:C2",
        generalized_dihedral_c3sq,
        "o18 e6 z1 d9 ab[2] ord{1:1,2:9,3:8} cls{1:1,2:4,9:1}"
    ),
    entry!(
        20,
        1,
        "Q20",
        || dicyclic(20),
        "o20 e20 z2 d5 ab[4] ord{1:1,2:1,4:10,5:4,10:4} cls{1:2,2:4,5:2}"
    ),
    entry!(
        20,
        3,
        "C5:C4",
        || metacyclic(5, 4, 0, 2),
        "o20 e20 z1 d5 ab[4] ord{1:1,2:5,4:10,5:4} cls{1:1,4:1,5:3}"
    ),
    entry!(
        20,
        4,
        "D20",
        || dihedral(20),
        "o20 e10 z2 d5 ab[2,2] ord{1:1,2:11,5:4,10:4} cls{1:2,2:4,5:2}"
    ),
    entry!(
        21,
        1,
        "C7:C3",
        || metacyclic(7, 3, 0, 2),
        "o21 e21 z1 d7 ab[3] ord{1:1,3:14,7:6} cls{1:1,3:2,7:2}"
    ),
    entry!(
        22,
        1,
        "D22",
        || dihedral(22),
        "o22 e22 z1 d11 ab[2] ord{1:1,2:11,11:10} cls{1:1,2:5,11:1}"
    ),
    entry!(
        24,
        1,
        "C3:C8",
        || metacyclic(3, 8, 0, 2),
        "o24 e24 z4 d3 ab[8] ord{1:1,2:1,3:2,4:2,6:2,8:12,12:4} cls{1:4,2:4,3:4}"
    ),
    entry!(
        24,
        3,
        "SL(2,3)",
        sl23,
        "o24 e12 z2 d8 ab[3] ord{1:1,2:1,3:8,4:6,6:8} cls{1:2,4:4,6:1}"
    ),
    entry!(
        24,
        4,
        "Q24",
        || dicyclic(24),
        "o24 e12 z2 d6 ab[2,2] ord{1:1,2:1,3:2,4:14,6:2,12:4} cls{1:2,2:5,6:2}"
    ),
    entry!(
        24,
        5,
        "C4xD6",
        || x(ab(&[4]), dihedral(6)),
        "o24 e12 z4 d3 ab[2,4] ord{1:1,2:7,3:2,4:8,6:2,12:4} cls{1:4,2:4,3:4}"
    ),
    entry!(
        24,
        6,
        "D24",
        || dihedral(24),
        "o24 e12 z2 d6 ab[2,2] ord{1:1,2:13,3:2,4:2,6:2,12:4} cls{1:2,2:5,6:2}"
    ),
    entry!(
        24,
        7,
        "C2xQ12",
        || x(ab(&[2]), dicyclic(12)),
        "o24 e12 z4 d3 ab[2,4] ord{1:1,2:3,3:2,4:12,6:6} cls{1:4,2:4,3:4}"
    ),
    entry!(
        24,
        8,
        "C3:D8",
        c3_semi_d8,
        "o24 e12 z2 d6 ab[2,2] ord{1:1,2:9,3:2,4:6,6:6} cls{1:2,2:5,6:2}"
    ),
    entry!(
        24,
        10,
        "C3xD8",
        || x(ab(&[3]), dihedral(8)),
        "o24 e12 z6 d2 ab[2,6] ord{1:1,2:5,3:2,4:2,6:10,12:4} cls{1:6,2:9}"
    ),
    entry!(
        24,
        11,
        "C3xQ8",
        || x(ab(&[3]), dicyclic(8)),
        "o24 e12 z6 d2 ab[2,6] ord{1:1,2:1,3:2,4:6,6:2,12:12} cls{1:6,2:9}"
    ),
    entry!(
        24,
        12,
        "S4",
        || symmetric(4),
        "o24 e12 z1 d12 ab[2] ord{1:1,2:9,3:8,4:6} cls{1:1,3:1,6:2,8:1}"
    ),
    entry!(
        24,
        13,
        "C2xA4",
        || x(ab(&[2]), alternating(4)),
        "o24 e6 z2 d4 ab[6] ord{1:1,2:7,3:8,6:8} cls{1:2,3:2,4:4}"
    ),
    entry!(
        24,
        14,
        "C2xD12",
        || x(ab(&[2]), dihedral(12)),
        "o24 e6 z4 d3 ab[2,2,2] ord{1:1,2:15,3:2,6:6} cls{1:4,2:4,3:4}"
    ),
    entry!(
        26,
        1,
        "D26",
        || dihedral(26),
        "o26 e26 z1 d13 ab[2] ord{1:1,2:13,13:12} cls{1:1,2:6,13:1}"
    ),
    entry!(
        27,
        3,
        "H27",
        || heisenberg(3),
        "o27 e3 z3 d3 ab[3,3] ord{1:1,3:26} cls{1:3,3:8}"
    ),
    entry!(
        27,
        4,
        "C9:C3",
        || metacyclic(9, 3, 0, 4),
        "o27 e9 z3 d3 ab[3,3] ord{1:1,3:8,9:18} cls{1:3,3:8}"
    ),
    entry!(
        28,
        1,
        "Q28",
        || dicyclic(28),
        "o28 e28 z2 d7 ab[4] ord{1:1,2:1,4:14,7:6,14:6} cls{1:2,2:6,7:2}"
    ),
    entry!(
        28,
        3,
        "D28",
        || dihedral(28),
        "o28 e14 z2 d7 ab[2,2] ord{1:1,2:15,7:6,14:6} cls{1:2,2:6,7:2}"
    ),
    entry!(
        30,
        1,
        "C5xD6",
        || x(ab(&[5]), dihedral(6)),
        "o30 e30 z5 d3 ab[10] ord{1:1,2:3,3:2,5:4,10:12,15:8} cls{1:5,2:5,3:5}"
    ),
    entry!(
        30,
        2,
        "C3xD10",
        || x(ab(&[3]), dihedral(10)),
        "o30 e30 z3 d5 ab[6] ord{1:1,2:5,3:2,5:4,6:10,15:8} cls{1:3,2:6,5:3}"
    ),
    entry!(
        30,
        3,
        "D30",
        || dihedral(30),
        "o30 e30 z1 d15 ab[2] ord{1:1,2:15,3:2,5:4,15:8} cls{1:1,2:7,15:1}"
    ),
    entry!(
        32,
        17,
        "C16:C2",
        || modular_maximal_cyclic(32),
        "o32 e16 z8 d2 ab[2,8] ord{1:1,2:3,4:4,8:8,16:16} cls{1:8,2:12}"
    ),
    entry!(
        32,
        18,
        "D32",
        || dihedral(32),
        "o32 e16 z2 d8 ab[2,2] ord{1:1,2:17,4:2,8:4,16:8} cls{1:2,2:7,8:2}"
    ),
    entry!(
        32,
        19,
        "SD32",
        || semidihedral(32),
        "o32 e16 z2 d8 ab[2,2] ord{1:1,2:9,4:10,8:4,16:8} cls{1:2,2:7,8:2}"
    ),
    entry!(
        32,
        20,
        "Q32",
        || dicyclic(32),
        "o32 e16 z2 d8 ab[2,2] ord{1:1,2:1,4:18,8:4,16:8} cls{1:2,2:7,8:2}"
    ),
    entry!(
        32,
        22,
        "C2x(C2^2:C4)",
        || x(ab(&[2]), c2sq_c4()),
        "o32 e4 z8 d2 ab[2,2,4] ord{1:1,2:15,4:16} cls{1:8,2:12}"
    ),
    entry!(
        32,
        23,
        "C2x(C4:C4)",
        || x(ab(&[2]), metacyclic(4, 4, 0, 3)),
        "o32 e4 z8 d2 ab[2,2,4] ord{1:1,2:7,4:24} cls{1:8,2:12}"
    ),
    entry!(
        32,
        25,
        "C4xD8",
        || x(ab(&[4]), dihedral(8)),
        "o32 e4 z8 d2 ab[2,2,4] ord{1:1,2:11,4:20} cls{1:8,2:12}"
    ),
    entry!(
        32,
        26,
        "C4xQ8",
        || x(ab(&[4]), dicyclic(8)),
        "o32 e4 z8 d2 ab[2,2,4] ord{1:1,2:3,4:28} cls{1:8,2:12}"
    ),
    entry!(
        32,
        37,
        "C2x(C8:C2)",
        || x(ab(&[2]), modular_maximal_cyclic(16)),
        "o32 e8 z8 d2 ab[2,2,4] ord{1:1,2:7,4:8,8:16} cls{1:8,2:12}"
    ),
    entry!(
        32,
        39,
        "C2xD16",
        || x(ab(&[2]), dihedral(16)),
        "o32 e8 z4 d4 ab[2,2,2] ord{1:1,2:19,4:4,8:8} cls{1:4,2:6,4:4}"
    ),
    entry!(
        32,
        40,
        "C2xSD16",
        || x(ab(&[2]), semidihedral(16)),
        "o32 e8 z4 d4 ab[2,2,2] ord{1:1,2:11,4:12,8:8} cls{1:4,2:6,4:4}"
    ),
    entry!(
        32,
        41,
        "C2xQ16",
        || x(ab(&[2]), dicyclic(16)),
        "o32 e8 z4 d4 ab[2,2,2] ord{1:1,2:3,4:20,8:8} cls{1:4,2:6,4:4}"
    ),
    entry!(
        32,
        46,
        "C2^2xD8",
        || x(ab(&[2, 2]), dihedral(8)),
        "o32 e4 z8 d2 ab[2,2,2,2] ord{1:1,2:23,4:8} cls{1:8,2:12}"
    ),
    entry!(
        32,
        47,
        "C2^2xQ8",
        || x(ab(&[2, 2]), dicyclic(8)),
        "o32 e4 z8 d2 ab[2,2,2,2] ord{1:1,2:7,4:24} cls{1:8,2:12}"
    ),
    entry!(
        32,
        48,
        "C2x((C2xC4):C2)",
        || x(ab(&[2]), pauli()),
        "o32 e4 z8 d2 ab[2,2,2,2] ord{1:1,2:15,4:16} cls{1:8,2:12}"
    ),
    entry!(
        32,
        49,
        "C2^3:C2^2",
        || central8(dihedral(8)?, dihedral(8)?),
        "o32 e4 z2 d2 ab[2,2,2,2] ord{1:1,2:19,4:12} cls{1:2,2:15}"
    ),
    entry!(
        32,
        50,
        "(C2xQ8):C2",
        || central8(dicyclic(8)?, dihedral(8)?),
        "o32 e4 z2 d2 ab[2,2,2,2] ord{1:1,2:11,4:20} cls{1:2,2:15}"
    ),
    entry!(
        34,
        1,
        "D34",
        || dihedral(34),
        "o34 e34 z1 d17 ab[2] ord{1:1,2:17,17:16} cls{1:1,2:8,17:1}"
    ),
    entry!(
        36,
        1,
        "C9:C4",
        || dicyclic(36),
        "o36 e36 z2 d9 ab[4] ord{1:1,2:1,3:2,4:18,6:2,9:6,18:6} cls{1:2,2:8,9:2}"
    ),
    entry!(
        36,
        3,
        "C2^2:C9",
        c2sq_semi_c9,
        "o36 e18 z3 d4 ab[9] ord{1:1,2:3,3:2,6:6,9:24} cls{1:3,3:3,4:6}"
    ),
    entry!(
        36,
        4,
        "D36",
        || dihedral(36),
        "o36 e18 z2 d9 ab[2,2] ord{1:1,2:19,3:2,6:2,9:6,18:6} cls{1:2,2:8,9:2}"
    ),
    entry!(
        36,
        6,
        "C3x(C3:C4)",
        || x(ab(&[3]), dicyclic(12)),
        "o36 e12 z6 d3 ab[12] ord{1:1,2:1,3:8,4:6,6:8,12:12} cls{1:6,2:6,3:6}"
    ),
    entry!(
        36,
        7,
        "C3^2:C4",
        || c3sq_semi_c4(false),
        "o36 e12 z2 d9 ab[4] ord{1:1,2:1,3:8,4:18,6:8} cls{1:2,2:8,9:2}"
    ),
    entry!(
        36,
        9,
        "C3^2:C4",
        || c3sq_semi_c4(true),
        "o36 e12 z1 d9 ab[4] ord{1:1,2:9,3:8,4:18} cls{1:1,4:2,9:3}"
    ),
    entry!(
        36,
        10,
        "D6^2",
        || x(dihedral(6), dihedral(6)),
        "o36 e6 z1 d9 ab[2,2] ord{1:1,2:15,3:8,6:12} cls{1:1,2:2,3:2,4:1,6:2,9:1}"
    ),
    entry!(
        36,
        11,
        "C3xA4",
        || x(ab(&[3]), alternating(4)),
        "o36 e6 z3 d4 ab[3,3] ord{1:1,2:3,3:26,6:6} cls{1:3,3:3,4:6}"
    ),
    entry!(
        36,
        12,
        "C6xD6",
        || x(ab(&[6]), dihedral(6)),
        "o36 e6 z6 d3 ab[2,6] ord{1:1,2:7,3:8,6:20} cls{1:6,2:6,3:6}"
    ),
    entry!(
        36,
        13,
        "C2x(C3^2:C2)",
        || x(ab(&[2]), generalized_dihedral_c3sq()),
        "o36 e6 z2 d9 ab[2,2] ord{1:1,2:19,3:8,6:8} cls{1:2,2:8,9:2}"
    ),
    entry!(
        38,
        1,
        "D38",
        || dihedral(38),
        "o38 e38 z1 d19 ab[2] ord{1:1,2:19,19:18} cls{1:1,2:9,19:1}"
    ),
    entry!(
        39,
        1,
        "C13:C3",
        || metacyclic(13, 3, 0, 3),
        "o39 e39 z1 d13 ab[3] ord{1:1,3:26,13:12} cls{1:1,3:4,13:2}"
    ),
    entry!(
        40,
        1,
        "C5:C8",
        || metacyclic(5, 8, 0, 4),
        "o40 e40 z4 d5 ab[8] ord{1:1,2:1,4:2,5:4,8:20,10:4,20:8} cls{1:4,2:8,5:4}"
    ),
    entry!(
        40,
        3,
        "C5:C8",
        || metacyclic(5, 8, 0, 2),
        "o40 e40 z2 d5 ab[8] ord{1:1,2:1,4:10,5:4,8:20,10:4} cls{1:2,4:2,5:6}"
    ),
    entry!(
        40,
        4,
        "C5:Q8",
        || dicyclic(40),
        "o40 e20 z2 d10 ab[2,2] ord{1:1,2:1,4:22,5:4,10:4,20:8} cls{1:2,2:9,10:2}"
    ),
    entry!(
        40,
        5,
        "C4xD10",
        || x(ab(&[4]), dihedral(10)),
        "o40 e20 z4 d5 ab[2,4] ord{1:1,2:11,4:12,5:4,10:4,20:8} cls{1:4,2:8,5:4}"
    ),
    entry!(
        40,
        6,
        "D40",
        || dihedral(40),
        "o40 e20 z2 d10 ab[2,2] ord{1:1,2:21,4:2,5:4,10:4,20:8} cls{1:2,2:9,10:2}"
    ),
    entry!(
        40,
        7,
        "C2x(C5:C4)",
        || x(ab(&[2]), dicyclic(20)),
        "o40 e20 z4 d5 ab[2,4] ord{1:1,2:3,4:20,5:4,10:12} cls{1:4,2:8,5:4}"
    ),
    entry!(
        40,
        10,
        "C5xD8",
        || x(ab(&[5]), dihedral(8)),
        "o40 e20 z10 d2 ab[2,10] ord{1:1,2:5,4:2,5:4,10:20,20:8} cls{1:10,2:15}"
    ),
    entry!(
        40,
        11,
        "C5xQ8",
        || x(ab(&[5]), dicyclic(8)),
        "o40 e20 z10 d2 ab[2,10] ord{1:1,2:1,4:6,5:4,10:4,20:24} cls{1:10,2:15}"
    ),
    entry!(
        40,
        12,
        "C2x(C5:C4)",
        || x(ab(&[2]), metacyclic(5, 4, 0, 2)),
        "o40 e20 z2 d5 ab[2,4] ord{1:1,2:11,4:20,5:4,10:4} cls{1:2,4:2,5:6}"
    ),
    entry!(
        40,
        13,
        "C2^2xD10",
        || x(ab(&[2, 2]), dihedral(10)),
        "o40 e10 z4 d5 ab[2,2,2] ord{1:1,2:23,5:4,10:12} cls{1:4,2:8,5:4}"
    ),
    entry!(
        42,
        1,
        "C7:C6",
        || metacyclic(7, 6, 0, 3),
        "o42 e42 z1 d7 ab[6] ord{1:1,2:7,3:14,6:14,7:6} cls{1:1,6:1,7:5}"
    ),
    entry!(
        42,
        2,
        "C2x(C7:C3)",
        || x(ab(&[2]), metacyclic(7, 3, 0, 2)),
        "o42 e42 z2 d7 ab[6] ord{1:1,2:1,3:14,6:14,7:6,14:6} cls{1:2,3:4,7:4}"
    ),
    entry!(
        42,
        3,
        "C7xD6",
        || x(ab(&[7]), dihedral(6)),
        "o42 e42 z7 d3 ab[14] ord{1:1,2:3,3:2,7:6,14:18,21:12} cls{1:7,2:7,3:7}"
    ),
    entry!(
        42,
        4,
        "C3xD14",
        || x(ab(&[3]), dihedral(14)),
        "o42 e42 z3 d7 ab[6] ord{1:1,2:7,3:2,6:14,7:6,21:12} cls{1:3,2:9,7:3}"
    ),
    entry!(
        42,
        5,
        "D42",
        || dihedral(42),
        "o42 e42 z1 d21 ab[2] ord{1:1,2:21,3:2,7:6,21:12} cls{1:1,2:10,21:1}"
    ),
    // groups built in the witness checks
    entry!(
        48,
        3,
        "C4^2:C3",
        order48_fixture,
        "o48 e12 z1 d16 ab[3] ord{1:1,2:3,3:32,4:12} cls{1:1,3:5,16:2}"
    ),
    entry!(
        80,
        49,
        "C2^4:C5",
        order80_fixture,
        "o80 e10 z1 d16 ab[5] ord{1:1,2:15,5:64} cls{1:1,5:3,16:4}"
    ),
    entry!(
        81,
        12,
        "C3xH27",
        order81_fixture,
        "o81 e3 z9 d3 ab[3,3,3] ord{1:1,3:80} cls{1:9,3:24}"
    ),
];

pub fn lookup(m: usize, k: usize) -> Option<&'static RegistryEntry> {
    ENTRIES.iter().find(|e| e.id == (m, k))
}

/// Builds the registry group for `(m, k)` and checks it against its stored fingerprint.
pub fn registry(m: usize, k: usize) -> Result<FiniteGroup> {
    let entry = lookup(m, k).ok_or(Error::UnknownRegistryId(m, k))?;
    let g = (entry.build)()?;
    let found = fingerprint(&g).to_string();
    if found != entry.fingerprint {
        return Err(Error::FingerprintMismatch {
            id: format!("({m},{k})"),
            expected: entry.fingerprint.to_string(),
            found,
        });
    }
    Ok(g.with_name(entry.name))
}
