//! Group-spec strings: `C2xC2xC4`, `D8`, `Q12`, `H27`, `gap:27.3`, `cayley:path`.
//!
//! ```text
//! spec   := factor ("x" factor)*
//! factor := "C"int | "D"int | "Q"int | "SD"int | "M"int | "H"int
//!         | "A"int | "S"int | "gap:"int"."int | "cayley:"path
//! ```
//!
//! Named factors take the group order (`D8` is dihedral of order 8, `H27` the
//! Heisenberg group of order 27) except `A`/`S`, which take the degree.
//! A `cayley:` path runs to the end of the string, so it must be the last factor.

use std::fmt;
use std::path::PathBuf;

use crate::cayley::from_cayley_file;
use crate::construct::{
    alternating, cyclic, dicyclic, dihedral, direct_product, from_permutations, heisenberg,
    is_prime, modular_maximal_cyclic, semidihedral, semidirect_product, symmetric,
    SemidirectAction,
};
use crate::error::{Error, ParseError, Result};
use crate::group::FiniteGroup;
use crate::registry::registry;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Dihedral,
    Dicyclic,
    Semidihedral,
    Modular,
    Heisenberg,
    Alternating,
    Symmetric,
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::Dihedral => "D",
            Family::Dicyclic => "Q",
            Family::Semidihedral => "SD",
            Family::Modular => "M",
            Family::Heisenberg => "H",
            Family::Alternating => "A",
            Family::Symmetric => "S",
        }
    }
}

#[derive(Clone, Debug)]
pub enum GroupSpec {
    Cyclic(usize),
    Named(Family, usize),
    DirectProduct(Vec<GroupSpec>),
    Semidirect(Box<SemidirectAction>),
    GapId(usize, usize),
    CayleyFile(PathBuf),
    Permutation {
        degree: usize,
        gens: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    /// Canonical text form; `None` for kinds with no string syntax.
    pub fn render(&self) -> Option<String> {
        Some(match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Named(f, n) => format!("{}{n}", f.prefix()),
            GroupSpec::GapId(m, k) => format!("gap:{m}.{k}"),
            GroupSpec::CayleyFile(p) => format!("cayley:{}", p.display()),
            GroupSpec::DirectProduct(fs) => {
                let parts: Option<Vec<String>> = fs.iter().map(|f| f.render()).collect();
                parts?.join("x")
            }
            GroupSpec::Semidirect(_) | GroupSpec::Permutation { .. } => return None,
        })
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let g = match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 || *n > crate::group::MAX_TABLE_ORDER {
                    return Err(Error::BadParameter(format!("cyclic order {n}")));
                }
                cyclic(*n)
            }
            GroupSpec::Named(f, n) => match f {
                Family::Dihedral => dihedral(*n)?,
                Family::Dicyclic => dicyclic(*n)?,
                Family::Semidihedral => semidihedral(*n)?,
                Family::Modular => modular_maximal_cyclic(*n)?,
                Family::Heisenberg => {
                    let p = cube_root(*n)
                        .filter(|&p| is_prime(p) && p != 2)
                        .ok_or_else(|| {
                            Error::BadParameter(format!(
                                "H{n}: order must be p^3 for an odd prime p"
                            ))
                        })?;
                    heisenberg(p)?
                }
                Family::Alternating => check_degree(*n).and_then(alternating)?,
                Family::Symmetric => check_degree(*n).and_then(symmetric)?,
            },
            GroupSpec::DirectProduct(fs) => {
                let mut it = fs.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::BadParameter("empty product".into()))?;
                let mut acc = first.build()?;
                for f in it {
                    let next = f.build()?;
                    let order = acc.order() as u128 * next.order() as u128;
                    if order > crate::group::MAX_TABLE_ORDER as u128 {
                        return Err(Error::CapExceeded {
                            what: "direct product order",
                            requested: order,
                            cap: crate::group::MAX_TABLE_ORDER as u128,
                        });
                    }
                    acc = direct_product(&acc, &next);
                }
                acc
            }
            GroupSpec::Semidirect(act) => semidirect_product(act)?,
            GroupSpec::GapId(m, k) => registry(*m, *k)?,
            GroupSpec::CayleyFile(p) => from_cayley_file(p)?,
            GroupSpec::Permutation { degree, gens } => from_permutations(*degree, gens)?,
        };
        Ok(match self.render() {
            Some(name) if !matches!(self, GroupSpec::GapId(..)) => g.with_name(name),
            _ => g,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render() {
            Some(s) => f.write_str(&s),
            None => f.write_str("<unrenderable group spec>"),
        }
    }
}

fn check_degree(d: usize) -> Result<usize> {
    if d == 0 || d > 7 {
        return Err(Error::BadParameter(format!(
            "permutation degree {d} outside 1..=7"
        )));
    }
    Ok(d)
}

fn cube_root(n: usize) -> Option<usize> {
    (1..=n)
        .take_while(|p| p * p * p <= n)
        .find(|p| p * p * p == n)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &[&'static str]) -> ParseError {
        ParseError::new(self.pos, expected, self.peek())
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(&["integer"]));
        }
        self.text[start..self.pos].parse().map_err(|_| {
            ParseError::new(
                start,
                &["integer that fits in usize"],
                self.text[start..].chars().next(),
            )
        })
    }
}

const FACTOR_START: &[&str] = &["C", "D", "Q", "SD", "M", "H", "A", "S", "gap:", "cayley:"];

/// Parses a group-spec string. A single factor is returned as itself, more
/// than one as a `DirectProduct`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut c = Cursor { text, pos: 0 };
    let mut factors = vec![parse_factor(&mut c)?];
    loop {
        if c.pos == text.len() {
            break;
        }
        if matches!(factors.last(), Some(GroupSpec::CayleyFile(_))) {
            unreachable!("cayley path consumes the rest of the input");
        }
        if !c.eat("x") {
            return Err(c.err(&["x", "end of input"]));
        }
        factors.push(parse_factor(&mut c)?);
    }
    Ok(if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        GroupSpec::DirectProduct(factors)
    })
}

fn parse_factor(c: &mut Cursor<'_>) -> Result<GroupSpec, ParseError> {
    if c.eat("gap:") {
        let m = c.int()?;
        if !c.eat(".") {
            return Err(c.err(&["."]));
        }
        let k = c.int()?;
        return Ok(GroupSpec::GapId(m, k));
    }
    if c.eat("cayley:") {
        let path = &c.text[c.pos..];
        if path.is_empty() {
            return Err(c.err(&["path"]));
        }
        c.pos = c.text.len();
        return Ok(GroupSpec::CayleyFile(PathBuf::from(path)));
    }
    let family = if c.eat("SD") {
        Some(Family::Semidihedral)
    } else if c.eat("C") {
        None
    } else if c.eat("D") {
        Some(Family::Dihedral)
    } else if c.eat("Q") {
        Some(Family::Dicyclic)
    } else if c.eat("M") {
        Some(Family::Modular)
    } else if c.eat("H") {
        Some(Family::Heisenberg)
    } else if c.eat("A") {
        Some(Family::Alternating)
    } else if c.eat("S") {
        Some(Family::Symmetric)
    } else {
        return Err(c.err(FACTOR_START));
    };
    let n = c.int()?;
    Ok(match family {
        None => GroupSpec::Cyclic(n),
        Some(f) => GroupSpec::Named(f, n),
    })
}

/// Parses and builds in one step.
pub fn build_group(text: &str) -> Result<FiniteGroup> {
    parse_group_spec(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::is_isomorphic;
    use proptest::prelude::*;

    #[test]
    fn abelian_product() {
        let g = build_group("C2xC2xC4").unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_eight() {
        let g = build_group("D8").unwrap();
        assert!(is_isomorphic(&g, &dihedral(8).unwrap()).unwrap());
    }

    #[test]
    fn named_families() {
        assert_eq!(build_group("Q12").unwrap().order(), 12);
        assert_eq!(build_group("SD16").unwrap().order(), 16);
        assert_eq!(build_group("M16").unwrap().order(), 16);
        assert_eq!(build_group("H27").unwrap().exponent(), 3);
        assert_eq!(build_group("A4").unwrap().order(), 12);
        assert_eq!(build_group("S4").unwrap().order(), 24);
        assert!(build_group("H8").is_err());
        assert!(build_group("S9").is_err());
    }

    #[test]
    fn gap_id_resolves() {
        let g = build_group("gap:27.3").unwrap();
        assert!(is_isomorphic(&g, &heisenberg(3).unwrap()).unwrap());
        assert!(matches!(
            build_group("gap:27.99"),
            Err(Error::UnknownRegistryId(27, 99))
        ));
    }

    #[test]
    fn parse_errors_report_position() {
        let e = parse_group_spec("C2xZ3").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(e.expected.contains(&"C"));
        let e = parse_group_spec("C").unwrap_err();
        assert_eq!(e.pos, 1);
        assert_eq!(e.expected, vec!["integer"]);
        let e = parse_group_spec("gap:12").unwrap_err();
        assert_eq!(e.expected, vec!["."]);
        assert!(parse_group_spec("").is_err());
        assert!(parse_group_spec("C99999999999999999999999").is_err());
    }

    #[test]
    fn cayley_path_takes_the_rest() {
        match parse_group_spec("C2xcayley:/tmp/x y.txt").unwrap() {
            GroupSpec::DirectProduct(fs) => {
                assert!(
                    matches!(&fs[1], GroupSpec::CayleyFile(p) if p.to_str() == Some("/tmp/x y.txt"))
                )
            }
            other => panic!("{other:?}"),
        }
    }

    fn factor_strategy() -> impl Strategy<Value = String> {
        prop_oneof![
            (1usize..500).prop_map(|n| format!("C{n}")),
            (1usize..500).prop_map(|n| format!("D{n}")),
            (1usize..500).prop_map(|n| format!("Q{n}")),
            (1usize..500).prop_map(|n| format!("SD{n}")),
            (1usize..500).prop_map(|n| format!("M{n}")),
            (1usize..500).prop_map(|n| format!("H{n}")),
            (1usize..9).prop_map(|n| format!("A{n}")),
            (1usize..9).prop_map(|n| format!("S{n}")),
            (1usize..300, 1usize..3000).prop_map(|(m, k)| format!("gap:{m}.{k}")),
        ]
    }

    proptest! {
        #[test]
        fn render_inverts_parse(parts in prop::collection::vec(factor_strategy(), 1..5)) {
            let text = parts.join("x");
            let spec = parse_group_spec(&text).unwrap();
            prop_assert_eq!(spec.render().unwrap(), text);
        }
    }
}
