//! Sequences over a finite group: unordered multisets of elements.
//!
//! Text form:
//! ```text
//! seq    := term*                      (whitespace separated)
//! term   := atom ("[" int "]")?        multiplicity, default 1
//! atom   := "(" word ")" | word
//! word   := factor ("*" factor)*
//! factor := genname ("^" sint)? | "1"
//! ```
//! so `a[5] b[2] c[3]` or `(a*c) c[2] x^-1`.

use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::group::FiniteGroup;

/// A multiset of elements of a group of fixed order, stored as multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    mult: Vec<u32>,
    len: usize,
}

impl Sequence {
    pub fn empty(group_order: usize) -> Self {
        Sequence {
            mult: vec![0; group_order],
            len: 0,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(group_order: usize, elems: I) -> Self {
        let mut s = Self::empty(group_order);
        for g in elems {
            s.push(g);
        }
        s
    }

    pub fn from_multiplicities(mult: Vec<u32>) -> Self {
        let len = mult.iter().map(|&m| m as usize).sum();
        Sequence { mult, len }
    }

    pub fn group_order(&self) -> usize {
        self.mult.len()
    }

    pub fn push(&mut self, g: usize) {
        self.push_n(g, 1);
    }

    pub fn push_n(&mut self, g: usize, k: u32) {
        self.mult[g] += k;
        self.len += k as usize;
    }

    pub fn remove_one(&mut self, g: usize) -> bool {
        if self.mult[g] == 0 {
            return false;
        }
        self.mult[g] -= 1;
        self.len -= 1;
        true
    }

    /// `|S|`
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `v_g(S)`
    pub fn multiplicity(&self, g: usize) -> u32 {
        self.mult[g]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Distinct elements in ascending index order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&g| self.mult[g] > 0).collect()
    }

    /// Terms in canonical non-decreasing index order.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len);
        for (g, &m) in self.mult.iter().enumerate() {
            out.extend(std::iter::repeat_n(g, m as usize));
        }
        out
    }

    /// `T | S`: componentwise multiplicities at most those of `other`.
    pub fn divides(&self, other: &Sequence) -> bool {
        self.mult.len() == other.mult.len()
            && self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }

    /// `S * T^[-1]`, if `T | S`.
    pub fn without(&self, t: &Sequence) -> Option<Sequence> {
        if !t.divides(self) {
            return None;
        }
        Some(Sequence::from_multiplicities(
            self.mult.iter().zip(&t.mult).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `S * T`
    pub fn concat(&self, t: &Sequence) -> Sequence {
        assert_eq!(self.mult.len(), t.mult.len());
        Sequence::from_multiplicities(self.mult.iter().zip(&t.mult).map(|(a, b)| a + b).collect())
    }

    /// Image under an element map (an automorphism, or conjugation).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Sequence {
        let mut out = Sequence::empty(self.mult.len());
        for (g, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                out.push_n(f(g), m);
            }
        }
        out
    }

    /// Renders in the sequence grammar using `g`'s element labels.
    pub fn render(&self, g: &FiniteGroup) -> String {
        let labels = g.element_labels();
        render_with_labels(self, &labels)
    }
}

pub(crate) fn render_with_labels(s: &Sequence, labels: &[String]) -> String {
    let mut parts = Vec::new();
    for x in s.support() {
        let l = &labels[x];
        let atom = if l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            l.clone()
        } else {
            format!("({l})")
        };
        match s.mult[x] {
            1 => parts.push(atom),
            m => parts.push(format!("{atom}[{m}]")),
        }
    }
    parts.join(" ")
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence{:?}", self.elements())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn err(&self, expected: &[&'static str]) -> Error {
        Error::Parse(ParseError::new(self.pos, expected, self.peek()))
    }

    fn name(&mut self) -> Option<&'a str> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.pos += 1,
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(&self.src[start..self.pos])
    }

    fn int(&mut self, signed: bool) -> Result<i64> {
        let start = self.pos;
        if signed && matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.err(&["integer"]));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse(ParseError::new(start, &["integer in range"], None)))
    }

    fn factor(&mut self, g: &FiniteGroup) -> Result<usize> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(0);
        }
        let name = self
            .name()
            .ok_or_else(|| self.err(&["generator name", "1"]))?;
        let elem = g
            .element_by_name(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.int(true)?;
            return Ok(g.pow(elem, e));
        }
        Ok(elem)
    }

    fn word(&mut self, g: &FiniteGroup, in_parens: bool) -> Result<usize> {
        let mut acc = self.factor(g)?;
        loop {
            if in_parens {
                self.skip_ws();
            }
            if self.peek() != Some('*') {
                return Ok(acc);
            }
            self.pos += 1;
            if in_parens {
                self.skip_ws();
            }
            acc = g.mul(acc, self.factor(g)?);
        }
    }
}

/// Maximum multiplicity a single term may carry.
const MAX_MULTIPLICITY: i64 = 1 << 20;

pub fn parse_sequence(g: &FiniteGroup, text: &str) -> Result<Sequence> {
    let mut p = Parser { src: text, pos: 0 };
    let mut seq = Sequence::empty(g.order());
    loop {
        p.skip_ws();
        if p.pos == text.len() {
            return Ok(seq);
        }
        let elem = if p.peek() == Some('(') {
            p.pos += 1;
            p.skip_ws();
            let e = p.word(g, true)?;
            if p.peek() != Some(')') {
                return Err(p.err(&["*", ")"]));
            }
            p.pos += 1;
            e
        } else {
            p.word(g, false)?
        };
        let mut k = 1;
        if p.peek() == Some('[') {
            p.pos += 1;
            k = p.int(false)?;
            if k > MAX_MULTIPLICITY {
                return Err(Error::BadParameter(format!("multiplicity {k} too large")));
            }
            if p.peek() != Some(']') {
                return Err(p.err(&["]"]));
            }
            p.pos += 1;
        }
        match p.peek() {
            None => {}
            Some(c) if c.is_whitespace() => {}
            Some(_) => return Err(p.err(&["whitespace", "[", "*", "end of input"])),
        }
        if seq.len() as i64 + k > MAX_MULTIPLICITY {
            return Err(Error::BadParameter("sequence too long".into()));
        }
        seq.push_n(elem, k as u32);
    }
}

/// Parses an ordered product such as `b c a a a b c c a a` or `e a (b*d)`
/// and returns the terms in order.
pub fn parse_ordered(g: &FiniteGroup, text: &str) -> Result<Vec<usize>> {
    let mut p = Parser { src: text, pos: 0 };
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.pos == text.len() {
            return Ok(out);
        }
        if p.peek() == Some('(') {
            p.pos += 1;
            p.skip_ws();
            let e = p.word(g, true)?;
            if p.peek() != Some(')') {
                return Err(p.err(&["*", ")"]));
            }
            p.pos += 1;
            out.push(e);
        } else {
            out.push(p.factor(g)?);
        }
    }
}

/// Left-to-right product of an ordered list of terms.
pub fn product(g: &FiniteGroup, terms: &[usize]) -> usize {
    terms.iter().fold(0, |acc, &t| g.mul(acc, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, dihedral};
    use crate::registry::{order48_fixture, order81_fixture};

    #[test]
    fn order48_sequence() {
        let g = order48_fixture().unwrap();
        let s = parse_sequence(&g, "a[5] b[2] c[3]").unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s.multiplicity(g.element_by_name("a").unwrap()), 5);
        assert_eq!(s.multiplicity(g.element_by_name("b").unwrap()), 2);
        assert_eq!(s.multiplicity(g.element_by_name("c").unwrap()), 3);
    }

    #[test]
    fn empty_text() {
        let g = cyclic(3);
        assert!(parse_sequence(&g, "").unwrap().is_empty());
        assert!(parse_sequence(&g, "   ").unwrap().is_empty());
    }

    #[test]
    fn order81_sequence_with_bound_name() {
        let g = order81_fixture().unwrap();
        let s = parse_sequence(&g, "(a*c) c[2] d[3] x[2] a[2]").unwrap();
        assert_eq!(s.len(), 10);
        let (a, c) = (
            g.element_by_name("a").unwrap(),
            g.element_by_name("c").unwrap(),
        );
        assert_eq!(s.multiplicity(g.mul(a, c)), 1);
    }

    #[test]
    fn powers_and_errors() {
        let g = dihedral(8).unwrap();
        let r = g.element_by_name("r").unwrap();
        let s = parse_sequence(&g, "r^-1 r^5 (r * s)[0] 1").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.multiplicity(g.inv(r)), 1);
        assert_eq!(s.multiplicity(r), 1);
        assert_eq!(s.multiplicity(0), 1);
        assert!(matches!(
            parse_sequence(&g, "t"),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(parse_sequence(&g, "r[2"), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence(&g, "(r*s"), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence(&g, "r^"), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence(&g, "r[2]s"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_sequence(&g, "r[99999999999999999999]"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn render_parses_back() {
        let g = dihedral(12).unwrap();
        let s = Sequence::from_elements(12, [1, 1, 5, 7, 7, 7, 11, 0]);
        let text = s.render(&g);
        assert_eq!(parse_sequence(&g, &text).unwrap(), s);
    }

    #[test]
    fn divisibility() {
        let s = Sequence::from_elements(5, [1, 1, 2, 3]);
        let t = Sequence::from_elements(5, [1, 3]);
        assert!(t.divides(&s));
        assert!(!s.divides(&t));
        assert_eq!(s.without(&t).unwrap(), Sequence::from_elements(5, [1, 2]));
        assert_eq!(s.without(&t).unwrap().concat(&t), s);
    }
}
