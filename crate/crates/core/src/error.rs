use std::fmt;

use thiserror::Error;

/// Parse failure with the byte offset it occurred at and what the parser wanted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl ParseError {
    pub(crate) fn new(pos: usize, expected: &[&'static str], found: Option<char>) -> Self {
        ParseError {
            pos,
            expected: expected.to_vec(),
            found,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at offset {}: expected {}",
            self.pos,
            self.expected.join(" | ")
        )?;
        match self.found {
            Some(c) => write!(f, ", found {c:?}"),
            None => write!(f, ", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("table is not square or empty")]
    NotSquare,
    #[error("entry ({row}, {col}) = {value} is out of range")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("associativity fails: ({0} {1}) {2} != {0} ({1} {2})", .triple.0, .triple.1, .triple.2)]
    NotAssociative { triple: (usize, usize, usize) },
    #[error("{what}: {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("action of acting element {0} is not an automorphism of the normal factor")]
    NotAutomorphism(usize),
    #[error("action is not a homomorphism at acting elements ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("no registry entry for gap id ({0},{1})")]
    UnknownRegistryId(usize, usize),
    #[error("cayley file line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("invalid cayley table: {0}")]
    Validation(Box<Error>),
    #[error("fingerprint mismatch for {id}: expected {expected}, got {found}")]
    FingerprintMismatch {
        id: String,
        expected: String,
        found: String,
    },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not proper or the chosen element lies inside it")]
    HNotProper,
    #[error("sequence is not product-one free")]
    NotFree,
    #[error("expected-values data corrupt: {0}")]
    DataCorrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
