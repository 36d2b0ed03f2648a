//! Exact small and large Davenport constants of finite groups.
//!
//! Groups are explicit Cayley tables ([`FiniteGroup`]); sequences are
//! multisets of group elements ([`Sequence`]). The set of products of a
//! sequence is computed exactly by dynamic programming over sub-multisets
//! ([`PiTable`]), and the searches in [`search`] enumerate product-one free
//! sequences and minimal product-one sequences exhaustively.

pub mod bitset;
pub mod cayley;
pub mod construct;
pub mod error;
pub mod fingerprint;
pub mod group;
pub mod morphism;
pub mod pi;
pub mod registry;
pub mod search;
pub mod sequence;
pub mod spec;
pub mod subgroups;
pub mod verify;

pub use bitset::ElementSet;
pub use error::{Error, ParseError, Result};
pub use fingerprint::{fingerprint, GroupFingerprint};
pub use group::{validate_cayley, FiniteGroup};
pub use pi::PiTable;
pub use search::{SearchConfig, SearchOutcome};
pub use sequence::Sequence;
pub use spec::{build_group, parse_group_spec, GroupSpec};
