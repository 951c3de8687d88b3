//! Finite groups given by Cayley tables.
//!
//! Everything here is brute force over the multiplication table. These
//! routines serve as the reference against which the scheme-side
//! computations are checked, so they favour obviousness over speed.

mod families;
mod group;
mod perm;
mod series;

use thiserror::Error;

pub use families::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, klein_four, quaternion,
    symmetric,
};
pub use group::{FiniteGroup, SubgroupOfFinite, DEFAULT_ORDER_CAP};
pub use perm::{compose_perm, cycle_notation, from_permutations, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiniteGroupError {
    #[error("Cayley table must be square with {expected} columns in every row (row {row} has {found})")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("empty group table")]
    Empty,
    #[error("table entry {entry} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, entry: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("operation is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
}
