//! Exact arithmetic on finitely generated abelian groups.
//!
//! Everything is built on integer matrices with Smith and Hermite normal
//! forms. Subgroups are canonical, so equality tests are structural.

mod chain;
mod group;
mod lattice;
mod matrix;
pub mod poly;
mod snf;

use thiserror::Error;

pub use chain::{chain_limit, ChainLimitCertificate, ChainLimitOutcome, StepOperator};
pub use group::{
    FgAbelian, GroupIndex, LatticeEndo, LatticeHom, QuotientPresentation, SubgroupOfFgA,
    SubgroupPresentation,
};
pub use lattice::{left_kernel, Lattice};
pub use matrix::{ivec, IntMatrix};
pub use snf::{hermite_normal_form, smith_normal_form, HermiteForm, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid invariant factors: {0}")]
    InvalidInvariants(String),
    #[error("subgroups live in different groups ({left} vs {right})")]
    AmbientMismatch { left: String, right: String },
    #[error("matrix has shape {found:?}, expected {expected:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("starting subgroup is not mapped into itself")]
    NotDescending,
}
