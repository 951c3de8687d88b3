//! Algebraic groups presented as `(U ⋊ D(X)) ⋊ F`: a unipotent group given
//! by its graded nilpotent Lie algebra, a diagonalizable group given by its
//! character group, and a finite constant group acting on both.

mod bridge;
mod center;
mod fitting;
mod lie;
mod model;
mod ordinal;
mod quotient;
mod realization;
mod series;
mod subgroup;
mod union;

use thiserror::Error;

use crate::finitegrp::FiniteGroupError;
use crate::zlattice::LatticeError;

pub use bridge::FiniteBridge;
pub use lie::{identity_qmat, GradedNilLie, QMat};
pub use model::{is_prime, AlgGroupModel, Diagnostic};
pub use ordinal::{OrdinalIndex, ParseOrdinalError};
pub use quotient::Projection;
pub use realization::MatrixRealization;
pub use series::{CentralSeriesReport, LimitStage, SeriesStage, SeriesStatus, UcsOptions};
pub use subgroup::StdSubgroup;
pub use union::SubgroupChain;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("invalid model: {}", format_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("requires connected group")]
    NotConnected,
    #[error("center contains elements mixing F with the torus ({}); not representable as a standard subgroup", .0.join(", "))]
    MixedCenterUnsupported(Vec<String>),
    #[error("undetermined limit: {0}")]
    UndeterminedLimit(String),
    #[error("chain is not ascending at position {0}")]
    NotAscending(usize),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("computation cancelled")]
    Cancelled,
    #[error("not a finite constant group: {0}")]
    NotBridgeable(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Finite(#[from] FiniteGroupError),
}

fn format_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
