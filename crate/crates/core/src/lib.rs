//! Upper central series, hypercenters and Fitting subgroups for groups of the
//! form `(U ⋊ D(X)) ⋊ F`, with exact lattice arithmetic and finite-group
//! oracles.

pub mod linalg;
pub mod zlattice;
pub mod agmodel;
pub mod finitegrp;
pub mod verify;

pub use agmodel::{
    AlgGroupModel, CentralSeriesReport, GradedNilLie, MatrixRealization, ModelError, OrdinalIndex,
    SeriesStatus, StdSubgroup, UcsOptions,
};
pub use finitegrp::{FiniteGroup, SubgroupOfFinite};
pub use zlattice::{FgAbelian, SubgroupOfFgA};
