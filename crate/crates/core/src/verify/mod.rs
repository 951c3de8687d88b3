//! Seeded check suites tying the algorithms to the structural statements
//! they should satisfy, with brute-force finite groups as the oracle.

mod claims;
mod instances;
mod suites;

use std::fmt;

use thiserror::Error;

pub use claims::{claim, Claim, CLAIMS};
pub use instances::{
    dihedral_dual, example1, ga_gm, generate, heisenberg_torus, instance_seeds, mu_chain,
    random_bridgeable, random_connected, random_finite, Instance, InstanceSpec, RandomModelKind,
    MAX_FINITE_MODEL_ORDER, MAX_F_ORDER, MAX_LIE_DIM, MAX_RANDOM_GROUP_ORDER, MAX_RANK,
};
pub use suites::{oracle_compare, run_suite, SUITES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("instance parameters exceed the caps: {0}")]
    CapExceeded(String),
    #[error("invalid instance parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Skip(r) => write!(f, "skip ({r})"),
        }
    }
}

/// One check on one instance. Failures carry a witness naming the stage
/// or subgroup where the check broke; together with `instance` it
/// reproduces the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub claim: &'static str,
    pub instance: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn skipped(&self) -> bool {
        matches!(self.verdict, Verdict::Skip(_))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

pub fn tally(results: &[CheckResult]) -> Tally {
    results.iter().fold(Tally::default(), |mut t, r| {
        match r.verdict {
            Verdict::Pass => t.pass += 1,
            Verdict::Fail => t.fail += 1,
            Verdict::Skip(_) => t.skip += 1,
        }
        t
    })
}
