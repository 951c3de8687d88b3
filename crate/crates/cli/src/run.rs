//! Dispatch of CLI operations and the mapping from errors to exit codes.

use std::path::PathBuf;
use std::time::Instant;

use thiserror::Error;

use hypercenter::agmodel::SeriesStatus;
use hypercenter::verify::{oracle_compare, run_suite, tally, VerifyError};
use hypercenter::{ModelError, UcsOptions};

use crate::instance::{load, Instance, InstanceError};
use crate::report::{series_status, ModelSummary, Payload, Report, SeriesSummary, SubgroupSummary, VerifySummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Validate,
    Center,
    Ucs,
    Zomega,
    Hypercenter,
    Fitting,
    Rads,
    CenterS,
    Nilclass,
    Verify,
    OracleCompare,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Validate => "validate",
            Operation::Center => "center",
            Operation::Ucs => "ucs",
            Operation::Zomega => "zomega",
            Operation::Hypercenter => "hypercenter",
            Operation::Fitting => "fitting",
            Operation::Rads => "rads",
            Operation::CenterS => "center-s",
            Operation::Nilclass => "nilclass",
            Operation::Verify => "verify",
            Operation::OracleCompare => "oracle-compare",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub op: Operation,
    pub input: Option<PathBuf>,
    pub opts: UcsOptions,
    pub suite: String,
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("--input is required for {0}")]
    MissingInput(&'static str),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::MissingInput(_) | RunError::Verify(_) => 2,
            RunError::Instance(InstanceError::Model(e)) | RunError::Model(e) => model_exit_code(e),
            RunError::Instance(_) => 2,
        }
    }
}

pub fn model_exit_code(e: &ModelError) -> i32 {
    match e {
        ModelError::Invalid(_) | ModelError::Lattice(_) | ModelError::Finite(_) => 2,
        ModelError::MixedCenterUnsupported(_) => 3,
        ModelError::UndeterminedLimit(_) => 4,
        ModelError::NotConnected
        | ModelError::PreconditionViolated(_)
        | ModelError::NotBridgeable(_)
        | ModelError::NotAscending(_)
        | ModelError::NotNilpotent => 5,
        ModelError::Cancelled => 1,
    }
}

/// A finished operation. A report may come with a nonzero exit code, for
/// instance a series that stopped early or a suite with failures.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
    pub diagnostic: Option<String>,
}

fn require_input(req: &Request) -> Result<Instance, RunError> {
    let path = req.input.as_ref().ok_or(RunError::MissingInput(req.op.name()))?;
    Ok(load(path)?)
}

pub fn run(req: &Request) -> Result<Outcome, RunError> {
    let start = Instant::now();
    let mut exit_code = 0;
    let mut diagnostic = None;
    let mut status = "ok".to_string();
    let result = match req.op {
        Operation::Verify => {
            let results = run_suite(&req.suite, req.seed, req.count)?;
            verify_payload(&req.suite, req, &results, &mut exit_code, &mut status)
        }
        op => {
            let inst = require_input(req)?;
            let g = &inst.model;
            match op {
                Operation::Validate => Payload::Validation(ModelSummary::of(g, inst.realization.as_ref())),
                Operation::Center => Payload::Subgroup(SubgroupSummary::of(g, &g.center()?)),
                Operation::CenterS => Payload::Subgroup(SubgroupSummary::of(g, &g.center_s()?)),
                Operation::Zomega => Payload::Subgroup(SubgroupSummary::of(g, &g.z_omega(&req.opts)?)),
                Operation::Hypercenter => Payload::Subgroup(SubgroupSummary::of(g, &g.hypercenter(&req.opts)?)),
                Operation::Fitting => Payload::Subgroup(SubgroupSummary::of(g, &g.fitting(&req.opts)?)),
                Operation::Rads => Payload::Subgroup(SubgroupSummary::of(g, &g.rad_u()?)),
                Operation::Ucs => {
                    let series = g.ucs(&req.opts)?;
                    if let Err(e) = series.require_terminated() {
                        exit_code = model_exit_code(&e);
                        diagnostic = Some(e.to_string());
                    }
                    if let SeriesStatus::Cancelled { .. } = series.status {
                        exit_code = 1;
                    }
                    status = series_status(&series.status);
                    Payload::Series(SeriesSummary::of(g, &series))
                }
                Operation::Nilclass => {
                    let class = match g.nilpotency_class(&req.opts) {
                        Ok(c) => Some(c),
                        Err(ModelError::NotNilpotent) => {
                            status = "not-nilpotent".into();
                            None
                        }
                        Err(e) => return Err(e.into()),
                    };
                    Payload::NilClass {
                        class,
                        bound: inst.realization.as_ref().map(|r| r.class_bound()),
                    }
                }
                Operation::OracleCompare => {
                    if !g.is_finite_bridgeable() {
                        return Err(ModelError::NotBridgeable(
                            "oracle comparison needs a finite constant group".into(),
                        )
                        .into());
                    }
                    let name = req
                        .input
                        .as_ref()
                        .map(|p| p.display().to_string())
                        .unwrap_or_default();
                    let results = oracle_compare(g, &name);
                    verify_payload("oracle-bridge", req, &results, &mut exit_code, &mut status)
                }
                Operation::Verify => unreachable!("handled above"),
            }
        }
    };
    if exit_code == 1 && diagnostic.is_none() {
        diagnostic = Some(format!("{}: {status}", req.op.name()));
    }
    Ok(Outcome {
        report: Report {
            operation: req.op.name().to_string(),
            status,
            result,
            timing_us: start.elapsed().as_micros() as u64,
        },
        exit_code,
        diagnostic,
    })
}

fn verify_payload(
    suite: &str,
    req: &Request,
    results: &[hypercenter::verify::CheckResult],
    exit_code: &mut i32,
    status: &mut String,
) -> Payload {
    let t = tally(results);
    if t.fail > 0 {
        *exit_code = 1;
        *status = format!("{} failed", t.fail);
    }
    Payload::Verify(VerifySummary::of(suite, req.seed, req.count, results))
}
