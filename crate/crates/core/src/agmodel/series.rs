//! Transfinite upper central series.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use super::model::AlgGroupModel;
use super::ordinal::OrdinalIndex;
use super::quotient::Projection;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::linalg::{to_q, QVec, Subspace};
use crate::zlattice::{chain_limit, ChainLimitOutcome, StepOperator, SubgroupOfFgA};

#[derive(Clone, Debug)]
pub struct UcsOptions {
    /// Finite steps taken in a block before a limit stage is attempted.
    pub max_finite_steps: usize,
    pub max_limit_stages: usize,
    /// Depth budget handed to the chain-limit computation.
    pub chain_depth: usize,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for UcsOptions {
    fn default() -> Self {
        UcsOptions {
            max_finite_steps: 64,
            max_limit_stages: 8,
            chain_depth: 32,
            cancel: None,
        }
    }
}

impl UcsOptions {
    fn cancelled(&self) -> bool {
        self.cancel.as_ref().is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

/// `Z_α` together with `G / Z_α` and the projection onto it.
#[derive(Clone, Debug)]
pub struct SeriesStage {
    pub index: OrdinalIndex,
    pub subgroup: StdSubgroup,
    pub quotient: AlgGroupModel,
    pub projection: Projection,
}

/// The chain computation behind a limit stage, in the coordinates of the
/// quotient preceding it.
#[derive(Clone, Debug)]
pub struct LimitStage {
    pub index: OrdinalIndex,
    pub outcome: ChainLimitOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesStatus {
    /// The center of `G / Z_λ` is trivial.
    Terminated,
    MixedCenterUnsupported { at: OrdinalIndex, elements: Vec<String> },
    UndeterminedLimit { at: OrdinalIndex, reason: String },
    Cancelled { at: OrdinalIndex },
}

#[derive(Clone, Debug)]
pub struct CentralSeriesReport {
    pub stages: Vec<SeriesStage>,
    pub limits: Vec<LimitStage>,
    pub status: SeriesStatus,
}

impl CentralSeriesReport {
    /// Index of the last computed stage; the length `λ` when terminated.
    pub fn terminal(&self) -> OrdinalIndex {
        self.stages.last().expect("stage 0 always exists").index
    }

    pub fn is_terminated(&self) -> bool {
        self.status == SeriesStatus::Terminated
    }

    pub fn stage(&self, index: OrdinalIndex) -> Option<&SeriesStage> {
        self.stages.iter().find(|s| s.index == index)
    }

    /// `Z_λ`, available once the series has terminated.
    pub fn hypercenter(&self) -> Option<&StdSubgroup> {
        self.is_terminated()
            .then(|| &self.stages.last().expect("nonempty").subgroup)
    }

    /// `Z_ω`: the first limit stage, or the last stage of a finite series.
    pub fn z_omega(&self) -> Option<&StdSubgroup> {
        if let Some(s) = self.stage(OrdinalIndex::new(1, 0)) {
            return Some(&s.subgroup);
        }
        self.hypercenter()
    }

    /// Converts a non-terminated status into the matching error.
    pub fn require_terminated(&self) -> Result<(), ModelError> {
        match &self.status {
            SeriesStatus::Terminated => Ok(()),
            SeriesStatus::MixedCenterUnsupported { elements, .. } => {
                Err(ModelError::MixedCenterUnsupported(elements.clone()))
            }
            SeriesStatus::UndeterminedLimit { at, reason } => {
                Err(ModelError::UndeterminedLimit(format!("at stage {at}: {reason}")))
            }
            SeriesStatus::Cancelled { .. } => Err(ModelError::Cancelled),
        }
    }
}

enum LimitStep {
    /// The chain settles after this many further finite steps.
    Extend(usize),
    Limit(SubgroupOfFgA, ChainLimitOutcome),
    Undetermined(String),
}

const MAX_BLOCK_EXTENSIONS: usize = 16;

impl AlgGroupModel {
    pub fn ucs(&self, opts: &UcsOptions) -> Result<CentralSeriesReport, ModelError> {
        self.check()?;
        let mut stages = vec![SeriesStage {
            index: OrdinalIndex::ZERO,
            subgroup: StdSubgroup::trivial(self),
            quotient: self.clone(),
            projection: Projection::identity(self),
        }];
        let mut limits = Vec::new();
        let mut budget = opts.max_finite_steps;
        let mut extensions = 0;
        let status = loop {
            let last = stages.last().expect("nonempty");
            let at = last.index;
            if opts.cancelled() {
                break SeriesStatus::Cancelled { at };
            }
            let cur = &last.quotient;
            let obstruction = cur.mixed_center_obstruction();
            if !obstruction.is_empty() {
                break SeriesStatus::MixedCenterUnsupported {
                    at,
                    elements: obstruction.iter().map(|&g| cur.f().name(g)).collect(),
                };
            }
            let z = cur.center_candidate();
            if z.is_trivial() {
                break SeriesStatus::Terminated;
            }
            if (at.finite as usize) < budget {
                let (q, p) = cur.quotient(&z)?;
                let stage = self.next_stage(last, at.succ(), q, &p);
                stages.push(stage);
                continue;
            }
            let undetermined = |reason: String| SeriesStatus::UndeterminedLimit { at, reason };
            if extensions >= MAX_BLOCK_EXTENSIONS {
                break undetermined("the finite part of the series does not settle".into());
            }
            if !z.m.is_zero() || !z.k.is_trivial() {
                extensions += 1;
                budget = at.finite as usize + opts.max_finite_steps;
                continue;
            }
            if at.omega as usize >= opts.max_limit_stages {
                break undetermined(format!(
                    "limit stage budget of {} exhausted",
                    opts.max_limit_stages
                ));
            }
            match limit_step(cur, opts.chain_depth)? {
                LimitStep::Extend(extra) => {
                    extensions += 1;
                    budget = at.finite as usize + extra;
                }
                LimitStep::Undetermined(reason) => break undetermined(reason),
                LimitStep::Limit(s, outcome) => {
                    let sub = StdSubgroup::new(Subspace::zero(cur.dim_l()), s, cur.f().trivial());
                    let (q, p) = cur.quotient(&sub)?;
                    let index = OrdinalIndex::new(at.omega + 1, 0);
                    let stage = self.next_stage(last, index, q, &p);
                    stages.push(stage);
                    limits.push(LimitStage { index, outcome });
                    budget = opts.max_finite_steps;
                    extensions = 0;
                }
            }
        };
        Ok(CentralSeriesReport {
            stages,
            limits,
            status,
        })
    }

    fn next_stage(
        &self,
        last: &SeriesStage,
        index: OrdinalIndex,
        quotient: AlgGroupModel,
        step: &Projection,
    ) -> SeriesStage {
        let projection = last.projection.then(step);
        let mut subgroup = projection.preimage(self, &StdSubgroup::trivial(&quotient));
        subgroup.central = index.finite == 1 && index.omega == 0;
        SeriesStage {
            index,
            subgroup,
            quotient,
            projection,
        }
    }

    /// The last term `Z_λ` of the upper central series.
    pub fn hypercenter(&self, opts: &UcsOptions) -> Result<StdSubgroup, ModelError> {
        let report = self.ucs(opts)?;
        report.require_terminated()?;
        Ok(report.hypercenter().expect("terminated").clone())
    }

    pub fn z_omega(&self, opts: &UcsOptions) -> Result<StdSubgroup, ModelError> {
        let report = self.ucs(opts)?;
        if let Some(z) = report.stage(OrdinalIndex::new(1, 0)) {
            return Ok(z.subgroup.clone());
        }
        report.require_terminated()?;
        Ok(report.hypercenter().expect("terminated").clone())
    }

    /// Nilpotency class: the least `c` with `Z_c = G`.
    pub fn nilpotency_class(&self, opts: &UcsOptions) -> Result<usize, ModelError> {
        let report = self.ucs(opts)?;
        report.require_terminated()?;
        let lambda = report.terminal();
        if lambda.omega == 0 && report.hypercenter().expect("terminated").is_whole() {
            Ok(lambda.finite as usize)
        } else {
            Err(ModelError::NotNilpotent)
        }
    }

    /// Nilpotency class of a subgroup, computed on the subgroup as a model.
    pub fn nilpotency_class_sub(
        &self,
        s: &StdSubgroup,
        opts: &UcsOptions,
    ) -> Result<usize, ModelError> {
        self.sub_model(s)?.nilpotency_class(opts)
    }

    /// Whether the subgroup is nilpotent, with errors other than
    /// non-nilpotence propagated.
    pub fn is_nilpotent_sub(&self, s: &StdSubgroup, opts: &UcsOptions) -> Result<bool, ModelError> {
        match self.nilpotency_class_sub(s, opts) {
            Ok(_) => Ok(true),
            Err(ModelError::NotNilpotent) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Central elements of `F` acting trivially on `X` and by a sign on each
    /// weight space: those that could enter the center once the torus
    /// part shrinks.
    fn sign_central_candidates(&self) -> Vec<usize> {
        let classes = self.lie().weight_classes();
        self.f()
            .center()
            .elements()
            .iter()
            .copied()
            .filter(|&g| g != self.f().identity() && self.sign_pattern(g, &classes).is_some())
            .collect()
    }
}

fn limit_step(cur: &AlgGroupModel, depth: usize) -> Result<LimitStep, ModelError> {
    let x = cur.x().clone();
    let n = x.ngens();
    let w = SubgroupOfFgA::new(x.clone(), cur.lie().support());
    let maps = cur.f().greedy_generators()
        .into_iter()
        .map(|g| cur.action_x_minus_id(g))
        .collect();
    let op = StepOperator::new(w, maps);
    let start = SubgroupOfFgA::whole(x.clone());
    let outcome = chain_limit(&start, &op, depth)?;
    let (limit, stable) = match &outcome {
        ChainLimitOutcome::FixedPoint { depth, .. } => return Ok(LimitStep::Extend(depth + 1)),
        ChainLimitOutcome::Undetermined { reason, .. } => {
            return Ok(LimitStep::Undetermined(reason.clone()))
        }
        ChainLimitOutcome::UnitFactorSplit { limit, certificate } => {
            (limit.clone(), certificate.stable_span.clone())
        }
    };
    // Every finite stage must keep the finite part trivial: each candidate
    // must move some element of every chain term.
    let mut pending = Vec::new();
    for g in cur.sign_central_candidates() {
        let diff = cur.action_x_minus_id(g);
        if !diff.vanishes_on(&limit) {
            continue;
        }
        let rows: Vec<QVec> = diff.matrix().to_rows().iter().map(|r| to_q(r)).collect();
        if !stable.image(&rows).is_zero() {
            continue;
        }
        pending.push(diff);
    }
    if pending.is_empty() {
        return Ok(LimitStep::Limit(limit, outcome));
    }
    let torsion_bits = x.torsion_order().bits() as usize;
    let horizon = depth + n + torsion_bits + 2;
    let mut y = start;
    for step in 1..=horizon {
        y = op.apply(&y);
        if pending.iter().any(|d| d.vanishes_on(&y)) {
            return Ok(LimitStep::Extend(step + 1));
        }
    }
    Ok(LimitStep::Undetermined(
        "a central element of F acts trivially on the limit but on no chain term that was examined"
            .to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::finitegrp::cyclic;
    use crate::linalg::q;
    use crate::zlattice::{ivec, FgAbelian, IntMatrix};

    fn example1(p: u64) -> AlgGroupModel {
        AlgGroupModel::from_generators(
            p,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap()
    }

    fn small_opts() -> UcsOptions {
        UcsOptions {
            max_finite_steps: 8,
            ..UcsOptions::default()
        }
    }

    #[test]
    fn example1_reaches_omega_plus_one() {
        let g = example1(3);
        let r = g.ucs(&small_opts()).unwrap();
        assert_eq!(r.status, SeriesStatus::Terminated);
        assert_eq!(r.terminal(), OrdinalIndex::new(1, 1));
        for i in 1..=8u64 {
            let z = &r.stage(OrdinalIndex::finite(i)).unwrap().subgroup;
            assert_eq!(z.y, SubgroupOfFgA::new(g.x().clone(), vec![ivec(&[1 << i])]));
            assert!(z.k.is_trivial());
        }
        let zw = &r.stage(OrdinalIndex::new(1, 0)).unwrap().subgroup;
        assert!(zw.y.is_trivial() && zw.k.is_trivial());
        assert!(r.hypercenter().unwrap().is_whole());
        assert_eq!(r.limits.len(), 1);
        assert!(matches!(g.nilpotency_class(&small_opts()), Err(ModelError::NotNilpotent)));
    }

    #[test]
    fn example1_default_options() {
        let r = example1(3).ucs(&UcsOptions::default()).unwrap();
        assert_eq!(r.terminal(), OrdinalIndex::new(1, 1));
        assert_eq!(r.stages.len(), 67);
    }

    #[test]
    fn example1_quotient_by_center_is_isomorphic() {
        let g = example1(3);
        let (q_model, _) = g.quotient(&g.center().unwrap()).unwrap();
        assert_eq!(q_model, g);
    }

    #[test]
    fn heisenberg_has_class_two() {
        let lie = GradedNilLie::from_brackets(vec![vec![]; 3], &[(0, 1, 2, q(1))]).unwrap();
        let g = AlgGroupModel::connected(0, FgAbelian::trivial(), lie);
        let r = g.ucs(&UcsOptions::default()).unwrap();
        assert_eq!(r.terminal(), OrdinalIndex::finite(2));
        assert_eq!(g.nilpotency_class(&UcsOptions::default()).unwrap(), 2);
        assert!(g.z_omega(&UcsOptions::default()).unwrap().is_whole());
    }

    #[test]
    fn ga_by_gm_is_centerless() {
        let lie = GradedNilLie::abelian(vec![ivec(&[1])]);
        let g = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
        let r = g.ucs(&UcsOptions::default()).unwrap();
        assert_eq!(r.terminal(), OrdinalIndex::ZERO);
        assert!(r.hypercenter().unwrap().is_trivial());
    }

    #[test]
    fn commutative_model_has_length_one() {
        let lie = GradedNilLie::abelian(vec![ivec(&[0, 0])]);
        let g = AlgGroupModel::connected(0, FgAbelian::free(2), lie);
        let r = g.ucs(&UcsOptions::default()).unwrap();
        assert_eq!(r.terminal(), OrdinalIndex::finite(1));
        assert!(r.stages[1].subgroup.is_whole());
        assert_eq!(g.nilpotency_class(&UcsOptions::default()).unwrap(), 1);
    }

    #[test]
    fn slow_finite_chain_is_followed_past_the_budget() {
        // X = Z/2^12 inverted: the chain needs 12 steps, more than the budget.
        let g = AlgGroupModel::from_generators(
            0,
            FgAbelian::cyclic(1 << 12),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        let opts = UcsOptions {
            max_finite_steps: 4,
            ..UcsOptions::default()
        };
        let r = g.ucs(&opts).unwrap();
        assert!(r.is_terminated());
        assert_eq!(r.terminal().omega, 0);
        assert!(r.hypercenter().unwrap().is_whole());
        assert_eq!(g.nilpotency_class(&opts).unwrap(), r.terminal().finite as usize);
    }

    #[test]
    fn cancellation_is_reported() {
        let flag = Arc::new(AtomicBool::new(true));
        let opts = UcsOptions {
            cancel: Some(flag),
            ..UcsOptions::default()
        };
        let r = example1(3).ucs(&opts).unwrap();
        assert_eq!(r.status, SeriesStatus::Cancelled { at: OrdinalIndex::ZERO });
        assert_eq!(r.require_terminated(), Err(ModelError::Cancelled));
    }
}
