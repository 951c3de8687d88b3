//! The check suites.

use num_bigint::BigInt;

use super::claims::claim;
use super::instances::{
    dihedral_dual, example1, ga_gm, heisenberg_torus, instance_seeds, mu_chain, random_bridgeable,
    random_connected, random_finite, InstanceSpec, RandomModelKind,
};
use super::{CheckResult, Verdict, VerifyError};
use crate::agmodel::{
    AlgGroupModel, CentralSeriesReport, GradedNilLie, MatrixRealization, ModelError, OrdinalIndex,
    SeriesStatus, StdSubgroup, SubgroupChain, UcsOptions,
};
use crate::finitegrp::{FiniteGroup, SubgroupOfFinite};
use crate::linalg::{q, Subspace};
use crate::zlattice::{
    ivec, ChainLimitOutcome, FgAbelian, GroupIndex, IntMatrix, LatticeHom, StepOperator,
    SubgroupOfFgA,
};

pub const SUITES: &[&str] = &[
    "example1",
    "mu-chain",
    "oracle-bridge",
    "connected-main",
    "characterization",
    "chain-union",
    "fixtures",
];

/// Runs `count` instances of the named suite. The fixture suite has a
/// fixed instance list and ignores `count`.
pub fn run_suite(name: &str, seed: u64, count: usize) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    match name {
        "example1" => {
            for p in cycle(&[3, 2, 0, 5, 7, 11, 13], count) {
                example1_checks(&mut Recorder::new(name, InstanceSpec::Example1 { p }, &mut out), p);
            }
        }
        "mu-chain" => {
            let pairs: Vec<(u64, u64)> = [3u64, 2, 5, 7]
                .iter()
                .flat_map(|&l| [0u64, 2, 3, 5].into_iter().filter(move |&p| p != l).map(move |p| (l, p)))
                .collect();
            for (ell, p) in cycle(&pairs, count) {
                let mut rec = Recorder::new(name, InstanceSpec::MuChain { ell, p }, &mut out);
                mu_chain_checks(&mut rec, ell, p);
            }
        }
        "oracle-bridge" => {
            for s in instance_seeds(seed, count) {
                let spec = InstanceSpec::RandomModel { seed: s, kind: RandomModelKind::Bridgeable };
                bridge_checks(&mut Recorder::new(name, spec, &mut out), &random_bridgeable(s));
            }
        }
        "connected-main" => {
            for s in instance_seeds(seed, count) {
                let spec = InstanceSpec::RandomModel { seed: s, kind: RandomModelKind::Connected };
                connected_checks(&mut Recorder::new(name, spec, &mut out), &random_connected(s));
            }
        }
        "characterization" => {
            for s in instance_seeds(seed, count) {
                let spec = InstanceSpec::RandomFinite { seed: s };
                finite_checks(&mut Recorder::new(name, spec, &mut out), &random_finite(s));
            }
        }
        "chain-union" => {
            for (i, s) in instance_seeds(seed, count).into_iter().enumerate() {
                chain_union_case(name, i, s, &mut out);
            }
        }
        "fixtures" => fixture_checks(name, &mut out),
        _ => return Err(VerifyError::UnknownSuite(name.to_string())),
    }
    Ok(out)
}

/// The oracle-bridge checks on a single finite constant model.
pub fn oracle_compare(model: &AlgGroupModel, instance: &str) -> Vec<CheckResult> {
    let mut out = Vec::new();
    bridge_checks(&mut Recorder::new("oracle-bridge", instance, &mut out), model);
    out
}

fn cycle<T: Copy>(items: &[T], count: usize) -> Vec<T> {
    items.iter().copied().cycle().take(count).collect()
}

#[derive(Clone, Debug)]
enum Outcome {
    Fail(String),
    Skip(String),
}

type Check = Result<(), Outcome>;

impl From<ModelError> for Outcome {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::MixedCenterUnsupported(_) | ModelError::UndeterminedLimit(_) => {
                Outcome::Skip(e.to_string())
            }
            _ => Outcome::Fail(e.to_string()),
        }
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Outcome::Fail(witness()))
    }
}

struct Recorder<'a> {
    suite: &'static str,
    instance: String,
    out: &'a mut Vec<CheckResult>,
}

impl<'a> Recorder<'a> {
    fn new(suite: &str, spec: impl ToString, out: &'a mut Vec<CheckResult>) -> Self {
        let suite = SUITES.iter().find(|s| **s == suite).expect("known suite");
        Recorder {
            suite,
            instance: spec.to_string(),
            out,
        }
    }

    fn run(&mut self, check: &str, claim_id: &'static str, f: impl FnOnce() -> Check) {
        debug_assert!(claim(claim_id).is_some(), "unregistered claim {claim_id}");
        let (verdict, witness) = match f() {
            Ok(()) => (Verdict::Pass, None),
            Err(Outcome::Fail(w)) => (Verdict::Fail, Some(w)),
            Err(Outcome::Skip(r)) => (Verdict::Skip(r), None),
        };
        self.out.push(CheckResult {
            suite: self.suite.to_string(),
            check: check.to_string(),
            claim: claim_id,
            instance: self.instance.clone(),
            verdict,
            witness,
        });
    }
}

/// The series as a terminated report, or the outcome explaining why not.
fn terminated(model: &AlgGroupModel, opts: &UcsOptions) -> Result<CentralSeriesReport, Outcome> {
    let report = model.ucs(opts)?;
    match &report.status {
        SeriesStatus::Terminated => Ok(report),
        SeriesStatus::MixedCenterUnsupported { at, elements } => Err(Outcome::Skip(format!(
            "mixed central elements {} at stage {at}",
            elements.join(", ")
        ))),
        SeriesStatus::UndeterminedLimit { at, reason } => {
            Err(Outcome::Skip(format!("undetermined limit at stage {at}: {reason}")))
        }
        SeriesStatus::Cancelled { at } => Err(Outcome::Fail(format!("cancelled at stage {at}"))),
    }
}

fn hypercenter_of(report: &CentralSeriesReport) -> &StdSubgroup {
    report.hypercenter().expect("terminated")
}

/// Stage `index` of a terminated series, which is constant past its end.
fn stage_or_last(report: &CentralSeriesReport, index: OrdinalIndex) -> &StdSubgroup {
    if index >= report.terminal() {
        return hypercenter_of(report);
    }
    &report.stage(index).expect("stage below the terminal").subgroup
}

const STEP_CHECK_LIMIT: usize = 12;

/// Checks every model-side series should pass.
fn series_checks(rec: &mut Recorder, model: &AlgGroupModel, report: &Result<CentralSeriesReport, Outcome>) {
    rec.run("successor-stage-is-center-of-quotient", "ucs-step", || {
        let r = report.clone()?;
        for (i, w) in r.stages.windows(2).enumerate().take(STEP_CHECK_LIMIT) {
            if w[1].index != w[0].index.succ() {
                continue;
            }
            ensure(w[0].subgroup.is_contained_in(&w[1].subgroup), || {
                format!("stage {} is not contained in stage {}", w[0].index, w[1].index)
            })?;
            let image = w[0].projection.image(&w[1].subgroup);
            let center = w[0].quotient.center()?;
            ensure(image == center, || {
                format!("stage {} maps to {image:?}, center of quotient is {center:?} (pair {i})", w[1].index)
            })?;
        }
        Ok(())
    });
    rec.run("terminal-below-omega-squared", "ordinal-bound", || {
        let r = report.clone()?;
        let bound = (model.x().rank() + model.dim_l() + 1) as u64;
        let lambda = r.terminal();
        ensure(r.limits.len() as u64 <= bound && lambda.omega <= bound, || {
            format!("terminal {lambda} with {} limit stages exceeds bound {bound}", r.limits.len())
        })?;
        let sorted = r.stages.windows(2).all(|w| w[0].index < w[1].index);
        ensure(sorted, || "stage indices are not increasing".into())
    });
    rec.run("hypercenter-is-last-normal-stage", "hypercenter-last-stage", || {
        let r = report.clone()?;
        let h = hypercenter_of(&r);
        ensure(model.is_normal_subgroup(h), || format!("last stage {h:?} is not normal"))?;
        let again = model.hypercenter(&UcsOptions::default())?;
        ensure(&again == h, || format!("hypercenter {again:?} differs from last stage {h:?}"))
    });
    rec.run("quotient-by-hypercenter-is-centerless", "hypercenter-centerless-quotient", || {
        let r = report.clone()?;
        let last = r.stages.last().expect("nonempty");
        let z = last.quotient.center()?;
        ensure(z.is_trivial(), || format!("center of G/Z_{} is {z:?}", last.index))
    });
}

/// The torus part `(0, Y, 1)` with the given `Y`.
fn torus_part(model: &AlgGroupModel, y: SubgroupOfFgA) -> StdSubgroup {
    StdSubgroup::new(Subspace::zero(model.dim_l()), y, model.f().trivial())
}

fn index_of(y: &SubgroupOfFgA) -> Option<BigInt> {
    match y.index() {
        GroupIndex::Finite(n) => Some(n),
        GroupIndex::Infinite => None,
    }
}

fn stage_shift_check(rec: &mut Recorder, report: &Result<CentralSeriesReport, Outcome>, alpha: OrdinalIndex, upto: u64) {
    rec.run(&format!("stage-shift-at-{alpha}"), "stage-shift", || {
        let r = report.clone()?;
        let base = r
            .stage(alpha)
            .ok_or_else(|| Outcome::Fail(format!("no stage {alpha} in a series ending at {}", r.terminal())))?;
        let qr = terminated(&base.quotient, &UcsOptions::default())?;
        for i in 0..=upto {
            let lhs = base.projection.image(stage_or_last(&r, alpha.add(OrdinalIndex::finite(i))));
            let rhs = stage_or_last(&qr, OrdinalIndex::finite(i));
            ensure(&lhs == rhs, || {
                format!("Z_(alpha+{i})/Z_alpha is {lhs:?} but Z_{i} of the quotient is {rhs:?}")
            })?;
        }
        Ok(())
    });
}

fn example1_checks(rec: &mut Recorder, p: u64) {
    let model = example1(p);
    let opts = UcsOptions::default();
    let report = terminated(&model, &opts);
    series_checks(rec, &model, &report);
    rec.run("finite-stages-are-mu-2^i", "example-stages", || {
        let r = report.clone()?;
        for i in 1..=10u64 {
            let s = &r.stage(OrdinalIndex::finite(i)).ok_or_else(|| Outcome::Fail(format!("missing stage {i}")))?.subgroup;
            let expected = SubgroupOfFgA::new(model.x().clone(), vec![ivec(&[1 << i])]);
            ensure(s.y == expected && s.k.is_trivial() && s.m.is_zero(), || {
                format!("stage {i} is {s:?}, expected Y = 2^{i} Z and trivial K")
            })?;
        }
        Ok(())
    });
    rec.run("omega-stage-is-torus-with-split-certificate", "example-stages", || {
        let r = report.clone()?;
        let z = r.z_omega().expect("terminated");
        ensure(z.y.is_trivial() && z.k.is_trivial(), || format!("Z_omega is {z:?}"))?;
        let first = r.limits.first().ok_or_else(|| Outcome::Fail("no limit stage".into()))?;
        ensure(matches!(first.outcome, ChainLimitOutcome::UnitFactorSplit { .. }), || {
            format!("limit stage {} certified by {:?}", first.index, first.outcome)
        })
    });
    rec.run("terminal-is-omega-plus-one", "example-stages", || {
        let r = report.clone()?;
        ensure(r.terminal() == OrdinalIndex::new(1, 1) && hypercenter_of(&r).is_whole(), || {
            format!("series ends at {} with {:?}", r.terminal(), hypercenter_of(&r))
        })
    });
    stage_shift_check(rec, &report, OrdinalIndex::new(1, 0), 3);
    rec.run("group-is-not-nilpotent", "example-disconnected", || {
        match model.nilpotency_class(&opts) {
            Err(ModelError::NotNilpotent) => Ok(()),
            Ok(c) => Err(Outcome::Fail(format!("reported nilpotent of class {c}"))),
            Err(e) => Err(e.into()),
        }
    });
    rec.run("nilpotent-normal-quotients-have-center", "example-disconnected", || {
        let r = report.clone()?;
        let mut family: Vec<StdSubgroup> = (1..=10).map(|i| stage_or_last(&r, OrdinalIndex::finite(i)).clone()).collect();
        family.push(r.z_omega().expect("terminated").clone());
        for n in family {
            ensure(model.is_nilpotent_sub(&n, &opts)?, || format!("{n:?} is not nilpotent"))?;
            let (qm, _) = model.quotient(&n)?;
            let z = qm.center()?;
            ensure(!z.is_trivial(), || format!("G/N has trivial center for N = {n:?}"))?;
        }
        Ok(())
    });
    rec.run("unipotence-fails-over-first-stage", "example-disconnected", || {
        let r = report.clone()?;
        let s1 = r.stage(OrdinalIndex::finite(1)).expect("stage 1");
        let z = s1.quotient.z_omega(&opts)?;
        ensure(!s1.quotient.is_unipotent_subgroup(&z), || {
            format!("Z_omega(G/Z_1) = {z:?} is unipotent")
        })
    });
    rec.run("omega-quotient-top-stage", "example-disconnected", || {
        let r = report.clone()?;
        let s = r.stage(OrdinalIndex::new(1, 0)).expect("omega stage");
        let z = s.quotient.z_omega(&opts)?;
        let order = s.quotient.sub_model(&z)?.finite_order();
        ensure(z.k.order() == 2 && z.y.is_whole() && z.m.is_zero(), || {
            format!("Z_omega(G/Z_omega) is {z:?} (order {order:?})")
        })?;
        let unipotent = s.quotient.is_unipotent_subgroup(&z);
        ensure(unipotent == (p == 2), || {
            format!("unipotent = {unipotent} in characteristic {p}")
        })
    });
}

fn mu_chain_checks(rec: &mut Recorder, ell: u64, p: u64) {
    let model = mu_chain(ell, p);
    let report = terminated(&model, &UcsOptions::default());
    series_checks(rec, &model, &report);
    rec.run("finite-stage-orders", "ucs-step", || {
        let r = report.clone()?;
        for i in 1..=5u32 {
            let s = stage_or_last(&r, OrdinalIndex::finite(i as u64));
            let n = index_of(&s.y);
            ensure(n == Some(BigInt::from(ell).pow(i)) && s.k.is_trivial(), || {
                format!("stage {i} has D-part order {n:?} and K {:?}", s.k)
            })?;
        }
        let z = r.z_omega().expect("terminated");
        ensure(z.y.is_trivial() && r.terminal() == OrdinalIndex::new(1, 1), || {
            format!("Z_omega {z:?}, terminal {}", r.terminal())
        })
    });
    stage_shift_check(rec, &report, OrdinalIndex::new(1, 0), 3);
    stage_shift_check(rec, &report, OrdinalIndex::finite(1), 2);
    let a = model.action_x_minus_id(1);
    let initial = torus_part(&model, a.image(&SubgroupOfFgA::whole(model.x().clone())).expect("endomorphism"));
    let step = StepOperator::new(SubgroupOfFgA::trivial(model.x().clone()), vec![a]);
    chain_union_checks(rec, &model, SubgroupChain::Generated { initial, step });
}

/// The chain `(M, Y_i, K)` with `Y_{i+1} = step(Y_i)`, first few terms.
fn chain_terms(chain: &SubgroupChain, n: usize) -> Vec<StdSubgroup> {
    match chain {
        SubgroupChain::Explicit(t) => t.clone(),
        SubgroupChain::Generated { initial, step } => {
            let mut out = vec![initial.clone()];
            while out.len() < n {
                let last = out.last().expect("nonempty");
                out.push(StdSubgroup::new(last.m.clone(), step.apply(&last.y), last.k.clone()));
            }
            out
        }
    }
}

const CHAIN_TERMS: usize = 5;
const CHAIN_DEPTH: usize = 32;

fn chain_union_checks(rec: &mut Recorder, model: &AlgGroupModel, chain: SubgroupChain) {
    let opts = UcsOptions::default();
    let terms = chain_terms(&chain, CHAIN_TERMS);
    let union = model.chain_union(&chain, CHAIN_DEPTH);
    rec.run("union-class-at-most-term-class", "chain-union-class", || {
        let u = union.clone()?;
        let mut c = 0;
        for t in &terms {
            ensure(t.is_contained_in(&u), || format!("term {t:?} is not in the union {u:?}"))?;
            c = c.max(model.nilpotency_class_sub(t, &opts)?);
        }
        ensure(c <= 3, || format!("term class {c} is outside the tested range"))?;
        let cu = model.nilpotency_class_sub(&u, &opts)?;
        ensure(cu <= c, || format!("union {u:?} has class {cu}, terms have class at most {c}"))
    });
    let commutative_terms = terms
        .iter()
        .all(|t| model.sub_model(t).is_ok_and(|m| m.is_commutative()));
    if commutative_terms {
        rec.run("union-of-commutative-is-commutative", "chain-union-commutative", || {
            let u = union.clone()?;
            let sub = model.sub_model(&u)?;
            ensure(sub.is_commutative(), || format!("union {u:?} is not commutative"))
        });
    }
}

fn weight_zero_part(lie: &GradedNilLie) -> Subspace {
    lie.weight_classes()
        .into_iter()
        .find(|(w, _)| w.iter().all(|x| *x == BigInt::from(0)))
        .map_or_else(|| Subspace::zero(lie.dim()), |(_, idx)| lie.weight_space(&idx))
}

fn doubling_chain(model: &AlgGroupModel, m: Subspace) -> SubgroupChain {
    let x = model.x().clone();
    let n = x.ngens();
    let two = IntMatrix::diagonal(&vec![BigInt::from(2); n]);
    let double = LatticeHom::endo(x.clone(), two).expect("scalar map");
    let initial = StdSubgroup::new(
        m,
        double.image(&SubgroupOfFgA::whole(x.clone())).expect("endomorphism"),
        model.f().trivial(),
    );
    SubgroupChain::Generated {
        initial,
        step: StepOperator::new(SubgroupOfFgA::trivial(x), vec![double]),
    }
}

fn filiform_zero_weights() -> AlgGroupModel {
    let lie = GradedNilLie::from_brackets(
        vec![ivec(&[0]); 4],
        &[(0, 1, 2, q(1)), (0, 2, 3, q(1))],
    )
    .expect("filiform brackets");
    AlgGroupModel::connected(0, FgAbelian::free(1), lie)
}

fn chain_union_case(suite: &str, i: usize, seed: u64, out: &mut Vec<CheckResult>) {
    match i % 4 {
        0 => {
            let (model, _) = heisenberg_torus([0, 0, 0]);
            let mut rec = Recorder::new(suite, "heisenberg_torus(0,0,0) doubling chain", out);
            let m = Subspace::full(model.dim_l());
            chain_union_checks(&mut rec, &model, doubling_chain(&model, m));
        }
        1 => {
            let model = filiform_zero_weights();
            let mut rec = Recorder::new(suite, "filiform4 doubling chain", out);
            let m = Subspace::full(model.dim_l());
            chain_union_checks(&mut rec, &model, doubling_chain(&model, m));
        }
        2 => {
            let model = mu_chain(3, 0);
            let mut rec = Recorder::new(suite, "mu_chain(l=3,p=0) stage chain", out);
            let report = model.ucs(&UcsOptions::default());
            let terms: Vec<StdSubgroup> = match report {
                Ok(r) => r.stages.iter().take(8).map(|s| s.subgroup.clone()).collect(),
                Err(_) => vec![StdSubgroup::trivial(&model)],
            };
            chain_union_checks(&mut rec, &model, SubgroupChain::Explicit(terms));
        }
        _ => {
            let model = random_connected(seed);
            let spec = InstanceSpec::RandomModel { seed, kind: RandomModelKind::Connected };
            let mut rec = Recorder::new(suite, format!("{spec} weight-zero doubling chain"), out);
            let m = weight_zero_part(model.lie());
            chain_union_checks(&mut rec, &model, doubling_chain(&model, m));
        }
    }
}

fn connected_checks(rec: &mut Recorder, model: &AlgGroupModel) {
    let opts = UcsOptions::default();
    let report = terminated(model, &opts);
    series_checks(rec, model, &report);
    rec.run("hypercenter-nilpotent-normal", "hypercenter-nilpotent", || {
        let r = report.clone()?;
        let h = hypercenter_of(&r);
        ensure(model.is_normal_subgroup(h), || format!("{h:?} is not normal"))?;
        let c = model.nilpotency_class_sub(h, &opts);
        ensure(c.is_ok(), || format!("Z_inf = {h:?} has no finite class: {c:?}"))
    });
    rec.run("z-omega-nilpotent-normal", "z-omega-nilpotent-normal", || {
        let r = report.clone()?;
        let z = r.z_omega().expect("terminated");
        ensure(model.is_normal_subgroup(z), || format!("{z:?} is not normal"))?;
        ensure(model.is_nilpotent_sub(z, &opts)?, || format!("Z_omega = {z:?} is not nilpotent"))
    });
    unipotence_checks(rec, model, &report);
    rec.run("fitting-contains-nilpotent-normals", "fitting-largest", || {
        let r = report.clone()?;
        let fit = model.fitting(&opts)?;
        ensure(model.is_normal_subgroup(&fit), || format!("fitting {fit:?} is not normal"))?;
        ensure(model.is_nilpotent_sub(&fit, &opts)?, || format!("fitting {fit:?} is not nilpotent"))?;
        for n in candidate_family(model, &r) {
            if model.is_normal_subgroup(&n) && model.is_nilpotent_sub(&n, &opts)? {
                ensure(n.is_contained_in(&fit), || format!("nilpotent normal {n:?} not in fitting {fit:?}"))?;
            }
        }
        Ok(())
    });
    rec.run("fitting-mod-center-is-unipotent", "fitting-construction", || {
        let fit = model.fitting(&opts)?;
        let z = model.center()?;
        let (qm, proj) = model.quotient(&z)?;
        let image = proj.image(&fit);
        ensure(qm.is_unipotent_subgroup(&image) && qm.is_normal_subgroup(&image), || {
            format!("image of fitting in G/Z is {image:?}")
        })?;
        ensure(model.rad_u()?.is_contained_in(&fit) && z.is_contained_in(&fit), || {
            format!("fitting {fit:?} misses U or the center")
        })
    });
    rec.run("mult-type-normals-in-center-s", "center-s-contains-mult-normal", || {
        let r = report.clone()?;
        let cs = model.center_s()?;
        ensure(model.is_mult_type_subgroup(&cs), || format!("Z_s = {cs:?} is not of multiplicative type"))?;
        for n in candidate_family(model, &r) {
            let t = torus_part(model, n.y.clone());
            if model.is_normal_subgroup(&t) && model.is_mult_type_subgroup(&t) {
                ensure(t.is_contained_in(&cs), || format!("{t:?} is not in Z_s = {cs:?}"))?;
            }
        }
        Ok(())
    });
    rec.run("quotient-by-center-maps-hypercenter", "hypercenter-functorial", || {
        let r = report.clone()?;
        let h = hypercenter_of(&r);
        let Some(s1) = r.stage(OrdinalIndex::finite(1)) else {
            return ensure(h.is_trivial(), || "missing first stage".into());
        };
        let qh = s1.quotient.hypercenter(&opts)?;
        let image = s1.projection.image(h);
        ensure(image == qh, || format!("f(Z_inf) = {image:?}, Z_inf(G/Z) = {qh:?}"))
    });
}

/// Standard subgroups built from the series: each stage, `U`, the center
/// parts, their torus parts and a few enlarged torus parts.
fn candidate_family(model: &AlgGroupModel, r: &CentralSeriesReport) -> Vec<StdSubgroup> {
    let mut out: Vec<StdSubgroup> = r.stages.iter().map(|s| s.subgroup.clone()).collect();
    if let Ok(u) = model.rad_u() {
        out.push(u);
    }
    if let Ok(cs) = model.center_s() {
        out.push(cs);
    }
    let x = model.x().clone();
    let n = x.ngens();
    for s in r.stages.clone() {
        for k in [2i64, 3] {
            let mut gens: Vec<Vec<BigInt>> = s.subgroup.y.generators().to_vec();
            gens.extend((0..n).map(|i| x.scale(&BigInt::from(k), &x.basis_element(i))));
            out.push(torus_part(model, SubgroupOfFgA::new(x.clone(), gens)));
        }
        out.push(torus_part(model, s.subgroup.y.clone()));
    }
    out
}

fn unipotence_checks(rec: &mut Recorder, model: &AlgGroupModel, report: &Result<CentralSeriesReport, Outcome>) {
    let opts = UcsOptions::default();
    rec.run("z-omega-over-finite-stages-unipotent", "unipotent-over-finite-stage", || {
        let r = report.clone()?;
        for s in r.stages.iter().filter(|s| s.index.omega == 0 && s.index.finite >= 1).take(4) {
            let z = s.quotient.z_omega(&opts)?;
            ensure(s.quotient.is_unipotent_subgroup(&z), || {
                format!("Z_omega(G/Z_{}) = {z:?} is not unipotent", s.index)
            })?;
        }
        Ok(())
    });
    rec.run("z-omega-over-center-s-unipotent", "unipotent-over-center-s", || {
        let cs = model.center_s()?;
        let (qm, _) = model.quotient(&cs)?;
        let z = qm.z_omega(&opts)?;
        ensure(qm.is_unipotent_subgroup(&z), || format!("Z_omega(G/Z_s) = {z:?} is not unipotent"))
    });
}

fn bridge_checks(rec: &mut Recorder, model: &AlgGroupModel) {
    let opts = UcsOptions::default();
    let report = terminated(model, &opts);
    series_checks(rec, model, &report);
    let bridge = match model.to_finite() {
        Ok(b) => b,
        Err(e) => {
            rec.run("bridge", "ucs-step", || Err(Outcome::Fail(e.to_string())));
            return;
        }
    };
    let g = &bridge.group;
    rec.run("center-matches-oracle", "ucs-step", || {
        let z = model.center()?;
        let mapped = bridge.subgroup_to_finite(&z);
        let oracle = g.center();
        ensure(mapped == oracle, || format!("model center {mapped:?}, oracle {oracle:?}"))
    });
    rec.run("ucs-matches-oracle", "ucs-step", || {
        let r = report.clone()?;
        let oracle = g.ucs();
        ensure(r.terminal() == OrdinalIndex::finite(oracle.len() as u64 - 1), || {
            format!("model series ends at {}, oracle after {} steps", r.terminal(), oracle.len() - 1)
        })?;
        for (i, o) in oracle.iter().enumerate() {
            let mapped = bridge.subgroup_to_finite(stage_or_last(&r, OrdinalIndex::finite(i as u64)));
            ensure(&mapped == o, || format!("stage {i}: model {mapped:?}, oracle {o:?}"))?;
        }
        Ok(())
    });
    rec.run("hypercenter-matches-oracle", "hypercenter-last-stage", || {
        let h = model.hypercenter(&opts)?;
        let mapped = bridge.subgroup_to_finite(&h);
        let oracle = g.hypercenter();
        ensure(mapped == oracle, || format!("model {mapped:?}, oracle {oracle:?}"))
    });
    rec.run("fitting-matches-oracle", "fitting-largest", || {
        let fit = model.fitting(&opts)?;
        let mapped = bridge.subgroup_to_finite(&fit);
        let oracle = g.fitting();
        ensure(mapped == oracle, || format!("model {mapped:?}, oracle {oracle:?}"))?;
        for n in g.nilpotent_normal_subgroups() {
            ensure(n.is_subgroup_of(&oracle), || format!("nilpotent normal {n:?} not in {oracle:?}"))?;
        }
        Ok(())
    });
}

const FUNCTORIAL_QUOTIENTS: usize = 4;

fn finite_checks(rec: &mut Recorder, g: &FiniteGroup) {
    rec.run("hypercenter-equals-intersection", "hypercenter-intersection", || {
        let a = g.hypercenter();
        let b = g.hypercenter_by_intersection();
        ensure(a == b, || format!("order {}: series gives {a:?}, intersection gives {b:?}", g.order()))
    });
    rec.run("hypercentral-quotients-map-hypercenter", "hypercenter-functorial", || {
        let h = g.hypercenter();
        let kernels: Vec<SubgroupOfFinite> = g
            .normal_subgroups()
            .into_iter()
            .filter(|n| n.is_subgroup_of(&h))
            .take(FUNCTORIAL_QUOTIENTS)
            .collect();
        for n in kernels {
            let (qg, proj) = g.quotient(&n).map_err(|e| Outcome::Fail(e.to_string()))?;
            let image = FiniteGroup::image(&proj, &h, qg.order());
            let qh = qg.hypercenter();
            ensure(image == qh, || format!("kernel {n:?}: f(Z_inf) = {image:?}, Z_inf of quotient {qh:?}"))?;
        }
        Ok(())
    });
}

fn class_bound_check(rec: &mut Recorder, model: &AlgGroupModel, r: &MatrixRealization) {
    rec.run("nilpotent-subgroups-within-class-bound", "class-bound", || {
        let problems = model.check_realization(r);
        ensure(problems.is_empty(), || format!("realization rejected: {}", problems.join("; ")))?;
        let opts = UcsOptions::default();
        let report = terminated(model, &opts)?;
        let mut subs = vec![StdSubgroup::whole(model), hypercenter_of(&report).clone()];
        subs.push(report.z_omega().expect("terminated").clone());
        subs.push(model.fitting(&opts)?);
        let bound = r.class_bound();
        let mut nilpotent = 0;
        for s in subs {
            match model.nilpotency_class_sub(&s, &opts) {
                Ok(c) => {
                    nilpotent += 1;
                    ensure(c <= bound, || format!("{s:?} has class {c} > {bound}"))?;
                }
                Err(ModelError::NotNilpotent) => {}
                Err(e) => return Err(e.into()),
            }
        }
        ensure(nilpotent > 0, || "no nilpotent subgroup to test".into())
    });
}

fn fixture_checks(suite: &str, out: &mut Vec<CheckResult>) {
    let opts = UcsOptions::default();
    let mut lambdas: Vec<Option<OrdinalIndex>> = Vec::new();

    let e = example1(3);
    {
        let mut rec = Recorder::new(suite, InstanceSpec::Example1 { p: 3 }, out);
        let report = terminated(&e, &opts);
        lambdas.push(report.as_ref().ok().map(CentralSeriesReport::terminal));
        series_checks(&mut rec, &e, &report);
        rec.run("disconnected-fails-unipotence-over-first-stage", "example-disconnected", || {
            let r = report.clone()?;
            let s1 = r.stage(OrdinalIndex::finite(1)).expect("stage 1");
            let z = s1.quotient.z_omega(&opts)?;
            ensure(!s1.quotient.is_unipotent_subgroup(&z), || "Z_omega(G/Z_1) is unexpectedly unipotent".into())
        });
        rec.run("fitting-rejected", "fitting-construction", || match e.fitting(&opts) {
            Err(ModelError::NotConnected) => Ok(()),
            other => Err(Outcome::Fail(format!("fitting returned {other:?}"))),
        });
    }

    let connected: Vec<(String, AlgGroupModel, MatrixRealization)> = vec![
        {
            let (m, r) = heisenberg_torus([0, 0, 0]);
            (InstanceSpec::HeisenbergTorus { weights: [0, 0, 0] }.to_string(), m, r)
        },
        {
            let (m, r) = heisenberg_torus([1, -1, 0]);
            (InstanceSpec::HeisenbergTorus { weights: [1, -1, 0] }.to_string(), m, r)
        },
        {
            let (m, r) = ga_gm();
            (InstanceSpec::GaGm.to_string(), m, r)
        },
    ];
    for (name, model, real) in &connected {
        let mut rec = Recorder::new(suite, name, out);
        let report = terminated(model, &opts);
        lambdas.push(report.as_ref().ok().map(CentralSeriesReport::terminal));
        series_checks(&mut rec, model, &report);
        unipotence_checks(&mut rec, model, &report);
        class_bound_check(&mut rec, model, real);
    }

    let d = dihedral_dual(3);
    {
        let mut rec = Recorder::new(suite, InstanceSpec::DihedralDual { n: 3 }, out);
        let report = terminated(&d, &opts);
        lambdas.push(report.as_ref().ok().map(CentralSeriesReport::terminal));
        series_checks(&mut rec, &d, &report);
        rec.run("bridge-order-and-class", "ucs-step", || {
            let g = d.to_finite()?.group;
            let c = d.nilpotency_class(&opts)?;
            ensure(g.order() == 16 && g.nilpotency_class() == Some(c) && c == 3, || {
                format!("order {}, model class {c}, oracle class {:?}", g.order(), g.nilpotency_class())
            })
        });
    }

    let mut rec = Recorder::new(suite, "fixture corpus", out);
    rec.run("corpus-has-transfinite-and-finite-lengths", "ordinal-bound", || {
        let transfinite = lambdas.iter().flatten().any(|l| l.omega >= 1);
        let finite = lambdas.iter().flatten().any(|l| l.omega == 0 && l.finite >= 2);
        ensure(transfinite && finite, || format!("terminal ordinals {lambdas:?}"))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert_eq!(run_suite("nope", 0, 1), Err(VerifyError::UnknownSuite("nope".into())));
    }

    #[test]
    fn fixtures_pass_without_skips() {
        let results = run_suite("fixtures", 0, 0).unwrap();
        for r in &results {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn example1_suite_passes() {
        let results = run_suite("example1", 0, 2).unwrap();
        for r in &results {
            assert!(r.passed(), "{r:?}");
        }
    }
}
