//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero when any
//! criterion fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use hypercenter::finitegrp::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, klein_four, quaternion, symmetric,
};
use hypercenter::verify::{
    generate, instance_seeds, mu_chain, random_connected, run_suite, tally, CheckResult, Instance, InstanceSpec,
    RandomModelKind,
};
use hypercenter::zlattice::{ChainLimitOutcome, GroupIndex};
use hypercenter::{AlgGroupModel, FiniteGroup, ModelError, OrdinalIndex, StdSubgroup, UcsOptions};
use hypercenter_cli::instance::{load, Instance as Loaded};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn fixture(name: &str) -> Loaded {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    load(&path).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn model_err(e: ModelError) -> String {
    e.to_string()
}

fn d_index(s: &StdSubgroup) -> Option<BigInt> {
    match s.y.index() {
        GroupIndex::Finite(n) => Some(n),
        GroupIndex::Infinite => None,
    }
}

/// Suite results must be nonempty with no failures or skips, and contain
/// each named check at least `per_check` times.
fn clean(results: &[CheckResult], required: &[&str], per_check: usize) -> Result<String, String> {
    let t = tally(results);
    if let Some(bad) = results.iter().find(|r| !r.passed()) {
        return Err(format!(
            "{} fail, {} skip; first: {} on {}: {} {}",
            t.fail,
            t.skip,
            bad.check,
            bad.instance,
            bad.verdict,
            bad.witness.clone().unwrap_or_default()
        ));
    }
    for name in required {
        let n = results.iter().filter(|r| r.check == *name).count();
        ensure(n >= per_check, || format!("check {name} ran {n} times, expected {per_check}"))?;
    }
    ensure(t.pass > 0, || "no checks ran".into())?;
    Ok(format!("{} checks passed", t.pass))
}

fn criterion_1() -> Check {
    let g = fixture("example1.toml").model;
    ensure(g.char_p() == 3, || "fixture is not in characteristic 3".into())?;
    let opts = UcsOptions::default();
    let r = g.ucs(&opts).map_err(model_err)?;
    ensure(r.is_terminated(), || format!("series status {:?}", r.status))?;
    for i in 1..=10u64 {
        let s = &r
            .stage(OrdinalIndex::finite(i))
            .ok_or_else(|| format!("missing stage {i}"))?
            .subgroup;
        let want = BigInt::from(2).pow(i as u32);
        ensure(
            s.m.is_zero() && s.k.is_trivial() && s.y.canonical_basis() == vec![vec![want.clone()]],
            || format!("Z_{i} is {s:?}, expected Y = {want}Z"),
        )?;
    }
    let omega = OrdinalIndex::new(1, 0);
    let z_omega = r.stage(omega).ok_or("missing omega stage")?;
    ensure(
        z_omega.subgroup.y.is_trivial() && z_omega.subgroup.k.is_trivial() && z_omega.subgroup.m.is_zero(),
        || format!("Z_omega is {:?}, expected the torus", z_omega.subgroup),
    )?;
    let limit = r.limits.iter().find(|l| l.index == omega).ok_or("no limit record at omega")?;
    ensure(matches!(limit.outcome, ChainLimitOutcome::UnitFactorSplit { .. }), || {
        "omega limit lacks a unit-factor certificate".into()
    })?;
    ensure(r.terminal() == omega.succ(), || format!("terminal {}", r.terminal()))?;
    ensure(matches!(g.nilpotency_class(&opts), Err(ModelError::NotNilpotent)), || {
        "G is reported nilpotent".into()
    })?;
    for (p, unipotent) in [(3, false), (2, true)] {
        let gp = g.with_char(p);
        let rp = gp.ucs(&opts).map_err(model_err)?;
        let q = &rp.stage(omega).ok_or("missing omega stage")?.quotient;
        let z = q.z_omega(&opts).map_err(model_err)?;
        ensure(z.m.is_zero(), || format!("Z_omega(G/Z_omega) has a unipotent part at p = {p}"))?;
        let order = d_index(&z).map(|n| n * z.k.order());
        ensure(order == Some(BigInt::from(2)), || {
            format!("Z_omega(G/Z_omega) has order {order:?} at p = {p}")
        })?;
        ensure(q.is_unipotent_subgroup(&z) == unipotent, || {
            format!("Z_omega(G/Z_omega) unipotence is not {unipotent} at p = {p}")
        })?;
    }
    Ok(format!("{} stages, terminal {}", r.stages.len(), r.terminal()))
}

fn criterion_2() -> Check {
    let results = run_suite("connected-main", 7, 25).map_err(|e| e.to_string())?;
    let instances = results
        .iter()
        .map(|r| r.instance.as_str())
        .collect::<std::collections::BTreeSet<_>>();
    ensure(instances.len() >= 25, || format!("only {} instances", instances.len()))?;
    for s in instance_seeds(7, 25) {
        let g = random_connected(s);
        ensure(g.x().rank() <= 3 && g.dim_l() <= 4, || format!("seed {s} is outside the size caps"))?;
    }
    clean(
        &results,
        &[
            "hypercenter-nilpotent-normal",
            "quotient-by-hypercenter-is-centerless",
            "hypercenter-is-last-normal-stage",
        ],
        25,
    )
}

fn criterion_3() -> Check {
    let results = run_suite("oracle-bridge", 7, 50).map_err(|e| e.to_string())?;
    for s in instance_seeds(7, 50) {
        let spec = InstanceSpec::RandomModel {
            seed: s,
            kind: RandomModelKind::Bridgeable,
        };
        let Ok(Instance::Model(g)) = generate(&spec) else {
            return Err(format!("{spec} did not generate a model"));
        };
        let order = g.finite_order();
        ensure(order.as_ref().is_some_and(|n| *n <= BigInt::from(128)), || {
            format!("{spec} has order {order:?}")
        })?;
        let bridge = g.to_finite().map_err(model_err)?;
        let fit = bridge.subgroup_to_finite(&g.fitting(&UcsOptions::default()).map_err(model_err)?);
        for n in bridge.group.nilpotent_normal_subgroups() {
            ensure(n.is_subgroup_of(&fit), || {
                format!("{spec}: nilpotent normal subgroup of order {} escapes the Fitting subgroup", n.order())
            })?;
        }
    }
    clean(
        &results,
        &[
            "center-matches-oracle",
            "ucs-matches-oracle",
            "hypercenter-matches-oracle",
            "fitting-matches-oracle",
        ],
        50,
    )
}

fn small_groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=64 {
        out.push((format!("C{n}"), cyclic(n)));
    }
    for n in 2..=32 {
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push(("S3".into(), symmetric(3)));
    out.push(("S4".into(), symmetric(4)));
    out.push(("A4".into(), alternating(4)));
    out.push(("Q8".into(), quaternion()));
    out.push(("V4".into(), klein_four()));
    out.push(("E8".into(), elementary_abelian(2, 3)));
    out.push(("E9".into(), elementary_abelian(3, 2)));
    out.push(("E16".into(), elementary_abelian(2, 4)));
    let s3 = symmetric(3);
    let q8 = quaternion();
    out.push(("S3xC2".into(), direct_product(&s3, &cyclic(2))));
    out.push(("S3xS3".into(), direct_product(&s3, &s3)));
    out.push(("Q8xC2".into(), direct_product(&q8, &cyclic(2))));
    out.push(("D4xC3".into(), direct_product(&dihedral(4), &cyclic(3))));
    out.push(("A4xC2".into(), direct_product(&alternating(4), &cyclic(2))));
    out.push(("D8xC4".into(), direct_product(&dihedral(8), &cyclic(4))));
    out.retain(|(_, g)| g.order() <= 64);
    out
}

fn criterion_4() -> Check {
    let results = run_suite("characterization", 3, 40).map_err(|e| e.to_string())?;
    let summary = clean(&results, &["hypercenter-equals-intersection"], 40)?;
    let groups = small_groups();
    for (name, g) in &groups {
        ensure(g.hypercenter() == g.hypercenter_by_intersection(), || {
            format!("{name}: hypercenter differs from the intersection")
        })?;
    }
    Ok(format!("{summary}; {} named groups agree", groups.len()))
}

fn criterion_5() -> Check {
    let mu = run_suite("mu-chain", 0, 10).map_err(|e| e.to_string())?;
    let mu_summary = clean(&mu, &["stage-shift-at-omega*1", "stage-shift-at-1"], 10)?;
    let ex = run_suite("example1", 0, 1).map_err(|e| e.to_string())?;
    clean(&ex, &["stage-shift-at-omega*1"], 1)?;
    let chains = run_suite("chain-union", 5, 12).map_err(|e| e.to_string())?;
    let chain_summary = clean(&chains, &["union-class-at-most-term-class"], 12)?;
    Ok(format!("mu-chain: {mu_summary}; chain-union: {chain_summary}"))
}

/// Every model whose series the acceptance run computes.
fn corpus() -> Vec<(String, AlgGroupModel)> {
    let mut out: Vec<(String, AlgGroupModel)> = ["example1", "heisenberg_torus", "dihedral_dual", "ga_gm"]
        .iter()
        .map(|n| (n.to_string(), fixture(&format!("{n}.toml")).model))
        .collect();
    for ell in [2u64, 3, 5, 7] {
        for p in [0u64, 2, 3, 5] {
            if p != ell {
                out.push((format!("mu_chain({ell},{p})"), mu_chain(ell, p)));
            }
        }
    }
    for s in instance_seeds(7, 25) {
        out.push((format!("random connected {s}"), random_connected(s)));
    }
    for s in instance_seeds(7, 50) {
        out.push((format!("random bridgeable {s}"), hypercenter::verify::random_bridgeable(s)));
    }
    out
}

fn criterion_6() -> Check {
    let opts = UcsOptions::default();
    let mut terminated = 0;
    for (name, g) in corpus() {
        let r = g.ucs(&opts).map_err(|e| format!("{name}: {e}"))?;
        if !r.is_terminated() {
            continue;
        }
        terminated += 1;
        let bound = g.x().rank() + g.dim_l() + 1;
        let lambda = r.terminal();
        ensure((lambda.omega as usize) <= bound && r.limits.len() <= bound, || {
            format!("{name}: terminal {lambda} with {} limit stages, bound {bound}", r.limits.len())
        })?;
    }
    let length = |name: &str| {
        fixture(name)
            .model
            .ucs(&opts)
            .map(|r| r.terminal())
            .map_err(model_err)
    };
    let e = length("example1.toml")?;
    let h = length("heisenberg_torus.toml")?;
    ensure(e.omega >= 1, || format!("example1 length {e} is finite"))?;
    ensure(h.omega == 0 && h.finite >= 2, || format!("heisenberg length {h}"))?;
    Ok(format!("{terminated} terminated series; example1 {e}, heisenberg {h}"))
}

/// `Z_ω(G/Z_i(G))` is unipotent for every finite stage `i ≥ 1`, and
/// `Z_ω(G/Z(G)_s)` is unipotent.
fn unipotence(g: &AlgGroupModel) -> Result<(bool, bool), String> {
    let opts = UcsOptions::default();
    let r = g.ucs(&opts).map_err(model_err)?;
    r.require_terminated().map_err(model_err)?;
    let mut first = true;
    for s in r.stages.iter().filter(|s| s.index.omega == 0 && s.index.finite >= 1) {
        let z = s.quotient.z_omega(&opts).map_err(model_err)?;
        first &= s.quotient.is_unipotent_subgroup(&z);
    }
    let zs = g.center_s().map_err(model_err)?;
    let (q, _) = g.quotient(&zs).map_err(model_err)?;
    let z = q.z_omega(&opts).map_err(model_err)?;
    Ok((first, q.is_unipotent_subgroup(&z)))
}

fn criterion_7() -> Check {
    let mut connected = 0;
    for (name, g) in corpus() {
        if !g.is_connected() {
            continue;
        }
        connected += 1;
        let (first, second) = unipotence(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(first, || format!("{name}: Z_omega(G/Z_i) is not unipotent"))?;
        ensure(second, || format!("{name}: Z_omega(G/Z_s) is not unipotent"))?;
    }
    let e = fixture("example1.toml").model;
    let (first, _) = unipotence(&e)?;
    ensure(!first, || "example1 satisfies the first unipotence statement".into())?;
    Ok(format!("{connected} connected instances; example1 fails as expected"))
}

fn criterion_8() -> Check {
    let opts = UcsOptions::default();
    let mut lines = Vec::new();
    for (name, d) in [("heisenberg_torus.toml", 3), ("ga_gm.toml", 2)] {
        let inst = fixture(name);
        let g = &inst.model;
        let r = inst.realization.as_ref().ok_or_else(|| format!("{name} has no realization"))?;
        ensure(r.dim == d, || format!("{name} realized in dimension {}", r.dim))?;
        let problems = g.check_realization(r);
        ensure(problems.is_empty(), || format!("{name}: {}", problems.join("; ")))?;
        let bound = d * (d - 1) / 2 + 1;
        let report = g.ucs(&opts).map_err(model_err)?;
        let candidates = [
            StdSubgroup::whole(g),
            report.hypercenter().ok_or("series did not terminate")?.clone(),
            g.fitting(&opts).map_err(model_err)?,
        ];
        let mut classes = Vec::new();
        for s in &candidates {
            match g.nilpotency_class_sub(s, &opts) {
                Ok(c) => {
                    ensure(c <= bound, || format!("{name}: class {c} exceeds {bound}"))?;
                    classes.push(c);
                }
                Err(ModelError::NotNilpotent) => {}
                Err(e) => return Err(format!("{name}: {e}")),
            }
        }
        ensure(!classes.is_empty(), || format!("{name}: no nilpotent subgroup"))?;
        lines.push(format!("{name} classes {classes:?} <= {bound}"));
    }
    Ok(lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("example reproduction", criterion_1, Duration::from_secs(1)),
        ("connected models", criterion_2, Duration::from_secs(30)),
        ("fitting and oracle bridge", criterion_3, Duration::from_secs(60)),
        ("intersection characterization", criterion_4, Duration::MAX),
        ("limit-stage algebra", criterion_5, Duration::MAX),
        ("ordinal bound", criterion_6, Duration::MAX),
        ("unipotence", criterion_7, Duration::MAX),
        ("class bound", criterion_8, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?} ({detail})")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({:.3}s): {detail}", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({:.3}s): {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
