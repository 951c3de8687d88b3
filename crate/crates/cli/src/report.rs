//! Serializable results of a CLI operation.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use hypercenter::agmodel::{CentralSeriesReport, SeriesStatus};
use hypercenter::verify::{tally, CheckResult};
use hypercenter::zlattice::ChainLimitOutcome;
use hypercenter::{AlgGroupModel, MatrixRealization, StdSubgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub operation: String,
    pub status: String,
    pub result: Payload,
    pub timing_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Validation(ModelSummary),
    Subgroup(SubgroupSummary),
    Series(SeriesSummary),
    NilClass {
        class: Option<usize>,
        /// Bound from the matrix realization, when one was given.
        bound: Option<usize>,
    },
    Verify(VerifySummary),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub char_p: u64,
    pub lattice: String,
    pub f_order: usize,
    pub lie_dim: usize,
    pub connected: bool,
    pub commutative: bool,
    pub finite_bridgeable: bool,
    pub realization_dim: Option<usize>,
}

impl ModelSummary {
    pub fn of(model: &AlgGroupModel, realization: Option<&MatrixRealization>) -> Self {
        ModelSummary {
            char_p: model.char_p(),
            lattice: model.x().to_string(),
            f_order: model.f().order(),
            lie_dim: model.dim_l(),
            connected: model.is_connected(),
            commutative: model.is_commutative(),
            finite_bridgeable: model.is_finite_bridgeable(),
            realization_dim: realization.map(|r| r.dim),
        }
    }
}

/// `U_M ⋊ D(X/Y) ⋊ K` with exact entries written as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub m_basis: Vec<Vec<String>>,
    pub y_generators: Vec<Vec<String>>,
    pub k_elements: Vec<String>,
    pub description: String,
}

impl SubgroupSummary {
    pub fn of(model: &AlgGroupModel, s: &StdSubgroup) -> Self {
        let m_basis = s
            .m
            .basis()
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        let y_generators = s
            .y
            .canonical_basis()
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        let k_elements = s.k.elements().iter().map(|&g| model.f().name(g)).collect();
        let description = format!(
            "dim M = {}, X/Y = {}, |K| = {}",
            s.m.rank(),
            s.y.quotient().group(),
            s.k.order()
        );
        SubgroupSummary {
            m_basis,
            y_generators,
            k_elements,
            description,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSummary {
    pub index: String,
    pub subgroup: SubgroupSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitSummary {
    pub index: String,
    pub method: String,
    pub depth: Option<usize>,
    pub char_poly_factors: Vec<String>,
    pub unit_factors: Vec<String>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSummary {
    pub stages: Vec<StageSummary>,
    pub limits: Vec<LimitSummary>,
    pub terminal: String,
    pub terminated: bool,
}

fn factor_list(factors: &[(hypercenter::zlattice::poly::ZPoly, usize)]) -> Vec<String> {
    factors
        .iter()
        .map(|(p, e)| if *e == 1 { format!("({p})") } else { format!("({p})^{e}") })
        .collect()
}

impl SeriesSummary {
    pub fn of(model: &AlgGroupModel, report: &CentralSeriesReport) -> Self {
        // Stage subgroups are taken in `model`; quotients only matter for limits.
        let stages = report
            .stages
            .iter()
            .map(|s| StageSummary {
                index: s.index.to_string(),
                subgroup: SubgroupSummary::of(model, &s.subgroup),
            })
            .collect();
        let limits = report
            .limits
            .iter()
            .map(|l| {
                let index = l.index.to_string();
                match &l.outcome {
                    ChainLimitOutcome::FixedPoint { depth, .. } => LimitSummary {
                        index,
                        method: "fixed-point".into(),
                        depth: Some(*depth),
                        char_poly_factors: Vec::new(),
                        unit_factors: Vec::new(),
                        reason: None,
                    },
                    ChainLimitOutcome::UnitFactorSplit { certificate, .. } => LimitSummary {
                        index,
                        method: "unit-factor-split".into(),
                        depth: Some(certificate.split_depth),
                        char_poly_factors: factor_list(&certificate.char_poly_factors),
                        unit_factors: factor_list(&certificate.unit_factors),
                        reason: None,
                    },
                    ChainLimitOutcome::Undetermined { depth, reason, .. } => LimitSummary {
                        index,
                        method: "undetermined".into(),
                        depth: Some(*depth),
                        char_poly_factors: Vec::new(),
                        unit_factors: Vec::new(),
                        reason: Some(reason.clone()),
                    },
                }
            })
            .collect();
        SeriesSummary {
            stages,
            limits,
            terminal: report.terminal().to_string(),
            terminated: report.is_terminated(),
        }
    }
}

pub fn series_status(status: &SeriesStatus) -> String {
    match status {
        SeriesStatus::Terminated => "ok".into(),
        SeriesStatus::MixedCenterUnsupported { at, .. } => format!("mixed-center-unsupported at {at}"),
        SeriesStatus::UndeterminedLimit { at, .. } => format!("undetermined-limit at {at}"),
        SeriesStatus::Cancelled { at } => format!("cancelled at {at}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub suite: String,
    pub check: String,
    pub claim: String,
    pub instance: String,
    pub verdict: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub results: Vec<CheckSummary>,
}

impl VerifySummary {
    pub fn of(suite: &str, seed: u64, count: usize, results: &[CheckResult]) -> Self {
        let t = tally(results);
        VerifySummary {
            suite: suite.to_string(),
            seed,
            count,
            pass: t.pass,
            fail: t.fail,
            skip: t.skip,
            results: results
                .iter()
                .map(|r| CheckSummary {
                    suite: r.suite.clone(),
                    check: r.check.clone(),
                    claim: r.claim.to_string(),
                    instance: r.instance.clone(),
                    verdict: r.verdict.to_string(),
                    witness: r.witness.clone(),
                })
                .collect(),
        }
    }
}

fn write_subgroup(out: &mut String, indent: &str, s: &SubgroupSummary) {
    let _ = writeln!(out, "{indent}{}", s.description);
    if !s.m_basis.is_empty() {
        let rows: Vec<String> = s.m_basis.iter().map(|r| format!("[{}]", r.join(", "))).collect();
        let _ = writeln!(out, "{indent}  M basis: {}", rows.join(" "));
    }
    if !s.y_generators.is_empty() {
        let rows: Vec<String> = s.y_generators.iter().map(|r| format!("[{}]", r.join(", "))).collect();
        let _ = writeln!(out, "{indent}  Y generators: {}", rows.join(" "));
    }
    let _ = writeln!(out, "{indent}  K: {{{}}}", s.k_elements.join(", "));
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {} ({} us)", self.operation, self.status, self.timing_us);
        match &self.result {
            Payload::Validation(m) => {
                let _ = writeln!(out, "  characteristic {}", m.char_p);
                let _ = writeln!(out, "  X = {}, |F| = {}, dim L = {}", m.lattice, m.f_order, m.lie_dim);
                let _ = writeln!(
                    out,
                    "  connected: {}, commutative: {}, finite constant: {}",
                    m.connected, m.commutative, m.finite_bridgeable
                );
                if let Some(d) = m.realization_dim {
                    let _ = writeln!(out, "  realization in GL_{d}");
                }
            }
            Payload::Subgroup(s) => write_subgroup(&mut out, "  ", s),
            Payload::Series(s) => {
                for stage in &s.stages {
                    let _ = writeln!(out, "  Z_{}:", stage.index);
                    write_subgroup(&mut out, "    ", &stage.subgroup);
                }
                for l in &s.limits {
                    let _ = write!(out, "  limit at {}: {}", l.index, l.method);
                    if let Some(d) = l.depth {
                        let _ = write!(out, ", depth {d}");
                    }
                    if !l.unit_factors.is_empty() {
                        let _ = write!(out, ", unit factors {}", l.unit_factors.join(" "));
                    }
                    if let Some(r) = &l.reason {
                        let _ = write!(out, ", {r}");
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "  terminal: {}", s.terminal);
            }
            Payload::NilClass { class, bound } => {
                match class {
                    Some(c) => {
                        let _ = writeln!(out, "  class {c}");
                    }
                    None => {
                        let _ = writeln!(out, "  not nilpotent");
                    }
                }
                if let Some(b) = bound {
                    let _ = writeln!(out, "  realization bound {b}");
                }
            }
            Payload::Verify(v) => {
                let _ = writeln!(
                    out,
                    "  suite {} seed {} count {}: {} pass, {} fail, {} skip",
                    v.suite, v.seed, v.count, v.pass, v.fail, v.skip
                );
                for r in v.results.iter().filter(|r| r.verdict != "pass") {
                    let _ = write!(out, "  {} [{}] {} on {}", r.verdict, r.claim, r.check, r.instance);
                    if let Some(w) = &r.witness {
                        let _ = write!(out, ": {w}");
                    }
                    out.push('\n');
                }
            }
        }
        f.write_str(out.trim_end())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypercenter::verify::example1;
    use hypercenter::UcsOptions;

    #[test]
    fn series_report_round_trips_through_json() {
        let g = example1(3);
        let series = g.ucs(&UcsOptions::default()).unwrap();
        let report = Report {
            operation: "ucs".into(),
            status: series_status(&series.status),
            result: Payload::Series(SeriesSummary::of(&g, &series)),
            timing_us: 12,
        };
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), report);
        let Payload::Series(s) = &report.result else { unreachable!() };
        assert_eq!(s.terminal, "omega*1+1");
        assert_eq!(s.limits[0].method, "unit-factor-split");
        assert!(report.to_string().contains("terminal: omega*1+1"));
    }

    #[test]
    fn subgroup_description() {
        let g = example1(3);
        let z = g.center().unwrap();
        let s = SubgroupSummary::of(&g, &z);
        assert_eq!(s.k_elements.len(), 1);
        assert_eq!(s.y_generators, vec![vec!["2"]]);
        assert!(s.description.starts_with("dim M = 0"), "{}", s.description);
    }
}
