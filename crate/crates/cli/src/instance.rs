//! Instance files: a model description in TOML or JSON.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use hypercenter::agmodel::{identity_qmat, GradedNilLie, QMat};
use hypercenter::finitegrp::{from_permutations, FiniteGroup, DEFAULT_ORDER_CAP};
use hypercenter::zlattice::IntMatrix;
use hypercenter::{AlgGroupModel, FgAbelian, MatrixRealization, ModelError};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
    #[error("{key}: {message}")]
    Invalid { key: String, message: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn invalid(key: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Invalid {
        key: key.into(),
        message: message.into(),
    }
}

/// An integer or a string such as `"-3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalValue {
    Int(i64),
    Text(String),
}

impl RationalValue {
    fn parse(&self, key: &str) -> Result<BigRational, InstanceError> {
        match self {
            RationalValue::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RationalValue::Text(s) => {
                let s = s.trim();
                let (num, den) = s.split_once('/').unwrap_or((s, "1"));
                let num: BigInt = num.trim().parse().map_err(|_| invalid(key, format!("bad rational {s:?}")))?;
                let den: BigInt = den.trim().parse().map_err(|_| invalid(key, format!("bad rational {s:?}")))?;
                if den == BigInt::from(0) {
                    return Err(invalid(key, "zero denominator"));
                }
                Ok(BigRational::new(num, den))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FiniteSpec {
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
    Permutations {
        permutations: Vec<Vec<usize>>,
        #[serde(default)]
        generator_names: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, usize, RationalValue)>,
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<RationalValue>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationSpec {
    pub dim: usize,
    pub torus: Vec<Vec<i64>>,
    pub lie: Vec<Vec<Vec<RationalValue>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(rename = "char", default)]
    pub char_p: u64,
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub finite: Option<FiniteSpec>,
    #[serde(default)]
    pub action_on_lattice: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default)]
    pub lie: Option<LieSpec>,
    #[serde(default)]
    pub realization: Option<RealizationSpec>,
}

/// A parsed and validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub model: AlgGroupModel,
    pub realization: Option<MatrixRealization>,
}

pub fn load(path: &Path) -> Result<Instance, InstanceError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InstanceError::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let file = if is_json {
        parse_json(&text)
    } else {
        parse_toml(&text)
    }
    .map_err(|message| InstanceError::Parse {
        path: display,
        message,
    })?;
    file.build()
}

pub fn parse_toml(text: &str) -> Result<InstanceFile, String> {
    toml::from_str(text).map_err(|e| e.to_string())
}

pub fn parse_json(text: &str) -> Result<InstanceFile, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

fn int_matrix(key: &str, rows: &[Vec<i64>], n: usize) -> Result<IntMatrix, InstanceError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(invalid(key, format!("expected a {n}x{n} integer matrix")));
    }
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Ok(IntMatrix::from_rows(n, &rows))
}

fn rational_matrix(key: &str, rows: &[Vec<RationalValue>], n: usize, m: usize) -> Result<QMat, InstanceError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != m) {
        return Err(invalid(key, format!("expected a {n}x{m} rational matrix")));
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, v)| v.parse(&format!("{key}[{i}][{j}]")))
                .collect()
        })
        .collect()
}

fn int_vector(key: &str, v: &[i64], n: usize) -> Result<Vec<BigInt>, InstanceError> {
    if v.len() != n {
        return Err(invalid(key, format!("expected {n} coordinates, found {}", v.len())));
    }
    Ok(v.iter().map(|&x| BigInt::from(x)).collect())
}

/// The finite group and the names by which generators may be referred to.
fn build_finite(spec: Option<&FiniteSpec>) -> Result<(FiniteGroup, BTreeMap<String, usize>), InstanceError> {
    let mut aliases = BTreeMap::new();
    let group = match spec {
        None => FiniteGroup::from_table(vec![vec![0]]).expect("trivial group").with_names(vec!["e".into()]),
        Some(FiniteSpec::Table { elements, table }) => {
            let index = |i: usize, j: usize, name: &str| {
                elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| invalid(format!("finite.table[{i}][{j}]"), format!("unknown element {name:?}")))
            };
            let mut rows = Vec::with_capacity(table.len());
            for (i, row) in table.iter().enumerate() {
                rows.push(
                    row.iter()
                        .enumerate()
                        .map(|(j, name)| index(i, j, name))
                        .collect::<Result<Vec<usize>, _>>()?,
                );
            }
            for (i, a) in elements.iter().enumerate() {
                if elements[..i].contains(a) {
                    return Err(invalid(format!("finite.elements[{i}]"), format!("duplicate element {a:?}")));
                }
            }
            FiniteGroup::from_table(rows)
                .map_err(|e| invalid("finite.table", e.to_string()))?
                .with_names(elements.clone())
        }
        Some(FiniteSpec::Permutations {
            permutations,
            generator_names,
        }) => {
            let (g, elems) = from_permutations(permutations, DEFAULT_ORDER_CAP)
                .map_err(|e| invalid("finite.permutations", e.to_string()))?;
            if let Some(names) = generator_names {
                if names.len() != permutations.len() {
                    return Err(invalid(
                        "finite.generator_names",
                        format!("{} names for {} permutations", names.len(), permutations.len()),
                    ));
                }
                for (name, p) in names.iter().zip(permutations) {
                    let idx = elems.iter().position(|e| e == p).expect("generator is an element");
                    aliases.insert(name.clone(), idx);
                }
            }
            g
        }
    };
    for i in 0..group.order() {
        aliases.entry(group.name(i)).or_insert(i);
    }
    Ok((group, aliases))
}

impl InstanceFile {
    pub fn build(&self) -> Result<Instance, InstanceError> {
        if self.char_p != 0 && !hypercenter::agmodel::is_prime(self.char_p) {
            return Err(invalid("char", format!("{} is neither 0 nor a prime", self.char_p)));
        }
        let x = FgAbelian::new(
            self.lattice.rank,
            self.lattice.torsion.iter().map(|&d| BigInt::from(d)).collect(),
        )
        .map_err(|e| invalid("lattice.torsion", e.to_string()))?;
        let n = x.ngens();
        let (f, aliases) = build_finite(self.finite.as_ref())?;

        let lie = match &self.lie {
            None => GradedNilLie::zero(),
            Some(spec) => {
                if spec.weights.len() != spec.dim {
                    return Err(invalid("lie.weights", format!("expected {} weights", spec.dim)));
                }
                let weights = spec
                    .weights
                    .iter()
                    .enumerate()
                    .map(|(i, w)| int_vector(&format!("lie.weights[{i}]"), w, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let brackets = spec
                    .brackets
                    .iter()
                    .enumerate()
                    .map(|(i, (a, b, c, v))| Ok((*a, *b, *c, v.parse(&format!("lie.brackets[{i}]"))?)))
                    .collect::<Result<Vec<_>, InstanceError>>()?;
                GradedNilLie::from_brackets(weights, &brackets).map_err(|e| invalid("lie.brackets", e))?
            }
        };
        let d = lie.dim();

        let lie_actions = self.lie.as_ref().map(|l| l.action.clone()).unwrap_or_default();
        let mut generators: BTreeMap<usize, (IntMatrix, QMat)> = BTreeMap::new();
        let lookup = |key: &str, name: &str| {
            aliases
                .get(name)
                .copied()
                .ok_or_else(|| invalid(key, format!("unknown element of F {name:?}")))
        };
        for (name, m) in &self.action_on_lattice {
            let key = format!("action_on_lattice.{name}");
            let g = lookup(&key, name)?;
            generators.insert(g, (int_matrix(&key, m, n)?, identity_qmat(d)));
        }
        for (name, m) in &lie_actions {
            let key = format!("lie.action.{name}");
            let g = lookup(&key, name)?;
            let b = rational_matrix(&key, m, d, d)?;
            generators.entry(g).or_insert_with(|| (IntMatrix::identity(n), identity_qmat(d))).1 = b;
        }
        // Elements of F outside the span of the listed ones act trivially.
        let mut listed: Vec<usize> = generators.keys().copied().collect();
        for g in f.greedy_generators() {
            if !f.generated(&listed).contains(g) {
                listed.push(g);
                generators.insert(g, (IntMatrix::identity(n), identity_qmat(d)));
            }
        }
        let gens: Vec<(usize, IntMatrix, QMat)> = generators.into_iter().map(|(g, (a, b))| (g, a, b)).collect();
        let model = AlgGroupModel::from_generators(self.char_p, x, f, &gens, lie)?;

        let realization = match &self.realization {
            None => None,
            Some(r) => {
                let torus = r
                    .torus
                    .iter()
                    .enumerate()
                    .map(|(i, t)| int_vector(&format!("realization.torus[{i}]"), t, n))
                    .collect::<Result<Vec<_>, _>>()?;
                if torus.len() != r.dim {
                    return Err(invalid("realization.torus", format!("expected {} characters", r.dim)));
                }
                if r.lie.len() != d {
                    return Err(invalid("realization.lie", format!("expected {d} matrices")));
                }
                let lie = r
                    .lie
                    .iter()
                    .enumerate()
                    .map(|(i, m)| rational_matrix(&format!("realization.lie[{i}]"), m, r.dim, r.dim))
                    .collect::<Result<Vec<_>, _>>()?;
                let real = MatrixRealization { dim: r.dim, torus, lie };
                let problems = model.check_realization(&real);
                if !problems.is_empty() {
                    return Err(invalid("realization", problems.join("; ")));
                }
                Some(real)
            }
        };
        Ok(Instance { model, realization })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"
char = 3

[lattice]
rank = 1

[finite]
elements = ["e", "s"]
table = [["e", "s"], ["s", "e"]]

[action_on_lattice]
s = [[-1]]
"#;

    #[test]
    fn parses_the_torus_by_inversion() {
        let g = parse_toml(EXAMPLE).unwrap().build().unwrap().model;
        let reference = hypercenter::verify::example1(3);
        assert_eq!(g.f().table_rows(), reference.f().table_rows());
        assert_eq!(g.action_x_matrix(1), reference.action_x_matrix(1));
        assert_eq!(g.f().name(1), "s");
    }

    #[test]
    fn json_and_toml_agree() {
        let file = parse_toml(EXAMPLE).unwrap();
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(parse_json(&json).unwrap(), file);
    }

    #[test]
    fn errors_name_the_key() {
        let bad = EXAMPLE.replace(r#"["s", "e"]]"#, r#"["s", "x"]]"#);
        let err = parse_toml(&bad).unwrap().build().unwrap_err();
        assert_eq!(err.to_string(), "finite.table[1][1]: unknown element \"x\"");

        let bad = EXAMPLE.replace("s = [[-1]]", "t = [[-1]]");
        let err = parse_toml(&bad).unwrap().build().unwrap_err();
        assert!(err.to_string().starts_with("action_on_lattice.t"));

        let bad = EXAMPLE.replace("rank = 1", "rank = \"one\"");
        let err = parse_toml(&bad).unwrap_err();
        assert!(err.contains("rank") && err.contains("line"), "{err}");
    }

    #[test]
    fn permutation_groups_use_generator_names() {
        let text = r#"
[lattice]
rank = 0
torsion = [3]

[finite]
permutations = [[1, 0, 2]]
generator_names = ["t"]

[action_on_lattice]
t = [[-1]]
"#;
        let inst = parse_toml(text).unwrap().build().unwrap();
        assert_eq!(inst.model.f().order(), 2);
        assert!(!inst.model.acts_trivially_on_x(1));
    }

    #[test]
    fn lie_data_and_rationals() {
        let text = r#"
[lattice]
rank = 0

[lie]
dim = 3
brackets = [[0, 1, 2, "1/2"]]
weights = [[], [], []]
"#;
        let inst = parse_toml(text).unwrap().build().unwrap();
        assert_eq!(inst.model.dim_l(), 3);
        assert!(!inst.model.lie().is_abelian());
    }

    #[test]
    fn invalid_models_are_rejected() {
        let text = r#"
char = 5

[lattice]
rank = 0

[lie]
dim = 1
weights = [[]]
"#;
        let err = parse_toml(text).unwrap().build().unwrap_err();
        assert!(matches!(err, InstanceError::Model(ModelError::Invalid(_))), "{err}");
    }
}
