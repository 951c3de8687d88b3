//! Unions of ascending chains of standard subgroups.

use super::model::AlgGroupModel;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::zlattice::{chain_limit, ChainLimitOutcome, LatticeError, StepOperator};

/// An ascending chain `S_0 ⊆ S_1 ⊆ ...`.
#[derive(Clone, Debug)]
pub enum SubgroupChain {
    Explicit(Vec<StdSubgroup>),
    /// `M` and `K` fixed at those of `initial`; the `Y` parts descend by
    /// `Y_{i+1} = step(Y_i)` starting from `initial.y`.
    Generated {
        initial: StdSubgroup,
        step: StepOperator,
    },
}

impl AlgGroupModel {
    /// The smallest standard subgroup containing every term.
    pub fn chain_union(&self, chain: &SubgroupChain, depth: usize) -> Result<StdSubgroup, ModelError> {
        match chain {
            SubgroupChain::Explicit(terms) => {
                let Some(last) = terms.last() else {
                    return Err(ModelError::PreconditionViolated("empty chain".into()));
                };
                for (i, w) in terms.windows(2).enumerate() {
                    if !w[0].is_contained_in(&w[1]) {
                        return Err(ModelError::NotAscending(i));
                    }
                }
                Ok(last.clone())
            }
            SubgroupChain::Generated { initial, step } => {
                let outcome = match chain_limit(&initial.y, step, depth) {
                    Err(LatticeError::NotDescending) => return Err(ModelError::NotAscending(0)),
                    other => other?,
                };
                let y = match outcome {
                    ChainLimitOutcome::Undetermined { reason, .. } => {
                        return Err(ModelError::UndeterminedLimit(reason))
                    }
                    ChainLimitOutcome::FixedPoint { limit, .. }
                    | ChainLimitOutcome::UnitFactorSplit { limit, .. } => limit,
                };
                let s = StdSubgroup::new(initial.m.clone(), y, initial.k.clone());
                self.check_subgroup(&s).map_err(ModelError::PreconditionViolated)?;
                Ok(s)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::finitegrp::cyclic;
    use crate::linalg::Subspace;
    use crate::zlattice::{ivec, FgAbelian, IntMatrix, LatticeHom, SubgroupOfFgA};

    fn torus_chain(model: &AlgGroupModel, base: i64) -> SubgroupChain {
        let x = model.x().clone();
        let step = StepOperator::new(
            SubgroupOfFgA::trivial(x.clone()),
            vec![LatticeHom::endo(x.clone(), IntMatrix::from_i64_rows(&[&[base]])).unwrap()],
        );
        SubgroupChain::Generated {
            initial: StdSubgroup::new(
                Subspace::zero(0),
                SubgroupOfFgA::new(x, vec![ivec(&[base])]),
                model.f().trivial(),
            ),
            step,
        }
    }

    #[test]
    fn roots_of_unity_fill_the_torus() {
        let g = AlgGroupModel::from_generators(
            3,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        let u = g.chain_union(&torus_chain(&g, 2), 8).unwrap();
        assert!(u.y.is_trivial());
        let t = AlgGroupModel::connected(0, FgAbelian::free(1), GradedNilLie::zero());
        assert!(t.chain_union(&torus_chain(&t, 3), 8).unwrap().is_whole());
    }

    #[test]
    fn constant_chain() {
        let t = AlgGroupModel::connected(0, FgAbelian::free(1), GradedNilLie::zero());
        let s = StdSubgroup::trivial(&t);
        let u = t.chain_union(&SubgroupChain::Explicit(vec![s.clone(); 3]), 8).unwrap();
        assert_eq!(u, s);
    }

    #[test]
    fn descending_list_is_rejected() {
        let t = AlgGroupModel::connected(0, FgAbelian::free(1), GradedNilLie::zero());
        let chain = SubgroupChain::Explicit(vec![StdSubgroup::whole(&t), StdSubgroup::trivial(&t)]);
        assert_eq!(t.chain_union(&chain, 8), Err(ModelError::NotAscending(0)));
    }
}
