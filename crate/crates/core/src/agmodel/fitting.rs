//! Unipotent radical and Fitting subgroup.

use super::model::AlgGroupModel;
use super::series::UcsOptions;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::linalg::Subspace;
use crate::zlattice::SubgroupOfFgA;

impl AlgGroupModel {
    /// Largest unipotent normal subgroup of a connected model: `U` itself.
    pub fn rad_u(&self) -> Result<StdSubgroup, ModelError> {
        if !self.is_connected() {
            return Err(ModelError::NotConnected);
        }
        Ok(StdSubgroup::new(
            Subspace::full(self.dim_l()),
            SubgroupOfFgA::whole(self.x().clone()),
            self.f().trivial(),
        ))
    }

    /// Largest nilpotent normal subgroup.
    ///
    /// Connected models: the preimage of `Rad_u(G/Z(G))`. Finite constant
    /// models: `D(X) ⋊ K` for the largest normal `K ≤ F` making this
    /// nilpotent. Anything else is rejected.
    pub fn fitting(&self, opts: &UcsOptions) -> Result<StdSubgroup, ModelError> {
        if self.is_connected() {
            let z = self.center()?;
            let (q, p) = self.quotient(&z)?;
            let fit = p.preimage(self, &q.rad_u()?);
            if !self.is_nilpotent_sub(&fit, opts)? {
                return Err(ModelError::PreconditionViolated(
                    "constructed Fitting candidate is not nilpotent".into(),
                ));
            }
            return Ok(fit);
        }
        if self.is_finite_bridgeable() {
            let f = self.f();
            let mut k = f.trivial();
            for n in f.normal_subgroups() {
                let s = self.diagonal_times(&n);
                if self.is_nilpotent_sub(&s, opts)? {
                    k = f.join(&k, &n);
                }
            }
            return Ok(self.diagonal_times(&k));
        }
        Err(ModelError::NotConnected)
    }

    fn diagonal_times(&self, k: &crate::finitegrp::SubgroupOfFinite) -> StdSubgroup {
        StdSubgroup::new(
            Subspace::zero(self.dim_l()),
            SubgroupOfFgA::trivial(self.x().clone()),
            k.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::finitegrp::cyclic;
    use crate::linalg::q;
    use crate::zlattice::{ivec, FgAbelian, IntMatrix};

    #[test]
    fn ga_by_gm_fitting_is_unipotent_radical() {
        let lie = GradedNilLie::abelian(vec![ivec(&[1])]);
        let g = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
        let r = g.rad_u().unwrap();
        assert_eq!(g.fitting(&UcsOptions::default()).unwrap(), r);
        assert!(g.is_unipotent_subgroup(&r));
    }

    #[test]
    fn commutative_connected_fitting_is_whole() {
        let g = AlgGroupModel::connected(0, FgAbelian::free(2), GradedNilLie::zero());
        assert!(g.fitting(&UcsOptions::default()).unwrap().is_whole());
    }

    #[test]
    fn heisenberg_by_torus() {
        let lie = GradedNilLie::from_brackets(
            vec![ivec(&[1]), ivec(&[-1]), ivec(&[0])],
            &[(0, 1, 2, q(1))],
        )
        .unwrap();
        let g = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
        let z = g.center().unwrap();
        assert_eq!(z.m, Subspace::span(3, &[g.lie().basis_vector(2)]));
        assert!(z.y.is_whole());
        let fit = g.fitting(&UcsOptions::default()).unwrap();
        assert_eq!(fit, g.rad_u().unwrap());
    }

    #[test]
    fn disconnected_infinite_model_is_rejected() {
        let g = AlgGroupModel::from_generators(
            0,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        assert_eq!(g.fitting(&UcsOptions::default()), Err(ModelError::NotConnected));
        assert_eq!(g.rad_u(), Err(ModelError::NotConnected));
    }

    #[test]
    fn finite_dihedral_fitting_is_everything() {
        // Z/8 inverted: the dual group is dihedral of order 16, a 2-group.
        let g = AlgGroupModel::from_generators(
            0,
            FgAbelian::cyclic(8),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        assert!(g.fitting(&UcsOptions::default()).unwrap().is_whole());
    }
}
