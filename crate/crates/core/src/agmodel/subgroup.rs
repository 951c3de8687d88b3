//! Standard subgroups `U_M ⋊ D(X/Y) ⋊ K`.

use std::fmt;

use num_bigint::BigInt;

use super::model::AlgGroupModel;
use crate::finitegrp::SubgroupOfFinite;
use crate::linalg::Subspace;
use crate::zlattice::SubgroupOfFgA;

use super::lie::GradedNilLie;

/// The subgroup `U_M ⋊ D(X/Y) ⋊ K`. A larger `Y` means a smaller
/// diagonalizable part; `Y = X` makes it trivial.
#[derive(Clone)]
pub struct StdSubgroup {
    pub m: Subspace,
    pub y: SubgroupOfFgA,
    pub k: SubgroupOfFinite,
    /// Set when the data was produced as the center of its model.
    pub central: bool,
}

impl PartialEq for StdSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.y == other.y && self.k == other.k
    }
}

impl Eq for StdSubgroup {}

impl fmt::Debug for StdSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StdSubgroup")
            .field("dim_m", &self.m.rank())
            .field("y", &self.y)
            .field("k", &self.k)
            .finish()
    }
}

impl StdSubgroup {
    pub fn new(m: Subspace, y: SubgroupOfFgA, k: SubgroupOfFinite) -> Self {
        StdSubgroup {
            m,
            y,
            k,
            central: false,
        }
    }

    pub fn whole(model: &AlgGroupModel) -> Self {
        Self::new(
            Subspace::full(model.dim_l()),
            SubgroupOfFgA::trivial(model.x().clone()),
            model.f().whole(),
        )
    }

    pub fn trivial(model: &AlgGroupModel) -> Self {
        Self::new(
            Subspace::zero(model.dim_l()),
            SubgroupOfFgA::whole(model.x().clone()),
            model.f().trivial(),
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.m.is_zero() && self.y.is_whole() && self.k.is_trivial()
    }

    pub fn is_whole(&self) -> bool {
        self.m.rank() == self.m.dim() && self.y.is_trivial() && self.k.is_whole()
    }

    /// Containment of subgroups: `M ⊆ M'`, `Y ⊇ Y'`, `K ⊆ K'`.
    pub fn is_contained_in(&self, other: &StdSubgroup) -> bool {
        other.m.contains_space(&self.m)
            && self.y.lattice().contains_lattice(other.y.lattice())
            && self.k.is_subgroup_of(&other.k)
    }

    /// Order of the diagonalizable part `X/Y` when finite.
    pub fn d_part_order(&self) -> Option<BigInt> {
        match self.y.index() {
            crate::zlattice::GroupIndex::Finite(n) => Some(n),
            crate::zlattice::GroupIndex::Infinite => None,
        }
    }
}

impl AlgGroupModel {
    /// Checks that the data is a subgroup: `M` a homogeneous subalgebra,
    /// `M` and `Y` stable under `K`.
    pub fn check_subgroup(&self, s: &StdSubgroup) -> Result<(), String> {
        let lie = self.lie();
        if s.y.ambient() != self.x() || s.m.dim() != lie.dim() || s.k.parent_order() != self.f().order() {
            return Err("subgroup data does not match the model".to_string());
        }
        if !lie.is_subalgebra(&s.m) {
            return Err("M is not a Lie subalgebra".to_string());
        }
        if !lie.is_homogeneous(&s.m) {
            return Err("M is not spanned by homogeneous vectors".to_string());
        }
        for &g in s.k.elements() {
            if !s.m.contains_space(&GradedNilLie::map_subspace(self.action_l(g), &s.m)) {
                return Err("M is not stable under K".to_string());
            }
            if !self.y_is_stable_under(g, &s.y) {
                return Err("Y is not stable under K".to_string());
            }
        }
        Ok(())
    }

    fn y_is_stable_under(&self, g: usize, y: &SubgroupOfFgA) -> bool {
        self.action_x(g)
            .image(y)
            .and_then(|i| i.is_subgroup_of(y))
            .unwrap_or(false)
    }

    /// Checks normality, naming the first failed condition.
    pub fn check_normal(&self, s: &StdSubgroup) -> Result<(), String> {
        self.check_subgroup(s)?;
        let lie = self.lie();
        if !lie.is_ideal(&s.m) {
            return Err("M is not an ideal of L".to_string());
        }
        for g in 0..self.f().order() {
            if !s.m.contains_space(&GradedNilLie::map_subspace(self.action_l(g), &s.m)) {
                return Err("M is not stable under F".to_string());
            }
            if !self.y_is_stable_under(g, &s.y) {
                return Err("Y is not stable under F".to_string());
            }
        }
        for (w, idx) in lie.weight_classes() {
            if !s.m.contains_space(&lie.weight_space(&idx)) && !s.y.contains(&w) {
                return Err("a weight of L/M does not lie in Y".to_string());
            }
        }
        let identity = crate::agmodel::lie::identity_qmat(lie.dim());
        for &g in s.k.elements() {
            if !self.action_x_minus_id(g).vanishes_on(&s.y) {
                return Err("K does not act trivially on Y".to_string());
            }
            let diff: Vec<_> = self
                .action_l(g)
                .iter()
                .zip(&identity)
                .map(|(r, i)| r.iter().zip(i).map(|(a, b)| a - b).collect())
                .collect();
            let image = GradedNilLie::map_subspace(&diff, &Subspace::full(lie.dim()));
            if !s.m.contains_space(&image) {
                return Err("K does not act trivially on L/M".to_string());
            }
        }
        if !self.f().is_normal(&s.k) {
            return Err("K is not normal in F".to_string());
        }
        Ok(())
    }

    pub fn is_normal_subgroup(&self, s: &StdSubgroup) -> bool {
        self.check_normal(s).is_ok()
    }

    /// Trivial diagonalizable part, and `K` trivial (characteristic 0) or a
    /// `p`-group (characteristic `p`).
    pub fn is_unipotent_subgroup(&self, s: &StdSubgroup) -> bool {
        s.y.is_whole()
            && if self.char_p() == 0 {
                s.k.is_trivial()
            } else {
                self.f().is_p_group(&s.k, self.char_p())
            }
    }

    /// `M = 0`, `K` abelian of order prime to the characteristic, and `K`
    /// commuting with `D(X/Y)`.
    pub fn is_mult_type_subgroup(&self, s: &StdSubgroup) -> bool {
        if !s.m.is_zero() || !self.f().subgroup_is_abelian(&s.k) {
            return false;
        }
        if self.char_p() != 0 && (s.k.order() as u64).is_multiple_of(self.char_p()) {
            return false;
        }
        s.k.elements().iter().all(|&g| {
            self.action_x_minus_id(g)
                .image(&SubgroupOfFgA::whole(self.x().clone()))
                .and_then(|img| img.is_subgroup_of(&s.y))
                .unwrap_or(false)
        })
    }
}
