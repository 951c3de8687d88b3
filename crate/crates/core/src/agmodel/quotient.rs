//! Quotients by normal standard subgroups and the maps between them.

use num_bigint::BigInt;

use super::lie::{identity_qmat, GradedNilLie, QMat};
use super::model::AlgGroupModel;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::finitegrp::FiniteGroup;
use crate::linalg::{mat_apply, mat_mul, q, right_kernel, solve_in_basis, QVec, Subspace};
use crate::zlattice::LatticeHom;

/// The data of a quotient map `G -> G'`: a linear projection of Lie
/// algebras, the embedding `X' -> X` of character groups, and a map of
/// finite groups.
#[derive(Clone, Debug)]
pub struct Projection {
    /// `dim L'` rows, `dim L` columns.
    pub lie: QMat,
    pub embed: LatticeHom,
    pub finite: Vec<usize>,
    pub target_f_order: usize,
}

impl Projection {
    pub fn identity(model: &AlgGroupModel) -> Self {
        Projection {
            lie: identity_qmat(model.dim_l()),
            embed: LatticeHom::identity(model.x().clone()),
            finite: (0..model.f().order()).collect(),
            target_f_order: model.f().order(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Projection) -> Projection {
        Projection {
            lie: mat_mul(&next.lie, &self.lie),
            embed: self.embed.compose(&next.embed).expect("composable"),
            finite: self.finite.iter().map(|&g| next.finite[g]).collect(),
            target_f_order: next.target_f_order,
        }
    }

    /// Preimage of a subgroup of the target, given the source model.
    pub fn preimage(&self, source: &AlgGroupModel, s: &StdSubgroup) -> StdSubgroup {
        let d = source.dim_l();
        // v lies in the preimage iff every form vanishing on M' vanishes on Pv.
        let annihilator = right_kernel(s.m.basis(), s.m.dim());
        let forms: Vec<QVec> = annihilator.iter().map(|a| row_times(a, &self.lie, d)).collect();
        let m = Subspace::span(d, &right_kernel(&forms, d));
        let y = self.embed.image(&s.y).expect("same group");
        let k = source.f().preimage(&self.finite, &s.k);
        StdSubgroup::new(m, y, k)
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, s: &StdSubgroup) -> StdSubgroup {
        let m = s.m.image(&self.lie);
        let y = self.embed.preimage(&s.y).expect("same group");
        let k = FiniteGroup::image(&self.finite, &s.k, self.target_f_order);
        StdSubgroup::new(m, y, k)
    }
}

fn row_times(a: &[num_rational::BigRational], m: &QMat, cols: usize) -> QVec {
    (0..cols)
        .map(|j| {
            a.iter()
                .zip(m)
                .fold(q(0), |acc, (x, row)| acc + x * &row[j])
        })
        .collect()
}

impl AlgGroupModel {
    /// `G / S` for a normal standard subgroup `S`, with the projection.
    pub fn quotient(&self, s: &StdSubgroup) -> Result<(AlgGroupModel, Projection), ModelError> {
        self.check_normal(s).map_err(ModelError::PreconditionViolated)?;
        let pres = s.y.as_group();
        let x_new = pres.group().clone();
        let embed = pres.inclusion().clone();

        let (f_new, proj) = self.f().quotient(&s.k)?;
        let mut reps = vec![usize::MAX; f_new.order()];
        for g in 0..self.f().order() {
            if reps[proj[g]] == usize::MAX {
                reps[proj[g]] = g;
            }
        }
        let f_new = match self.f().names() {
            Some(_) => f_new.with_names(reps.iter().map(|&g| self.f().name(g)).collect()),
            None => f_new,
        };

        let lie = self.lie();
        let d = lie.dim();
        let mut chosen: Vec<usize> = Vec::new();
        let mut span = s.m.clone();
        for i in 0..d {
            let e = lie.basis_vector(i);
            if !span.contains(&e) {
                chosen.push(i);
                span = span.sum(&Subspace::span(d, &[e]));
            }
        }
        let d_new = chosen.len();
        let mut basis: Vec<QVec> = chosen.iter().map(|&i| lie.basis_vector(i)).collect();
        basis.extend(s.m.basis().iter().cloned());
        let p_lie: QMat = {
            let cols: Vec<QVec> = (0..d)
                .map(|i| {
                    let c = solve_in_basis(&basis, &lie.basis_vector(i)).expect("basis of L");
                    c[..d_new].to_vec()
                })
                .collect();
            (0..d_new).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect()
        };

        let weights: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|&i| pres.coords(lie.weight(i)).expect("weights of L/M lie in Y"))
            .collect();
        let mut consts = Vec::with_capacity(d_new * d_new);
        for &a in &chosen {
            for &b in &chosen {
                consts.push(mat_apply(&p_lie, lie.basis_bracket(a, b)));
            }
        }
        let lie_new = GradedNilLie::from_structure_constants(weights, consts);

        let mut ax = Vec::with_capacity(reps.len());
        let mut al = Vec::with_capacity(reps.len());
        for &g in &reps {
            let restricted = self.action_x(g).restrict(&pres)?;
            ax.push(restricted.matrix().clone());
            let b = self.action_l(g);
            let cols: Vec<QVec> = chosen
                .iter()
                .map(|&c| mat_apply(&p_lie, &mat_apply(b, &lie.basis_vector(c))))
                .collect();
            al.push(transpose(&cols, d_new));
        }
        let model = AlgGroupModel::new(self.char_p(), x_new, f_new, ax, lie_new, al);
        debug_assert!(model.validate().is_empty(), "{:?}", model.validate());
        let projection = Projection {
            lie: p_lie,
            embed,
            finite: proj,
            target_f_order: model.f().order(),
        };
        Ok((model, projection))
    }

    /// The subgroup `S` as a model in its own right: Lie algebra `M` with
    /// weights in `X/Y`, torus `D(X/Y)` and finite part `K`.
    pub fn sub_model(&self, s: &StdSubgroup) -> Result<AlgGroupModel, ModelError> {
        self.check_subgroup(s).map_err(ModelError::PreconditionViolated)?;
        let quo = s.y.quotient();
        let x_new = quo.group().clone();
        let (k_group, incl) = self.f().subgroup_as_group(&s.k);
        let k_group = match self.f().names() {
            Some(_) => k_group.with_names(incl.iter().map(|&g| self.f().name(g)).collect()),
            None => k_group,
        };
        let lie = self.lie();
        let hb = lie
            .homogeneous_basis(&s.m)
            .ok_or_else(|| ModelError::PreconditionViolated("M is not homogeneous".into()))?;
        let basis: Vec<QVec> = hb.iter().map(|(v, _)| v.clone()).collect();
        let dm = basis.len();
        let weights: Vec<Vec<BigInt>> = hb.iter().map(|(_, w)| quo.project(w)).collect();
        let mut consts = Vec::with_capacity(dm * dm);
        for a in &basis {
            for b in &basis {
                consts.push(solve_in_basis(&basis, &lie.bracket(a, b)).expect("subalgebra"));
            }
        }
        let lie_new = GradedNilLie::from_structure_constants(weights, consts);
        let mut ax = Vec::with_capacity(incl.len());
        let mut al = Vec::with_capacity(incl.len());
        for &g in &incl {
            let induced = self.action_x(g).induced_on_quotient(&quo)?;
            ax.push(induced.matrix().clone());
            let b = self.action_l(g);
            let cols: Vec<QVec> = basis
                .iter()
                .map(|v| solve_in_basis(&basis, &mat_apply(b, v)).expect("K-stable"))
                .collect();
            al.push(transpose(&cols, dm));
        }
        let model = AlgGroupModel::new(self.char_p(), x_new, k_group, ax, lie_new, al);
        debug_assert!(model.validate().is_empty(), "{:?}", model.validate());
        Ok(model)
    }
}

fn transpose(cols: &[QVec], rows: usize) -> QMat {
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegrp::cyclic;
    use crate::zlattice::{ivec, FgAbelian, IntMatrix, SubgroupOfFgA};

    fn heisenberg_model() -> AlgGroupModel {
        let lie = GradedNilLie::from_brackets(vec![vec![]; 3], &[(0, 1, 2, q(1))]).unwrap();
        AlgGroupModel::connected(0, FgAbelian::trivial(), lie)
    }

    #[test]
    fn heisenberg_mod_center_is_abelian_plane() {
        let g = heisenberg_model();
        let z = g.center().unwrap();
        assert_eq!(z.m.rank(), 1);
        let (q_model, p) = g.quotient(&z).unwrap();
        assert_eq!(q_model.dim_l(), 2);
        assert!(q_model.lie().is_abelian());
        let back = p.preimage(&g, &StdSubgroup::trivial(&q_model));
        assert_eq!(back, z);
        let whole = p.image(&StdSubgroup::whole(&g));
        assert_eq!(whole, StdSubgroup::whole(&q_model));
    }

    #[test]
    fn quotient_by_torus_part() {
        // G_m ⋊ Z/2 by μ_2 (Y = 2Z): the quotient has X' = 2Z ≅ Z.
        let g = AlgGroupModel::from_generators(
            0,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        let z = g.center().unwrap();
        let (q_model, p) = g.quotient(&z).unwrap();
        assert_eq!(q_model.x(), &FgAbelian::free(1));
        assert_eq!(q_model.f().order(), 2);
        assert_eq!(p.embed.apply(&ivec(&[1])), ivec(&[2]));
        assert_eq!(p.preimage(&g, &StdSubgroup::trivial(&q_model)), z);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = heisenberg_model();
        let line = Subspace::span(3, &[g.lie().basis_vector(0)]);
        let s = StdSubgroup::new(line, SubgroupOfFgA::whole(FgAbelian::trivial()), g.f().trivial());
        assert!(matches!(g.quotient(&s), Err(ModelError::PreconditionViolated(_))));
    }

    #[test]
    fn sub_model_of_weighted_line() {
        // X = Z, L = span(e0 weight 1, e1 weight 0); S = (span e0, 2Z, 1).
        let lie = GradedNilLie::abelian(vec![ivec(&[1]), ivec(&[0])]);
        let g = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
        let s = StdSubgroup::new(
            Subspace::span(2, &[g.lie().basis_vector(0)]),
            SubgroupOfFgA::new(FgAbelian::free(1), vec![ivec(&[2])]),
            g.f().trivial(),
        );
        let sub = g.sub_model(&s).unwrap();
        assert_eq!(sub.x(), &FgAbelian::cyclic(2));
        assert_eq!(sub.dim_l(), 1);
        assert_eq!(sub.lie().weight(0), ivec(&[1]).as_slice());
    }
}
