//! Centers of models.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lie::identity_qmat;
use super::model::AlgGroupModel;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::linalg::{q, right_kernel, QVec, Subspace};
use crate::zlattice::{left_kernel, IntMatrix, SubgroupOfFgA};

impl AlgGroupModel {
    /// Weight-zero vectors of `Z(L)` fixed by `F`.
    pub fn center_m(&self) -> Subspace {
        let lie = self.lie();
        let d = lie.dim();
        let zero_idx: Vec<usize> = (0..d)
            .filter(|&i| lie.weight(i).iter().all(Zero::is_zero))
            .collect();
        let mut m = lie.center().intersect(&lie.weight_space(&zero_idx));
        let id = identity_qmat(d);
        for g in 0..self.f().order() {
            if self.acts_trivially_on_l(g) {
                continue;
            }
            let diff: Vec<QVec> = self
                .action_l(g)
                .iter()
                .zip(&id)
                .map(|(r, i)| r.iter().zip(i).map(|(a, b)| a - b).collect())
                .collect();
            m = m.intersect(&Subspace::span(d, &right_kernel(&diff, d)));
        }
        m
    }

    /// `⟨(A_f - 1)X : f ∈ F⟩ + ⟨support of the grading⟩`.
    pub fn center_y(&self) -> SubgroupOfFgA {
        let x = self.x();
        let n = x.ngens();
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for g in 0..self.f().order() {
            let a = self.action_x_matrix(g);
            for j in 0..n {
                let mut c = a.col_vec(j);
                c[j] -= BigInt::one();
                gens.push(c);
            }
        }
        gens.extend(self.lie().support());
        SubgroupOfFgA::new(x.clone(), gens)
    }

    /// Central elements of `F` acting trivially on `X` and on `L`.
    pub fn center_k(&self) -> crate::finitegrp::SubgroupOfFinite {
        let f = self.f();
        let el: Vec<usize> = f
            .center()
            .elements()
            .iter()
            .copied()
            .filter(|&g| self.acts_trivially_on_x(g) && self.acts_trivially_on_l(g))
            .collect();
        f.subgroup(&el).expect("kernel of an action inside the center")
    }

    /// `(M_Z, Y_Z, K_Z)` regardless of whether it is the full center.
    pub fn center_candidate(&self) -> StdSubgroup {
        let mut s = StdSubgroup::new(self.center_m(), self.center_y(), self.center_k());
        s.central = true;
        s
    }

    /// Elements `f` of `Z(F)`, outside `K_Z`, that act trivially on `X` and
    /// by a sign on each weight space, where the signs extend to a character
    /// of `X` trivial on `⟨(A_g - 1)X⟩`. Such an `f` times the matching
    /// torus element is central but not captured by the product form.
    pub fn mixed_center_obstruction(&self) -> Vec<usize> {
        let lie = self.lie();
        if lie.dim() == 0 {
            return Vec::new();
        }
        let f = self.f();
        let classes = lie.weight_classes();
        let mut out = Vec::new();
        for &g in f.center().elements() {
            if g == f.identity() || !self.acts_trivially_on_x(g) || self.acts_trivially_on_l(g) {
                continue;
            }
            let Some(signs) = self.sign_pattern(g, &classes) else {
                continue;
            };
            if self.signs_extend_to_character(&classes, &signs) {
                out.push(g);
            }
        }
        out
    }

    // For each weight class, whether `g` acts as -1 (true) or +1 (false).
    pub(super) fn sign_pattern(&self, g: usize, classes: &[(Vec<BigInt>, Vec<usize>)]) -> Option<Vec<bool>> {
        let b = self.action_l(g);
        let d = self.dim_l();
        let mut signs = Vec::new();
        for (_, idx) in classes {
            let s = b[idx[0]][idx[0]].clone();
            if s != q(1) && s != q(-1) {
                return None;
            }
            for &i in idx {
                for k in 0..d {
                    let expect = if k == i { s.clone() } else { q(0) };
                    if b[k][i] != expect {
                        return None;
                    }
                }
            }
            signs.push(s == q(-1));
        }
        Some(signs)
    }

    fn signs_extend_to_character(
        &self,
        classes: &[(Vec<BigInt>, Vec<usize>)],
        signs: &[bool],
    ) -> bool {
        let x = self.x();
        let n = x.ngens();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut values: Vec<u8> = Vec::new();
        for ((w, _), &s) in classes.iter().zip(signs) {
            rows.push(w.clone());
            values.push(u8::from(s));
        }
        for g in 0..self.f().order() {
            let a = self.action_x_matrix(g);
            for j in 0..n {
                let mut c = a.col_vec(j);
                c[j] -= BigInt::one();
                rows.push(c);
                values.push(0);
            }
        }
        for r in x.relations().basis() {
            rows.push(r.clone());
            values.push(0);
        }
        let m = IntMatrix::from_rows(n, &rows);
        left_kernel(&m).iter().all(|coef| {
            let total = coef
                .iter()
                .zip(&values)
                .filter(|(_, &v)| v == 1)
                .fold(BigInt::zero(), |acc, (c, _)| acc + c);
            total.is_even()
        })
    }

    /// The center, or an error if a central element mixes `F` with the torus.
    pub fn center(&self) -> Result<StdSubgroup, ModelError> {
        let obstruction = self.mixed_center_obstruction();
        if !obstruction.is_empty() {
            let names = obstruction.iter().map(|&g| self.f().name(g)).collect();
            return Err(ModelError::MixedCenterUnsupported(names));
        }
        Ok(self.center_candidate())
    }

    /// The multiplicative part `(0, Y_Z, K_Z')` of the center, with `K_Z'`
    /// the elements of order prime to the characteristic.
    pub fn center_s(&self) -> Result<StdSubgroup, ModelError> {
        let z = self.center()?;
        let k = self.f().p_prime_part(&z.k, self.char_p());
        let mut s = StdSubgroup::new(Subspace::zero(self.dim_l()), z.y, k);
        s.central = true;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::finitegrp::cyclic;
    use crate::zlattice::{ivec, FgAbelian};

    fn neg(n: usize) -> Vec<QVec> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { q(-1) } else { q(0) }).collect())
            .collect()
    }

    #[test]
    fn center_of_torus_by_inversion() {
        // G_m ⋊ Z/2 with inversion: center is μ_2.
        let m = AlgGroupModel::from_generators(
            0,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap();
        let z = m.center().unwrap();
        assert!(z.m.is_zero());
        assert_eq!(z.y, SubgroupOfFgA::new(FgAbelian::free(1), vec![ivec(&[2])]));
        assert!(z.k.is_trivial());
    }

    #[test]
    fn sign_on_weight_zero_line_is_an_obstruction() {
        // G_a ⋊ Z/2 acting by -1 with no torus: the sign sits on weight 0,
        // where every character is 1, so the center is trivial.
        let lie = GradedNilLie::abelian(vec![vec![]]);
        let m = AlgGroupModel::from_generators(
            0,
            FgAbelian::trivial(),
            cyclic(2),
            &[(1, IntMatrix::zeros(0, 0), neg(1))],
            lie,
        )
        .unwrap();
        assert!(m.mixed_center_obstruction().is_empty());
        assert!(m.center().unwrap().k.is_trivial());
    }

    #[test]
    fn sign_matched_by_torus_element_is_reported() {
        // X = Z, L one-dimensional of weight 1, F = Z/2 acting by -1 on L
        // and trivially on X. The element (-1 in G_m) * f is central.
        let lie = GradedNilLie::abelian(vec![ivec(&[1])]);
        let m = AlgGroupModel::from_generators(
            0,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::identity(1), neg(1))],
            lie,
        )
        .unwrap();
        assert_eq!(m.mixed_center_obstruction(), vec![1]);
        assert!(matches!(m.center(), Err(ModelError::MixedCenterUnsupported(_))));
    }

    #[test]
    fn sign_blocked_by_even_weight() {
        let lie = GradedNilLie::abelian(vec![ivec(&[2]), ivec(&[4])]);
        let m = AlgGroupModel::from_generators(
            0,
            FgAbelian::free(1),
            cyclic(2),
            &[(1, IntMatrix::identity(1), vec![vec![q(-1), q(0)], vec![q(0), q(-1)]])],
            lie,
        )
        .unwrap();
        // A character with value -1 at 2 has value +1 at 4.
        assert!(m.mixed_center_obstruction().is_empty());
    }
}
