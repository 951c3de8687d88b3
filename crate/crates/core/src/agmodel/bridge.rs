//! Finite constant models as abstract finite groups.
//!
//! For `L = 0` and finite `X` of order invertible in the field, `D(X)` is
//! the constant group `X* = Hom(X, Q/Z)`, so `G` is the finite group
//! `X* ⋊ F` with `F` acting on `X*` through the dual action.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::model::AlgGroupModel;
use super::subgroup::StdSubgroup;
use super::ModelError;
use crate::finitegrp::{FiniteGroup, SubgroupOfFinite};
use crate::linalg::Subspace;
use crate::zlattice::{FgAbelian, SubgroupOfFgA};

/// `X* ⋊ F` together with the translation of standard subgroups.
///
/// A character `φ` is stored as `(a_j)` with `φ(e_j) = a_j / d_j`; the pair
/// `(φ, f)` has index `φ_idx · |F| + f` with `φ_idx` in mixed radix.
#[derive(Clone, Debug)]
pub struct FiniteBridge {
    pub group: FiniteGroup,
    moduli: Vec<u64>,
    x: FgAbelian,
    f: FiniteGroup,
}

impl AlgGroupModel {
    pub fn to_finite(&self) -> Result<FiniteBridge, ModelError> {
        if !self.is_finite_bridgeable() {
            return Err(ModelError::PreconditionViolated(
                "needs L = 0, X finite and the characteristic prime to |X| and |F|".into(),
            ));
        }
        let x = self.x().clone();
        let moduli: Vec<u64> = x
            .invariants()
            .iter()
            .map(|d| d.to_u64().expect("small invariant"))
            .collect();
        let f = self.f().clone();
        let fo = f.order();
        let k = moduli.len();
        // dual[g][j][i]: coefficient of a_i in the j-th coordinate of g·φ.
        let dual: Vec<Vec<Vec<u64>>> = (0..fo)
            .map(|g| {
                let a = self.action_x_matrix(f.inv(g));
                (0..k)
                    .map(|j| {
                        (0..k)
                            .map(|i| {
                                let num = &a[(i, j)] * BigInt::from(moduli[j]);
                                let (c, r) = num.div_rem(&BigInt::from(moduli[i]));
                                debug_assert!(r.is_zero());
                                c.mod_floor(&BigInt::from(moduli[j]))
                                    .to_u64()
                                    .expect("reduced")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut bridge = FiniteBridge {
            group: FiniteGroup::from_table(vec![vec![0]]).expect("trivial"),
            moduli: moduli.clone(),
            x,
            f: f.clone(),
        };
        let n_chars: usize = moduli.iter().map(|&d| d as usize).product();
        let n = n_chars * fo;
        let decoded: Vec<(Vec<u64>, usize)> = (0..n).map(|i| bridge.decode(i)).collect();
        let mut table = vec![vec![0usize; n]; n];
        for (i1, (p1, f1)) in decoded.iter().enumerate() {
            for (i2, (p2, f2)) in decoded.iter().enumerate() {
                let phi: Vec<u64> = (0..k)
                    .map(|j| {
                        let moved = (0..k).fold(0u64, |acc, i| {
                            (acc + dual[*f1][j][i] * p2[i]) % moduli[j]
                        });
                        (p1[j] + moved) % moduli[j]
                    })
                    .collect();
                table[i1][i2] = bridge.encode(&phi, f.mul(*f1, *f2));
            }
        }
        let names: Vec<String> = decoded
            .iter()
            .map(|(p, g)| {
                let a: Vec<String> = p.iter().map(u64::to_string).collect();
                format!("({};{})", a.join(","), f.name(*g))
            })
            .collect();
        bridge.group = FiniteGroup::from_table_with_cap(table, usize::MAX)?.with_names(names);
        Ok(bridge)
    }
}

impl FiniteBridge {
    pub fn encode(&self, phi: &[u64], f: usize) -> usize {
        let mut idx = 0usize;
        for (a, d) in phi.iter().zip(&self.moduli) {
            idx = idx * (*d as usize) + (*a as usize);
        }
        idx * self.f.order() + f
    }

    pub fn decode(&self, idx: usize) -> (Vec<u64>, usize) {
        let fo = self.f.order();
        let f = idx % fo;
        let mut rest = idx / fo;
        let mut phi = vec![0u64; self.moduli.len()];
        for (j, d) in self.moduli.iter().enumerate().rev() {
            phi[j] = (rest % *d as usize) as u64;
            rest /= *d as usize;
        }
        (phi, f)
    }

    fn characters(&self) -> Vec<Vec<u64>> {
        let total: usize = self.moduli.iter().map(|&d| d as usize).product();
        (0..total).map(|i| self.decode(i * self.f.order()).0).collect()
    }

    // Whether φ(χ) = 0 in Q/Z.
    fn kills(&self, phi: &[u64], chi: &[BigInt]) -> bool {
        let l = self.moduli.iter().fold(1u64, |acc, &d| acc.lcm(&d));
        let total = phi
            .iter()
            .zip(chi)
            .zip(&self.moduli)
            .fold(BigInt::zero(), |acc, ((a, c), d)| {
                acc + c * BigInt::from(a * (l / d))
            });
        total.mod_floor(&BigInt::from(l)).is_zero()
    }

    /// `(0, Y, K) ↦ Y^⊥ × K`.
    pub fn subgroup_to_finite(&self, s: &StdSubgroup) -> SubgroupOfFinite {
        let mut el = Vec::new();
        for phi in self.characters() {
            if s.y.generators().iter().all(|chi| self.kills(&phi, chi)) {
                el.extend(s.k.elements().iter().map(|&k| self.encode(&phi, k)));
            }
        }
        self.group
            .subgroup(&el)
            .expect("standard subgroups map to subgroups")
    }

    /// Inverse of [`Self::subgroup_to_finite`], defined on subgroups of
    /// product form `A × K` with `A ⊆ X*` and `K ⊆ F`.
    pub fn subgroup_from_finite(&self, h: &SubgroupOfFinite) -> Option<StdSubgroup> {
        let e = self.f.identity();
        let mut a: Vec<Vec<u64>> = Vec::new();
        let mut k: Vec<usize> = Vec::new();
        for &g in h.elements() {
            let (phi, f) = self.decode(g);
            if f == e {
                a.push(phi);
            }
            if !k.contains(&f) {
                k.push(f);
            }
        }
        let zero = vec![0u64; self.moduli.len()];
        if a.len() * k.len() != h.order() || k.iter().any(|&f| !h.contains(self.encode(&zero, f))) {
            return None;
        }
        let y: Vec<Vec<BigInt>> = self
            .x
            .elements()
            .expect("finite")
            .into_iter()
            .filter(|chi| a.iter().all(|phi| self.kills(phi, chi)))
            .collect();
        Some(StdSubgroup::new(
            Subspace::zero(0),
            SubgroupOfFgA::new(self.x.clone(), y),
            self.f.subgroup(&k).ok()?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::finitegrp::cyclic;
    use crate::zlattice::IntMatrix;

    fn inverted(n: u64) -> AlgGroupModel {
        AlgGroupModel::from_generators(
            0,
            FgAbelian::cyclic(n),
            cyclic(2),
            &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
            GradedNilLie::zero(),
        )
        .unwrap()
    }

    #[test]
    fn inverted_z8_is_dihedral_of_order_16() {
        let b = inverted(8).to_finite().unwrap();
        let g = &b.group;
        assert_eq!(g.order(), 16);
        assert!(!g.is_abelian());
        let orders: Vec<usize> = (0..16).map(|x| g.element_order(x)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 8).count(), 4);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 9);
        assert_eq!(g.nilpotency_class(), Some(3));
    }

    #[test]
    fn cyclic_character_group() {
        let m = AlgGroupModel::connected(0, FgAbelian::cyclic(6), GradedNilLie::zero());
        let b = m.to_finite().unwrap();
        assert_eq!(b.group.order(), 6);
        assert!(b.group.is_abelian());
        assert!((0..6).any(|x| b.group.element_order(x) == 6));
    }

    #[test]
    fn center_agrees_across_the_bridge() {
        let g = inverted(8);
        let b = g.to_finite().unwrap();
        let z = g.center().unwrap();
        assert_eq!(b.subgroup_to_finite(&z), b.group.center());
        assert_eq!(b.subgroup_from_finite(&b.group.center()).unwrap(), z);
    }

    #[test]
    fn round_trip_of_standard_subgroups() {
        let g = inverted(8);
        let b = g.to_finite().unwrap();
        for d in [1i64, 2, 4, 8] {
            let s = StdSubgroup::new(
                Subspace::zero(0),
                SubgroupOfFgA::new(g.x().clone(), vec![crate::zlattice::ivec(&[d])]),
                g.f().whole(),
            );
            let h = b.subgroup_to_finite(&s);
            assert_eq!(h.order(), 2 * (d as usize));
            assert_eq!(b.subgroup_from_finite(&h).unwrap(), s);
        }
    }

    #[test]
    fn rejects_infinite_lattice() {
        let m = AlgGroupModel::connected(0, FgAbelian::free(1), GradedNilLie::zero());
        assert!(matches!(m.to_finite(), Err(ModelError::PreconditionViolated(_))));
    }
}
