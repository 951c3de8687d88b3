//! Faithful matrix realizations of connected models.
//!
//! `U ⋊ D(X)` is realized inside upper triangular `d × d` matrices: the
//! torus as `diag(χ_1, ..., χ_d)` and each basis vector `e_i` of `L` as a
//! strictly upper triangular matrix.

use num_bigint::BigInt;
use num_traits::Zero;

use super::lie::QMat;
use super::model::AlgGroupModel;
use crate::linalg::{mat_mul, q, QVec, Subspace};
use crate::zlattice::SubgroupOfFgA;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRealization {
    pub dim: usize,
    /// Diagonal characters of the torus.
    pub torus: Vec<Vec<BigInt>>,
    /// Image of each basis vector of `L`.
    pub lie: Vec<QMat>,
}

impl MatrixRealization {
    /// Upper bound on the nilpotency class of a nilpotent subgroup of the
    /// upper triangular `d × d` matrices.
    pub fn class_bound(&self) -> usize {
        self.dim * self.dim.saturating_sub(1) / 2 + 1
    }
}

impl AlgGroupModel {
    /// Problems with `r` as a faithful realization; empty when valid.
    pub fn check_realization(&self, r: &MatrixRealization) -> Vec<String> {
        let mut out = Vec::new();
        let d = r.dim;
        let x = self.x();
        if self.f().order() != 1 {
            out.push("realizations are only supported for connected models".to_string());
        }
        if r.torus.len() != d || r.torus.iter().any(|c| c.len() != x.ngens()) {
            out.push(format!("torus needs {d} characters of length {}", x.ngens()));
        }
        if r.lie.len() != self.dim_l() || r.lie.iter().any(|m| m.len() != d || m.iter().any(|row| row.len() != d)) {
            out.push(format!("need one {d}x{d} matrix per basis vector of L"));
        }
        if !out.is_empty() {
            return out;
        }
        if !SubgroupOfFgA::new(x.clone(), r.torus.clone()).is_whole() {
            out.push("torus characters do not generate X".to_string());
        }
        for (i, m) in r.lie.iter().enumerate() {
            let w = self.lie().weight(i);
            for a in 0..d {
                for b in 0..d {
                    if m[a][b].is_zero() {
                        continue;
                    }
                    if b <= a {
                        out.push(format!("image of e{i} is not strictly upper triangular"));
                    } else if !x.elements_equal(&x.sub(&r.torus[a], &r.torus[b]), w) {
                        out.push(format!("entry ({a}, {b}) of e{i} has the wrong weight"));
                    }
                }
            }
        }
        let flat: Vec<QVec> = r.lie.iter().map(|m| m.concat()).collect();
        if Subspace::span(d * d, &flat).rank() != self.dim_l() {
            out.push("images of the basis of L are linearly dependent".to_string());
        }
        for i in 0..self.dim_l() {
            for j in 0..self.dim_l() {
                let lhs = commutator(&r.lie[i], &r.lie[j]);
                let c = self.lie().basis_bracket(i, j);
                let mut rhs = vec![vec![q(0); d]; d];
                for (k, ck) in c.iter().enumerate() {
                    for a in 0..d {
                        for b in 0..d {
                            rhs[a][b] += ck * &r.lie[k][a][b];
                        }
                    }
                }
                if lhs != rhs {
                    out.push(format!("bracket [e{i}, e{j}] is not preserved"));
                }
            }
        }
        out
    }
}

fn commutator(a: &QMat, b: &QMat) -> QMat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agmodel::lie::GradedNilLie;
    use crate::zlattice::{ivec, FgAbelian};

    fn unit(d: usize, a: usize, b: usize) -> QMat {
        let mut m = vec![vec![q(0); d]; d];
        m[a][b] = q(1);
        m
    }

    #[test]
    fn heisenberg_torus_realization() {
        let lie = GradedNilLie::from_brackets(
            vec![ivec(&[1]), ivec(&[-1]), ivec(&[0])],
            &[(0, 1, 2, q(1))],
        )
        .unwrap();
        let g = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
        let r = MatrixRealization {
            dim: 3,
            torus: vec![ivec(&[1]), ivec(&[0]), ivec(&[1])],
            lie: vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)],
        };
        assert_eq!(g.check_realization(&r), Vec::<String>::new());
        assert_eq!(r.class_bound(), 4);
        let bad = MatrixRealization {
            torus: vec![ivec(&[0]), ivec(&[0]), ivec(&[0])],
            ..r
        };
        assert!(!g.check_realization(&bad).is_empty());
    }
}
