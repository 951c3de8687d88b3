//! Sublattices of `Z^n` in canonical Hermite form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::hermite_normal_form;

/// A sublattice of `Z^dim`, stored as its row Hermite basis. Equal lattices
/// have identical bases, so the derived equality is lattice equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Basis of `{x : x * a == 0}` (left kernel of `a`).
pub fn left_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    hermite_normal_form(a).left_kernel()
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Self::from_matrix(&IntMatrix::identity(dim))
    }

    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        Self::from_matrix(&IntMatrix::from_rows(dim, gens))
    }

    /// The lattice spanned by the rows of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let hf = hermite_normal_form(m);
        Lattice {
            dim: m.cols(),
            basis: hf.nonzero_rows(),
            pivots: hf.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.dim, &self.basis)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut rest = v.to_vec();
        let mut out = Vec::with_capacity(self.basis.len());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in rest.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
            out.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::from_generators(self.dim, &gens)
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.dim);
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        let stacked = IntMatrix::from_rows(self.dim, &rows);
        let k = self.basis.len();
        let gens: Vec<Vec<BigInt>> = left_kernel(&stacked)
            .into_iter()
            .map(|coef| combine(&coef[..k], &self.basis, self.dim))
            .collect();
        Self::from_generators(self.dim, &gens)
    }

    /// Image under the column-convention map `x -> map * x`.
    pub fn image(&self, map: &IntMatrix) -> Lattice {
        assert_eq!(map.cols(), self.dim);
        let gens: Vec<Vec<BigInt>> = self.basis.iter().map(|b| map.apply(b)).collect();
        Self::from_generators(map.rows(), &gens)
    }

    /// `{x in Z^n : map * x in target}`.
    pub fn preimage(map: &IntMatrix, target: &Lattice) -> Lattice {
        assert_eq!(map.rows(), target.dim);
        let n = map.cols();
        let mut rows: Vec<Vec<BigInt>> = (0..n).map(|j| map.col_vec(j)).collect();
        rows.extend(target.basis.iter().cloned());
        let stacked = IntMatrix::from_rows(target.dim, &rows);
        let gens: Vec<Vec<BigInt>> = left_kernel(&stacked)
            .into_iter()
            .map(|coef| coef[..n].to_vec())
            .collect();
        Self::from_generators(n, &gens)
    }

    /// `Z^n ∩ (self ⊗ Q)`.
    pub fn saturate(&self) -> Lattice {
        if self.rank() == self.dim {
            return Self::full(self.dim);
        }
        if self.is_zero() {
            return self.clone();
        }
        // Right kernel K of the basis, then the integer vectors orthogonal to K.
        let kernel = left_kernel(&self.basis_matrix().transpose());
        let kt = IntMatrix::from_rows(self.dim, &kernel).transpose();
        Self::from_generators(self.dim, &left_kernel(&kt))
    }

    /// `[sup : self]` when `self ⊆ sup` has full rank in `sup`; `None` otherwise.
    pub fn index_in(&self, sup: &Lattice) -> Option<BigInt> {
        if self.rank() != sup.rank() || !sup.contains_lattice(self) {
            return None;
        }
        let rows: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|b| sup.coords(b).expect("contained"))
            .collect();
        Some(IntMatrix::from_rows(sup.rank(), &rows).determinant().abs())
    }
}

fn combine(coef: &[BigInt], rows: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    for (c, r) in coef.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(r) {
            *o += c * x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::matrix::ivec;

    fn lat(rows: &[&[i64]]) -> Lattice {
        let dim = rows[0].len();
        Lattice::from_generators(dim, &rows.iter().map(|r| ivec(r)).collect::<Vec<_>>())
    }

    #[test]
    fn coprime_intersection() {
        let a = lat(&[&[2]]);
        let b = lat(&[&[3]]);
        assert_eq!(a.intersect(&b), lat(&[&[6]]));
        assert_eq!(a.sum(&b), Lattice::full(1));
    }

    #[test]
    fn preimage_and_image() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        let target = lat(&[&[4, 0], &[0, 3]]);
        assert_eq!(Lattice::preimage(&m, &target), lat(&[&[2, 0], &[0, 3]]));
        assert_eq!(Lattice::full(2).image(&m), lat(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn saturation_and_index() {
        let a = lat(&[&[2, 4, 0]]);
        assert_eq!(a.saturate(), lat(&[&[1, 2, 0]]));
        let b = lat(&[&[2, 0], &[0, 3]]);
        assert_eq!(b.index_in(&Lattice::full(2)), Some(BigInt::from(6)));
        assert_eq!(a.index_in(&Lattice::full(3)), None);
    }
}
