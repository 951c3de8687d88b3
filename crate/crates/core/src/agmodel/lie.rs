//! Finite-dimensional nilpotent Lie algebras over Q, graded by a character group.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::{mat_apply, q, right_kernel, QVec, Subspace};
use crate::zlattice::FgAbelian;

/// A rational matrix as rows, acting on column vectors.
pub type QMat = Vec<QVec>;

pub fn identity_qmat(n: usize) -> QMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

/// Lie algebra with basis `e_0..e_{dim-1}`, each `e_i` homogeneous of
/// weight `weights[i]` (a reduced element of the grading group).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedNilLie {
    dim: usize,
    /// `consts[i * dim + j]` is `[e_i, e_j]` in coordinates.
    consts: Vec<QVec>,
    weights: Vec<Vec<BigInt>>,
}

impl GradedNilLie {
    pub fn zero() -> Self {
        GradedNilLie {
            dim: 0,
            consts: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn abelian(weights: Vec<Vec<BigInt>>) -> Self {
        let dim = weights.len();
        GradedNilLie {
            dim,
            consts: vec![vec![q(0); dim]; dim * dim],
            weights,
        }
    }

    /// Builds from entries `[e_i, e_j] = c e_k`, extended antisymmetrically.
    /// An entry with `i == j` is stored as given so that validation reports it.
    pub fn from_brackets(
        weights: Vec<Vec<BigInt>>,
        brackets: &[(usize, usize, usize, BigRational)],
    ) -> Result<Self, String> {
        let dim = weights.len();
        let mut consts = vec![vec![q(0); dim]; dim * dim];
        for (n, (i, j, k, c)) in brackets.iter().enumerate() {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(format!("bracket entry {n} refers to a basis index >= {dim}"));
            }
            consts[i * dim + j][*k] += c;
            if i != j {
                consts[j * dim + i][*k] -= c;
            }
        }
        Ok(GradedNilLie {
            dim,
            consts,
            weights,
        })
    }

    /// Builds from a full table of structure constants, unchecked.
    pub fn from_structure_constants(weights: Vec<Vec<BigInt>>, consts: Vec<QVec>) -> Self {
        GradedNilLie {
            dim: weights.len(),
            consts,
            weights,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[Vec<BigInt>] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &[BigInt] {
        &self.weights[i]
    }

    pub fn structure_constants(&self) -> &[QVec] {
        &self.consts
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &QVec {
        &self.consts[i * self.dim + j]
    }

    /// Nonzero entries `(i, j, k, c)` with `i < j`.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, usize, BigRational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, u: &[BigRational], v: &[BigRational]) -> QVec {
        let mut out = vec![q(0); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> QVec {
        (0..self.dim).map(|j| if i == j { q(1) } else { q(0) }).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Violations of antisymmetry, Jacobi, grading and nilpotency.
    pub fn check(&self, grading: &FgAbelian) -> Vec<String> {
        let d = self.dim;
        let mut issues = Vec::new();
        if self.weights.len() != d || self.consts.len() != d * d {
            issues.push("structure constant table has the wrong shape".to_string());
            return issues;
        }
        for (i, w) in self.weights.iter().enumerate() {
            if w.len() != grading.ngens() {
                issues.push(format!(
                    "weight of e{i} has {} coordinates, the lattice has {}",
                    w.len(),
                    grading.ngens()
                ));
                return issues;
            }
        }
        if self.consts.iter().any(|v| v.len() != d) {
            issues.push("structure constant vectors have the wrong length".to_string());
            return issues;
        }
        for i in 0..d {
            for j in i..d {
                let sum: QVec = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if sum.iter().any(|x| !x.is_zero()) {
                    issues.push(format!("antisymmetry fails for [e{i}, e{j}]"));
                }
            }
        }
        'jacobi: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        issues.push(format!("Jacobi identity fails for (e{i}, e{j}, e{k})"));
                        break 'jacobi;
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let sum = grading.add(&self.weights[i], &self.weights[j]);
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() && !grading.elements_equal(&self.weights[k], &sum) {
                        issues.push(format!(
                            "grading fails: [e{i}, e{j}] has a component on e{k} of the wrong weight"
                        ));
                    }
                }
            }
        }
        if issues.is_empty() && !self.is_nilpotent() {
            issues.push("Lie algebra is not nilpotent".to_string());
        }
        issues
    }

    /// `[L, V]` for a subspace `V`.
    pub fn bracket_with_all(&self, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            let ei = self.basis_vector(i);
            for b in v.basis() {
                rows.push(self.bracket(&ei, b));
            }
        }
        Subspace::span(self.dim, &rows)
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.dim)];
        loop {
            let next = self.bracket_with_all(out.last().expect("nonempty"));
            if &next == out.last().expect("nonempty") {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// The center `{v : [v, L] = 0}`.
    pub fn center(&self) -> Subspace {
        // Rows: for each (j, k) the linear form v -> ([v, e_j])_k.
        let d = self.dim;
        let mut rows = Vec::new();
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.basis_bracket(i, j)[k].clone()).collect());
            }
        }
        Subspace::span(d, &right_kernel(&rows, d))
    }

    pub fn is_ideal(&self, m: &Subspace) -> bool {
        m.contains_space(&self.bracket_with_all(m))
    }

    pub fn is_subalgebra(&self, m: &Subspace) -> bool {
        m.basis()
            .iter()
            .all(|a| m.basis().iter().all(|b| m.contains(&self.bracket(a, b))))
    }

    /// Basis indices grouped by weight, in order of first appearance.
    pub fn weight_classes(&self) -> Vec<(Vec<BigInt>, Vec<usize>)> {
        let mut out: Vec<(Vec<BigInt>, Vec<usize>)> = Vec::new();
        for (i, w) in self.weights.iter().enumerate() {
            match out.iter_mut().find(|(x, _)| x == w) {
                Some((_, idx)) => idx.push(i),
                None => out.push((w.clone(), vec![i])),
            }
        }
        out
    }

    /// The weight space `L_χ`.
    pub fn weight_space(&self, indices: &[usize]) -> Subspace {
        let rows: Vec<QVec> = indices.iter().map(|&i| self.basis_vector(i)).collect();
        Subspace::span(self.dim, &rows)
    }

    /// A basis of `M` made of homogeneous vectors with their weights, or
    /// `None` if `M` is not spanned by homogeneous vectors.
    pub fn homogeneous_basis(&self, m: &Subspace) -> Option<Vec<(QVec, Vec<BigInt>)>> {
        let mut out = Vec::new();
        for (w, idx) in self.weight_classes() {
            for b in m.intersect(&self.weight_space(&idx)).basis() {
                out.push((b.clone(), w.clone()));
            }
        }
        (out.len() == m.rank()).then_some(out)
    }

    pub fn is_homogeneous(&self, m: &Subspace) -> bool {
        self.homogeneous_basis(m).is_some()
    }

    /// Image of a subspace under a matrix acting on coordinates.
    pub fn map_subspace(a: &QMat, m: &Subspace) -> Subspace {
        let rows: Vec<QVec> = m.basis().iter().map(|b| mat_apply(a, b)).collect();
        Subspace::span(a.len(), &rows)
    }

    /// Indices of basis vectors with nonzero weight spaces (all of them) and
    /// their weights: the support of the grading.
    pub fn support(&self) -> Vec<Vec<BigInt>> {
        self.weight_classes().into_iter().map(|(w, _)| w).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::ivec;

    fn heisenberg() -> GradedNilLie {
        GradedNilLie::from_brackets(vec![vec![]; 3], &[(0, 1, 2, q(1))]).unwrap()
    }

    #[test]
    fn heisenberg_is_valid_and_nilpotent() {
        let h = heisenberg();
        assert!(h.check(&FgAbelian::trivial()).is_empty());
        assert_eq!(h.lower_central_series().len(), 3);
        assert_eq!(h.center(), Subspace::span(3, &[h.basis_vector(2)]));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let bad = GradedNilLie::from_brackets(
            vec![vec![]; 3],
            &[(0, 1, 2, q(1)), (0, 2, 0, q(1))],
        )
        .unwrap();
        let issues = bad.check(&FgAbelian::trivial());
        assert!(issues.iter().any(|s| s.contains("Jacobi")), "{issues:?}");
    }

    #[test]
    fn grading_violation_is_reported() {
        let x = FgAbelian::free(1);
        let l = GradedNilLie::from_brackets(
            vec![ivec(&[1]), ivec(&[1]), ivec(&[1])],
            &[(0, 1, 2, q(1))],
        )
        .unwrap();
        assert!(l.check(&x).iter().any(|s| s.contains("grading")));
        let ok = GradedNilLie::from_brackets(
            vec![ivec(&[1]), ivec(&[1]), ivec(&[2])],
            &[(0, 1, 2, q(1))],
        )
        .unwrap();
        assert!(ok.check(&x).is_empty());
    }

    #[test]
    fn homogeneity() {
        let x = FgAbelian::free(1);
        let l = GradedNilLie::abelian(vec![ivec(&[0]), ivec(&[1])]);
        assert!(l.check(&x).is_empty());
        let diag = Subspace::span(2, &[vec![q(1), q(1)]]);
        assert!(!l.is_homogeneous(&diag));
        assert!(l.is_homogeneous(&Subspace::span(2, &[l.basis_vector(1)])));
    }
}
