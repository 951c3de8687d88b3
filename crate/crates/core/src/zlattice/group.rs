//! Finitely generated abelian groups, their subgroups and homomorphisms.
//!
//! A group `X = Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s` is stored by its invariant
//! factors. Its elements are integer vectors with the free coordinates first;
//! the relation lattice `R` is spanned by `d_j e_{rank+j}`. A subgroup of `X`
//! is represented by its full preimage lattice in `Z^{rank+s}`, which always
//! contains `R`, so subgroup arithmetic is lattice arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::LatticeError;

/// `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s` with `d_1 | d_2 | ... | d_s`, each `d_j >= 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbelian {
    rank: usize,
    invariants: Vec<BigInt>,
}

impl FgAbelian {
    pub fn new(rank: usize, invariants: Vec<BigInt>) -> Result<Self, LatticeError> {
        for (i, d) in invariants.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(LatticeError::InvalidInvariants(format!(
                    "invariant factor {d} is smaller than 2"
                )));
            }
            if i > 0 && !d.is_multiple_of(&invariants[i - 1]) {
                return Err(LatticeError::InvalidInvariants(format!(
                    "{} does not divide {d}",
                    invariants[i - 1]
                )));
            }
        }
        Ok(FgAbelian { rank, invariants })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelian {
            rank,
            invariants: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => FgAbelian {
                rank: 0,
                invariants: vec![BigInt::from(n)],
            },
        }
    }

    /// Canonical form of `Z^ngens / <relations>` with the projection matrix
    /// from `Z^ngens` onto the canonical coordinates.
    pub fn from_presentation(ngens: usize, relations: &[Vec<BigInt>]) -> (Self, IntMatrix) {
        let q = QuotientPresentation::of_lattice(&Lattice::from_generators(ngens, relations));
        (q.group, q.projection)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    /// Number of coordinates of an element vector.
    pub fn ngens(&self) -> usize {
        self.rank + self.invariants.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariants.iter().fold(BigInt::one(), |a, d| a * d))
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariants.iter().fold(BigInt::one(), |a, d| a * d)
    }

    pub fn relations(&self) -> Lattice {
        let n = self.ngens();
        let gens: Vec<Vec<BigInt>> = self
            .invariants
            .iter()
            .enumerate()
            .map(|(j, d)| {
                let mut v = vec![BigInt::zero(); n];
                v[self.rank + j] = d.clone();
                v
            })
            .collect();
        Lattice::from_generators(n, &gens)
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ngens()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<BigInt> {
        let mut v = self.zero();
        v[i] = BigInt::one();
        self.reduce(&v)
    }

    /// Canonical representative: torsion coordinates reduced into `[0, d_j)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ngens(), "element has wrong length");
        let mut out = v.to_vec();
        for (j, d) in self.invariants.iter().enumerate() {
            out[self.rank + j] = out[self.rank + j].mod_floor(d);
        }
        out
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&s)
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.reduce(&s)
    }

    pub fn scale(&self, k: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = a.iter().map(|x| k * x).collect();
        self.reduce(&s)
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    /// All elements of a finite group, in mixed-radix order.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for d in &self.invariants {
            let d: u64 = d.try_into().ok()?;
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for prefix in &out {
                for x in 0..d {
                    let mut v = prefix.clone();
                    v.push(BigInt::from(x));
                    next.push(v);
                }
            }
            out = next;
        }
        Some(out)
    }

    /// The torsion subgroup.
    pub fn torsion_subgroup(&self) -> SubgroupOfFgA {
        SubgroupOfFgA::from_lattice(self.clone(), self.relations().saturate())
    }
}

impl fmt::Debug for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.invariants.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Index of a subgroup in its ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupIndex {
    Finite(BigInt),
    Infinite,
}

/// A subgroup of an [`FgAbelian`], kept in canonical lattice form.
#[derive(Clone)]
pub struct SubgroupOfFgA {
    ambient: FgAbelian,
    generators: Vec<Vec<BigInt>>,
    lattice: Lattice,
}

impl PartialEq for SubgroupOfFgA {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.lattice == other.lattice
    }
}

impl Eq for SubgroupOfFgA {}

impl fmt::Debug for SubgroupOfFgA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<Vec<String>> = self
            .canonical_basis()
            .iter()
            .map(|g| g.iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "<{gens:?}> in {}", self.ambient)
    }
}

impl SubgroupOfFgA {
    pub fn new(ambient: FgAbelian, generators: Vec<Vec<BigInt>>) -> Self {
        let n = ambient.ngens();
        let generators: Vec<Vec<BigInt>> = generators.iter().map(|g| ambient.reduce(g)).collect();
        let lattice = Lattice::from_generators(n, &generators).sum(&ambient.relations());
        SubgroupOfFgA {
            ambient,
            generators,
            lattice,
        }
    }

    /// Wraps a lattice of `Z^n` containing the relation lattice.
    pub fn from_lattice(ambient: FgAbelian, lattice: Lattice) -> Self {
        debug_assert!(lattice.contains_lattice(&ambient.relations()));
        let mut s = SubgroupOfFgA {
            ambient,
            generators: Vec::new(),
            lattice,
        };
        s.generators = s.canonical_basis();
        s
    }

    pub fn whole(ambient: FgAbelian) -> Self {
        let n = ambient.ngens();
        Self::from_lattice(ambient, Lattice::full(n))
    }

    pub fn trivial(ambient: FgAbelian) -> Self {
        let r = ambient.relations();
        Self::from_lattice(ambient, r)
    }

    pub fn ambient(&self) -> &FgAbelian {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Generating set derived from the Hermite basis of the preimage lattice,
    /// with relation rows (which reduce to zero) dropped.
    pub fn canonical_basis(&self) -> Vec<Vec<BigInt>> {
        self.lattice
            .basis()
            .iter()
            .map(|b| self.ambient.reduce(b))
            .filter(|b| b.iter().any(|x| !x.is_zero()))
            .collect()
    }

    /// Rebuilds from the canonical basis; equal to `self` by construction.
    pub fn canonicalize(&self) -> Self {
        Self::new(self.ambient.clone(), self.canonical_basis())
    }

    fn check(&self, other: &SubgroupOfFgA) -> Result<(), LatticeError> {
        if self.ambient != other.ambient {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient.to_string(),
                right: other.ambient.to_string(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, element: &[BigInt]) -> bool {
        self.lattice.contains(element)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupOfFgA) -> Result<bool, LatticeError> {
        self.check(other)?;
        Ok(other.lattice.contains_lattice(&self.lattice))
    }

    pub fn sum(&self, other: &SubgroupOfFgA) -> Result<SubgroupOfFgA, LatticeError> {
        self.check(other)?;
        Ok(Self::from_lattice(
            self.ambient.clone(),
            self.lattice.sum(&other.lattice),
        ))
    }

    pub fn intersect(&self, other: &SubgroupOfFgA) -> Result<SubgroupOfFgA, LatticeError> {
        self.check(other)?;
        Ok(Self::from_lattice(
            self.ambient.clone(),
            self.lattice.intersect(&other.lattice),
        ))
    }

    pub fn equal(&self, other: &SubgroupOfFgA) -> Result<bool, LatticeError> {
        self.check(other)?;
        Ok(self.lattice == other.lattice)
    }

    pub fn is_whole(&self) -> bool {
        self.lattice.rank() == self.lattice.dim()
            && self.lattice.index_in(&Lattice::full(self.lattice.dim())) == Some(BigInt::one())
    }

    pub fn is_trivial(&self) -> bool {
        self.lattice == self.ambient.relations()
    }

    /// `[X : S]`.
    pub fn index(&self) -> GroupIndex {
        match self.lattice.index_in(&Lattice::full(self.lattice.dim())) {
            Some(i) => GroupIndex::Finite(i),
            None => GroupIndex::Infinite,
        }
    }

    /// Order of the subgroup, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let rel = self.ambient.relations();
        if self.lattice.rank() != rel.rank() {
            return None;
        }
        rel.index_in(&self.lattice)
    }

    pub fn torsion_part(&self) -> SubgroupOfFgA {
        Self::from_lattice(
            self.ambient.clone(),
            self.lattice.intersect(&self.ambient.relations().saturate()),
        )
    }

    /// `{x in X : k x in S for some k >= 1}`.
    pub fn saturation(&self) -> SubgroupOfFgA {
        Self::from_lattice(self.ambient.clone(), self.lattice.saturate())
    }

    /// Rank of the free part of the subgroup.
    pub fn free_rank(&self) -> usize {
        self.lattice.rank() - self.ambient.invariants().len()
    }

    /// The quotient `X / S` in canonical form, with its projection.
    pub fn quotient(&self) -> QuotientPresentation {
        QuotientPresentation::of_lattice(&self.lattice)
    }

    /// The subgroup as an abstract group in canonical form, with its inclusion.
    pub fn as_group(&self) -> SubgroupPresentation {
        SubgroupPresentation::new(self)
    }
}

/// A homomorphism between finitely generated abelian groups, given by an
/// integer matrix acting on element vectors (column convention).
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeHom {
    source: FgAbelian,
    target: FgAbelian,
    matrix: IntMatrix,
}

impl fmt::Debug for LatticeHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {:?}", self.source, self.target, self.matrix)
    }
}

/// Endomorphisms are the square case of [`LatticeHom`].
pub type LatticeEndo = LatticeHom;

impl LatticeHom {
    /// Checks that the matrix maps relations into relations.
    pub fn new(source: FgAbelian, target: FgAbelian, matrix: IntMatrix) -> Result<Self, LatticeError> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(LatticeError::DimensionMismatch {
                expected: (target.ngens(), source.ngens()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        let target_rel = target.relations();
        for r in source.relations().basis() {
            if !target_rel.contains(&matrix.apply(r)) {
                return Err(LatticeError::NotWellDefined(format!(
                    "relation {:?} is not mapped to a relation",
                    r.iter().map(ToString::to_string).collect::<Vec<_>>()
                )));
            }
        }
        Ok(LatticeHom {
            source,
            target,
            matrix,
        })
    }

    pub fn endo(group: FgAbelian, matrix: IntMatrix) -> Result<Self, LatticeError> {
        Self::new(group.clone(), group, matrix)
    }

    pub fn identity(group: FgAbelian) -> Self {
        let n = group.ngens();
        LatticeHom {
            source: group.clone(),
            target: group,
            matrix: IntMatrix::identity(n),
        }
    }

    pub fn source(&self) -> &FgAbelian {
        &self.source
    }

    pub fn target(&self) -> &FgAbelian {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.target.reduce(&self.matrix.apply(x))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LatticeHom) -> Result<LatticeHom, LatticeError> {
        if inner.target != self.source {
            return Err(LatticeError::AmbientMismatch {
                left: self.source.to_string(),
                right: inner.target.to_string(),
            });
        }
        Ok(LatticeHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    /// `self - other`, both with the same source and target.
    pub fn sub(&self, other: &LatticeHom) -> Result<LatticeHom, LatticeError> {
        if self.source != other.source || self.target != other.target {
            return Err(LatticeError::AmbientMismatch {
                left: format!("{:?}", self),
                right: format!("{:?}", other),
            });
        }
        Ok(LatticeHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    /// Equality as maps of groups (matrices may differ by relations).
    pub fn same_map(&self, other: &LatticeHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && (0..self.source.ngens()).all(|i| {
                let e = self.source.basis_element(i);
                self.apply(&e) == other.apply(&e)
            })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.same_map(&LatticeHom::identity(self.source.clone()))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.ngens()).all(|i| {
            self.target
                .is_zero_element(&self.apply(&self.source.basis_element(i)))
        })
    }

    /// Agreement on every element of a subgroup of the source.
    pub fn agrees_on(&self, other: &LatticeHom, s: &SubgroupOfFgA) -> bool {
        s.lattice()
            .basis()
            .iter()
            .all(|b| self.apply(b) == other.apply(b))
    }

    /// Vanishing on every element of a subgroup of the source.
    pub fn vanishes_on(&self, s: &SubgroupOfFgA) -> bool {
        s.lattice()
            .basis()
            .iter()
            .all(|b| self.target.is_zero_element(&self.matrix.apply(b)))
    }

    pub fn image(&self, s: &SubgroupOfFgA) -> Result<SubgroupOfFgA, LatticeError> {
        if s.ambient() != &self.source {
            return Err(LatticeError::AmbientMismatch {
                left: self.source.to_string(),
                right: s.ambient().to_string(),
            });
        }
        let img = s.lattice().image(&self.matrix).sum(&self.target.relations());
        Ok(SubgroupOfFgA::from_lattice(self.target.clone(), img))
    }

    pub fn preimage(&self, s: &SubgroupOfFgA) -> Result<SubgroupOfFgA, LatticeError> {
        if s.ambient() != &self.target {
            return Err(LatticeError::AmbientMismatch {
                left: self.target.to_string(),
                right: s.ambient().to_string(),
            });
        }
        Ok(SubgroupOfFgA::from_lattice(
            self.source.clone(),
            Lattice::preimage(&self.matrix, s.lattice()),
        ))
    }

    pub fn kernel(&self) -> SubgroupOfFgA {
        self.preimage(&SubgroupOfFgA::trivial(self.target.clone()))
            .expect("same target")
    }

    /// Restriction of an endomorphism to an invariant subgroup, expressed in
    /// the canonical coordinates of that subgroup.
    pub fn restrict(&self, pres: &SubgroupPresentation) -> Result<LatticeHom, LatticeError> {
        let inc = pres.inclusion();
        let g = pres.group();
        let mut m = IntMatrix::zeros(g.ngens(), g.ngens());
        for j in 0..g.ngens() {
            let x = self.apply(&inc.apply(&g.basis_element(j)));
            let c = pres.coords(&x).ok_or_else(|| {
                LatticeError::NotWellDefined("subgroup is not invariant".to_string())
            })?;
            for i in 0..g.ngens() {
                m[(i, j)] = c[i].clone();
            }
        }
        LatticeHom::endo(g.clone(), m)
    }

    /// The induced map on quotients `X/S -> X/S` for an invariant `S`.
    pub fn induced_on_quotient(&self, q: &QuotientPresentation) -> Result<LatticeHom, LatticeError> {
        let g = q.group();
        let mut m = IntMatrix::zeros(g.ngens(), g.ngens());
        for j in 0..g.ngens() {
            let x = q.projection_hom().apply(&self.matrix.apply(&q.lift(&g.basis_element(j))));
            for i in 0..g.ngens() {
                m[(i, j)] = x[i].clone();
            }
        }
        LatticeHom::endo(g.clone(), m)
    }
}

/// `X / S` in canonical form.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    group: FgAbelian,
    /// `n' x n` matrix sending element vectors of `X` to those of `X/S`.
    projection: IntMatrix,
    /// `n x n'` matrix sending canonical coordinates back to a representative.
    lift: IntMatrix,
}

impl QuotientPresentation {
    /// `Z^n / lattice`.
    pub fn of_lattice(lattice: &Lattice) -> Self {
        let n = lattice.dim();
        let b = lattice.basis_matrix();
        let k = b.rows();
        let s = smith_normal_form(&b);
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for j in 0..n {
            if j < k {
                let d = &s.d[(j, j)];
                if !d.is_one() {
                    torsion.push((j, d.clone()));
                }
            } else {
                free.push(j);
            }
        }
        let mut positions = free.clone();
        positions.extend(torsion.iter().map(|(j, _)| *j));
        let group = FgAbelian {
            rank: free.len(),
            invariants: torsion.into_iter().map(|(_, d)| d).collect(),
        };
        let projection = s.v.select_cols(&positions).transpose();
        let mut lift = IntMatrix::zeros(n, positions.len());
        for (c, &p) in positions.iter().enumerate() {
            for r in 0..n {
                lift[(r, c)] = s.v_inv[(p, r)].clone();
            }
        }
        QuotientPresentation {
            group,
            projection,
            lift,
        }
    }

    pub fn group(&self) -> &FgAbelian {
        &self.group
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.group.reduce(&self.projection.apply(x))
    }

    /// A representative in `Z^n` of a quotient element.
    pub fn lift(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.lift.apply(y)
    }

    /// The projection as a homomorphism from the (free) coordinate group.
    fn projection_hom(&self) -> LatticeHom {
        LatticeHom {
            source: FgAbelian::free(self.projection.cols()),
            target: self.group.clone(),
            matrix: self.projection.clone(),
        }
    }

    /// The projection as a homomorphism `X -> X/S`.
    pub fn projection_from(&self, ambient: &FgAbelian) -> LatticeHom {
        LatticeHom::new(ambient.clone(), self.group.clone(), self.projection.clone())
            .expect("relations lie in the kernel")
    }
}

/// A subgroup `S ⊆ X` as an abstract group in canonical form.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    group: FgAbelian,
    inclusion: LatticeHom,
    basis: Lattice,
    v: IntMatrix,
    positions: Vec<usize>,
}

impl SubgroupPresentation {
    fn new(s: &SubgroupOfFgA) -> Self {
        let ambient = s.ambient().clone();
        let lat = s.lattice().clone();
        let k = lat.rank();
        let rel_coords: Vec<Vec<BigInt>> = ambient
            .relations()
            .basis()
            .iter()
            .map(|r| lat.coords(r).expect("relations lie in every subgroup"))
            .collect();
        let rel = IntMatrix::from_rows(k, &rel_coords);
        let sf = smith_normal_form(&rel);
        let srows = rel.rows();
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for j in 0..k {
            if j < srows {
                let d = &sf.d[(j, j)];
                if !d.is_one() {
                    torsion.push((j, d.clone()));
                }
            } else {
                free.push(j);
            }
        }
        let mut positions = free.clone();
        positions.extend(torsion.iter().map(|(j, _)| *j));
        let group = FgAbelian {
            rank: free.len(),
            invariants: torsion.into_iter().map(|(_, d)| d).collect(),
        };
        let b = lat.basis_matrix();
        let mut inc = IntMatrix::zeros(ambient.ngens(), positions.len());
        for (c, &p) in positions.iter().enumerate() {
            let row: Vec<BigInt> = sf.v_inv.row_vec(p);
            let x = IntMatrix::from_rows(k, &[row]).mul(&b);
            for r in 0..ambient.ngens() {
                inc[(r, c)] = x[(0, r)].clone();
            }
        }
        let inclusion = LatticeHom::new(group.clone(), ambient, inc).expect("inclusion is well defined");
        SubgroupPresentation {
            group,
            inclusion,
            basis: lat,
            v: sf.v,
            positions,
        }
    }

    pub fn group(&self) -> &FgAbelian {
        &self.group
    }

    pub fn inclusion(&self) -> &LatticeHom {
        &self.inclusion
    }

    /// Canonical coordinates of an ambient element lying in the subgroup.
    pub fn coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.basis.coords(x)?;
        let k = c.len();
        let cv = IntMatrix::from_rows(k, &[c]).mul(&self.v);
        let y: Vec<BigInt> = self.positions.iter().map(|&p| cv[(0, p)].clone()).collect();
        Some(self.group.reduce(&y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::matrix::ivec;

    fn z() -> FgAbelian {
        FgAbelian::free(1)
    }

    #[test]
    fn invariant_chain_is_enforced() {
        assert!(FgAbelian::new(0, ivec(&[2, 4])).is_ok());
        assert!(FgAbelian::new(0, ivec(&[2, 3])).is_err());
        assert!(FgAbelian::new(0, ivec(&[1])).is_err());
    }

    #[test]
    fn intersect_two_z_three_z() {
        let a = SubgroupOfFgA::new(z(), vec![ivec(&[2])]);
        let b = SubgroupOfFgA::new(z(), vec![ivec(&[3])]);
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, SubgroupOfFgA::new(z(), vec![ivec(&[6])]));
        assert_eq!(c.index(), GroupIndex::Finite(BigInt::from(6)));
    }

    #[test]
    fn quotient_of_z_by_power_of_two_is_cyclic() {
        for i in 1..6u32 {
            let s = SubgroupOfFgA::new(z(), vec![vec![BigInt::from(2).pow(i)]]);
            let q = s.quotient();
            assert_eq!(q.group(), &FgAbelian::cyclic(2u64.pow(i)));
        }
    }

    #[test]
    fn image_of_inversion_minus_identity() {
        let f = LatticeHom::endo(z(), IntMatrix::from_i64_rows(&[&[-1]])).unwrap();
        let h = f.sub(&LatticeHom::identity(z())).unwrap();
        let img = h.image(&SubgroupOfFgA::whole(z())).unwrap();
        assert_eq!(img, SubgroupOfFgA::new(z(), vec![ivec(&[2])]));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = SubgroupOfFgA::whole(z());
        let b = SubgroupOfFgA::whole(FgAbelian::free(2));
        assert!(matches!(a.sum(&b), Err(LatticeError::AmbientMismatch { .. })));
    }

    #[test]
    fn well_definedness_is_checked() {
        let c4 = FgAbelian::cyclic(4);
        assert!(LatticeHom::new(c4.clone(), z(), IntMatrix::from_i64_rows(&[&[1]])).is_err());
        assert!(LatticeHom::new(z(), c4.clone(), IntMatrix::from_i64_rows(&[&[1]])).is_ok());
        assert!(LatticeHom::endo(c4, IntMatrix::from_i64_rows(&[&[3]])).is_ok());
    }

    #[test]
    fn torsion_and_saturation() {
        let x = FgAbelian::new(1, ivec(&[4])).unwrap();
        let s = SubgroupOfFgA::new(x.clone(), vec![ivec(&[2, 2])]);
        assert_eq!(s.torsion_part(), SubgroupOfFgA::trivial(x.clone()));
        let sat = s.saturation();
        assert!(sat.contains(&ivec(&[1, 1])));
        assert!(sat.contains(&ivec(&[0, 1])));
        assert_eq!(s.order(), None);
        let t = SubgroupOfFgA::new(x, vec![ivec(&[0, 2])]);
        assert_eq!(t.order(), Some(BigInt::from(2)));
    }

    #[test]
    fn subgroup_presentation_round_trips() {
        let x = FgAbelian::new(1, ivec(&[6])).unwrap();
        let s = SubgroupOfFgA::new(x.clone(), vec![ivec(&[2, 3]), ivec(&[0, 2])]);
        let p = s.as_group();
        for g in s.canonical_basis() {
            let c = p.coords(&g).expect("member");
            assert_eq!(p.inclusion().apply(&c), x.reduce(&g));
        }
        assert!(p.coords(&ivec(&[1, 0])).is_none());
    }

    #[test]
    fn preimage_contains_kernel() {
        let x = FgAbelian::free(2);
        let h = LatticeHom::endo(x.clone(), IntMatrix::from_i64_rows(&[&[1, 1], &[0, 0]])).unwrap();
        let k = h.kernel();
        assert!(k.contains(&ivec(&[1, -1])));
        let target = SubgroupOfFgA::new(x.clone(), vec![ivec(&[2, 0])]);
        let pre = h.preimage(&target).unwrap();
        assert!(pre.contains(&ivec(&[1, 1])));
        assert!(!pre.contains(&ivec(&[1, 0])));
    }
}
