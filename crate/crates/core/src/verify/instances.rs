//! Named and seeded instance families.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VerifyError;
use crate::agmodel::{identity_qmat, AlgGroupModel, GradedNilLie, MatrixRealization, QMat};
use crate::finitegrp::{
    alternating, cyclic, dihedral, direct_product, from_permutations, klein_four, quaternion,
    symmetric, FiniteGroup,
};
use crate::linalg::q;
use crate::zlattice::{ivec, FgAbelian, IntMatrix, LatticeHom};

/// Upper bounds for the random families.
pub const MAX_RANK: usize = 3;
pub const MAX_LIE_DIM: usize = 4;
pub const MAX_F_ORDER: usize = 16;
pub const MAX_FINITE_MODEL_ORDER: usize = 128;
pub const MAX_RANDOM_GROUP_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomModelKind {
    /// Trivial `F`, torsion-free `X`, characteristic 0.
    Connected,
    /// `L = 0`, finite `X`, characteristic prime to the order.
    Bridgeable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    /// `G_m ⋊ Z/2` with inversion.
    Example1 { p: u64 },
    /// `D(Z^(l-1)) ⋊ Z/l`, the generator acting by the companion matrix of
    /// the `l`-th cyclotomic polynomial (`l` prime).
    MuChain { ell: u64, p: u64 },
    /// `D(Z/2^n) ⋊ Z/2` with inversion: dihedral of order `2^(n+1)`.
    DihedralDual { n: u32 },
    /// Heisenberg algebra over a rank one torus; weights of `e0, e1, e2`
    /// with `w2 = w0 + w1`.
    HeisenbergTorus { weights: [i64; 3] },
    /// `G_a ⋊ G_m` with weight 1.
    GaGm,
    RandomFinite { seed: u64 },
    RandomModel { seed: u64, kind: RandomModelKind },
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Example1 { p } => write!(f, "example1(p={p})"),
            InstanceSpec::MuChain { ell, p } => write!(f, "mu_chain(l={ell},p={p})"),
            InstanceSpec::DihedralDual { n } => write!(f, "dihedral_dual({n})"),
            InstanceSpec::HeisenbergTorus { weights: w } => {
                write!(f, "heisenberg_torus({},{},{})", w[0], w[1], w[2])
            }
            InstanceSpec::GaGm => write!(f, "ga_gm"),
            InstanceSpec::RandomFinite { seed } => write!(f, "random_finite(seed={seed})"),
            InstanceSpec::RandomModel { seed, kind } => {
                let k = match kind {
                    RandomModelKind::Connected => "connected",
                    RandomModelKind::Bridgeable => "bridgeable",
                };
                write!(f, "random_model({k},seed={seed})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Model(AlgGroupModel),
    Finite(FiniteGroup),
}

impl Instance {
    pub fn model(self) -> Option<AlgGroupModel> {
        match self {
            Instance::Model(m) => Some(m),
            Instance::Finite(_) => None,
        }
    }

    pub fn finite(self) -> Option<FiniteGroup> {
        match self {
            Instance::Finite(g) => Some(g),
            Instance::Model(_) => None,
        }
    }
}

pub fn generate(spec: &InstanceSpec) -> Result<Instance, VerifyError> {
    let cap = |msg: String| VerifyError::CapExceeded(msg);
    match *spec {
        InstanceSpec::Example1 { p } => Ok(Instance::Model(example1(p))),
        InstanceSpec::MuChain { ell, p } => {
            if !crate::agmodel::is_prime(ell) || ell as usize > MAX_RANK + 1 + 4 {
                return Err(cap(format!("mu_chain needs a prime l <= 7, got {ell}")));
            }
            Ok(Instance::Model(mu_chain(ell, p)))
        }
        InstanceSpec::DihedralDual { n } => {
            if n == 0 || n > 6 {
                return Err(cap(format!("dihedral_dual needs 1 <= n <= 6, got {n}")));
            }
            Ok(Instance::Model(dihedral_dual(n)))
        }
        InstanceSpec::HeisenbergTorus { weights } => {
            if weights[2] != weights[0] + weights[1] {
                return Err(VerifyError::InvalidParameters(
                    "heisenberg_torus weights must satisfy w2 = w0 + w1".into(),
                ));
            }
            Ok(Instance::Model(heisenberg_torus(weights).0))
        }
        InstanceSpec::GaGm => Ok(Instance::Model(ga_gm().0)),
        InstanceSpec::RandomFinite { seed } => Ok(Instance::Finite(random_finite(seed))),
        InstanceSpec::RandomModel { seed, kind } => Ok(Instance::Model(match kind {
            RandomModelKind::Connected => random_connected(seed),
            RandomModelKind::Bridgeable => random_bridgeable(seed),
        })),
    }
}

pub fn example1(p: u64) -> AlgGroupModel {
    mu_chain(2, p)
}

fn cyclotomic_companion(ell: u64) -> IntMatrix {
    // Phi_l = 1 + x + ... + x^(l-1); companion matrix on Z^(l-1).
    let n = (ell - 1) as usize;
    let mut m = IntMatrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = BigInt::from(1);
    }
    for i in 0..n {
        m[(i, n - 1)] = BigInt::from(-1);
    }
    m
}

pub fn mu_chain(ell: u64, p: u64) -> AlgGroupModel {
    let n = (ell - 1) as usize;
    AlgGroupModel::from_generators(
        p,
        FgAbelian::free(n),
        cyclic(ell as usize),
        &[(1, cyclotomic_companion(ell), vec![])],
        GradedNilLie::zero(),
    )
    .expect("companion matrix has order l")
}

pub fn dihedral_dual(n: u32) -> AlgGroupModel {
    AlgGroupModel::from_generators(
        0,
        FgAbelian::cyclic(1 << n),
        cyclic(2),
        &[(1, IntMatrix::from_i64_rows(&[&[-1]]), vec![])],
        GradedNilLie::zero(),
    )
    .expect("inversion is an automorphism")
}

fn unit(d: usize, a: usize, b: usize) -> QMat {
    let mut m = vec![vec![q(0); d]; d];
    m[a][b] = q(1);
    m
}

/// The Heisenberg model with its realization by `3 × 3` upper triangular
/// matrices (torus `diag(t^(w0), 1, t^(-w1))`).
pub fn heisenberg_torus(weights: [i64; 3]) -> (AlgGroupModel, MatrixRealization) {
    let lie = GradedNilLie::from_brackets(
        weights.iter().map(|&w| ivec(&[w])).collect(),
        &[(0, 1, 2, q(1))],
    )
    .expect("Heisenberg brackets");
    let model = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
    let mut torus = vec![ivec(&[weights[0]]), ivec(&[0]), ivec(&[-weights[1]])];
    if weights[0] == 0 && weights[1] == 0 {
        // Scalars: still faithful on the torus.
        torus = vec![ivec(&[1]); 3];
    }
    let realization = MatrixRealization {
        dim: 3,
        torus,
        lie: vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)],
    };
    (model, realization)
}

/// `G_a ⋊ G_m` of weight 1 as `[[t, s], [0, 1]]`.
pub fn ga_gm() -> (AlgGroupModel, MatrixRealization) {
    let lie = GradedNilLie::abelian(vec![ivec(&[1])]);
    let model = AlgGroupModel::connected(0, FgAbelian::free(1), lie);
    let realization = MatrixRealization {
        dim: 2,
        torus: vec![ivec(&[1]), ivec(&[0])],
        lie: vec![unit(2, 0, 1)],
    };
    (model, realization)
}

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let choices = [(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2)];
    let (a, b) = *choices.choose(rng).expect("nonempty");
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> Vec<BigInt> {
    if rng.gen_bool(0.3) {
        return vec![BigInt::from(0); rank];
    }
    (0..rank).map(|_| BigInt::from(rng.gen_range(-2i64..=2))).collect()
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Connected model: `X = Z^r` with `r <= 3` and a graded nilpotent `L` of
/// dimension at most 4 taken from a list of shapes with random weights
/// and structure constants.
pub fn random_connected(seed: u64) -> AlgGroupModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(0..=MAX_RANK);
    let mut w = || random_weight(&mut rng, rank);
    let shape = seed_shape(seed);
    let (weights, brackets): (Vec<Vec<BigInt>>, Vec<(usize, usize, usize)>) = match shape {
        0 => (vec![], vec![]),
        1 => {
            let k = 1 + (seed as usize / 7) % MAX_LIE_DIM;
            ((0..k).map(|_| w()).collect(), vec![])
        }
        2 => {
            let (a, b) = (w(), w());
            let c = add(&a, &b);
            (vec![a, b, c], vec![(0, 1, 2)])
        }
        3 => {
            let (a, b, d) = (w(), w(), w());
            let c = add(&a, &b);
            (vec![a, b, c, d], vec![(0, 1, 2)])
        }
        4 => {
            let (a, b) = (w(), w());
            let c = add(&a, &b);
            let d = add(&a, &c);
            (vec![a, b, c, d], vec![(0, 1, 2), (0, 2, 3)])
        }
        _ => {
            let (a, b) = (w(), w());
            let d = add(&a, &b);
            (vec![a.clone(), b, a, d], vec![(0, 1, 3), (1, 2, 3)])
        }
    };
    let brackets: Vec<(usize, usize, usize, BigRational)> = brackets
        .into_iter()
        .map(|(i, j, k)| (i, j, k, small_rational(&mut rng)))
        .collect();
    let lie = GradedNilLie::from_brackets(weights, &brackets).expect("shapes satisfy Jacobi");
    let model = AlgGroupModel::connected(0, FgAbelian::free(rank), lie);
    debug_assert!(model.validate().is_empty());
    model
}

fn seed_shape(seed: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 61
}

fn x_menu() -> Vec<Vec<u64>> {
    let mut v: Vec<Vec<u64>> = vec![vec![]];
    v.extend((2..=16).map(|n| vec![n]));
    v.extend([vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 6], vec![4, 4], vec![2, 2, 2]]);
    v
}

fn f_menu() -> Vec<FiniteGroup> {
    let mut v = vec![cyclic(1)];
    v.extend((2..=6).map(cyclic));
    v.extend([cyclic(8), klein_four(), dihedral(3), dihedral(4), quaternion(), symmetric(3)]);
    v
}

fn random_automorphism(rng: &mut ChaCha8Rng, x: &FgAbelian) -> Option<LatticeHom> {
    let n = x.ngens();
    let bound = x.invariants().iter().cloned().max().unwrap_or(BigInt::from(1));
    let bound = i64::try_from(&bound).unwrap_or(1).max(1);
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(0..bound))).collect())
        .collect();
    let hom = LatticeHom::endo(x.clone(), IntMatrix::from_rows(n, &rows)).ok()?;
    let elements = x.elements()?;
    let mut images: Vec<Vec<BigInt>> = elements.iter().map(|e| x.reduce(&hom.apply(e))).collect();
    images.sort();
    images.dedup();
    (images.len() == elements.len()).then_some(hom)
}

fn power(h: &LatticeHom, k: usize) -> LatticeHom {
    let mut acc = LatticeHom::identity(h.source().clone());
    for _ in 0..k {
        acc = acc.compose(h).expect("endomorphism");
    }
    acc
}

/// Finite constant model: `L = 0`, small finite `X`, `F` from a menu with a
/// random action through automorphisms, `|X| |F| <= 128`.
pub fn random_bridgeable(seed: u64) -> AlgGroupModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xB1D6_E5A1);
    let xs = x_menu();
    let fs = f_menu();
    loop {
        let inv = xs.choose(&mut rng).expect("nonempty").clone();
        let x = FgAbelian::new(0, inv.iter().map(|&d| BigInt::from(d)).collect())
            .expect("menu invariants form a chain");
        let f = fs.choose(&mut rng).expect("nonempty").clone();
        let x_order: usize = inv.iter().product::<u64>() as usize;
        if x_order * f.order() > MAX_FINITE_MODEL_ORDER {
            continue;
        }
        let n = x.ngens();
        let neg = LatticeHom::endo(x.clone(), IntMatrix::zeros(n, n).sub(&IntMatrix::identity(n)))
            .expect("negation is an endomorphism");
        let gens = f.greedy_generators();
        let trivial: Vec<(usize, IntMatrix, QMat)> = gens
            .iter()
            .map(|&g| (g, IntMatrix::identity(n), identity_qmat(0)))
            .collect();
        let mut model = AlgGroupModel::from_generators(0, x.clone(), f.clone(), &trivial, GradedNilLie::zero())
            .expect("trivial action");
        // Generators go to powers of one automorphism, so only the relations
        // of F can fail; retry until the action is well defined and nontrivial.
        let attempts = if rng.gen_bool(0.1) { 0 } else { 32 };
        for attempt in 0..attempts {
            let base = if attempt % 3 == 0 {
                Some(neg.clone())
            } else {
                random_automorphism(&mut rng, &x)
            };
            let Some(base) = base else { continue };
            let assignment: Vec<(usize, IntMatrix, QMat)> = gens
                .iter()
                .map(|&g| (g, power(&base, rng.gen_range(0..6)).matrix().clone(), identity_qmat(0)))
                .collect();
            let r = AlgGroupModel::from_generators(0, x.clone(), f.clone(), &assignment, GradedNilLie::zero());
            if let Ok(m) = r {
                if (0..m.f().order()).any(|g| !m.acts_trivially_on_x(g)) {
                    model = m;
                    break;
                }
            }
        }
        let order = x_order * f.order();
        let primes: Vec<u64> = [2u64, 3, 5, 7, 11, 13]
            .into_iter()
            .filter(|p| !(order as u64).is_multiple_of(*p))
            .collect();
        let p = if rng.gen_bool(0.5) {
            0
        } else {
            *primes.choose(&mut rng).expect("no order up to 128 is divisible by all six primes")
        };
        return model.with_char(p);
    }
}

/// A finite group of order at most 64: a standard family, a product of two,
/// or a random permutation group.
pub fn random_finite(seed: u64) -> FiniteGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xF1_4173);
    let basic = || {
        vec![
            cyclic(1),
            cyclic(2),
            cyclic(4),
            cyclic(6),
            cyclic(12),
            klein_four(),
            dihedral(3),
            dihedral(4),
            dihedral(5),
            dihedral(8),
            dihedral(16),
            quaternion(),
            symmetric(3),
            symmetric(4),
            alternating(4),
        ]
    };
    loop {
        match rng.gen_range(0..3) {
            0 => return basic().choose(&mut rng).expect("nonempty").clone(),
            1 => {
                let b = basic();
                let g = b.choose(&mut rng).expect("nonempty");
                let h = b.choose(&mut rng).expect("nonempty");
                if g.order() * h.order() <= MAX_RANDOM_GROUP_ORDER {
                    return direct_product(g, h);
                }
            }
            _ => {
                let degree = rng.gen_range(3..=6);
                let gens: Vec<Vec<usize>> = (0..2)
                    .map(|_| {
                        let mut p: Vec<usize> = (0..degree).collect();
                        p.shuffle(&mut rng);
                        p
                    })
                    .collect();
                if let Ok((g, _)) = from_permutations(&gens, MAX_RANDOM_GROUP_ORDER) {
                    return g;
                }
            }
        }
    }
}

/// Per-instance seeds derived from a suite seed.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_instances_validate() {
        for p in [0, 2, 3] {
            assert!(example1(p).validate().is_empty());
        }
        for ell in [2, 3, 5, 7] {
            assert!(mu_chain(ell, 0).validate().is_empty());
        }
        let (h, r) = heisenberg_torus([1, -1, 0]);
        assert!(h.check_realization(&r).is_empty());
        let (h0, r0) = heisenberg_torus([0, 0, 0]);
        assert!(h0.check_realization(&r0).is_empty());
        let (g, r) = ga_gm();
        assert!(g.check_realization(&r).is_empty());
        assert_eq!(dihedral_dual(3).to_finite().unwrap().group.order(), 16);
    }

    #[test]
    fn random_families_validate_and_respect_caps() {
        for s in instance_seeds(11, 40) {
            let c = random_connected(s);
            assert!(c.validate().is_empty());
            assert!(c.is_connected() && c.x().rank() <= MAX_RANK && c.dim_l() <= MAX_LIE_DIM);
            let b = random_bridgeable(s);
            assert!(b.validate().is_empty());
            assert!(b.is_finite_bridgeable());
            assert!(b.finite_order().unwrap() <= BigInt::from(MAX_FINITE_MODEL_ORDER));
            assert!(b.f().order() <= MAX_F_ORDER);
            assert!(random_finite(s).order() <= MAX_RANDOM_GROUP_ORDER);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(instance_seeds(5, 3), instance_seeds(5, 3));
        assert_eq!(random_connected(9), random_connected(9));
        assert_eq!(random_bridgeable(9), random_bridgeable(9));
    }

    #[test]
    fn heisenberg_weights_are_checked() {
        let bad = InstanceSpec::HeisenbergTorus { weights: [1, 1, 0] };
        assert!(matches!(generate(&bad), Err(VerifyError::InvalidParameters(_))));
    }
}
