//! The model `G = (U ⋊ D(X)) ⋊ F` and its validation.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lie::{identity_qmat, GradedNilLie, QMat};
use super::ModelError;
use crate::finitegrp::FiniteGroup;
use crate::linalg::{mat_apply, mat_mul, QVec};
use crate::zlattice::{FgAbelian, IntMatrix, LatticeHom};

/// A violated model invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub invariant: &'static str,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.message)
    }
}

fn diag(invariant: &'static str, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        invariant,
        message: message.into(),
    }
}

/// Group data over an algebraically closed field of characteristic `char_p`
/// (0 or a prime). `action_x[f]` and `action_l[f]` are the actions of the
/// element `f` of `F` on `X` and on `L`, as matrices on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgGroupModel {
    char_p: u64,
    x: FgAbelian,
    f: FiniteGroup,
    action_x: Vec<IntMatrix>,
    lie: GradedNilLie,
    action_l: Vec<QMat>,
}

impl fmt::Debug for AlgGroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgGroupModel(char {}, X = {}, |F| = {}, dim L = {})",
            self.char_p,
            self.x,
            self.f.order(),
            self.lie.dim()
        )
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl AlgGroupModel {
    /// Assembles a model without validation. Weights are reduced.
    pub fn new(
        char_p: u64,
        x: FgAbelian,
        f: FiniteGroup,
        action_x: Vec<IntMatrix>,
        lie: GradedNilLie,
        action_l: Vec<QMat>,
    ) -> Self {
        let lie = if lie.weights().iter().all(|w| w.len() == x.ngens()) {
            let weights: Vec<Vec<BigInt>> = lie.weights().iter().map(|w| x.reduce(w)).collect();
            GradedNilLie::from_structure_constants(weights, lie.structure_constants().to_vec())
        } else {
            lie
        };
        AlgGroupModel {
            char_p,
            x,
            f,
            action_x,
            lie,
            action_l,
        }
    }

    /// Model with trivial `F`.
    pub fn connected(char_p: u64, x: FgAbelian, lie: GradedNilLie) -> Self {
        let n = x.ngens();
        let d = lie.dim();
        Self::new(
            char_p,
            x,
            FiniteGroup::from_table(vec![vec![0]]).expect("trivial group"),
            vec![IntMatrix::identity(n)],
            lie,
            vec![identity_qmat(d)],
        )
    }

    /// Extends actions given on generators of `F` to all of `F`, checking
    /// that the extension is consistent, then validates.
    pub fn from_generators(
        char_p: u64,
        x: FgAbelian,
        f: FiniteGroup,
        generators: &[(usize, IntMatrix, QMat)],
        lie: GradedNilLie,
    ) -> Result<Self, ModelError> {
        let n = x.ngens();
        let d = lie.dim();
        for (g, a, b) in generators {
            if *g >= f.order() {
                return Err(ModelError::Invalid(vec![diag(
                    "action",
                    format!("generator index {g} is not an element of F"),
                )]));
            }
            if a.rows() != n || a.cols() != n || b.len() != d || b.iter().any(|r| r.len() != d) {
                return Err(ModelError::Invalid(vec![diag(
                    "action",
                    format!("action matrices of {} have the wrong size", f.name(*g)),
                )]));
            }
        }
        let mut ax: Vec<Option<IntMatrix>> = vec![None; f.order()];
        let mut al: Vec<Option<QMat>> = vec![None; f.order()];
        ax[f.identity()] = Some(IntMatrix::identity(n));
        al[f.identity()] = Some(identity_qmat(d));
        let mut queue = VecDeque::from([f.identity()]);
        while let Some(e) = queue.pop_front() {
            for (g, a, b) in generators {
                let target = f.mul(e, *g);
                let new_a = ax[e].as_ref().expect("visited").mul(a);
                let new_b = mat_mul(al[e].as_ref().expect("visited"), b);
                match (&ax[target], &al[target]) {
                    (Some(old_a), Some(old_b)) => {
                        let same_x = LatticeHom::new(x.clone(), x.clone(), old_a.clone())
                            .ok()
                            .zip(LatticeHom::new(x.clone(), x.clone(), new_a.clone()).ok())
                            .is_some_and(|(p, q)| p.same_map(&q));
                        if !same_x || old_b != &new_b {
                            return Err(ModelError::Invalid(vec![diag(
                                "action-homomorphism",
                                format!(
                                    "generator actions do not define a homomorphism (conflict at {})",
                                    f.name(target)
                                ),
                            )]));
                        }
                    }
                    _ => {
                        ax[target] = Some(new_a);
                        al[target] = Some(new_b);
                        queue.push_back(target);
                    }
                }
            }
        }
        if ax.iter().any(Option::is_none) {
            return Err(ModelError::Invalid(vec![diag(
                "action",
                "the given generators do not generate F",
            )]));
        }
        let model = Self::new(
            char_p,
            x,
            f,
            ax.into_iter().map(|a| a.expect("filled")).collect(),
            lie,
            al.into_iter().map(|b| b.expect("filled")).collect(),
        );
        model.check()?;
        Ok(model)
    }

    pub fn char_p(&self) -> u64 {
        self.char_p
    }

    pub fn x(&self) -> &FgAbelian {
        &self.x
    }

    pub fn f(&self) -> &FiniteGroup {
        &self.f
    }

    pub fn lie(&self) -> &GradedNilLie {
        &self.lie
    }

    pub fn dim_l(&self) -> usize {
        self.lie.dim()
    }

    pub fn action_x_matrix(&self, g: usize) -> &IntMatrix {
        &self.action_x[g]
    }

    pub fn action_x(&self, g: usize) -> LatticeHom {
        LatticeHom::endo(self.x.clone(), self.action_x[g].clone())
            .expect("validated action is well defined")
    }

    pub fn action_l(&self, g: usize) -> &QMat {
        &self.action_l[g]
    }

    pub fn act_x(&self, g: usize, chi: &[BigInt]) -> Vec<BigInt> {
        self.x.reduce(&self.action_x[g].apply(chi))
    }

    pub fn act_l(&self, g: usize, v: &[num_rational::BigRational]) -> QVec {
        mat_apply(&self.action_l[g], v)
    }

    /// `A_g - id` on `X`.
    pub fn action_x_minus_id(&self, g: usize) -> LatticeHom {
        self.action_x(g)
            .sub(&LatticeHom::identity(self.x.clone()))
            .expect("same group")
    }

    pub fn acts_trivially_on_x(&self, g: usize) -> bool {
        self.action_x(g).is_identity()
    }

    pub fn acts_trivially_on_l(&self, g: usize) -> bool {
        self.action_l[g] == identity_qmat(self.lie.dim())
    }

    /// Checks every model invariant; an empty list means the model is valid.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.char_p != 0 && !is_prime(self.char_p) {
            out.push(diag(
                "characteristic",
                format!("characteristic {} is neither 0 nor a prime", self.char_p),
            ));
        }
        let n = self.x.ngens();
        let d = self.lie.dim();
        let order = self.f.order();
        if self.action_x.len() != order || self.action_l.len() != order {
            out.push(diag("action", "one action matrix is required per element of F"));
            return out;
        }
        for g in 0..order {
            let a = &self.action_x[g];
            if a.rows() != n || a.cols() != n {
                out.push(diag("action", format!("lattice action of {} has the wrong size", self.f.name(g))));
                return out;
            }
            if let Err(e) = LatticeHom::endo(self.x.clone(), a.clone()) {
                out.push(diag("action", format!("lattice action of {}: {e}", self.f.name(g))));
                return out;
            }
            let b = &self.action_l[g];
            if b.len() != d || b.iter().any(|r| r.len() != d) {
                out.push(diag("action", format!("Lie action of {} has the wrong size", self.f.name(g))));
                return out;
            }
        }
        let e = self.f.identity();
        if !self.acts_trivially_on_x(e) || !self.acts_trivially_on_l(e) {
            out.push(diag("action-identity", "the identity of F must act trivially"));
        }
        'hom: for g in 0..order {
            for h in 0..order {
                let gh = self.f.mul(g, h);
                let composed = self.action_x(g).compose(&self.action_x(h)).expect("same group");
                if !composed.same_map(&self.action_x(gh)) {
                    out.push(diag(
                        "action-homomorphism",
                        format!(
                            "lattice action is not multiplicative at ({}, {})",
                            self.f.name(g),
                            self.f.name(h)
                        ),
                    ));
                    break 'hom;
                }
                if mat_mul(&self.action_l[g], &self.action_l[h]) != self.action_l[gh] {
                    out.push(diag(
                        "action-homomorphism",
                        format!(
                            "Lie action is not multiplicative at ({}, {})",
                            self.f.name(g),
                            self.f.name(h)
                        ),
                    ));
                    break 'hom;
                }
            }
        }
        if d > 0 && self.char_p != 0 {
            out.push(diag(
                "characteristic",
                "unipotent part requires characteristic 0",
            ));
        }
        out.extend(self.lie.check(&self.x).into_iter().map(|m| diag("lie", m)));
        if !out.is_empty() {
            return out;
        }
        for g in 0..order {
            let b = &self.action_l[g];
            'auto: for i in 0..d {
                for j in 0..d {
                    let lhs = mat_apply(b, self.lie.basis_bracket(i, j));
                    let bi = mat_apply(b, &self.lie.basis_vector(i));
                    let bj = mat_apply(b, &self.lie.basis_vector(j));
                    if lhs != self.lie.bracket(&bi, &bj) {
                        out.push(diag(
                            "lie-automorphism",
                            format!("{} does not preserve the bracket", self.f.name(g)),
                        ));
                        break 'auto;
                    }
                }
            }
            for i in 0..d {
                let target = self.act_x(g, self.lie.weight(i));
                for k in 0..d {
                    if !b[k][i].is_zero() && self.lie.weight(k) != target.as_slice() {
                        out.push(diag(
                            "equivariance",
                            format!(
                                "{} maps e{i} outside the weight space of its translated weight",
                                self.f.name(g)
                            ),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn check(&self) -> Result<(), ModelError> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(ModelError::Invalid(d))
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.f.order() != 1 {
            return false;
        }
        if self.char_p == 0 {
            return self.x.is_torsion_free();
        }
        let mut t = self.x.torsion_order();
        let p = BigInt::from(self.char_p);
        while (&t % &p).is_zero() {
            t /= &p;
        }
        t == BigInt::from(1)
    }

    pub fn is_commutative(&self) -> bool {
        self.lie.is_abelian()
            && self.f.is_abelian()
            && self.lie.weights().iter().all(|w| w.iter().all(Zero::is_zero))
            && (0..self.f.order()).all(|g| self.acts_trivially_on_x(g) && self.acts_trivially_on_l(g))
    }

    /// `L = 0`, `X` finite and the characteristic prime to `|X|` and `|F|`.
    pub fn is_finite_bridgeable(&self) -> bool {
        if self.lie.dim() != 0 || !self.x.is_finite() {
            return false;
        }
        if self.char_p == 0 {
            return true;
        }
        let p = BigInt::from(self.char_p);
        let order_x = self.x.order().expect("finite");
        !(order_x % &p).is_zero() && !(self.f.order() as u64).is_multiple_of(self.char_p)
    }

    /// Group order when the model is a finite constant group.
    pub fn finite_order(&self) -> Option<BigInt> {
        self.is_finite_bridgeable()
            .then(|| self.x.order().expect("finite") * BigInt::from(self.f.order()))
    }

    pub fn with_char(&self, char_p: u64) -> Self {
        let mut m = self.clone();
        m.char_p = char_p;
        m
    }
}
