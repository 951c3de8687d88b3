//! Limits of descending chains `Y_{d+1} = W + sum_i M_i(Y_d)`.
//!
//! The chain is iterated until it stabilizes. If it does not within the
//! depth budget, and all maps that still act nontrivially agree, the limit is
//! computed exactly from the factorization of the characteristic polynomial
//! of the induced map modulo the rational span of the `M`-closure of `W`:
//! only the part where the map is invertible over the integers survives.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::group::{FgAbelian, LatticeEndo, SubgroupOfFgA};
use super::lattice::Lattice;
use super::poly::{expand, factor, ZPoly};
use super::LatticeError;
use crate::linalg::{char_poly, primitive_integer, to_q, QVec, Subspace};

const CLOSURE_CAP: usize = 512;

/// `Y -> W + sum_i M_i(Y)` on subgroups of a fixed group.
#[derive(Clone, Debug)]
pub struct StepOperator {
    pub w: SubgroupOfFgA,
    pub maps: Vec<LatticeEndo>,
}

impl StepOperator {
    pub fn new(w: SubgroupOfFgA, maps: Vec<LatticeEndo>) -> Self {
        StepOperator { w, maps }
    }

    pub fn ambient(&self) -> &FgAbelian {
        self.w.ambient()
    }

    pub fn apply(&self, y: &SubgroupOfFgA) -> SubgroupOfFgA {
        let mut out = self.w.clone();
        for m in &self.maps {
            out = out
                .sum(&m.image(y).expect("same ambient"))
                .expect("same ambient");
        }
        out
    }
}

/// Evidence for an exactly computed limit.
#[derive(Clone, Debug)]
pub struct ChainLimitCertificate {
    /// Depth at which a single map was isolated.
    pub split_depth: usize,
    /// Irreducible factors (with multiplicity) of the induced map on the quotient.
    pub char_poly_factors: Vec<(ZPoly, usize)>,
    /// Factors with unit constant term, whose kernel is kept.
    pub unit_factors: Vec<(ZPoly, usize)>,
    /// Integer basis of the kept part of the quotient space, lifted.
    pub unit_part_basis: Vec<Vec<BigInt>>,
    /// The `M`-closure of `W`.
    pub closure: SubgroupOfFgA,
    /// Number of closing iterations from the projected start.
    pub closing_steps: usize,
    /// Rational span on which the chain stabilizes, strictly larger than
    /// that of the limit.
    pub stable_span: Subspace,
}

#[derive(Clone, Debug)]
pub enum ChainLimitOutcome {
    /// `Y_depth == Y_{depth+1}`.
    FixedPoint { limit: SubgroupOfFgA, depth: usize },
    /// Limit computed from the unit-factor split.
    UnitFactorSplit {
        limit: SubgroupOfFgA,
        certificate: Box<ChainLimitCertificate>,
    },
    /// Several distinct maps remain and the chain did not stabilize.
    Undetermined {
        last: SubgroupOfFgA,
        depth: usize,
        reason: String,
    },
}

impl ChainLimitOutcome {
    pub fn limit(&self) -> Option<&SubgroupOfFgA> {
        match self {
            ChainLimitOutcome::FixedPoint { limit, .. }
            | ChainLimitOutcome::UnitFactorSplit { limit, .. } => Some(limit),
            ChainLimitOutcome::Undetermined { .. } => None,
        }
    }
}

/// Limit of `start ⊇ T(start) ⊇ T^2(start) ⊇ ...`.
pub fn chain_limit(
    start: &SubgroupOfFgA,
    op: &StepOperator,
    max_depth: usize,
) -> Result<ChainLimitOutcome, LatticeError> {
    let mut y = start.clone();
    let mut next = op.apply(&y);
    if !next.is_subgroup_of(&y)? {
        return Err(LatticeError::NotDescending);
    }
    let mut depth = 0;
    while depth < max_depth {
        if next == y {
            return Ok(ChainLimitOutcome::FixedPoint { limit: y, depth });
        }
        y = next;
        next = op.apply(&y);
        depth += 1;
    }
    if next == y {
        return Ok(ChainLimitOutcome::FixedPoint { limit: y, depth });
    }

    let active: Vec<&LatticeEndo> = op.maps.iter().filter(|m| !m.vanishes_on(&y)).collect();
    let Some(first) = active.first() else {
        // Only W remains, so the next step is already fixed.
        let limit = op.w.clone();
        return Ok(ChainLimitOutcome::FixedPoint {
            limit,
            depth: depth + 1,
        });
    };
    if active.iter().any(|m| !m.agrees_on(first, &y)) {
        return Ok(ChainLimitOutcome::Undetermined {
            last: y,
            depth,
            reason: format!(
                "{} distinct maps remain active after {depth} steps",
                active.len()
            ),
        });
    }
    let m = (*first).clone();
    let (limit, mut certificate) = single_map_limit(&y, &op.w, &m, depth)?;
    if op.apply(&limit) != limit || !limit.is_subgroup_of(&y)? {
        return Ok(ChainLimitOutcome::Undetermined {
            last: y,
            depth,
            reason: "exact limit failed verification".to_string(),
        });
    }
    let stable = stable_rational_span(&y, op);
    if stable.rank() == limit.lattice().rank() {
        // Finite index above the limit: the chain reaches it.
        while y != limit {
            y = op.apply(&y);
            depth += 1;
        }
        return Ok(ChainLimitOutcome::FixedPoint { limit, depth });
    }
    certificate.stable_span = stable;
    Ok(ChainLimitOutcome::UnitFactorSplit {
        limit,
        certificate: Box::new(certificate),
    })
}

fn stable_rational_span(y: &SubgroupOfFgA, op: &StepOperator) -> Subspace {
    let n = y.ambient().ngens();
    let w = Subspace::span_int(n, op.w.lattice().basis());
    let mats: Vec<Vec<QVec>> = op.maps.iter().map(|m| q_rows(m.matrix())).collect();
    let mut v = Subspace::span_int(n, y.lattice().basis());
    loop {
        let mut next = w.clone();
        for m in &mats {
            next = next.sum(&v.image(m));
        }
        if next == v {
            return v;
        }
        v = next;
    }
}

/// Smallest `M`-stable subgroup containing `w`.
pub fn m_closure(w: &SubgroupOfFgA, m: &LatticeEndo) -> SubgroupOfFgA {
    let mut cur = w.clone();
    loop {
        let next = cur.sum(&m.image(&cur).expect("same ambient")).expect("same ambient");
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn single_map_limit(
    start: &SubgroupOfFgA,
    w: &SubgroupOfFgA,
    m: &LatticeEndo,
    split_depth: usize,
) -> Result<(SubgroupOfFgA, ChainLimitCertificate), LatticeError> {
    let ambient = start.ambient().clone();
    let n = ambient.ngens();
    let closure = m_closure(w, m);
    let n0 = Subspace::span_int(n, closure.lattice().basis());
    let v = Subspace::span_int(n, start.lattice().basis());
    let comp = n0.complement_in(&v);
    let k = comp.len();
    let mat = m.matrix();

    // Matrix of the induced map on V / N0 in the basis `comp`.
    let mut full_basis: Vec<QVec> = n0.basis().to_vec();
    full_basis.extend(comp.iter().cloned());
    let full = Subspace::span(n, &full_basis);
    let offset = n0.rank();
    let mut induced: Vec<QVec> = vec![vec![crate::linalg::q(0); k]; k];
    for (j, c) in comp.iter().enumerate() {
        let img = crate::linalg::mat_apply(&q_rows(mat), c);
        let coords = coords_in(&full_basis, &full, &img);
        for i in 0..k {
            induced[i][j] = coords[offset + i].clone();
        }
    }
    let cp = char_poly(&induced);
    let cp_int = ZPoly::new(cp.iter().map(|c| c.to_integer()).collect());
    debug_assert!(cp.iter().all(|c| c.is_integer()));
    let factors = if k == 0 { Vec::new() } else { factor(&cp_int) };
    let unit_factors: Vec<(ZPoly, usize)> = factors
        .iter()
        .filter(|(f, _)| f.constant().abs().is_one())
        .cloned()
        .collect();
    let u = expand(&unit_factors);

    // Kernel of u(induced) inside the quotient coordinates.
    let u_of = poly_of_matrix(&u, &induced);
    let ker = crate::linalg::right_kernel(&u_of, k);
    let lifted: Vec<Vec<BigInt>> = ker
        .iter()
        .map(|coef| {
            let mut x = vec![crate::linalg::q(0); n];
            for (cj, b) in coef.iter().zip(&comp) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += cj * bi;
                }
            }
            primitive_integer(&x)
        })
        .collect();
    let mut span_rows: Vec<Vec<BigInt>> = n0
        .basis()
        .iter()
        .map(|r| primitive_integer(r))
        .collect();
    span_rows.extend(lifted.iter().cloned());
    let keep = Lattice::from_generators(n, &span_rows).saturate();
    let p = SubgroupOfFgA::from_lattice(
        ambient.clone(),
        start.lattice().intersect(&keep).sum(&ambient.relations()),
    );

    let mut cur = p;
    let mut steps = 0;
    loop {
        let next = closure
            .sum(&m.image(&cur).expect("same ambient"))
            .expect("same ambient");
        if next == cur || steps >= CLOSURE_CAP {
            break;
        }
        cur = next;
        steps += 1;
    }
    Ok((
        cur,
        ChainLimitCertificate {
            split_depth,
            char_poly_factors: factors,
            unit_factors,
            unit_part_basis: lifted,
            closure,
            closing_steps: steps,
            stable_span: Subspace::zero(n),
        },
    ))
}

fn q_rows(m: &super::matrix::IntMatrix) -> Vec<QVec> {
    m.to_rows().iter().map(|r| to_q(r)).collect()
}

// Coordinates of `v` in the (linearly independent) list `basis`.
fn coords_in(basis: &[QVec], span: &Subspace, v: &QVec) -> QVec {
    // Solve sum c_i basis_i = v via the echelon coordinates of both sides.
    let echelon_v = span.coords(v).expect("image stays in the start space");
    let k = basis.len();
    let cols: Vec<QVec> = (0..k)
        .map(|i| span.coords(&basis[i]).expect("basis lies in span"))
        .collect();
    // cols[i] are the echelon coordinates of basis_i; solve the square system.
    let mut aug: Vec<QVec> = (0..k)
        .map(|r| {
            let mut row: QVec = (0..k).map(|i| cols[i][r].clone()).collect();
            row.push(echelon_v[r].clone());
            row
        })
        .collect();
    let (red, pivots) = crate::linalg::rref(&aug, k + 1);
    aug = red;
    let mut out = vec![crate::linalg::q(0); k];
    for (row, &p) in aug.iter().zip(&pivots) {
        if p < k {
            out[p] = row[k].clone();
        }
    }
    out
}

fn poly_of_matrix(u: &ZPoly, a: &[QVec]) -> Vec<QVec> {
    let k = a.len();
    let mut acc: Vec<QVec> = vec![vec![crate::linalg::q(0); k]; k];
    for c in u.coeffs().iter().rev() {
        acc = crate::linalg::mat_mul(&acc, a);
        let c = num_rational::BigRational::from_integer(c.clone());
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    acc
}
