use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use hypercenter::zlattice::{
    chain_limit, hermite_normal_form, smith_normal_form, ChainLimitOutcome, FgAbelian, IntMatrix,
    Lattice, LatticeHom, StepOperator, SubgroupOfFgA,
};

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-bound..=bound, rows * cols).prop_map(move |e| {
        let rows: Vec<Vec<BigInt>> = e.chunks(cols).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntMatrix::from_rows(cols, &rows)
    })
}

fn any_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

fn generators(dim: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec(proptest::collection::vec(-6i64..=6, dim), 0..=4)
        .prop_map(|g| g.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect())
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs() == BigInt::from(1)
}

proptest! {
    #[test]
    fn smith_form_is_a_unimodular_diagonalization(a in any_matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        prop_assert!(s.u.mul(&s.u_inv).is_identity() && s.v.mul(&s.v_inv).is_identity());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), s.rank);
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn hermite_form_is_canonical(a in any_matrix()) {
        let h = hermite_normal_form(&a);
        prop_assert_eq!(h.t.mul(&a), h.h.clone());
        prop_assert!(is_unimodular(&h.t));
        let again = hermite_normal_form(&h.h);
        prop_assert_eq!(again.h, h.h.clone());
        for (r, &p) in h.pivots.iter().enumerate() {
            prop_assert!(h.h[(r, p)].is_positive());
            for above in 0..r {
                prop_assert!(!h.h[(above, p)].is_negative() && h.h[(above, p)] < h.h[(r, p)]);
            }
        }
        for k in h.left_kernel() {
            let zero = IntMatrix::from_rows(a.rows(), &[k]).mul(&a);
            prop_assert!(zero.is_zero());
        }
    }

    #[test]
    fn lattice_identities(a in generators(3), b in generators(3), perm in any::<u64>()) {
        let la = Lattice::from_generators(3, &a);
        let lb = Lattice::from_generators(3, &b);
        let sum = la.sum(&lb);
        let meet = la.intersect(&lb);
        prop_assert!(sum.contains_lattice(&la) && sum.contains_lattice(&lb));
        prop_assert!(la.contains_lattice(&meet) && lb.contains_lattice(&meet));
        prop_assert_eq!(meet.clone(), lb.intersect(&la));
        prop_assert_eq!(sum.rank() + meet.rank(), la.rank() + lb.rank());
        // Same lattice from reordered and redundant generators.
        let mut shuffled = a.clone();
        if !shuffled.is_empty() {
            let k = (perm as usize) % shuffled.len();
            shuffled.rotate_left(k);
            let extra: Vec<BigInt> = shuffled[0].iter().zip(&shuffled[shuffled.len() - 1]).map(|(x, y)| x + y).collect();
            shuffled.push(extra);
        }
        prop_assert_eq!(Lattice::from_generators(3, &shuffled), la.clone());
        for g in &a {
            prop_assert!(la.contains(g));
        }
    }

    #[test]
    fn subgroup_canonical_basis(gens in generators(2), torsion in 2u64..=12) {
        let x = FgAbelian::new(1, vec![BigInt::from(torsion)]).unwrap();
        let s = SubgroupOfFgA::new(x.clone(), gens.clone());
        let t = SubgroupOfFgA::new(x.clone(), s.canonical_basis());
        prop_assert_eq!(&s, &t);
        prop_assert_eq!(s.canonical_basis(), t.canonical_basis());
        prop_assert_eq!(s.canonicalize().canonical_basis(), s.canonical_basis());
        for g in &gens {
            prop_assert!(s.contains(g));
        }
    }
}

/// `m^k Z` descends to `Z` when `|m| = 1` and to `0` otherwise.
fn scalar_limit(m: i64) -> bool {
    m.abs() == 1
}

fn chain_terms(start: &SubgroupOfFgA, op: &StepOperator, n: usize) -> Vec<SubgroupOfFgA> {
    let mut out = vec![start.clone()];
    for _ in 0..n {
        let next = op.apply(out.last().unwrap());
        out.push(next);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_limit_matches_diagonal_oracle(a in -4i64..=4, b in -4i64..=4) {
        let x = FgAbelian::free(2);
        let m = LatticeHom::endo(x.clone(), IntMatrix::from_i64_rows(&[&[a, 0], &[0, b]])).unwrap();
        let op = StepOperator::new(SubgroupOfFgA::trivial(x.clone()), vec![m]);
        let out = chain_limit(&SubgroupOfFgA::whole(x.clone()), &op, 32).unwrap();
        let limit = out.limit().expect("single map").clone();
        let mut gens = Vec::new();
        if scalar_limit(a) { gens.push(vec![BigInt::from(1), BigInt::from(0)]); }
        if scalar_limit(b) { gens.push(vec![BigInt::from(0), BigInt::from(1)]); }
        prop_assert_eq!(limit, SubgroupOfFgA::new(x, gens));
    }

    #[test]
    fn chain_limit_is_stable_and_below_every_term(entries in proptest::collection::vec(-3i64..=3, 4), w in generators(2)) {
        let x = FgAbelian::free(2);
        let m = LatticeHom::endo(x.clone(), IntMatrix::from_i64_rows(&[&entries[..2], &entries[2..]])).unwrap();
        let w = SubgroupOfFgA::new(x.clone(), w);
        let op = StepOperator::new(w, vec![m]);
        // Start from a subgroup the operator maps into itself.
        let start = SubgroupOfFgA::whole(x.clone());
        let out = chain_limit(&start, &op, 32).unwrap();
        prop_assert!(!matches!(out, ChainLimitOutcome::Undetermined { .. }), "{:?}", out);
        let limit = out.limit().unwrap().clone();
        prop_assert_eq!(op.apply(&limit), limit.clone());
        let terms = chain_terms(&start, &op, 24);
        for (k, t) in terms.iter().enumerate() {
            prop_assert!(limit.is_subgroup_of(t).unwrap(), "limit not in term {}", k);
        }
        if let ChainLimitOutcome::FixedPoint { depth, .. } = out {
            prop_assert_eq!(&terms[depth.min(24)], &limit);
        }
    }

    #[test]
    fn chain_limit_three_dimensional(entries in proptest::collection::vec(-2i64..=2, 9), w in generators(3)) {
        let x = FgAbelian::free(3);
        let m = LatticeHom::endo(x.clone(), IntMatrix::from_i64_rows(&[&entries[..3], &entries[3..6], &entries[6..]])).unwrap();
        let op = StepOperator::new(SubgroupOfFgA::new(x.clone(), w), vec![m]);
        let start = SubgroupOfFgA::whole(x.clone());
        let out = chain_limit(&start, &op, 32).unwrap();
        let limit = out.limit().expect("single map").clone();
        prop_assert_eq!(op.apply(&limit), limit.clone());
        for t in chain_terms(&start, &op, 16) {
            prop_assert!(limit.is_subgroup_of(&t).unwrap());
        }
    }
}
