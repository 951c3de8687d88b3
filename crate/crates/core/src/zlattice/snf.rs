//! Smith and Hermite normal forms over the integers.
//!
//! Both routines track the unimodular transforms (and, for Smith form, their
//! inverses) so that callers can change coordinates on lattices exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * a * v == d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SmithState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithState {
    // row[target] += c * row[source]
    fn row_add(&mut self, target: usize, source: usize, c: &BigInt) {
        self.d.add_row_multiple(target, source, c);
        self.u.add_row_multiple(target, source, c);
        self.u_inv.add_col_multiple(source, target, &-c);
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn row_negate(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    // col[target] += c * col[source]
    fn col_add(&mut self, target: usize, source: usize, c: &BigInt) {
        self.d.add_col_multiple(target, source, c);
        self.v.add_col_multiple(target, source, c);
        self.v_inv.add_row_multiple(source, target, &-c);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }
}

/// Computes unimodular `u`, `v` with `u * a * v` diagonal and the diagonal a
/// divisibility chain of non-negative entries (zeros last).
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut st = SmithState {
        d: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut rank = 0;
    for k in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    let x = &st.d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if st.d[(bi, bj)].abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(st, rank);
            };
            st.row_swap(k, pi);
            st.col_swap(k, pj);

            let mut dirty = false;
            for i in k + 1..m {
                if st.d[(i, k)].is_zero() {
                    continue;
                }
                let q = &st.d[(i, k)] / &st.d[(k, k)];
                st.row_add(i, k, &-q);
                dirty |= !st.d[(i, k)].is_zero();
            }
            for j in k + 1..n {
                if st.d[(k, j)].is_zero() {
                    continue;
                }
                let q = &st.d[(k, j)] / &st.d[(k, k)];
                st.col_add(j, k, &-q);
                dirty |= !st.d[(k, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let pivot = st.d[(k, k)].clone();
            let offender = (k + 1..m).find(|&i| {
                (k + 1..n).any(|j| !st.d[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => st.row_add(k, i, &BigInt::from(1)),
                None => break,
            }
        }
        if st.d[(k, k)].is_negative() {
            st.row_negate(k);
        }
        rank += 1;
    }
    finish(st, rank)
}

fn finish(st: SmithState, rank: usize) -> SmithForm {
    SmithForm {
        u: st.u,
        u_inv: st.u_inv,
        d: st.d,
        v: st.v,
        v_inv: st.v_inv,
        rank,
    }
}

/// Row-style Hermite normal form `t * a == h` with `t` unimodular.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub t: IntMatrix,
    /// Pivot column of each nonzero row of `h`; rows past `pivots.len()` are zero.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the left kernel `{x : x * a == 0}` as rows.
    pub fn left_kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.t.rows()).map(|i| self.t.row_vec(i)).collect()
    }

    pub fn nonzero_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|i| self.h.row_vec(i)).collect()
    }
}

/// Canonical row Hermite form: echelon with positive pivots and entries above
/// each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> HermiteForm {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut t = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if h[(b, col)].abs() <= h[(i, col)].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            t.swap_rows(r, b);
            let mut clean = true;
            for i in r + 1..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = -(&h[(i, col)] / &h[(r, col)]);
                h.add_row_multiple(i, r, &q);
                t.add_row_multiple(i, r, &q);
                clean &= h[(i, col)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, col)].div_floor(&h[(r, col)]);
            h.add_row_multiple(i, r, &q);
            t.add_row_multiple(i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    HermiteForm { h, t, pivots }
}
