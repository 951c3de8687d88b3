//! Exact linear algebra over the rationals.
//!
//! Vectors are `Vec<BigRational>`; subspaces are kept in reduced row echelon
//! form so that equal subspaces compare equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QVec = Vec<BigRational>;

pub fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn to_q(v: &[BigInt]) -> QVec {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Clears denominators, returning a primitive integer vector on the same line.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[QVec], dim: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..dim {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// A subspace of `Q^dim` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<QVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        let rows: Vec<QVec> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        Self::span(dim, &rows)
    }

    pub fn span(dim: usize, rows: &[QVec]) -> Self {
        let (basis, pivots) = rref(rows, dim);
        Subspace { dim, basis, pivots }
    }

    pub fn span_int(dim: usize, rows: &[Vec<BigInt>]) -> Self {
        let rows: Vec<QVec> = rows.iter().map(|r| to_q(r)).collect();
        Self::span(dim, &rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[BigRational]) -> Option<QVec> {
        let c: QVec = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, row) in c.iter().zip(&self.basis) {
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= ci * b;
            }
        }
        rest.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.dim, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Solve a*B1 = b*B2 through the left kernel of the stacked bases.
        let k = self.rank();
        let mut cols: Vec<QVec> = Vec::new();
        for j in 0..self.dim {
            let mut col: QVec = self.basis.iter().map(|r| r[j].clone()).collect();
            col.extend(other.basis.iter().map(|r| -r[j].clone()));
            cols.push(col);
        }
        let kernel = right_kernel(&cols, k + other.rank());
        let rows: Vec<QVec> = kernel
            .iter()
            .map(|coef| combine(&coef[..k], &self.basis, self.dim))
            .collect();
        Self::span(self.dim, &rows)
    }

    /// Image under the column-convention map given by `m` (rows of length `dim`).
    pub fn image(&self, m: &[QVec]) -> Subspace {
        let rows: Vec<QVec> = self.basis.iter().map(|b| mat_apply(m, b)).collect();
        Self::span(m.len(), &rows)
    }

    /// Extends the basis of `self` to a basis of `sup` and returns the added
    /// vectors.
    pub fn complement_in(&self, sup: &Subspace) -> Vec<QVec> {
        let mut current = self.clone();
        let mut added = Vec::new();
        for b in &sup.basis {
            if !current.contains(b) {
                added.push(b.clone());
                current = current.sum(&Subspace::span(self.dim, std::slice::from_ref(b)));
            }
        }
        added
    }
}

/// Basis of `{x : m x = 0}` where `m` is given by its rows, `n` columns.
pub fn right_kernel(m: &[QVec], n: usize) -> Vec<QVec> {
    let (r, pivots) = rref(m, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![q(0); n];
            v[f] = q(1);
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients expressing `v` in the linearly independent list `basis`.
pub fn solve_in_basis(basis: &[QVec], v: &[BigRational]) -> Option<QVec> {
    let k = basis.len();
    let dim = v.len();
    // Columns are basis vectors; augmented with v.
    let rows: Vec<QVec> = (0..dim)
        .map(|r| {
            let mut row: QVec = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut out = vec![q(0); k];
    for (row, &p) in red.iter().zip(&pivots) {
        out[p] = row[k].clone();
    }
    Some(out)
}

pub fn mat_apply(m: &[QVec], v: &[BigRational]) -> QVec {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

fn combine(coef: &[BigRational], rows: &[QVec], dim: usize) -> QVec {
    let mut out = vec![BigRational::zero(); dim];
    for (c, r) in coef.iter().zip(rows) {
        for (o, x) in out.iter_mut().zip(r) {
            *o += c * x;
        }
    }
    out
}

/// Characteristic polynomial `det(xI - a)` of a square rational matrix,
/// coefficients lowest degree first.
pub fn char_poly(a: &[QVec]) -> QVec {
    // Faddeev-LeVerrier.
    let n = a.len();
    let mut coeffs = vec![q(0); n + 1];
    coeffs[n] = q(1);
    let mut m: Vec<QVec> = vec![vec![q(0); n]; n];
    for k in 1..=n {
        // m <- a*m + c_{n-k+1} I
        let mut am = mat_mul(a, &m);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = am;
        let tr = mat_mul(a, &m)
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (i, r)| acc + &r[i]);
        coeffs[n - k] = -tr / q(k as i64);
    }
    coeffs
}

pub fn mat_mul(a: &[QVec], b: &[QVec]) -> Vec<QVec> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(xs: &[i64]) -> QVec {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn char_poly_of_companion() {
        // x^2 + x + 1
        let a = vec![qv(&[0, -1]), qv(&[1, -1])];
        assert_eq!(char_poly(&a), qv(&[1, 1, 1]));
        let b = vec![qv(&[2, 1]), qv(&[0, 3])];
        assert_eq!(char_poly(&b), qv(&[6, -5, 1]));
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]);
        let b = Subspace::span(3, &[qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[qv(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.complement_in(&Subspace::full(3)).len(), 1);
        let k = right_kernel(&[qv(&[1, 1, 0])], 3);
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn solve_in_basis_finds_coefficients() {
        let basis = vec![qv(&[1, 1, 0]), qv(&[0, 1, 1])];
        assert_eq!(solve_in_basis(&basis, &qv(&[2, 5, 3])), Some(qv(&[2, 3])));
        assert_eq!(solve_in_basis(&basis, &qv(&[1, 0, 0])), None);
    }

    #[test]
    fn primitive_integer_clears_denominators() {
        let v = vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())];
        assert_eq!(primitive_integer(&v), vec![BigInt::from(3), BigInt::from(2)]);
    }
}
