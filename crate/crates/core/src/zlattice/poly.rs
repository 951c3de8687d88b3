//! Integer polynomials and their factorization into irreducibles.
//!
//! Factorization uses a square-free decomposition, extraction of
//! rational roots, and Kronecker's interpolation search for the remaining
//! factors. This is only meant for the small degrees that arise from lattice
//! endomorphisms of low rank.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    /// `x - a`.
    pub fn linear(a: &BigInt) -> Self {
        ZPoly(vec![-a, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has degree 0 here.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn constant(&self) -> BigInt {
        self.0.first().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> ZPoly {
        (0..e).fold(ZPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        ZPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient `self / d` when `d` divides `self` over the integers.
    pub fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        let (q, r) = self.div_rem_q(d);
        if !r.iter().all(Zero::is_zero) || !q.iter().all(|c| c.is_integer()) {
            return None;
        }
        Some(ZPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    fn div_rem_q(&self, d: &ZPoly) -> (Vec<BigRational>, Vec<BigRational>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r: Vec<BigRational> = self
            .0
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dl = BigRational::from_integer(d.leading());
        let dd = d.degree();
        if r.len() < d.0.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &c * BigRational::from_integer(dc.clone());
            }
            q[k] = c;
        }
        r.truncate(dd);
        (q, r)
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (_, r) = a.div_rem_q(&b);
            let r = rational_to_primitive(&r);
            a = b;
            b = r;
        }
        a.primitive()
    }
}

fn rational_to_primitive(v: &[BigRational]) -> ZPoly {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    ZPoly::new(v.iter().map(|x| (x * &l).to_integer()).collect()).primitive()
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let term = if i == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == BigInt::from(-1) {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

/// Factorization of a nonzero integer polynomial into irreducible primitive
/// factors with multiplicities. The sign and content are dropped.
pub fn factor(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let mut out: Vec<(ZPoly, usize)> = Vec::new();
    for (part, mult) in square_free_decomposition(f) {
        for irr in factor_square_free(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0 .0).cmp(&(b.0.degree(), &b.0 .0)));
    out
}

/// Square-free decomposition by repeated gcd with the derivative: pairs
/// `(a_i, i)` with `f = ± content * prod a_i^i`.
pub fn square_free_decomposition(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let mut rest = f.primitive();
    let mut out = Vec::new();
    let mut mult = 1;
    // rad(f) and the successive quotients f / rad^k.
    while rest.degree() > 0 {
        let g = rest.gcd(&rest.derivative());
        let rad = rest.exact_div(&g).expect("gcd divides").primitive();
        // rad = product of distinct irreducibles of `rest`; those of
        // multiplicity exactly one are rad / gcd(rad, g).
        let common = rad.gcd(&g);
        let once = rad.exact_div(&common).expect("gcd divides").primitive();
        if once.degree() > 0 {
            out.push((once, mult));
        }
        rest = g;
        mult += 1;
    }
    out
}

fn factor_square_free(f: &ZPoly) -> Vec<ZPoly> {
    let mut f = f.primitive();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    // Rational roots p/q with p | a0, q | lead.
    loop {
        if f.degree() == 0 {
            return out;
        }
        if f.constant().is_zero() {
            let x = ZPoly::from_i64(&[0, 1]);
            f = f.exact_div(&x).expect("x divides");
            out.push(x);
            continue;
        }
        let mut found = None;
        'search: for p in divisors(&f.constant()) {
            for qq in divisors(&f.leading()) {
                for s in [BigInt::one(), -BigInt::one()] {
                    let cand = ZPoly::new(vec![-(&s * &p), qq.clone()]).primitive();
                    if f.exact_div(&cand).is_some() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(c) => {
                f = f.exact_div(&c).expect("checked").primitive();
                out.push(c);
            }
            None => break,
        }
    }
    out.extend(kronecker(&f));
    out
}

/// Kronecker's method for a square-free primitive polynomial without
/// rational roots.
fn kronecker(f: &ZPoly) -> Vec<ZPoly> {
    if f.degree() <= 3 {
        return vec![f.clone()];
    }
    for d in 2..=f.degree() / 2 {
        if let Some(g) = find_factor_of_degree(f, d) {
            let h = f.exact_div(&g).expect("factor divides").primitive();
            let mut out = kronecker(&g);
            out.extend(kronecker(&h));
            return out;
        }
    }
    vec![f.clone()]
}

fn find_factor_of_degree(f: &ZPoly, d: usize) -> Option<ZPoly> {
    // Evaluation points with small nonzero values.
    let mut points: Vec<BigInt> = Vec::new();
    let mut k: i64 = 0;
    while points.len() < d + 1 {
        for x in [k, -k] {
            let x = BigInt::from(x);
            if points.len() < d + 1 && !points.contains(&x) && !f.eval(&x).is_zero() {
                points.push(x);
            }
        }
        k += 1;
    }
    let value_divisors: Vec<Vec<BigInt>> = points
        .iter()
        .map(|x| {
            let ds = divisors(&f.eval(x));
            ds.iter().flat_map(|v| [v.clone(), -v]).collect()
        })
        .collect();
    let mut choice = vec![0usize; d + 1];
    loop {
        // First value is taken positive to skip the sign symmetry.
        if value_divisors[0][choice[0]].is_positive() {
            let values: Vec<BigInt> = choice
                .iter()
                .enumerate()
                .map(|(i, &c)| value_divisors[i][c].clone())
                .collect();
            if let Some(g) = interpolate(&points, &values) {
                if g.degree() == d && f.exact_div(&g).is_some() {
                    return Some(g.primitive());
                }
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < value_divisors[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation; `None` unless the result has integer coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Option<ZPoly> {
    let n = xs.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * BigRational::from_integer(xs[j].clone());
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = BigRational::new(ys[i].clone(), denom);
        for (a, b) in acc.iter_mut().zip(&basis) {
            *a += b * &scale;
        }
    }
    if !acc.iter().all(|c| c.is_integer()) {
        return None;
    }
    Some(ZPoly::new(acc.into_iter().map(|c| c.to_integer()).collect()))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            small.push(i.clone());
            let other = &n / &i;
            if other != i {
                large.push(other);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Expands a factor list back into a polynomial.
pub fn expand(factors: &[(ZPoly, usize)]) -> ZPoly {
    factors
        .iter()
        .fold(ZPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
}
