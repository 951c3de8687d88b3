//! Standard small groups.

use super::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use super::perm::from_permutations;

fn from_rows(rows: Vec<Vec<usize>>, names: Vec<String>) -> FiniteGroup {
    FiniteGroup::from_table_with_cap(rows, usize::MAX)
        .expect("family tables are groups")
        .with_names(names)
}

/// `Z/n`, element `k` is the residue `k`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    from_rows(rows, (0..n).map(|k| k.to_string()).collect())
}

/// Dihedral group of order `2n`: element `k + n e` is `r^k s^e`, with
/// `s r s = r^-1`. Element 1 is the rotation `r`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let decode = |x: usize| (x % n, x / n);
    let rows = (0..2 * n)
        .map(|a| {
            (0..2 * n)
                .map(|b| {
                    let (k1, e1) = decode(a);
                    let (k2, e2) = decode(b);
                    // r^k1 s^e1 r^k2 s^e2 = r^(k1 ± k2) s^(e1+e2)
                    let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
                    k % n + n * ((e1 + e2) % 2)
                })
                .collect()
        })
        .collect();
    let names = (0..2 * n)
        .map(|x| {
            let (k, e) = decode(x);
            match (k, e) {
                (0, 0) => "1".to_string(),
                (k, 0) => format!("r^{k}"),
                (0, _) => "s".to_string(),
                (k, _) => format!("r^{k}s"),
            }
        })
        .collect();
    from_rows(rows, names)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return cyclic(1);
    }
    let swap: Vec<usize> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_permutations(&[swap, cycle], DEFAULT_ORDER_CAP)
        .expect("symmetric group within cap")
        .0
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return cyclic(1);
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            // 3-cycle (0 1 k)
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    from_permutations(&gens, DEFAULT_ORDER_CAP)
        .expect("alternating group within cap")
        .0
}

/// Quaternion group of order 8 as a permutation group on itself.
pub fn quaternion() -> FiniteGroup {
    // Points 0..8 encode ±1, ±i, ±j, ±k as 2*unit + sign.
    let mul_unit = |a: usize, b: usize| -> (usize, usize) {
        // returns (unit, sign) for units 0=1,1=i,2=j,3=k
        match (a, b) {
            (0, x) | (x, 0) => (x, 0),
            (x, y) if x == y => (0, 1),
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let left = |unit: usize| -> Vec<usize> {
        (0..8)
            .map(|p| {
                let (u, s) = (p / 2, p % 2);
                let (w, t) = mul_unit(unit, u);
                2 * w + (s + t) % 2
            })
            .collect()
    };
    from_permutations(&[left(1), left(2)], DEFAULT_ORDER_CAP)
        .expect("order 8")
        .0
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

/// `(Z/p)^k`.
pub fn elementary_abelian(p: usize, k: u32) -> FiniteGroup {
    (0..k).fold(cyclic(1), |acc, _| direct_product(&acc, &cyclic(p)))
}

/// `A × B` with element `(a, b)` at index `a |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let rows = (0..na * nb)
        .map(|x| {
            (0..na * nb)
                .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                .collect()
        })
        .collect();
    let names = (0..na * nb)
        .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
        .collect();
    from_rows(rows, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(elementary_abelian(2, 3).order(), 8);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        let involutions = (0..8).filter(|&g| q.element_order(g) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(q.center().order(), 2);
    }

    #[test]
    fn dihedral_relations() {
        let g = dihedral(5);
        let (r, s) = (1, 5);
        assert_eq!(g.element_order(r), 5);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
    }
}
