//! Groups generated by permutations.

use std::collections::{BTreeSet, VecDeque};

use super::group::FiniteGroup;
use super::FiniteGroupError;

/// A permutation of `0..n` as its image list.
pub type Permutation = Vec<usize>;

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose_perm(p: &[usize], q: &[usize]) -> Permutation {
    q.iter().map(|&i| p[i]).collect()
}

fn check_perm(p: &[usize], degree: usize) -> Result<(), FiniteGroupError> {
    if p.len() != degree {
        return Err(FiniteGroupError::InvalidPermutation(format!(
            "{p:?} has length {} but degree is {degree}",
            p.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &i in p {
        if i >= degree || seen[i] {
            return Err(FiniteGroupError::InvalidPermutation(format!("{p:?} is not a bijection")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Cycle notation with points as written, `()` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// The group generated by the given permutations, with elements in
/// lexicographic order of their image lists (so the identity is element 0)
/// and named in cycle notation. Returns the elements alongside the group.
pub fn from_permutations(
    gens: &[Permutation],
    cap: usize,
) -> Result<(FiniteGroup, Vec<Permutation>), FiniteGroupError> {
    let degree = gens.first().map_or(0, Vec::len);
    for g in gens {
        check_perm(g, degree)?;
    }
    let id: Permutation = (0..degree).collect();
    let mut set: BTreeSet<Permutation> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose_perm(&x, g);
            if set.insert(y.clone()) {
                if set.len() > cap {
                    return Err(FiniteGroupError::OrderCap {
                        order: set.len(),
                        cap,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    let elements: Vec<Permutation> = set.into_iter().collect();
    let index = |p: &Permutation| elements.binary_search(p).expect("closed under products");
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index(&compose_perm(a, b))).collect())
        .collect();
    let names = elements.iter().map(|p| cycle_notation(p)).collect();
    let g = FiniteGroup::from_table_with_cap(rows, cap)?.with_names(names);
    Ok((g, elements))
}
