use std::collections::VecDeque;
use std::fmt;

use super::FiniteGroupError;

pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A finite group stored as a validated Cayley table on `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.n)
    }
}

/// A subgroup, as a sorted list of element indices of its parent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupOfFinite {
    parent_order: usize,
    elements: Vec<usize>,
}

impl fmt::Debug for SubgroupOfFinite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements)
    }
}

impl SubgroupOfFinite {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn is_subgroup_of(&self, other: &SubgroupOfFinite) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn intersect(&self, other: &SubgroupOfFinite) -> SubgroupOfFinite {
        SubgroupOfFinite {
            parent_order: self.parent_order,
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&g| other.contains(g))
                .collect(),
        }
    }

    fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &g in &self.elements {
            m[g] = true;
        }
        m
    }
}

impl FiniteGroup {
    /// Validates a Cayley table under the default order cap.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, FiniteGroupError> {
        Self::from_table_with_cap(table, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(
        rows: Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<Self, FiniteGroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(FiniteGroupError::Empty);
        }
        if n > cap {
            return Err(FiniteGroupError::OrderCap { order: n, cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FiniteGroupError::NotSquare {
                    row: r,
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(FiniteGroupError::EntryOutOfRange {
                        row: r,
                        col: c,
                        entry: e,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(FiniteGroupError::NoIdentity)?;
        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| table[x * n + y] == identity && table[y * n + x] == identity)
                .ok_or(FiniteGroupError::NoInverse(x))?;
        }
        let g = FiniteGroup {
            n,
            table,
            identity,
            inverses,
            names: None,
        };
        g.check_associative()?;
        Ok(g)
    }

    // Light's test: it suffices to check (x g) y = x (g y) for g in a
    // generating set.
    fn check_associative(&self) -> Result<(), FiniteGroupError> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[self.identity] = true;
        let mut span_list = vec![self.identity];
        for g in 0..self.n {
            if span[g] {
                continue;
            }
            gens.push(g);
            // Closure of the span under right multiplication by all gens.
            let mut queue: VecDeque<usize> = span_list.iter().copied().collect();
            queue.push_back(g);
            if !span[g] {
                span[g] = true;
                span_list.push(g);
            }
            while let Some(x) = queue.pop_front() {
                for &s in &gens {
                    for y in [self.mul(x, s), self.mul(s, x)] {
                        if !span[y] {
                            span[y] = true;
                            span_list.push(y);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        for &g in &gens {
            for x in 0..self.n {
                let xg = self.mul(x, g);
                for y in 0..self.n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(FiniteGroupError::NotAssociative(x, g, y));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(n) => n[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| self.table[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `a b a^-1`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> SubgroupOfFinite {
        SubgroupOfFinite {
            parent_order: self.n,
            elements: (0..self.n).collect(),
        }
    }

    pub fn trivial(&self) -> SubgroupOfFinite {
        SubgroupOfFinite {
            parent_order: self.n,
            elements: vec![self.identity],
        }
    }

    /// Wraps a subset after checking closure.
    pub fn subgroup(&self, elements: &[usize]) -> Result<SubgroupOfFinite, FiniteGroupError> {
        let mut el = elements.to_vec();
        el.sort_unstable();
        el.dedup();
        let s = SubgroupOfFinite {
            parent_order: self.n,
            elements: el,
        };
        if !s.contains(self.identity)
            || s.elements.iter().any(|&a| {
                a >= self.n || s.elements.iter().any(|&b| !s.contains(self.mul(a, self.inv(b))))
            })
        {
            return Err(FiniteGroupError::NotASubgroup);
        }
        Ok(s)
    }

    pub fn generated(&self, gens: &[usize]) -> SubgroupOfFinite {
        let mut member = vec![false; self.n];
        member[self.identity] = true;
        let mut list = vec![self.identity];
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                    queue.push_back(y);
                }
            }
        }
        list.sort_unstable();
        SubgroupOfFinite {
            parent_order: self.n,
            elements: list,
        }
    }

    /// A generating set chosen greedily in element order.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut h = self.trivial();
        for g in 0..self.n {
            if !h.contains(g) {
                gens.push(g);
                h = self.generated(&gens);
            }
        }
        gens
    }

    pub fn join(&self, a: &SubgroupOfFinite, b: &SubgroupOfFinite) -> SubgroupOfFinite {
        let gens: Vec<usize> = a.elements.iter().chain(&b.elements).copied().collect();
        self.generated(&gens)
    }

    pub fn center(&self) -> SubgroupOfFinite {
        self.centralizer(&self.whole())
    }

    pub fn centralizer(&self, s: &SubgroupOfFinite) -> SubgroupOfFinite {
        SubgroupOfFinite {
            parent_order: self.n,
            elements: (0..self.n)
                .filter(|&g| s.elements.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
                .collect(),
        }
    }

    pub fn is_normal(&self, s: &SubgroupOfFinite) -> bool {
        (0..self.n).all(|g| s.elements.iter().all(|&x| s.contains(self.conjugate(g, x))))
    }

    pub fn normal_closure(&self, gens: &[usize]) -> SubgroupOfFinite {
        let mut all = Vec::new();
        for &x in gens {
            for g in 0..self.n {
                all.push(self.conjugate(g, x));
            }
        }
        self.generated(&all)
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.n).map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    /// All normal subgroups, sorted by order then elements.
    pub fn normal_subgroups(&self) -> Vec<SubgroupOfFinite> {
        let classes = self.conjugacy_classes();
        let mut found = vec![self.trivial()];
        let mut i = 0;
        while i < found.len() {
            let n = found[i].clone();
            for c in &classes {
                if n.contains(c[0]) {
                    continue;
                }
                let mut gens = n.elements.clone();
                gens.push(c[0]);
                let m = self.normal_closure(&gens);
                if !found.contains(&m) {
                    found.push(m);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        found
    }

    /// `G / N` with the projection `G -> G/N` as an index map.
    pub fn quotient(
        &self,
        nrm: &SubgroupOfFinite,
    ) -> Result<(FiniteGroup, Vec<usize>), FiniteGroupError> {
        if !self.is_normal(nrm) {
            return Err(FiniteGroupError::NotNormal);
        }
        let mut proj = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if proj[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &x in &nrm.elements {
                proj[self.mul(g, x)] = idx;
            }
        }
        let k = reps.len();
        let rows: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).map(|j| proj[self.mul(reps[i], reps[j])]).collect())
            .collect();
        let q = FiniteGroup::from_table_with_cap(rows, usize::MAX)?;
        Ok((q, proj))
    }

    /// The subgroup as a group in its own right, with the inclusion map.
    pub fn subgroup_as_group(&self, s: &SubgroupOfFinite) -> (FiniteGroup, Vec<usize>) {
        let pos = |g: usize| s.elements.binary_search(&g).expect("closed");
        let rows: Vec<Vec<usize>> = s
            .elements
            .iter()
            .map(|&a| s.elements.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let g = FiniteGroup::from_table_with_cap(rows, usize::MAX).expect("subgroup of a group");
        (g, s.elements.clone())
    }

    /// Image of a subgroup under an index map into a group of order `target_order`.
    pub fn image(map: &[usize], s: &SubgroupOfFinite, target_order: usize) -> SubgroupOfFinite {
        let mut el: Vec<usize> = s.elements.iter().map(|&g| map[g]).collect();
        el.sort_unstable();
        el.dedup();
        SubgroupOfFinite {
            parent_order: target_order,
            elements: el,
        }
    }

    /// Preimage of a subgroup of the target of an index map.
    pub fn preimage(&self, map: &[usize], s: &SubgroupOfFinite) -> SubgroupOfFinite {
        let m = s.membership();
        SubgroupOfFinite {
            parent_order: self.n,
            elements: (0..self.n).filter(|&g| m[map[g]]).collect(),
        }
    }

    pub fn is_p_group(&self, s: &SubgroupOfFinite, p: u64) -> bool {
        let mut k = s.order() as u64;
        while k.is_multiple_of(p) {
            k /= p;
        }
        k == 1
    }

    /// Elements of order coprime to `p`; a subgroup when `s` is abelian.
    pub fn p_prime_part(&self, s: &SubgroupOfFinite, p: u64) -> SubgroupOfFinite {
        let el: Vec<usize> = s
            .elements
            .iter()
            .copied()
            .filter(|&g| p == 0 || !(self.element_order(g) as u64).is_multiple_of(p))
            .collect();
        self.generated(&el)
    }

    pub fn subgroup_is_abelian(&self, s: &SubgroupOfFinite) -> bool {
        s.elements
            .iter()
            .all(|&a| s.elements.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(FiniteGroupError::NoInverse(1))
        );
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1]]),
            Err(FiniteGroupError::NotSquare { .. })
        ));
        // A loop of order 5 that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5),
            Err(FiniteGroupError::NotAssociative(..))
        ));
        assert!(matches!(
            FiniteGroup::from_table_with_cap(cyclic(5).table_rows(), 4),
            Err(FiniteGroupError::OrderCap { .. })
        ));
    }

    #[test]
    fn centers() {
        assert!(symmetric(3).center().is_trivial());
        let c6 = cyclic(6);
        assert!(c6.center().is_whole());
        assert_eq!(dihedral(8).center().order(), 2);
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = symmetric(3);
        let ns = g.normal_subgroups();
        let orders: Vec<usize> = ns.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn quotient_of_z4() {
        let g = cyclic(4);
        let two = g.generated(&[2]);
        let (q, proj) = g.quotient(&two).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[1], proj[3]);
        assert!(g.quotient(&g.generated(&[1])).is_ok());
        let s3 = symmetric(3);
        let t = s3.generated(&[s3.index_of("(0 1)").unwrap()]);
        assert_eq!(s3.quotient(&t), Err(FiniteGroupError::NotNormal));
    }

    #[test]
    fn centralizer_of_rotations_in_d16() {
        let g = dihedral(8);
        let r = g.generated(&[1]);
        assert_eq!(r.order(), 8);
        assert_eq!(g.centralizer(&r), r);
    }

    #[test]
    fn p_prime_part_of_cyclic_six() {
        let g = cyclic(6);
        assert_eq!(g.p_prime_part(&g.whole(), 3).order(), 2);
        assert_eq!(g.p_prime_part(&g.whole(), 0).order(), 6);
    }
}
