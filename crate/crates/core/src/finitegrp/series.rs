//! Upper central series, nilpotency and the Fitting subgroup.

use super::group::{FiniteGroup, SubgroupOfFinite};

impl FiniteGroup {
    /// `{g in H : [g, x] in z for all x in H}` for a subgroup `H` and `z ⊆ H`.
    fn next_center_in(&self, h: &SubgroupOfFinite, z: &SubgroupOfFinite) -> SubgroupOfFinite {
        let el: Vec<usize> = h
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.elements().iter().all(|&x| z.contains(self.commutator(g, x))))
            .collect();
        self.subgroup(&el).expect("preimage of a center is a subgroup")
    }

    /// Upper central series of a subgroup `H`, from the trivial group up to
    /// the first repeated term (that term is included once).
    pub fn ucs_of(&self, h: &SubgroupOfFinite) -> Vec<SubgroupOfFinite> {
        let mut series = vec![self.trivial()];
        loop {
            let next = self.next_center_in(h, series.last().expect("nonempty"));
            if &next == series.last().expect("nonempty") {
                return series;
            }
            series.push(next);
        }
    }

    pub fn ucs(&self) -> Vec<SubgroupOfFinite> {
        self.ucs_of(&self.whole())
    }

    pub fn hypercenter(&self) -> SubgroupOfFinite {
        self.ucs().pop().expect("nonempty")
    }

    /// Nilpotency class of a subgroup, `None` if it is not nilpotent.
    pub fn nilpotency_class_of(&self, h: &SubgroupOfFinite) -> Option<usize> {
        let s = self.ucs_of(h);
        (s.last().expect("nonempty") == h).then(|| s.len() - 1)
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.nilpotency_class_of(&self.whole())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn nilpotent_normal_subgroups(&self) -> Vec<SubgroupOfFinite> {
        self.normal_subgroups()
            .into_iter()
            .filter(|n| self.nilpotency_class_of(n).is_some())
            .collect()
    }

    /// Join of all nilpotent normal subgroups, checked to be nilpotent.
    pub fn fitting(&self) -> SubgroupOfFinite {
        let f = self
            .nilpotent_normal_subgroups()
            .iter()
            .fold(self.trivial(), |acc, n| self.join(&acc, n));
        assert!(
            self.nilpotency_class_of(&f).is_some(),
            "join of nilpotent normal subgroups must be nilpotent"
        );
        f
    }

    /// Intersection of all normal `N` with `G/N` centerless, computed through
    /// explicit quotient groups.
    pub fn hypercenter_by_intersection(&self) -> SubgroupOfFinite {
        self.normal_subgroups()
            .into_iter()
            .filter(|n| {
                let (q, _) = self.quotient(n).expect("normal");
                q.center().is_trivial()
            })
            .fold(self.whole(), |acc, n| acc.intersect(&n))
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;

    #[test]
    fn abelian_series() {
        let g = cyclic(6);
        assert_eq!(g.ucs().len(), 2);
        assert!(g.hypercenter().is_whole());
        assert!(g.fitting().is_whole());
        assert_eq!(g.nilpotency_class(), Some(1));
    }

    #[test]
    fn s3_series() {
        let g = symmetric(3);
        assert!(g.hypercenter().is_trivial());
        assert_eq!(g.fitting().order(), 3);
        assert!(!g.is_nilpotent());
        assert!(g.hypercenter_by_intersection().is_trivial());
    }

    #[test]
    fn dihedral_two_groups() {
        for n in 1..=4u32 {
            let g = dihedral(1 << n);
            let series = g.ucs();
            assert_eq!(g.nilpotency_class(), Some(n as usize));
            for (i, z) in series.iter().enumerate().take(n as usize) {
                assert_eq!(z.order(), 1 << i);
                let cyc = (0..g.order()).any(|x| g.generated(&[x]) == *z);
                assert!(cyc, "Z_{i} should be cyclic");
            }
            assert!(series.last().unwrap().is_whole());
            assert!(g.hypercenter_by_intersection().is_whole());
        }
    }

    #[test]
    fn fitting_of_s4_is_klein() {
        let g = symmetric(4);
        assert_eq!(g.fitting().order(), 4);
    }
}
