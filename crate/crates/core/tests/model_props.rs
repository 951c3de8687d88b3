use proptest::prelude::*;

use hypercenter::agmodel::{OrdinalIndex, StdSubgroup, UcsOptions};
use hypercenter::verify::{random_bridgeable, random_connected, random_finite};

proptest! {
    #[test]
    fn ordinal_strings_round_trip(m in 0u64..50, t in 0u64..50) {
        let o = OrdinalIndex::new(m, t);
        let s = o.to_string();
        prop_assert!(!s.contains("omega*0"));
        prop_assert_eq!(s.parse::<OrdinalIndex>().unwrap(), o);
    }

    #[test]
    fn ordinal_order_is_lexicographic(a in (0u64..5, 0u64..5), b in (0u64..5, 0u64..5)) {
        let (x, y) = (OrdinalIndex::new(a.0, a.1), OrdinalIndex::new(b.0, b.1));
        prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        prop_assert!(x < x.succ());
        prop_assert_eq!(x.add(OrdinalIndex::finite(1)), x.succ());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn connected_series_invariants(seed in any::<u64>()) {
        let g = random_connected(seed);
        prop_assert!(g.validate().is_empty());
        let r = g.ucs(&UcsOptions::default()).unwrap();
        prop_assert!(r.is_terminated(), "{:?}", r.status);
        prop_assert_eq!(r.stages[0].subgroup.clone(), StdSubgroup::trivial(&g));
        for w in r.stages.windows(2) {
            prop_assert!(w[0].index < w[1].index);
            prop_assert!(w[0].subgroup.is_contained_in(&w[1].subgroup));
            prop_assert!(w[0].subgroup != w[1].subgroup);
            prop_assert!(g.is_normal_subgroup(&w[1].subgroup));
        }
        let h = r.hypercenter().unwrap();
        prop_assert!(r.stages.last().unwrap().quotient.center().unwrap().is_trivial());
        prop_assert!(g.nilpotency_class_sub(h, &UcsOptions::default()).is_ok());
        prop_assert!(r.terminal().omega as usize <= g.x().rank() + g.dim_l() + 1);
    }

    #[test]
    fn bridge_round_trips_stages(seed in any::<u64>()) {
        let g = random_bridgeable(seed);
        let b = g.to_finite().unwrap();
        prop_assert_eq!(b.group.order() as u64, u64::try_from(g.finite_order().unwrap()).unwrap());
        let r = g.ucs(&UcsOptions::default()).unwrap();
        for s in &r.stages {
            let h = b.subgroup_to_finite(&s.subgroup);
            prop_assert!(b.group.is_normal(&h));
            prop_assert_eq!(b.subgroup_from_finite(&h), Some(s.subgroup.clone()));
        }
        for e in 0..b.group.order() {
            let (phi, f) = b.decode(e);
            prop_assert_eq!(b.encode(&phi, f), e);
        }
    }

    #[test]
    fn finite_series_invariants(seed in any::<u64>()) {
        let g = random_finite(seed);
        let ucs = g.ucs();
        prop_assert!(ucs[0].is_trivial());
        for w in ucs.windows(2) {
            prop_assert!(w[0].is_subgroup_of(&w[1]) && w[0] != w[1]);
            prop_assert!(g.is_normal(&w[1]));
        }
        let h = g.hypercenter();
        prop_assert_eq!(&h, ucs.last().unwrap());
        prop_assert_eq!(h.clone(), g.hypercenter_by_intersection());
        let fit = g.fitting();
        prop_assert!(h.is_subgroup_of(&fit));
        prop_assert!(g.nilpotency_class_of(&fit).is_some());
        for n in g.nilpotent_normal_subgroups() {
            prop_assert!(n.is_subgroup_of(&fit));
        }
    }
}
