use proptest::prelude::*;

use normlattice::zm::all_triples;
use normlattice::*;

const SPECS: &[&str] = &[
    "Z1",
    "Z7",
    "Z12",
    "S3",
    "Q8",
    "D10",
    "A4",
    "Z2 x Z2",
    "ZM(7,3,2)",
    "S4",
    "D24",
    "Q16",
    "Z3 x S3",
    "ZM(5,4,2)",
    "A5",
    "Z2 x Q8",
    "ZM(9,2,8)",
];

fn group_and_elements() -> impl Strategy<Value = (Group, Vec<usize>)> {
    prop::sample::select(SPECS).prop_flat_map(|spec| {
        let group = build_from_spec(spec).unwrap();
        let n = group.order();
        (Just(group), prop::collection::vec(0..n, 1..4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_idempotent((group, gens) in group_and_elements()) {
        let h = group.closure(&gens).unwrap();
        let members: Vec<usize> = h.iter().collect();
        prop_assert_eq!(group.closure(&members).unwrap(), h);
        prop_assert_eq!(group.order() % h.size(), 0);
        for &g in &gens {
            prop_assert!(h.contains(g));
        }
    }

    #[test]
    fn conjugation_round_trips((group, xs) in group_and_elements()) {
        let g = xs[0];
        let h = group.closure(&xs[1..]).unwrap();
        let there = group.conjugate_subgroup(&h, g).unwrap();
        let back = group.conjugate_subgroup(&there, group.inv(g)).unwrap();
        prop_assert_eq!(back, h);
        for &x in &xs {
            let y = group.conjugate(g, x);
            prop_assert_eq!(group.element_order(y), group.element_order(x));
            prop_assert_eq!(group.conjugate(group.inv(g), y), x);
        }
    }

    #[test]
    fn normalizer_contains_subgroup((group, gens) in group_and_elements()) {
        let h = group.closure(&gens).unwrap();
        let n = normalizer(&group, &h).unwrap();
        prop_assert!(h.is_subgroup_of(&n));
        for g in n.iter() {
            prop_assert_eq!(group.conjugate_subgroup(&h, g).unwrap(), h);
        }
    }

    #[test]
    fn center_is_central((group, xs) in group_and_elements()) {
        let z = group.center();
        for c in z.iter() {
            for &x in &xs {
                prop_assert!(group.commutes(c, x));
            }
        }
    }

    #[test]
    fn zm_elements_satisfy_relations(idx in 0..all_triples(150).len()) {
        let t = all_triples(150)[idx];
        let group = make_zm(t.m, t.n, t.r).unwrap();
        prop_assert_eq!(group.order() as u64, t.order());
        prop_assert_eq!(group.is_abelian(), t.is_abelian());
        prop_assert_eq!(group.center().size() as u64, t.n / t.d);
        prop_assert_eq!(group.derived_subgroup().size() as u64, t.m);
    }
}
