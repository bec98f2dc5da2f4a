mod common;

use common::{body, positive};
use mixarea::arith::rat;
use mixarea::geometry::config_vector;
use mixarea::pluecker::{
    check_membership, classify_multipartite, embed, graph_of, is_member, normalize_orbit, GroupElement,
    PlueckerVector,
};
use mixarea::realize::realize_pl4;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mixed_area_vectors_are_members(bodies in prop::collection::vec(body(), 4..=5)) {
        let v = config_vector(&bodies).off_diagonal;
        let r = check_membership(&v);
        prop_assert!(r.member, "{:?}", r.violations);
        prop_assert!(classify_multipartite(&graph_of(&v)).is_multipartite());
        prop_assert!(is_member(&embed(&v)));
    }

    #[test]
    fn group_action_preserves_membership(
        bodies in prop::collection::vec(body(), 4),
        scalars in prop::collection::vec(positive(3), 4),
        perm in permutation(4),
    ) {
        let v = config_vector(&bodies).off_diagonal;
        let g = GroupElement::from_rationals(scalars, perm).unwrap();
        let w = g.act(&v).expect("rational scalars keep rational entries");
        prop_assert!(is_member(&w));
        prop_assert_eq!(g.inverse().act(&w).unwrap(), v);
    }

    #[test]
    fn normalization_is_an_orbit_invariant(
        bodies in prop::collection::vec(body(), 4),
        scalars in prop::collection::vec(positive(3), 4),
        perm in permutation(4),
    ) {
        let v = config_vector(&bodies).off_diagonal;
        let n = normalize_orbit(&v).unwrap();
        prop_assert_eq!(n.group.act(&v).unwrap(), n.canonical.clone());
        let g = GroupElement::from_rationals(scalars, perm).unwrap();
        let w = g.act(&v).unwrap();
        let m = normalize_orbit(&w).unwrap();
        prop_assert_eq!(m.parts.iter().map(Vec::len).collect::<Vec<_>>(), n.parts.iter().map(Vec::len).collect::<Vec<_>>());
        for (i, j) in &n.spanning_edges {
            prop_assert_eq!(n.canonical.get(*i, *j), &rat(1));
        }
    }

    #[test]
    fn realizations_reproduce_mixed_area_vectors(bodies in prop::collection::vec(body(), 4)) {
        let v = config_vector(&bodies).off_diagonal;
        let r = realize_pl4(&v).unwrap();
        prop_assert_eq!(r.recomputed, v);
    }

    #[test]
    fn scaling_preserves_membership(
        entries in prop::collection::vec(0i64..6, 6),
        k in positive(5),
    ) {
        let v = PlueckerVector::from_ints(4, &entries).unwrap();
        prop_assert_eq!(is_member(&v), is_member(&v.scale(&k)));
    }
}
