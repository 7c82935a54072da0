mod common;

use proptest::prelude::*;
use semiband::depth::depth_analysis;
use semiband::ideal::rees_quotient;
use semiband::iso::{are_isomorphic, find_isomorphism};
use semiband::properties::non_regular_element;
use semiband::GreensStructure;

proptest! {
    #[test]
    fn members_are_associative(s in common::member()) {
        prop_assert!(s.find_non_associative().is_none());
    }

    #[test]
    fn depth_chain_is_increasing_and_settles(s in common::member()) {
        let d = depth_analysis(&s);
        prop_assert!(d.chain.windows(2).all(|w| w[0].is_subset(&w[1])));
        prop_assert!(d.chain.len() <= s.order() + 1);
        prop_assert_eq!(d.chain.last().unwrap(), d.generated());
        if let Some(k) = d.depth() {
            prop_assert!(d.power(k).is_full());
            prop_assert!(k == 1 || !d.power(k - 1).is_full());
        }
    }

    #[test]
    fn monoids_and_regular_members_are_covered(s in common::member()) {
        if s.is_monoid() || non_regular_element(&s).is_none() {
            prop_assert!(s.is_idempotent_covered().holds());
        }
    }

    #[test]
    fn rees_quotient_order(s in common::member(), a in 0usize..4) {
        let a = a % s.order();
        let ideal = GreensStructure::compute(&s).principal_ideal(a);
        let q = rees_quotient(&s, &ideal).unwrap();
        prop_assert_eq!(q.semigroup.order(), s.order() - ideal.len() + 1);
    }

    #[test]
    fn isomorphism_search_is_symmetric(a in common::member(), b in common::member()) {
        prop_assert_eq!(are_isomorphic(&a, &b).unwrap(), are_isomorphic(&b, &a).unwrap());
        if let Some(h) = find_isomorphism(&a, &b).unwrap() {
            prop_assert!(h.is_isomorphism());
        }
    }

    #[test]
    fn relabelled_copies_are_isomorphic(s in common::member()) {
        let p: Vec<usize> = (0..s.order()).rev().collect();
        let t = common::relabel(&s, &p);
        prop_assert!(find_isomorphism(&s, &t).unwrap().is_some());
        prop_assert!(find_isomorphism(&t, &s).unwrap().is_some());
    }
}
