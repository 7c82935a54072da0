use proptest::prelude::*;
use semiband::constructions::{build_r, Side};
use semiband::green::GreenRelation;
use semiband::transformations::{
    full_tf_monoid, higgins_members_by_filter, higgins_t, in_higgins_t, iso_r_tx_to_t, Transformation,
};
use semiband::GreensStructure;

fn all_maps(points: usize) -> Vec<Transformation> {
    (0..points.pow(points as u32))
        .map(|mut code| {
            let mut images = vec![0; points];
            for slot in images.iter_mut().rev() {
                *slot = code % points;
                code /= points;
            }
            Transformation::new(images).unwrap()
        })
        .collect()
}

#[test]
fn r_of_full_monoid_counts_agree() {
    for k in 1..=3 {
        let tx = full_tf_monoid(k).unwrap();
        let g = GreensStructure::compute(&tx.semigroup);
        let by_classes = 2 * g.class_sizes(GreenRelation::L).iter().map(|c| c * c).sum::<usize>();
        let r = build_r(&tx.semigroup, Side::Right).unwrap();
        assert_eq!(r.result.order(), by_classes);
        assert_eq!(higgins_t(k).unwrap().result.order(), by_classes, "k = {k}");
    }
}

#[test]
fn membership_filter_is_exact() {
    for k in 1..=2 {
        let members = higgins_members_by_filter(k);
        assert!(members.iter().all(|m| in_higgins_t(m, k)));
        let hits = all_maps(2 * k).into_iter().filter(|m| in_higgins_t(m, k)).count();
        assert_eq!(hits, members.len());
    }
}

#[test]
fn prime_embedding_factors_through_the_isomorphism() {
    for k in 1..=3 {
        let h = iso_r_tx_to_t(k).unwrap();
        let tx = full_tf_monoid(k).unwrap();
        for x in tx.semigroup.elements() {
            assert_eq!(h.iso.apply(h.r.embedding.apply(x)), h.t.embedding.apply(x));
        }
    }
}

fn map(k: usize) -> impl Strategy<Value = Transformation> {
    proptest::collection::vec(0..k, k).prop_map(|v| Transformation::new(v).unwrap())
}

proptest! {
    #[test]
    fn composition_is_left_to_right((a, b) in (1usize..6).prop_flat_map(|k| (map(k), map(k)))) {
        let ab = a.then(&b);
        for x in 0..a.degree() {
            prop_assert_eq!(ab.apply(x), b.apply(a.apply(x)));
        }
    }
}
