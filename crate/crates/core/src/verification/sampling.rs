use rand::seq::SliceRandom;
use rand::Rng;

use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

pub const SAMPLES_PER_MEMBER: usize = 16;

fn inverse_in(t: &FiniteSemigroup, x: usize) -> Option<usize> {
    t.elements()
        .find(|&y| t.product(&[x, y, x]) == x && t.product(&[y, x, y]) == y)
}

/// A random regular subsemigroup of `t` containing `base`: `base` plus random
/// idempotents, closed, then repeatedly extended by an inverse of a non-regular
/// element. `None` if some element has no inverse in `t`.
pub fn sample_regular_subsemigroup(t: &FiniteSemigroup, base: &ElementSet, rng: &mut impl Rng) -> Option<ElementSet> {
    let idempotents = t.idempotents().to_vec();
    let k = rng.gen_range(0..=idempotents.len());
    let mut gens = base.clone();
    for &e in idempotents.choose_multiple(rng, k) {
        gens.insert(e);
    }
    loop {
        let closed = t.closure(&gens);
        let stuck = closed
            .iter()
            .find(|&x| !closed.iter().any(|y| t.product(&[x, y, x]) == x));
        match stuck {
            None => return Some(closed),
            Some(x) => {
                gens = closed;
                gens.insert(inverse_in(t, x)?);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::build_t;
    use crate::properties::non_regular_element;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_regular_and_contain_base() {
        let s = catalog::brandt(2);
        let t = build_t(&s).unwrap();
        let base = ElementSet::from_indices(t.result.order(), s.elements().map(|x| t.embedding.apply(x)));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..SAMPLES_PER_MEMBER {
            let sample = sample_regular_subsemigroup(&t.result, &base, &mut rng).unwrap();
            assert!(base.is_subset(&sample));
            let sub = t.result.induced_subsemigroup(&sample).unwrap();
            assert_eq!(non_regular_element(&sub.semigroup), None);
        }
    }

    #[test]
    fn same_seed_same_samples() {
        let s = catalog::rectangular_band(2, 2);
        let t = build_t(&s).unwrap();
        let base = ElementSet::from_indices(t.result.order(), s.elements().map(|x| t.embedding.apply(x)));
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..4)
                .map(|_| {
                    sample_regular_subsemigroup(&t.result, &base, &mut rng)
                        .unwrap()
                        .to_vec()
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
    }
}
