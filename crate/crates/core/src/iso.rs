//! Isomorphism search between finite semigroups.
//!
//! The search assigns images to a generating set of the source and extends each
//! partial assignment along right multiplication by generators, so a single choice
//! per generator determines the whole map. Candidates are pruned by an
//! isomorphism-invariant signature computed for every element.

use crate::error::{Result, SemigroupError};
use crate::green::{GreenRelation, GreensStructure};
use crate::hom::SemigroupHom;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

pub const DEFAULT_ORDER_CAP: usize = 64;

/// Per-element isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSignature {
    idempotent: bool,
    index: usize,
    period: usize,
    class_sizes: [usize; 5],
    right_image: usize,
    left_image: usize,
    right_fixers: usize,
    left_fixers: usize,
    commuting: usize,
}

pub fn signatures(s: &FiniteSemigroup) -> Vec<ElementSignature> {
    let g = GreensStructure::compute(s);
    let sizes: Vec<Vec<usize>> = GreenRelation::ALL
        .iter()
        .map(|&rel| {
            let counts = g.class_sizes(rel);
            g.class_ids(rel).iter().map(|&c| counts[c]).collect()
        })
        .collect();
    s.elements()
        .map(|a| {
            let (index, period) = s.index_period(a);
            let distinct = |it: &mut dyn Iterator<Item = usize>| {
                let mut set = ElementSet::empty(s.order());
                it.for_each(|x| {
                    set.insert(x);
                });
                set.len()
            };
            ElementSignature {
                idempotent: s.is_idempotent(a),
                index,
                period,
                class_sizes: [sizes[0][a], sizes[1][a], sizes[2][a], sizes[3][a], sizes[4][a]],
                right_image: distinct(&mut s.elements().map(|x| s.mul(a, x))),
                left_image: distinct(&mut s.elements().map(|x| s.mul(x, a))),
                right_fixers: s.elements().filter(|&x| s.mul(a, x) == a).count(),
                left_fixers: s.elements().filter(|&x| s.mul(x, a) == a).count(),
                commuting: s.elements().filter(|&x| s.mul(a, x) == s.mul(x, a)).count(),
            }
        })
        .collect()
}

/// Isomorphism search with an order cap.
#[derive(Debug, Clone, Copy)]
pub struct IsoSearch {
    pub cap: usize,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch { cap: DEFAULT_ORDER_CAP }
    }
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    sig_s: Vec<ElementSignature>,
    sig_t: Vec<ElementSignature>,
    gens: Vec<usize>,
}

impl Search<'_> {
    /// Extends the generator assignment along right multiplication. Returns the
    /// element map, or `None` on a conflict.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.s.order();
        let mut map = vec![usize::MAX; n];
        let mut inv = vec![usize::MAX; n];
        let mut queue = Vec::new();
        let mut assign = |x: usize, y: usize, map: &mut Vec<usize>, queue: &mut Vec<usize>| -> bool {
            if map[x] != usize::MAX {
                return map[x] == y;
            }
            if inv[y] != usize::MAX || self.sig_s[x] != self.sig_t[y] {
                return false;
            }
            map[x] = y;
            inv[y] = x;
            queue.push(x);
            true
        };
        for (&g, &h) in self.gens.iter().zip(images) {
            if !assign(g, h, &mut map, &mut queue) {
                return None;
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&g, &h) in self.gens.iter().zip(images) {
                let y = self.s.mul(x, g);
                let z = self.t.mul(map[x], h);
                if !assign(y, z, &mut map, &mut queue) {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&self, images: &mut Vec<usize>) -> Option<SemigroupHom> {
        let map = self.extend(images)?;
        if images.len() == self.gens.len() {
            if map.contains(&usize::MAX) {
                return None;
            }
            let hom = SemigroupHom::new(self.s, self.t, map).ok()?;
            return hom.is_isomorphism().then_some(hom);
        }
        let g = self.gens[images.len()];
        for cand in self.t.elements().filter(|&y| self.sig_t[y] == self.sig_s[g]) {
            images.push(cand);
            if let Some(h) = self.run(images) {
                return Some(h);
            }
            images.pop();
        }
        None
    }
}

/// A generating set chosen greedily, rarest signature first.
fn generators(s: &FiniteSemigroup, sig: &[ElementSignature]) -> Vec<usize> {
    let mut order: Vec<usize> = s.elements().collect();
    let freq = |x: usize| sig.iter().filter(|t| **t == sig[x]).count();
    order.sort_by_key(|&x| (freq(x), sig[x].clone(), x));
    let mut gens = Vec::new();
    let mut covered = ElementSet::empty(s.order());
    for x in order {
        if !covered.contains(x) {
            gens.push(x);
            covered = s.closure(&ElementSet::from_indices(s.order(), gens.iter().copied()));
        }
    }
    gens
}

impl IsoSearch {
    pub fn find(&self, s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<Option<SemigroupHom>> {
        for x in [s, t] {
            if x.order() > self.cap {
                return Err(SemigroupError::SearchBudgetExceeded {
                    order: x.order(),
                    cap: self.cap,
                });
            }
        }
        if s.order() != t.order() {
            return Ok(None);
        }
        let sig_s = signatures(s);
        let sig_t = signatures(t);
        let (mut a, mut b) = (sig_s.clone(), sig_t.clone());
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
        let gens = generators(s, &sig_s);
        let search = Search {
            s,
            t,
            sig_s,
            sig_t,
            gens,
        };
        Ok(search.run(&mut Vec::new()))
    }
}

/// Finds an isomorphism `s -> t`, or `None` if the two are not isomorphic.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<Option<SemigroupHom>> {
    IsoSearch::default().find(s, t)
}

pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<bool> {
    Ok(find_isomorphism(s, t)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn self_isomorphism_exists() {
        let t2 = catalog::full_transformation(2);
        let h = find_isomorphism(&t2, &t2).unwrap().unwrap();
        assert!(h.is_isomorphism());
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        assert!(find_isomorphism(&catalog::left_zero(2), &catalog::left_zero(3))
            .unwrap()
            .is_none());
    }

    #[test]
    fn left_and_right_zero_are_only_anti_isomorphic() {
        assert!(find_isomorphism(&catalog::left_zero(2), &catalog::right_zero(2))
            .unwrap()
            .is_none());
    }

    #[test]
    fn relabelled_copy_is_found() {
        let s = catalog::brandt(2);
        let perm = [3, 0, 4, 1, 2];
        let n = s.order();
        let mut inv = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let t = FiniteSemigroup::from_fn(n, |x, y| perm[s.mul(inv[x], inv[y])]).unwrap();
        let h = find_isomorphism(&s, &t).unwrap().unwrap();
        assert!(h.is_isomorphism());
    }

    #[test]
    fn cap_is_enforced() {
        let s = catalog::cyclic_group(5);
        let err = IsoSearch { cap: 4 }.find(&s, &s).unwrap_err();
        assert_eq!(err, SemigroupError::SearchBudgetExceeded { order: 5, cap: 4 });
    }
}
