use crate::error::{Result, SemigroupError};
use crate::semigroup::FiniteSemigroup;

/// An element-wise map between two finite semigroups.
///
/// The homomorphism, injectivity and surjectivity flags are computed once at
/// construction, so they always agree with `map`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupHom {
    map: Vec<usize>,
    codomain_order: usize,
    is_homomorphism: bool,
    is_injective: bool,
    is_surjective: bool,
    hom_failure: Option<(usize, usize)>,
}

impl SemigroupHom {
    pub fn new(domain: &FiniteSemigroup, codomain: &FiniteSemigroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(SemigroupError::MapLength {
                got: map.len(),
                expected: domain.order(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= codomain.order()) {
            return Err(SemigroupError::ElementOutOfRange {
                index: bad,
                order: codomain.order(),
            });
        }
        let mut hom_failure = None;
        'outer: for a in domain.elements() {
            for b in domain.elements() {
                if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                    hom_failure = Some((a, b));
                    break 'outer;
                }
            }
        }
        let mut hit = vec![false; codomain.order()];
        let mut is_injective = true;
        for &y in &map {
            if std::mem::replace(&mut hit[y], true) {
                is_injective = false;
            }
        }
        Ok(SemigroupHom {
            is_surjective: hit.iter().all(|&h| h),
            is_injective,
            is_homomorphism: hom_failure.is_none(),
            hom_failure,
            codomain_order: codomain.order(),
            map,
        })
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Self::new(s, s, s.elements().collect()).expect("identity map is well formed")
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    pub fn is_homomorphism(&self) -> bool {
        self.is_homomorphism
    }

    pub fn is_injective(&self) -> bool {
        self.is_injective
    }

    pub fn is_surjective(&self) -> bool {
        self.is_surjective
    }

    pub fn is_embedding(&self) -> bool {
        self.is_homomorphism && self.is_injective
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism && self.is_injective && self.is_surjective
    }

    /// First pair `(a, b)` with `f(ab) != f(a) f(b)`.
    pub fn hom_failure(&self) -> Option<(usize, usize)> {
        self.hom_failure
    }

    /// `x -> other(self(x))`.
    pub fn then(
        &self,
        other: &SemigroupHom,
        domain: &FiniteSemigroup,
        codomain: &FiniteSemigroup,
    ) -> Result<SemigroupHom> {
        let map = self.map.iter().map(|&y| other.apply(y)).collect();
        SemigroupHom::new(domain, codomain, map)
    }

    /// The inverse map of a bijection, or `None`.
    pub fn inverse(&self, domain: &FiniteSemigroup, codomain: &FiniteSemigroup) -> Option<SemigroupHom> {
        if !(self.is_injective && self.is_surjective) {
            return None;
        }
        let mut inv = vec![0; self.codomain_order];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        SemigroupHom::new(codomain, domain, inv).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn flags_follow_the_map() {
        let z2 = catalog::cyclic_group(2);
        let triv = catalog::trivial();
        let collapse = SemigroupHom::new(&z2, &triv, vec![0, 0]).unwrap();
        assert!(collapse.is_homomorphism() && collapse.is_surjective() && !collapse.is_injective());
        let id = SemigroupHom::identity(&z2);
        assert!(id.is_isomorphism());
        let swap = SemigroupHom::new(&z2, &z2, vec![1, 0]).unwrap();
        assert!(!swap.is_homomorphism());
        assert_eq!(swap.hom_failure(), Some((0, 0)));
        assert!(swap.inverse(&z2, &z2).is_some());
    }

    #[test]
    fn rejects_bad_maps() {
        let z2 = catalog::cyclic_group(2);
        assert!(SemigroupHom::new(&z2, &z2, vec![0]).is_err());
        assert!(SemigroupHom::new(&z2, &z2, vec![0, 2]).is_err());
    }
}
