//! Ideals, Rees quotients, principal factors and quotients by congruences.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::green::{GreenRelation, GreensStructure};
use crate::hom::SemigroupHom;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// A quotient semigroup with the natural map onto it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub semigroup: FiniteSemigroup,
    pub map: SemigroupHom,
}

/// Checks that `set` is a two-sided ideal; reports the first escaping product.
pub fn check_ideal(s: &FiniteSemigroup, set: &ElementSet) -> Result<()> {
    for x in set.iter() {
        for y in s.elements() {
            if !set.contains(s.mul(x, y)) || !set.contains(s.mul(y, x)) {
                return Err(SemigroupError::NotAnIdeal { element: x, by: y });
            }
        }
    }
    Ok(())
}

/// The Rees quotient `S/I`.
///
/// Elements outside the ideal keep their relative order and come first; the
/// class of the ideal is the last element and is the zero of the quotient.
pub fn rees_quotient(s: &FiniteSemigroup, ideal: &ElementSet) -> Result<Quotient> {
    if ideal.is_empty() {
        return Err(SemigroupError::EmptyIdeal);
    }
    check_ideal(s, ideal)?;
    let outside: Vec<usize> = s.elements().filter(|&x| !ideal.contains(x)).collect();
    let zero = outside.len();
    let mut index = vec![zero; s.order()];
    for (i, &x) in outside.iter().enumerate() {
        index[x] = i;
    }
    let m = zero + 1;
    let mut table = vec![zero; m * m];
    for (i, &x) in outside.iter().enumerate() {
        for (j, &y) in outside.iter().enumerate() {
            table[i * m + j] = index[s.mul(x, y)];
        }
    }
    let mut labels: Vec<String> = outside.iter().map(|&x| s.label(x)).collect();
    labels.push("0".to_string());
    let q = FiniteSemigroup::from_flat_unchecked(m, table)?.with_labels(Some(labels))?;
    let map = SemigroupHom::new(s, &q, index)?;
    debug_assert!(map.is_homomorphism());
    Ok(Quotient { semigroup: q, map })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    Null,
    ZeroSimple,
}

/// The principal factor `J(a)/I(a)`, realised as `J_a ∪ {0}`.
#[derive(Debug, Clone)]
pub struct PrincipalFactor {
    pub semigroup: FiniteSemigroup,
    pub kind: FactorKind,
    /// Parent index of each non-zero factor element; the zero is the last element.
    pub members: Vec<usize>,
    pub j_class: ElementSet,
    /// `I(a) = J(a) \ J_a`.
    pub lower_ideal: ElementSet,
}

impl PrincipalFactor {
    pub fn zero(&self) -> usize {
        self.members.len()
    }
}

pub fn principal_factor(s: &FiniteSemigroup, a: usize) -> Result<PrincipalFactor> {
    s.check_element(a)?;
    principal_factor_with(s, &GreensStructure::compute(s), a)
}

pub fn principal_factor_with(s: &FiniteSemigroup, g: &GreensStructure, a: usize) -> Result<PrincipalFactor> {
    let j_class = g.class_of(GreenRelation::J, a);
    let lower_ideal = g.principal_ideal(a).difference(&j_class);
    let members = j_class.to_vec();
    let zero = members.len();
    let mut index = vec![zero; s.order()];
    for (i, &x) in members.iter().enumerate() {
        index[x] = i;
    }
    let m = zero + 1;
    let mut table = vec![zero; m * m];
    let mut kind = FactorKind::Null;
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            let p = s.mul(x, y);
            if j_class.contains(p) {
                table[i * m + j] = index[p];
                kind = FactorKind::ZeroSimple;
            }
        }
    }
    let mut labels: Vec<String> = members.iter().map(|&x| s.label(x)).collect();
    labels.push("0".to_string());
    let semigroup = FiniteSemigroup::from_flat_unchecked(m, table)?.with_labels(Some(labels))?;
    Ok(PrincipalFactor {
        semigroup,
        kind,
        members,
        j_class,
        lower_ideal,
    })
}

/// Quotient by the partition whose class of `x` is `key(x)`.
///
/// Fails with `NotACongruence` if the partition is not compatible with the product.
/// Classes are numbered by first occurrence.
pub fn quotient_by_key<K: Eq + std::hash::Hash + Clone>(
    s: &FiniteSemigroup,
    key: impl Fn(usize) -> K,
) -> Result<Quotient> {
    let mut ids = std::collections::HashMap::new();
    let mut class = Vec::with_capacity(s.order());
    let mut reps = Vec::new();
    for x in s.elements() {
        let k = key(x);
        let next = ids.len();
        let id = *ids.entry(k).or_insert_with(|| {
            reps.push(x);
            next
        });
        class.push(id);
    }
    let m = reps.len();
    let mut table = vec![usize::MAX; m * m];
    for a in s.elements() {
        for b in s.elements() {
            let cell = &mut table[class[a] * m + class[b]];
            let c = class[s.mul(a, b)];
            if *cell == usize::MAX {
                *cell = c;
            } else if *cell != c {
                return Err(congruence_witness(s, &class));
            }
        }
    }
    let q = FiniteSemigroup::from_flat_unchecked(m, table)?;
    let map = SemigroupHom::new(s, &q, class)?;
    Ok(Quotient { semigroup: q, map })
}

/// A pair of related elements and a multiplier separating their classes.
fn congruence_witness(s: &FiniteSemigroup, class: &[usize]) -> SemigroupError {
    for x in s.elements() {
        for y in s.elements().filter(|&y| y != x && class[y] == class[x]) {
            for z in s.elements() {
                if class[s.mul(x, z)] != class[s.mul(y, z)] || class[s.mul(z, x)] != class[s.mul(z, y)] {
                    return SemigroupError::NotACongruence { a: x, b: y, c: z };
                }
            }
        }
    }
    SemigroupError::Internal("inconsistent quotient table without a separating triple".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn quotient_by_whole_semigroup_is_trivial() {
        let s = catalog::full_transformation(2);
        let q = rees_quotient(&s, &ElementSet::full(4)).unwrap();
        assert_eq!(q.semigroup.order(), 1);
        assert_eq!(q.semigroup.zero(), Some(0));
    }

    #[test]
    fn quotient_of_semilattice_by_its_zero() {
        let s = catalog::semilattice01();
        let q = rees_quotient(&s, &ElementSet::from_indices(2, [0])).unwrap();
        assert_eq!(q.semigroup.order(), 2);
        assert!(q.map.is_isomorphism());
    }

    #[test]
    fn rejects_non_ideals() {
        let s = catalog::semilattice01();
        let err = rees_quotient(&s, &ElementSet::from_indices(2, [1])).unwrap_err();
        assert_eq!(err, SemigroupError::NotAnIdeal { element: 1, by: 0 });
        assert_eq!(
            rees_quotient(&s, &ElementSet::empty(2)).unwrap_err(),
            SemigroupError::EmptyIdeal
        );
    }

    #[test]
    fn principal_factor_examples() {
        let g = catalog::cyclic_group(3);
        let f = principal_factor(&g, 1).unwrap();
        assert_eq!(f.semigroup.order(), 4);
        assert_eq!(f.kind, FactorKind::ZeroSimple);
        assert!(f.lower_ideal.is_empty());

        let sl = catalog::semilattice01();
        let f = principal_factor(&sl, 1).unwrap();
        assert_eq!(f.semigroup.order(), 2);
        assert_eq!(f.kind, FactorKind::ZeroSimple);
        assert_eq!(f.lower_ideal.to_vec(), vec![0]);

        let null = catalog::null_semigroup(2);
        assert_eq!(principal_factor(&null, 1).unwrap().kind, FactorKind::Null);
    }

    #[test]
    fn congruence_quotient() {
        let z4 = catalog::cyclic_group(4);
        let q = quotient_by_key(&z4, |x| x % 2).unwrap();
        assert_eq!(q.semigroup.order(), 2);
        assert!(q.map.is_homomorphism() && q.map.is_surjective());
        assert!(matches!(
            quotient_by_key(&z4, |x| x == 1),
            Err(SemigroupError::NotACongruence { .. })
        ));
    }
}
