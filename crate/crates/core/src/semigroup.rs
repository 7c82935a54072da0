//! Finite semigroups given by their Cayley tables.

use std::collections::VecDeque;

use crate::error::{Result, SemigroupError};
use crate::hom::SemigroupHom;
use crate::set::ElementSet;
use crate::verdict::Verdict;
use crate::verdict::Witness;

/// A finite semigroup on the elements `0..order`.
///
/// The table is stored row-major: `mul(a, b) == table[a * order + b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Builds and validates a semigroup from its rows.
    pub fn new(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        Self::from_flat(n, rows.into_iter().flatten().collect(), labels)
    }

    pub fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let s = Self::from_flat_unchecked(order, table)?;
        if let Some((a, b, c)) = s.find_non_associative() {
            return Err(SemigroupError::NonAssociative { a, b, c });
        }
        s.with_labels(labels)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..order * order).map(|i| f(i / order, i % order)).collect();
        Self::from_flat(order, table, None)
    }

    /// Checks shape and index ranges but not associativity.
    ///
    /// Used by fault-injection code that needs to hold deliberately broken tables;
    /// every public constructor other than this one validates associativity.
    pub fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != order * order {
            return Err(SemigroupError::NotSquare {
                row: table.len() / order,
                len: table.len() % order,
                expected: order,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(SemigroupError::IndexOutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            });
        }
        let mut s = FiniteSemigroup {
            order,
            table,
            labels: None,
            identity: None,
            zero: None,
        };
        s.identity = (0..order).find(|&e| (0..order).all(|x| s.mul(e, x) == x && s.mul(x, e) == x));
        s.zero = (0..order).find(|&z| (0..order).all(|x| s.mul(z, x) == z && s.mul(x, z) == z));
        Ok(s)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != self.order {
                return Err(SemigroupError::LabelCount {
                    order: self.order,
                    got: l.len(),
                });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product of a nonempty word.
    pub fn product(&self, word: &[usize]) -> usize {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(SemigroupError::ElementOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// First triple violating associativity, scanning in lexicographic order.
    pub fn find_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                let row_ab = self.row(ab);
                for (c, &l) in row_ab.iter().enumerate() {
                    if l != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.find_non_associative().is_none()
    }

    /// The opposite semigroup: `a *op b = b * a`.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..n * n).map(|i| self.mul(i % n, i / n)).collect();
        FiniteSemigroup {
            order: n,
            table,
            labels: self.labels.clone(),
            identity: self.identity,
            zero: self.zero,
        }
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// The set `E(S)` of idempotents.
    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_idempotent(a)))
    }

    /// `S¹`: `S` itself when `S` is already a monoid, otherwise `S` with a new identity.
    ///
    /// The adjoined identity, when present, is the last element (index `order`).
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.is_monoid() {
            self.clone()
        } else {
            self.force_adjoin_identity()
        }
    }

    /// Always adjoins a fresh identity, even to a monoid.
    pub fn force_adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = match (a == n, b == n) {
                    (true, _) => b,
                    (_, true) => a,
                    _ => self.mul(a, b),
                };
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("1".to_string());
            l
        });
        FiniteSemigroup {
            order: m,
            table,
            labels,
            identity: Some(n),
            // a zero of S stays a zero; the new identity does not absorb
            zero: self.zero,
        }
    }

    /// `S` is idempotent covered when every `s` satisfies `se = s = fs` for some
    /// idempotents `e`, `f`. Fails with the first uncovered element.
    pub fn is_idempotent_covered(&self) -> Verdict {
        let e = self.idempotents();
        for s in self.elements() {
            let right = e.iter().any(|x| self.mul(s, x) == s);
            let left = e.iter().any(|x| self.mul(x, s) == s);
            if !(right && left) {
                let side = if right {
                    "no idempotent f with fs = s"
                } else {
                    "no idempotent e with se = s"
                };
                return Verdict::fails(Witness::Element(s), side);
            }
        }
        Verdict::Holds
    }

    /// `{ab : a in A, b in B}`.
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Closure of `gens` under multiplication.
    pub fn closure(&self, gens: &ElementSet) -> ElementSet {
        let mut seen = gens.clone();
        let gen_list = gens.to_vec();
        let mut queue: VecDeque<usize> = gen_list.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gen_list {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// The subsemigroup generated by `gens`, re-indexed in increasing parent order.
    pub fn generated_subsemigroup(&self, gens: &ElementSet) -> Result<Subsemigroup> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        self.induced_subsemigroup(&self.closure(gens))
    }

    /// Restricts the table to a closed subset.
    pub fn induced_subsemigroup(&self, members: &ElementSet) -> Result<Subsemigroup> {
        let elems = members.to_vec();
        if elems.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let p = self.mul(a, b);
                if index[p] == usize::MAX {
                    return Err(SemigroupError::NotClosed { a, b });
                }
                table.push(index[p]);
            }
        }
        // restriction of an associative table stays associative
        let mut sub = FiniteSemigroup::from_flat_unchecked(m, table)?;
        sub.labels = Some(elems.iter().map(|&x| self.label(x)).collect());
        let embedding = SemigroupHom::new(&sub, self, elems)?;
        Ok(Subsemigroup {
            semigroup: sub,
            embedding,
            members: members.clone(),
        })
    }

    /// Index and period of the cyclic subsemigroup `<a>`: the least `i`, `p` with
    /// `a^(i+p) = a^i`.
    pub fn index_period(&self, a: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.order];
        let mut x = a;
        let mut k = 1;
        loop {
            if seen[x] != usize::MAX {
                let i = seen[x];
                return (i, k - i);
            }
            seen[x] = k;
            x = self.mul(x, a);
            k += 1;
        }
    }
}

/// A subsemigroup together with its inclusion into the parent.
#[derive(Clone, Debug)]
pub struct Subsemigroup {
    pub semigroup: FiniteSemigroup,
    /// Maps each subsemigroup index to the parent index.
    pub embedding: SemigroupHom,
    /// The member set inside the parent.
    pub members: ElementSet,
}

impl Subsemigroup {
    pub fn parent_index(&self, i: usize) -> usize {
        self.embedding.apply(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_monoid_has_identity_and_zero() {
        let s = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        assert_eq!(s.identity(), Some(0));
        assert_eq!(s.zero(), Some(0));
    }

    #[test]
    fn left_zero_has_neither() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(s.identity(), None);
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn non_associative_witness() {
        let err = FiniteSemigroup::new(vec![vec![0, 1], vec![0, 0]], None).unwrap_err();
        assert_eq!(err, SemigroupError::NonAssociative { a: 1, b: 0, c: 1 });
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(FiniteSemigroup::new(vec![], None).unwrap_err(), SemigroupError::Empty);
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 1], vec![0]], None),
            Err(SemigroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 2], vec![0, 0]], None),
            Err(SemigroupError::IndexOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                ..
            })
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0]], Some(vec![])),
            Err(SemigroupError::LabelCount { .. })
        ));
    }

    #[test]
    fn adjoin_identity_follows_monoid_convention() {
        let t = catalog::trivial();
        assert_eq!(t.adjoin_identity().order(), 1);
        let l2 = catalog::left_zero(2);
        let l2one = l2.adjoin_identity();
        assert_eq!(l2one.order(), 3);
        assert_eq!(l2one.identity(), Some(2));
        assert!(l2one.is_associative());
        let sl = catalog::semilattice01();
        assert_eq!(sl.adjoin_identity(), sl);
        let forced = sl.force_adjoin_identity();
        assert_eq!(forced.order(), 3);
        assert!(forced.is_associative());
        assert_eq!(forced.identity(), Some(2));
    }

    #[test]
    fn idempotent_sets() {
        assert!(catalog::left_zero(3).idempotents().is_full());
        let z2 = catalog::cyclic_group(2);
        assert_eq!(z2.idempotents().to_vec(), vec![0]);
    }

    #[test]
    fn idempotent_cover() {
        assert!(catalog::full_transformation(2).is_idempotent_covered().holds());
        assert!(catalog::left_zero(2).is_idempotent_covered().holds());
        let null = catalog::null_semigroup(2);
        // element 0 is the zero, element 1 is a
        assert_eq!(null.is_idempotent_covered().witness(), Some(&Witness::Element(1)));
    }

    #[test]
    fn generated_subsemigroup_of_t2_idempotents() {
        let t2 = catalog::full_transformation(2);
        let sub = t2.generated_subsemigroup(&t2.idempotents()).unwrap();
        assert_eq!(sub.semigroup.order(), 3);
        assert!(sub.embedding.is_homomorphism() && sub.embedding.is_injective());
        let all = t2.generated_subsemigroup(&ElementSet::full(4)).unwrap();
        assert_eq!(all.semigroup.order(), 4);
        assert!(t2.generated_subsemigroup(&ElementSet::empty(4)).is_err());
    }

    #[test]
    fn induced_subsemigroup_rejects_open_sets() {
        let z3 = catalog::cyclic_group(3);
        let err = z3.induced_subsemigroup(&ElementSet::from_indices(3, [1])).unwrap_err();
        assert!(matches!(err, SemigroupError::NotClosed { a: 1, b: 1 }));
    }

    #[test]
    fn index_and_period() {
        let z3 = catalog::cyclic_group(3);
        assert_eq!(z3.index_period(1), (1, 3));
        let null = catalog::null_semigroup(2);
        assert_eq!(null.index_period(1), (2, 1));
    }

    #[test]
    fn opposite_of_left_zero_is_right_zero() {
        assert_eq!(catalog::left_zero(2).opposite().table(), catalog::right_zero(2).table());
    }
}
