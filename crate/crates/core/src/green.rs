//! Green's relations, the natural partial order, maximal subgroups and local submonoids.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::semigroup::{FiniteSemigroup, Subsemigroup};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] = [
        GreenRelation::R,
        GreenRelation::L,
        GreenRelation::H,
        GreenRelation::D,
        GreenRelation::J,
    ];
}

/// Green's relations of one semigroup, stored as class ids plus divisibility tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreensStructure {
    order: usize,
    r: Vec<usize>,
    l: Vec<usize>,
    h: Vec<usize>,
    d: Vec<usize>,
    j: Vec<usize>,
    /// `left_div[s * n + t]` iff `s ∈ S¹t`.
    left_div: Vec<bool>,
    /// `right_div[s * n + t]` iff `s ∈ tS¹`.
    right_div: Vec<bool>,
    /// `ideal_div[s * n + t]` iff `s ∈ S¹tS¹`.
    ideal_div: Vec<bool>,
}

/// Class ids from an equivalence given as a predicate, numbered by first occurrence.
fn classes_of(n: usize, related: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if id[x] != usize::MAX {
            continue;
        }
        for (y, slot) in id.iter_mut().enumerate().skip(x) {
            if *slot == usize::MAX && related(x, y) {
                *slot = next;
            }
        }
        next += 1;
    }
    id
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut x = x;
    while parent[x] != root {
        x = std::mem::replace(&mut parent[x], root);
    }
    root
}

impl GreensStructure {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let mut left_div = vec![false; n * n];
        let mut right_div = vec![false; n * n];
        let mut ideal_div = vec![false; n * n];
        for t in 0..n {
            // tS is already a right ideal, so tS¹ = {t} ∪ tS; dually for S¹t
            right_div[t * n + t] = true;
            left_div[t * n + t] = true;
            for x in 0..n {
                right_div[s.mul(t, x) * n + t] = true;
                left_div[s.mul(x, t) * n + t] = true;
            }
            for x in 0..n {
                if right_div[x * n + t] {
                    ideal_div[x * n + t] = true;
                    for y in 0..n {
                        ideal_div[s.mul(y, x) * n + t] = true;
                    }
                }
            }
        }
        let r = classes_of(n, |x, y| right_div[x * n + y] && right_div[y * n + x]);
        let l = classes_of(n, |x, y| left_div[x * n + y] && left_div[y * n + x]);
        let h = classes_of(n, |x, y| r[x] == r[y] && l[x] == l[y]);
        let j = classes_of(n, |x, y| ideal_div[x * n + y] && ideal_div[y * n + x]);
        // D is the join of R and L
        let mut parent: Vec<usize> = (0..n).collect();
        for x in 0..n {
            for y in x + 1..n {
                if r[x] == r[y] || l[x] == l[y] {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let d = classes_of(n, |x, y| roots[x] == roots[y]);
        GreensStructure {
            order: n,
            r,
            l,
            h,
            d,
            j,
            left_div,
            right_div,
            ideal_div,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_ids(&self, rel: GreenRelation) -> &[usize] {
        match rel {
            GreenRelation::R => &self.r,
            GreenRelation::L => &self.l,
            GreenRelation::H => &self.h,
            GreenRelation::D => &self.d,
            GreenRelation::J => &self.j,
        }
    }

    pub fn related(&self, rel: GreenRelation, x: usize, y: usize) -> bool {
        let ids = self.class_ids(rel);
        ids[x] == ids[y]
    }

    pub fn class_count(&self, rel: GreenRelation) -> usize {
        self.class_ids(rel).iter().max().map_or(0, |m| m + 1)
    }

    /// Classes as sorted member lists, in class-id order.
    pub fn classes(&self, rel: GreenRelation) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count(rel)];
        for (x, &c) in self.class_ids(rel).iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn class_of(&self, rel: GreenRelation, x: usize) -> ElementSet {
        let ids = self.class_ids(rel);
        ElementSet::from_indices(self.order, (0..self.order).filter(|&y| ids[y] == ids[x]))
    }

    pub fn class_sizes(&self, rel: GreenRelation) -> Vec<usize> {
        self.classes(rel).iter().map(Vec::len).collect()
    }

    /// `s ∈ S¹t`.
    pub fn left_divides(&self, s: usize, t: usize) -> bool {
        self.left_div[s * self.order + t]
    }

    /// `s ∈ tS¹`.
    pub fn right_divides(&self, s: usize, t: usize) -> bool {
        self.right_div[s * self.order + t]
    }

    /// `s ∈ S¹tS¹`.
    pub fn ideal_divides(&self, s: usize, t: usize) -> bool {
        self.ideal_div[s * self.order + t]
    }

    /// The principal two-sided ideal `S¹aS¹`.
    pub fn principal_ideal(&self, a: usize) -> ElementSet {
        ElementSet::from_indices(self.order, (0..self.order).filter(|&x| self.ideal_divides(x, a)))
    }

    pub fn d_equals_j(&self) -> bool {
        self.d == self.j
    }
}

pub fn greens_structure(s: &FiniteSemigroup) -> GreensStructure {
    GreensStructure::compute(s)
}

/// Which multipliers the natural order quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum OrderVariant {
    /// `a, b ∈ S¹`; reflexive on every semigroup.
    #[default]
    WithIdentity,
    /// `a, b ∈ S`.
    WithinSemigroup,
}

/// A binary relation `x ≤ y` on one finite semigroup, stored as a dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    order: usize,
    le: Vec<bool>,
}

impl OrderRelation {
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let le = (0..order * order).map(|i| f(i / order, i % order)).collect();
        OrderRelation { order, le }
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le[x * self.order + y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.order * self.order)
            .filter(|&i| self.le[i])
            .map(|i| (i / self.order, i % self.order))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.le.iter().filter(|&&b| b).count()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.order).all(|x| self.le(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| x == y || !(self.le(x, y) && self.le(y, x))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| !self.le(x, y) || (0..n).all(|z| !self.le(y, z) || self.le(x, z))))
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }
}

/// Natural partial order: `s ≤ t` iff `s = at = tb = sb`, multipliers taken from `S¹`.
pub fn natural_order(s: &FiniteSemigroup) -> OrderRelation {
    natural_order_variant(s, OrderVariant::WithIdentity)
}

pub fn natural_order_variant(s: &FiniteSemigroup, variant: OrderVariant) -> OrderRelation {
    let n = s.order();
    let elems = s.elements();
    let left_mult = |x: usize, t: usize| elems.clone().any(|a| s.mul(a, t) == x);
    let right_mult = |x: usize, t: usize| elems.clone().any(|b| s.mul(t, b) == x && s.mul(x, b) == x);
    OrderRelation::from_fn(n, |x, t| match variant {
        // taking b = 1 forces x = t, which is always below itself
        OrderVariant::WithIdentity => x == t || (left_mult(x, t) && right_mult(x, t)),
        OrderVariant::WithinSemigroup => left_mult(x, t) && right_mult(x, t),
    })
}

fn require_idempotent(s: &FiniteSemigroup, e: usize) -> Result<()> {
    s.check_element(e)?;
    if s.is_idempotent(e) {
        Ok(())
    } else {
        Err(SemigroupError::NotIdempotent(e))
    }
}

/// The maximal subgroup `H_e` with its inclusion.
pub fn maximal_subgroup(s: &FiniteSemigroup, e: usize) -> Result<Subsemigroup> {
    require_idempotent(s, e)?;
    let g = GreensStructure::compute(s);
    s.induced_subsemigroup(&g.class_of(GreenRelation::H, e))
}

/// The local submonoid `eSe` with its inclusion.
pub fn local_submonoid(s: &FiniteSemigroup, e: usize) -> Result<Subsemigroup> {
    require_idempotent(s, e)?;
    let members = ElementSet::from_indices(s.order(), s.elements().map(|x| s.mul(s.mul(e, x), e)));
    s.induced_subsemigroup(&members)
}

/// Graphviz egg-box diagram: one box per D-class, R-classes as rows, L-classes as
/// columns; H-classes containing an idempotent are starred. Edges follow the
/// covering relation of the J-order.
pub fn egg_box_dot(s: &FiniteSemigroup, g: &GreensStructure) -> String {
    let dclasses = g.classes(GreenRelation::D);
    let mut out = String::from("digraph eggbox {\n  node [shape=plaintext];\n");
    for (di, members) in dclasses.iter().enumerate() {
        let mut rows: Vec<usize> = members.iter().map(|&x| g.r[x]).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = members.iter().map(|&x| g.l[x]).collect();
        cols.sort_unstable();
        cols.dedup();
        let _ = write!(
            out,
            "  d{di} [label=<<table border=\"1\" cellborder=\"1\" cellspacing=\"0\">"
        );
        for &r in &rows {
            out.push_str("<tr>");
            for &c in &cols {
                let cell: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&x| g.r[x] == r && g.l[x] == c)
                    .collect();
                let star = if cell.iter().any(|&x| s.is_idempotent(x)) {
                    "*"
                } else {
                    ""
                };
                let text: Vec<String> = cell.iter().map(|&x| escape(&s.label(x))).collect();
                let _ = write!(out, "<td>{}{}</td>", star, text.join(" "));
            }
            out.push_str("</tr>");
        }
        out.push_str("</table>>];\n");
    }
    // a D-class covers another when it lies strictly above it with nothing between
    let rep: Vec<usize> = dclasses.iter().map(|m| m[0]).collect();
    let below = |a: usize, b: usize| a != b && g.ideal_divides(rep[b], rep[a]);
    for a in 0..rep.len() {
        for b in 0..rep.len() {
            if below(a, b) && !(0..rep.len()).any(|c| below(a, c) && below(c, b)) {
                let _ = writeln!(out, "  d{a} -> d{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_is_one_class_everywhere() {
        let g = greens_structure(&catalog::cyclic_group(4));
        for rel in GreenRelation::ALL {
            assert_eq!(g.class_count(rel), 1, "{rel:?}");
        }
    }

    #[test]
    fn left_zero_classes() {
        let g = greens_structure(&catalog::left_zero(2));
        assert_eq!(g.class_count(GreenRelation::L), 1);
        assert_eq!(g.class_count(GreenRelation::R), 2);
        assert_eq!(g.class_count(GreenRelation::H), 2);
        assert_eq!(g.class_ids(GreenRelation::D), g.class_ids(GreenRelation::L));
    }

    #[test]
    fn t2_has_two_d_classes() {
        // indices: 0 = const 0, 1 = id, 2 = swap, 3 = const 1
        let g = greens_structure(&catalog::full_transformation(2));
        let mut d = g.classes(GreenRelation::D);
        d.sort();
        assert_eq!(d, vec![vec![0, 3], vec![1, 2]]);
        assert!(g.d_equals_j());
    }

    #[test]
    fn natural_order_examples() {
        let sl = natural_order(&catalog::semilattice01());
        assert_eq!(sl.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        let z3 = natural_order(&catalog::cyclic_group(3));
        assert_eq!(z3.pairs(), vec![(0, 0), (1, 1), (2, 2)]);
        // without the identity, a null semigroup's nonzero element is not below itself
        let null = catalog::null_semigroup(2);
        let strict = natural_order_variant(&null, OrderVariant::WithinSemigroup);
        assert!(!strict.le(1, 1));
        assert!(natural_order(&null).le(1, 1));
    }

    #[test]
    fn subgroups_and_local_submonoids() {
        let t2 = catalog::full_transformation(2);
        let units = maximal_subgroup(&t2, 1).unwrap();
        assert_eq!(units.members.to_vec(), vec![1, 2]);
        assert_eq!(local_submonoid(&t2, 0).unwrap().semigroup.order(), 1);
        assert_eq!(local_submonoid(&t2, 1).unwrap().semigroup.order(), 4);
        assert_eq!(maximal_subgroup(&t2, 2).unwrap_err(), SemigroupError::NotIdempotent(2));
        let band = catalog::left_zero(3);
        assert_eq!(maximal_subgroup(&band, 1).unwrap().semigroup.order(), 1);
        let sl = catalog::semilattice01();
        assert_eq!(local_submonoid(&sl, 0).unwrap().members.to_vec(), vec![0]);
    }

    #[test]
    fn dot_output_mentions_every_d_class() {
        let t2 = catalog::full_transformation(2);
        let dot = egg_box_dot(&t2, &greens_structure(&t2));
        assert!(dot.starts_with("digraph eggbox"));
        assert!(dot.contains("d0") && dot.contains("d1"));
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("*"));
    }
}
