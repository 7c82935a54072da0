//! Structural predicates. Every negative answer carries a witness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::green::{local_submonoid, GreenRelation, GreensStructure};
use crate::ideal::{principal_factor_with, FactorKind};
use crate::semigroup::FiniteSemigroup;
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyName {
    Regular,
    Periodic,
    CompletelyRegular,
    Simple,
    Bisimple,
    ZeroSimple,
    ZeroBisimple,
    CompletelySimple,
    CompletelyZeroSimple,
    Null,
    Semisimple,
    CompletelySemisimple,
    LeftCryptic,
    RightCryptic,
    Cryptic,
    Group,
    LeftGroup,
    RightGroup,
    Band,
    Semilattice,
    Inverse,
}

impl PropertyName {
    pub const ALL: [PropertyName; 21] = [
        PropertyName::Regular,
        PropertyName::Periodic,
        PropertyName::CompletelyRegular,
        PropertyName::Simple,
        PropertyName::Bisimple,
        PropertyName::ZeroSimple,
        PropertyName::ZeroBisimple,
        PropertyName::CompletelySimple,
        PropertyName::CompletelyZeroSimple,
        PropertyName::Null,
        PropertyName::Semisimple,
        PropertyName::CompletelySemisimple,
        PropertyName::LeftCryptic,
        PropertyName::RightCryptic,
        PropertyName::Cryptic,
        PropertyName::Group,
        PropertyName::LeftGroup,
        PropertyName::RightGroup,
        PropertyName::Band,
        PropertyName::Semilattice,
        PropertyName::Inverse,
    ];

    pub fn requires_zero(self) -> bool {
        matches!(
            self,
            PropertyName::ZeroSimple | PropertyName::ZeroBisimple | PropertyName::CompletelyZeroSimple
        )
    }
}

impl fmt::Display for PropertyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for PropertyName {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self> {
        PropertyName::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| SemigroupError::Parse {
                line: 0,
                message: format!("unknown property {s:?}"),
            })
    }
}

pub fn check_property(s: &FiniteSemigroup, p: PropertyName) -> Result<Verdict> {
    check_property_with(s, &GreensStructure::compute(s), p)
}

/// Same as [`check_property`] with precomputed Green's relations.
pub fn check_property_with(s: &FiniteSemigroup, g: &GreensStructure, p: PropertyName) -> Result<Verdict> {
    use PropertyName::*;
    if p.requires_zero() && s.zero().is_none() {
        return Err(SemigroupError::NoZeroElement);
    }
    Ok(match p {
        Regular => regular(s),
        Periodic => periodic(s),
        CompletelyRegular => completely_regular(s, g),
        Simple => single_class(s, g, GreenRelation::J),
        Bisimple => single_class(s, g, GreenRelation::D),
        ZeroSimple => zero_class_pair(s, g, GreenRelation::J),
        ZeroBisimple => zero_class_pair(s, g, GreenRelation::D),
        CompletelySimple => single_class(s, g, GreenRelation::J).and_then(|| has_primitive(s, None)),
        CompletelyZeroSimple => zero_class_pair(s, g, GreenRelation::J).and_then(|| has_primitive(s, s.zero())),
        Null => null(s),
        Semisimple => semisimple(s, g, false)?,
        CompletelySemisimple => semisimple(s, g, true)?,
        LeftCryptic => left_cryptic(s, g),
        RightCryptic => right_cryptic(s, g),
        Cryptic => left_cryptic(s, g).and_then(|| right_cryptic(s, g)),
        Group => single_class(s, g, GreenRelation::H),
        LeftGroup => single_class(s, g, GreenRelation::L),
        RightGroup => single_class(s, g, GreenRelation::R),
        Band => band(s),
        Semilattice => band(s).and_then(|| commutative(s)),
        Inverse => regular(s).and_then(|| idempotents_commute(s)),
    })
}

/// The first element without an inner inverse, if any.
pub fn non_regular_element(s: &FiniteSemigroup) -> Option<usize> {
    s.elements().find(|&a| inner_inverse(s, a).is_none())
}

/// Some `x` with `axa = a`.
pub fn inner_inverse(s: &FiniteSemigroup, a: usize) -> Option<usize> {
    s.elements().find(|&x| s.mul(s.mul(a, x), a) == a)
}

/// An inverse `a'` of `a`: `aa'a = a` and `a'aa' = a'`.
pub fn inverse_of(s: &FiniteSemigroup, a: usize) -> Option<usize> {
    inner_inverse(s, a).map(|x| s.mul(s.mul(x, a), x))
}

fn regular(s: &FiniteSemigroup) -> Verdict {
    match non_regular_element(s) {
        Some(a) => Verdict::fails(Witness::Element(a), "no x with axa = a"),
        None => Verdict::Holds,
    }
}

fn periodic(s: &FiniteSemigroup) -> Verdict {
    for a in s.elements() {
        let (index, period) = s.index_period(a);
        let mut x = a;
        let mut found = false;
        for _ in 0..index + period {
            if s.is_idempotent(x) {
                found = true;
                break;
            }
            x = s.mul(x, a);
        }
        if !found {
            return Verdict::fails(Witness::Element(a), "cyclic subsemigroup without an idempotent");
        }
    }
    Verdict::Holds
}

fn completely_regular(s: &FiniteSemigroup, g: &GreensStructure) -> Verdict {
    match s.elements().find(|&a| !g.related(GreenRelation::H, a, s.mul(a, a))) {
        Some(a) => Verdict::fails(Witness::Element(a), "a² is not H-related to a"),
        None => Verdict::Holds,
    }
}

fn single_class(s: &FiniteSemigroup, g: &GreensStructure, rel: GreenRelation) -> Verdict {
    match s.elements().find(|&b| !g.related(rel, 0, b)) {
        Some(b) => Verdict::fails(
            Witness::Pair(0, b),
            format!("0 and {b} lie in different {rel:?}-classes"),
        ),
        None => Verdict::Holds,
    }
}

/// `{0}` and `S \ {0}` are the only classes, and `S² ≠ {0}`.
fn zero_class_pair(s: &FiniteSemigroup, g: &GreensStructure, rel: GreenRelation) -> Verdict {
    let z = s.zero().expect("zero checked by caller");
    let nonzero: Vec<usize> = s.elements().filter(|&x| x != z).collect();
    let Some(&first) = nonzero.first() else {
        return Verdict::fails(Witness::Element(z), "S = {0}");
    };
    if let Some(&b) = nonzero.iter().find(|&&b| !g.related(rel, first, b)) {
        return Verdict::fails(Witness::Pair(first, b), format!("two non-zero {rel:?}-classes"));
    }
    if null(s).holds() {
        return Verdict::fails(Witness::Pair(first, first), "S² = {0}");
    }
    Verdict::Holds
}

/// `e` is primitive when `ef = fe = f` (with `f ≠ zero`) forces `e = f`.
fn is_primitive(s: &FiniteSemigroup, e: usize, zero: Option<usize>) -> bool {
    Some(e) != zero
        && s.is_idempotent(e)
        && s.idempotents()
            .iter()
            .filter(|&f| Some(f) != zero)
            .all(|f| !(s.mul(e, f) == f && s.mul(f, e) == f) || e == f)
}

fn has_primitive(s: &FiniteSemigroup, zero: Option<usize>) -> Verdict {
    if s.idempotents().iter().any(|e| is_primitive(s, e, zero)) {
        Verdict::Holds
    } else {
        let e = s.idempotents().iter().find(|&e| Some(e) != zero).unwrap_or(0);
        Verdict::fails(Witness::Element(e), "no primitive idempotent")
    }
}

/// Non-zero idempotents that are primitive. When `S` has no zero the `≠ 0` clause is vacuous.
pub fn primitive_idempotents(s: &FiniteSemigroup) -> crate::set::ElementSet {
    crate::set::ElementSet::from_indices(
        s.order(),
        s.idempotents().iter().filter(|&e| is_primitive(s, e, s.zero())),
    )
}

fn null(s: &FiniteSemigroup) -> Verdict {
    let z = s.mul(0, 0);
    for a in s.elements() {
        for b in s.elements() {
            if s.mul(a, b) != z {
                return Verdict::fails(Witness::Pair(a, b), "two different products");
            }
        }
    }
    Verdict::Holds
}

fn semisimple(s: &FiniteSemigroup, g: &GreensStructure, completely: bool) -> Result<Verdict> {
    for class in g.classes(GreenRelation::J) {
        let a = class[0];
        let f = principal_factor_with(s, g, a)?;
        if f.kind == FactorKind::Null {
            return Ok(Verdict::fails(Witness::Element(a), "null principal factor"));
        }
        if completely && !has_primitive(&f.semigroup, Some(f.zero())).holds() {
            return Ok(Verdict::fails(
                Witness::Element(a),
                "principal factor without a primitive idempotent",
            ));
        }
    }
    Ok(Verdict::Holds)
}

fn left_cryptic(s: &FiniteSemigroup, g: &GreensStructure) -> Verdict {
    h_compatible(s, g, |c, x| s.mul(c, x))
}

fn right_cryptic(s: &FiniteSemigroup, g: &GreensStructure) -> Verdict {
    h_compatible(s, g, |c, x| s.mul(x, c))
}

fn h_compatible(s: &FiniteSemigroup, g: &GreensStructure, act: impl Fn(usize, usize) -> usize) -> Verdict {
    for class in g.classes(GreenRelation::H) {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                for c in s.elements() {
                    if !g.related(GreenRelation::H, act(c, a), act(c, b)) {
                        return Verdict::fails(
                            Witness::Triple(a, b, c),
                            "H is not compatible with multiplication by c",
                        );
                    }
                }
            }
        }
    }
    Verdict::Holds
}

fn band(s: &FiniteSemigroup) -> Verdict {
    match s.elements().find(|&a| !s.is_idempotent(a)) {
        Some(a) => Verdict::fails(Witness::Element(a), "not idempotent"),
        None => Verdict::Holds,
    }
}

fn commutative(s: &FiniteSemigroup) -> Verdict {
    for a in s.elements() {
        for b in a + 1..s.order() {
            if s.mul(a, b) != s.mul(b, a) {
                return Verdict::fails(Witness::Pair(a, b), "ab ≠ ba");
            }
        }
    }
    Verdict::Holds
}

fn idempotents_commute(s: &FiniteSemigroup) -> Verdict {
    let e = s.idempotents().to_vec();
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i + 1..] {
            if s.mul(x, y) != s.mul(y, x) {
                return Verdict::fails(Witness::Pair(x, y), "idempotents do not commute");
            }
        }
    }
    Verdict::Holds
}

/// Every local submonoid `eSe` has property `p`; the witness is the offending idempotent.
pub fn is_locally(s: &FiniteSemigroup, p: PropertyName) -> Result<Verdict> {
    for e in s.idempotents().iter() {
        let local = local_submonoid(s, e)?;
        if !check_property(&local.semigroup, p)?.holds() {
            return Ok(Verdict::fails(Witness::Element(e), format!("eSe is not {p}")));
        }
    }
    Ok(Verdict::Holds)
}

/// Membership in the e-variety `LV`: regular with every local submonoid in `V`.
pub fn in_local_variety(s: &FiniteSemigroup, v: PropertyName) -> Result<Verdict> {
    Ok(match regular(s) {
        Verdict::Holds => is_locally(s, v)?,
        failed => failed,
    })
}

/// Three characterisations of complete simplicity.
pub mod completely_simple {
    use super::*;

    pub fn by_definition(s: &FiniteSemigroup) -> bool {
        check_property(s, PropertyName::CompletelySimple)
            .map(|v| v.holds())
            .unwrap_or(false)
    }

    /// Simple with every idempotent primitive.
    pub fn all_primitive(s: &FiniteSemigroup) -> bool {
        let g = GreensStructure::compute(s);
        g.class_count(GreenRelation::J) == 1 && s.idempotents().iter().all(|e| is_primitive(s, e, None))
    }

    /// Regular and locally a group.
    pub fn regular_locally_group(s: &FiniteSemigroup) -> bool {
        regular(s).holds() && is_locally(s, PropertyName::Group).map(|v| v.holds()).unwrap_or(false)
    }
}

/// Three characterisations of left groups.
pub mod left_group {
    use super::*;

    /// `Sa = S` for all `a`, and `ba = ca` forces `b = c`.
    pub fn left_simple_right_cancellative(s: &FiniteSemigroup) -> bool {
        let left_simple = s
            .elements()
            .all(|a| s.elements().all(|y| s.elements().any(|x| s.mul(x, a) == y)));
        let right_cancellative = s.elements().all(|a| {
            s.elements()
                .all(|b| s.elements().all(|c| b == c || s.mul(b, a) != s.mul(c, a)))
        });
        left_simple && right_cancellative
    }

    /// Regular, with `E(S)` a left-zero band.
    pub fn regular_left_zero_idempotents(s: &FiniteSemigroup) -> bool {
        let e = s.idempotents();
        regular(s).holds() && e.iter().all(|x| e.iter().all(|y| s.mul(x, y) == x))
    }

    /// One L-class and completely regular.
    pub fn single_l_class_completely_regular(s: &FiniteSemigroup) -> bool {
        let g = GreensStructure::compute(s);
        g.class_count(GreenRelation::L) == 1 && completely_regular(s, &g).holds()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::set::ElementSet;

    fn holds(s: &FiniteSemigroup, p: PropertyName) -> bool {
        check_property(s, p).unwrap().holds()
    }

    #[test]
    fn left_zero_is_completely_simple() {
        let l2 = catalog::left_zero(2);
        assert!(holds(&l2, PropertyName::CompletelySimple));
        assert!(holds(&l2, PropertyName::LeftGroup));
        assert!(!holds(&l2, PropertyName::RightGroup));
        assert!(is_locally(&l2, PropertyName::Group).unwrap().holds());
    }

    #[test]
    fn null_semigroup_is_not_regular() {
        let null = catalog::null_semigroup(2);
        let v = check_property(&null, PropertyName::Regular).unwrap();
        assert_eq!(v.witness(), Some(&Witness::Element(1)));
        assert!(holds(&null, PropertyName::Null));
        assert!(!holds(&null, PropertyName::ZeroSimple));
    }

    #[test]
    fn semilattice_is_cryptic() {
        let sl = catalog::semilattice01();
        assert!(holds(&sl, PropertyName::Cryptic));
        assert!(holds(&sl, PropertyName::Semilattice));
        assert!(holds(&sl, PropertyName::ZeroSimple));
        assert!(holds(&sl, PropertyName::CompletelyZeroSimple));
    }

    #[test]
    fn zero_properties_need_a_zero() {
        assert_eq!(
            check_property(&catalog::left_zero(2), PropertyName::ZeroSimple).unwrap_err(),
            SemigroupError::NoZeroElement
        );
    }

    #[test]
    fn primitive_idempotent_examples() {
        assert_eq!(primitive_idempotents(&catalog::semilattice01()).to_vec(), vec![1]);
        // chain 0 < 1 < 2 under min: 1 is primitive, 2 is not
        assert_eq!(primitive_idempotents(&catalog::chain(3)).to_vec(), vec![1]);
        let rb = catalog::rectangular_band(2, 2);
        assert_eq!(primitive_idempotents(&rb), ElementSet::full(4));
    }

    #[test]
    fn t2_is_not_locally_inverse() {
        let t2 = catalog::full_transformation(2);
        let v = is_locally(&t2, PropertyName::Inverse).unwrap();
        assert_eq!(v.witness(), Some(&Witness::Element(1)));
        assert!(holds(&t2, PropertyName::Regular));
    }

    #[test]
    fn groups_and_bands() {
        let z3 = catalog::cyclic_group(3);
        for p in [
            PropertyName::Group,
            PropertyName::LeftGroup,
            PropertyName::Inverse,
            PropertyName::CompletelySimple,
        ] {
            assert!(holds(&z3, p), "{p}");
        }
        assert!(!holds(&z3, PropertyName::Band));
        let b = catalog::brandt(2);
        assert!(holds(&b, PropertyName::Inverse));
        assert!(holds(&b, PropertyName::CompletelyZeroSimple));
        assert!(holds(&b, PropertyName::ZeroBisimple));
    }

    #[test]
    fn property_names_parse() {
        for p in PropertyName::ALL {
            assert_eq!(p.to_string().to_lowercase().parse::<PropertyName>().unwrap(), p);
        }
    }
}
