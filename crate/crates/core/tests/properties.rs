mod common;

use semiband::ideal::{principal_factor, FactorKind};
use semiband::properties::{check_property, completely_simple, left_group, PropertyName};
use semiband::FiniteSemigroup;

fn holds(s: &FiniteSemigroup, p: PropertyName) -> bool {
    check_property(s, p).unwrap().holds()
}

#[test]
fn every_finite_member_is_periodic() {
    assert!(common::corpus().iter().all(|s| holds(s, PropertyName::Periodic)));
}

#[test]
fn completely_simple_routes_agree() {
    for s in common::corpus() {
        let a = completely_simple::by_definition(s);
        assert_eq!(a, completely_simple::all_primitive(s), "{:?}", s.table());
        assert_eq!(a, completely_simple::regular_locally_group(s), "{:?}", s.table());
    }
}

#[test]
fn left_group_routes_agree() {
    for s in common::corpus() {
        let a = holds(s, PropertyName::LeftGroup);
        assert_eq!(a, left_group::left_simple_right_cancellative(s));
        assert_eq!(a, left_group::regular_left_zero_idempotents(s));
        assert_eq!(a, left_group::single_l_class_completely_regular(s));
    }
}

#[test]
fn semisimple_iff_no_null_principal_factor() {
    for s in common::corpus() {
        let factors_ok = s
            .elements()
            .all(|a| principal_factor(s, a).unwrap().kind == FactorKind::ZeroSimple);
        assert_eq!(holds(s, PropertyName::Semisimple), factors_ok, "{:?}", s.table());
    }
}

#[test]
fn cryptic_is_left_and_right_cryptic() {
    for s in common::corpus() {
        assert_eq!(
            holds(s, PropertyName::Cryptic),
            holds(s, PropertyName::LeftCryptic) && holds(s, PropertyName::RightCryptic)
        );
    }
}

#[test]
fn implications() {
    for s in common::corpus() {
        if holds(s, PropertyName::Inverse) {
            assert!(holds(s, PropertyName::Regular));
        }
        if holds(s, PropertyName::Group) {
            assert!(holds(s, PropertyName::LeftGroup) && holds(s, PropertyName::RightGroup));
        }
    }
}
