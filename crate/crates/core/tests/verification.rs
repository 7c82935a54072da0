mod common;

use semiband::green::GreenRelation;
use semiband::verification::{
    bound_report, verify_claims, verify_semigroup, ClaimId, ClaimVerdict, Target, VerifyOptions,
};
use semiband::{FiniteSemigroup, GreensStructure};

fn small_targets() -> Vec<Target> {
    common::corpus()
        .iter()
        .filter(|s| s.order() <= 3)
        .cloned()
        .map(Target::from_table)
        .collect()
}

fn untimed(seed: u64) -> VerifyOptions {
    VerifyOptions {
        seed,
        record_timing: false,
    }
}

/// Left zero band on `0..a` over a right zero ideal on `a..a+b`.
fn left_over_right(a: usize, b: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(a + b, |x, y| if y < a { x } else { y }).unwrap()
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let targets = small_targets();
    let one = verify_claims(&targets, ClaimId::ALL, &untimed(5)).unwrap().to_json();
    let two = verify_claims(&targets, ClaimId::ALL, &untimed(5)).unwrap().to_json();
    assert_eq!(one, two);
}

#[test]
fn every_claim_is_exercised() {
    let report = verify_claims(&small_targets(), ClaimId::ALL, &untimed(0)).unwrap();
    assert!(
        report.uncovered(ClaimId::ALL).is_empty(),
        "{:?}",
        report.uncovered(ClaimId::ALL)
    );
    assert!(report.all_passed());
}

#[test]
fn failures_carry_witnesses() {
    let s = left_over_right(9, 9);
    let report = verify_semigroup(
        "l9r9",
        &s,
        &[ClaimId::SigmaRegBound, ClaimId::SigmaNmBound],
        &untimed(0),
    )
    .unwrap();
    let verdicts: Vec<_> = report.entries.iter().map(|e| (e.claim, e.verdict)).collect();
    assert_eq!(
        verdicts,
        [
            (ClaimId::SigmaRegBound, ClaimVerdict::Pass),
            (ClaimId::SigmaNmBound, ClaimVerdict::Fail)
        ]
    );
    assert!(report.failures().all(|e| e.witness.is_some() && e.reason.is_some()));
}

#[test]
fn bound_arithmetic_matches_raw_sizes() {
    for s in common::corpus()
        .iter()
        .filter(|s| semiband::properties::non_regular_element(s).is_none())
    {
        let b = bound_report(s).unwrap();
        let g = GreensStructure::compute(s);
        let sq = |rel| g.class_sizes(rel).iter().map(|c| c * c).sum::<usize>();
        assert_eq!(b.r_order, 2 * sq(GreenRelation::L));
        assert_eq!(b.l_order, 2 * sq(GreenRelation::R));
        assert_eq!(b.two_n_l, 2 * b.n * b.l);
        assert_eq!(b.min_squared, b.r_order.min(b.l_order).pow(2));
        assert_eq!(b.four_n_cubed_m, 4 * b.n.pow(3) * b.m);
    }
}
