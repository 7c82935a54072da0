mod common;

use std::io::Write;

use semiband::catalog;
use semiband::constructions::{build_f, build_phi, build_r, build_t, f_without_one, Decoded, Flag, Side, TripleElem};
use semiband::enumeration::{corpus_up_to, enumerate_semigroups, Modulo};
use semiband::green::{GreenRelation, GreensStructure};
use semiband::properties::{check_property, non_regular_element, PropertyName};
use semiband::transformations::iso_r_tx_to_t;
use semiband::verification::{
    check_bounds, check_green_formulas, check_r_construction, check_restriction, check_t_construction,
    run_mutation_trials, verify_claims, ClaimId, ClaimVerdict, Target, VerificationReport, VerifyOptions,
};
use semiband::{ElementSet, FiniteSemigroup, Verdict};

const SEED: u64 = 2024;

struct Corpus {
    all: Vec<FiniteSemigroup>,
    report: VerificationReport,
}

impl Corpus {
    fn load() -> Self {
        let all = corpus_up_to(4, Modulo::Isomorphism).unwrap();
        let targets: Vec<Target> = all.iter().cloned().map(Target::from_table).collect();
        let opts = VerifyOptions {
            seed: SEED,
            record_timing: false,
        };
        let report = verify_claims(&targets, ClaimId::ALL, &opts).unwrap();
        Corpus { all, report }
    }

    fn covered(&self) -> impl Iterator<Item = &FiniteSemigroup> {
        self.all.iter().filter(|s| s.is_idempotent_covered().holds())
    }

    fn regular(&self) -> impl Iterator<Item = &FiniteSemigroup> {
        self.all.iter().filter(|s| non_regular_element(s).is_none())
    }

    /// No failures for `claims`, and at least one member where each applied.
    fn claims_hold(&self, claims: &[ClaimId]) -> Result<String, String> {
        let mut applied = 0;
        for e in self.report.entries.iter().filter(|e| claims.contains(&e.claim)) {
            match e.verdict {
                ClaimVerdict::Fail => {
                    return Err(format!(
                        "{} fails on {}: {}",
                        e.claim,
                        e.member,
                        e.reason.clone().unwrap_or_default()
                    ))
                }
                ClaimVerdict::Pass | ClaimVerdict::PassSampled => applied += 1,
                ClaimVerdict::Skipped => {}
            }
        }
        let uncovered = self.report.uncovered(claims);
        if !uncovered.is_empty() {
            return Err(format!("never applied: {uncovered:?}"));
        }
        Ok(format!("{applied} claim checks"))
    }
}

fn verdict(v: Verdict, what: &str) -> Result<(), String> {
    match v {
        Verdict::Holds => Ok(()),
        Verdict::Fails(f) => Err(format!("{what}: {} at {}", f.reason, f.witness)),
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn construction_sanity(c: &Corpus) -> Result<String, String> {
    let mut n = 0;
    for s in c.covered() {
        let t = build_t(s).map_err(|e| e.to_string())?;
        verdict(check_t_construction(s, &t), &format!("T(S) of {}", s.order()))?;
        n += 1;
    }
    c.claims_hold(&[ClaimId::TsIdempotents, ClaimId::TsSemiband4, ClaimId::ETr2Lemma])?;
    Ok(format!("{n} members of 𝓘"))
}

fn green_oracle(c: &Corpus) -> Result<String, String> {
    let mut n = 0;
    for s in c.covered() {
        let t = build_t(s).map_err(|e| e.to_string())?;
        verdict(check_green_formulas(s, &t), "Green's relations on T(S)")?;
        n += 1;
    }
    c.claims_hold(&[
        ClaimId::PreGreenLemma,
        ClaimId::GreenFormulas,
        ClaimId::RestrictionCorollary,
    ])?;
    Ok(format!("{n} members, all pairs"))
}

fn depth_two(c: &Corpus) -> Result<String, String> {
    let mut n = 0;
    for s in c.regular() {
        let r = build_r(s, Side::Right).map_err(|e| e.to_string())?;
        verdict(check_r_construction(s, &r), "R(S)")?;
        let t = build_t(s).map_err(|e| e.to_string())?;
        let inside = ElementSet::from_indices(
            t.result.order(),
            r.decode.iter().map(|d| t.index_of(d).expect("R(S) ⊆ T(S)")),
        );
        let tg = GreensStructure::compute(&t.result);
        verdict(
            check_restriction(&t.result, &tg, &inside).map_err(|e| e.to_string())?,
            "R(S) inside T(S)",
        )?;
        n += 1;
    }
    c.claims_hold(&[ClaimId::RsSemiband2, ClaimId::RegularSubRestriction])?;
    Ok(format!("{n} regular members"))
}

fn order_formulas(c: &Corpus) -> Result<String, String> {
    let err = |e: semiband::SemigroupError| e.to_string();
    ensure(build_f(&catalog::trivial()).map_err(err)?.result.order() == 2, || {
        "|F(1)| ≠ 2".into()
    })?;
    let mut checked = 0;
    for s in &c.all {
        let n = s.order();
        let f = build_f(s).map_err(err)?;
        if s.is_monoid() {
            ensure(f.result.order() == 2 * n * n, || {
                format!("|F(S)| = {} for a monoid of order {n}", f.result.order())
            })?;
            checked += 1;
        } else if n <= 3 {
            let rest = f_without_one(s, &f).map_err(err)?.semigroup.order();
            ensure(rest == 2 * n * n + 4 * n + 1, || {
                format!("|F(S)∖1̄| = {rest} for order {n}")
            })?;
            checked += 1;
        }
        let m = s.adjoin_identity().order();
        let phi = build_phi(s).map_err(err)?.phi.result.order();
        ensure(phi == 2 * m * m, || format!("|ΦS| = {phi}, |S¹| = {m}"))?;
    }
    c.claims_hold(&[ClaimId::OrderFormula, ClaimId::FsOrders])?;
    Ok(format!("{checked} F(S) orders, {} ΦS orders", c.all.len()))
}

fn isomorphisms(c: &Corpus) -> Result<String, String> {
    let small: Vec<&FiniteSemigroup> = c.all.iter().filter(|s| s.order() <= 3).collect();
    let monoids = small.iter().filter(|s| s.is_monoid()).count();
    let a1 = small
        .iter()
        .filter(|s| !s.is_monoid() && s.is_idempotent_covered().holds())
        .count();
    ensure(monoids > 0 && a1 > 0, || "empty sub-corpus".into())?;
    for e in c.report.entries.iter() {
        let relevant = matches!(
            e.claim,
            ClaimId::TsIsoAs | ClaimId::A1Subsemigroup | ClaimId::FsOrders | ClaimId::PhiEmbeds | ClaimId::HigginsIso
        );
        ensure(!relevant || e.verdict != ClaimVerdict::Fail, || {
            format!("{} fails on {}", e.claim, e.member)
        })?;
    }
    for k in [1, 2] {
        let h = iso_r_tx_to_t(k).map_err(|e| e.to_string())?;
        ensure(h.iso.is_isomorphism(), || format!("R(𝒯_{k}) → T is not an isomorphism"))?;
        ensure(h.r.result.order() == h.t.result.order(), || {
            format!("orders differ for k = {k}")
        })?;
        if k == 2 {
            ensure(h.t.result.order() == 12, || {
                format!("|T| = {} for k = 2", h.t.result.order())
            })?;
        }
    }
    c.claims_hold(&[
        ClaimId::TsIsoAs,
        ClaimId::A1Subsemigroup,
        ClaimId::HigginsIso,
        ClaimId::PastijnA1Cr,
    ])?;
    Ok(format!(
        "{monoids} monoids and {a1} non-monoids of order ≤ 3, R(𝒯_k) ≅ T for k = 1, 2"
    ))
}

fn preservation(c: &Corpus) -> Result<String, String> {
    c.claims_hold(&[
        ClaimId::PreserveFinPerReg,
        ClaimId::SimpleFamily,
        ClaimId::LocallyV,
        ClaimId::SubgroupIso,
        ClaimId::LocalMonoidIso,
        ClaimId::Kernel0bar,
        ClaimId::ZeroSimpleFamily,
        ClaimId::RsPreservations,
        ClaimId::RStarZeroSimple,
        ClaimId::CompletelyRegularRs,
    ])
}

fn counterexample() -> Result<String, String> {
    let s = catalog::semilattice01();
    let t = build_t(&s).map_err(|e| e.to_string())?;
    let witness = t.triple_index(0, 1, Flag::Tau).expect("(0,1,τ) ∈ T(S)");
    let square = t.result.mul(witness, witness);
    ensure(
        t.decode[square] == Decoded::Triple(TripleElem::new(0, 0, Flag::Tau)),
        || "(0,1,τ)² ≠ (0,0,τ)".into(),
    )?;
    let tg = GreensStructure::compute(&t.result);
    ensure(!tg.related(GreenRelation::H, witness, square), || {
        "(0,1,τ) lies in a subgroup".into()
    })?;
    let v = check_property(&t.result, PropertyName::CompletelyRegular).map_err(|e| e.to_string())?;
    let w = v.witness().ok_or("T(S) is completely regular")?;
    ensure(w == &semiband::Witness::Element(witness), || {
        format!("witness {w} is not (0,1,τ)")
    })?;
    let r = build_r(&s, Side::Right).map_err(|e| e.to_string())?;
    let rv = check_property(&r.result, PropertyName::CompletelyRegular).map_err(|e| e.to_string())?;
    ensure(rv.holds(), || "R(S) is not completely regular".into())?;
    Ok("(0,1,τ) witnesses T(S) ∉ CR, R(S) ∈ CR".into())
}

fn bounds(c: &Corpus) -> Result<String, String> {
    let regular: Vec<FiniteSemigroup> = c.regular().cloned().collect();
    let reports = check_bounds(&regular).map_err(|e| e.to_string())?;
    for (s, b) in regular.iter().zip(&reports) {
        ensure(b.r_order <= b.two_n_squared, || {
            format!("|R(S)| = {} > 2n² for {:?}", b.r_order, s.table())
        })?;
        ensure(b.nm_ok, || {
            format!("min² = {} > 4n³m = {}", b.min_squared, b.four_n_cubed_m)
        })?;
        let left_group = GreensStructure::compute(s).class_count(GreenRelation::L) == 1;
        ensure(b.tight == left_group, || {
            format!("tightness misflagged for {:?}", s.table())
        })?;
    }
    let tight = reports.iter().filter(|b| b.tight).count();
    let groups = regular
        .iter()
        .zip(&reports)
        .filter(|(s, b)| check_property(s, PropertyName::Group).unwrap().holds() && b.tight);
    ensure(groups.count() > 0, || "no tight group".into())?;
    c.claims_hold(&[ClaimId::SigmaRegBound, ClaimId::SigmaNmBound])?;
    Ok(format!("{} regular members, {tight} tight", regular.len()))
}

fn enumeration() -> Result<String, String> {
    for n in 1..=3 {
        let scanned = common::full_scan(n);
        let generated = enumerate_semigroups(n, Modulo::None).map_err(|e| e.to_string())?;
        ensure(
            generated
                .members
                .iter()
                .map(|s| s.table().to_vec())
                .eq(scanned.iter().cloned()),
            || format!("order {n}: labelled tables differ"),
        )?;
        let reps = enumerate_semigroups(n, Modulo::Isomorphism)
            .map_err(|e| e.to_string())?
            .members;
        for t in &scanned {
            let hits = reps
                .iter()
                .filter(|r| common::bijection(n, t, r.table()).is_some())
                .count();
            ensure(hits == 1, || format!("order {n}: {t:?} matches {hits} representatives"))?;
        }
    }
    Ok("orders 1 to 3 agree with the full scan".into())
}

fn fault_injection(c: &Corpus) -> Result<String, String> {
    let small: Vec<FiniteSemigroup> = c.all.iter().filter(|s| s.order() <= 3).cloned().collect();
    let trials = run_mutation_trials(&small, 20, SEED).map_err(|e| e.to_string())?;
    ensure(trials.len() == 20, || "wrong trial count".into())?;
    if let Some(t) = trials.iter().find(|t| !t.caught()) {
        return Err(format!("uncaught mutation {t:?}"));
    }
    Ok("20 of 20 mutations caught".into())
}

#[test]
fn acceptance() {
    let corpus = Corpus::load();
    let results: Vec<(&str, Result<String, String>)> = vec![
        ("construction sanity", construction_sanity(&corpus)),
        ("Green oracle equivalence", green_oracle(&corpus)),
        ("depth-2 regular embedding", depth_two(&corpus)),
        ("order formulas", order_formulas(&corpus)),
        ("isomorphism theorems", isomorphisms(&corpus)),
        ("preservation biconditionals", preservation(&corpus)),
        ("counterexample", counterexample()),
        ("bounds", bounds(&corpus)),
        ("enumeration soundness", enumeration()),
        ("fault injection", fault_injection(&corpus)),
    ];
    let mut out = std::io::stdout().lock();
    for (i, (name, r)) in results.iter().enumerate() {
        let line = match r {
            Ok(detail) => format!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => format!("criterion {:>2} FAIL {name}: {why}", i + 1),
        };
        writeln!(out, "{line}").unwrap();
    }
    let failed: Vec<usize> = (0..results.len())
        .filter(|&i| results[i].1.is_err())
        .map(|i| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
