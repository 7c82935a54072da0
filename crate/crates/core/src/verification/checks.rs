use std::collections::{BTreeSet, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bounds::bound_report;
use super::context::Member;
use super::sampling::{sample_regular_subsemigroup, SAMPLES_PER_MEMBER};
use super::{ClaimId, Outcome};
use crate::constructions::{
    build_a, build_f, build_phi, f_generators, f_relations, f_without_one, r_factorization, semidirect_tr2,
    t_factorization, t_idempotents_closed_form, triple_mul, AVariant, ConstructionBundle, Decoded, FNormalForm, Flag,
    TripleElem,
};
use crate::depth::depth_analysis;
use crate::error::{Result, SemigroupError};
use crate::green::{natural_order, GreenRelation, GreensStructure};
use crate::hom::SemigroupHom;
use crate::ideal::check_ideal;
use crate::properties::{
    check_property, in_local_variety, inner_inverse, is_locally, non_regular_element, PropertyName,
};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;
use crate::transformations::{
    delta_bar, full_tf_monoid, higgins_members_by_filter, higgins_members_by_parameters, higgins_t, iso_r_tx_to_t,
    Transformation,
};
use crate::verdict::{Verdict, Witness};

pub(super) const HIGGINS_DEGREES: [usize; 2] = [1, 2];

macro_rules! require {
    ($cond:expr, $why:expr) => {
        if !$cond {
            return Ok(Outcome::Skipped($why.into()));
        }
    };
}

macro_rules! check {
    ($verdict:expr) => {
        if let v @ Verdict::Fails(_) = $verdict {
            return Ok(v.into());
        }
    };
}

fn fail(w: Witness, reason: impl Into<String>) -> Verdict {
    Verdict::fails(w, reason)
}

fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    verdicts.into_iter().find(|v| !v.holds()).unwrap_or(Verdict::Holds)
}

fn first_collision(h: &SemigroupHom) -> Option<(usize, usize)> {
    let mut seen = vec![usize::MAX; h.codomain_order()];
    for x in 0..h.domain_order() {
        let y = h.apply(x);
        if seen[y] != usize::MAX {
            return Some((seen[y], x));
        }
        seen[y] = x;
    }
    None
}

/// Homomorphism and injectivity, with witnesses in the domain.
fn embedding_verdict(h: &SemigroupHom, name: &str) -> Verdict {
    if let Some((x, y)) = h.hom_failure() {
        return fail(Witness::Pair(x, y), format!("{name} is not a homomorphism"));
    }
    if let Some((x, y)) = first_collision(h) {
        return fail(Witness::Pair(x, y), format!("{name} is not injective"));
    }
    Verdict::Holds
}

fn iso_verdict(h: &SemigroupHom, name: &str) -> Verdict {
    embedding_verdict(h, name).and_then(|| {
        let image: HashSet<usize> = (0..h.domain_order()).map(|x| h.apply(x)).collect();
        match (0..h.codomain_order()).find(|y| !image.contains(y)) {
            Some(y) => fail(Witness::Element(y), format!("{name} misses a codomain element")),
            None => Verdict::Holds,
        }
    })
}

/// Both sides of a biconditional, evaluated independently.
fn iff(what: &str, left_name: &str, left: Verdict, right_name: &str, right: Verdict) -> Verdict {
    match (left, right) {
        (Verdict::Holds, Verdict::Holds) | (Verdict::Fails(_), Verdict::Fails(_)) => Verdict::Holds,
        (Verdict::Holds, Verdict::Fails(f)) => fail(
            f.witness,
            format!("{what} holds for {left_name} but not for {right_name}: {}", f.reason),
        ),
        (Verdict::Fails(f), Verdict::Holds) => fail(
            f.witness,
            format!("{what} holds for {right_name} but not for {left_name}: {}", f.reason),
        ),
    }
}

fn property_iff(
    props: &[PropertyName],
    s: &FiniteSemigroup,
    other_name: &str,
    other: &FiniteSemigroup,
) -> Result<Verdict> {
    for &p in props {
        check!(iff(
            &p.to_string(),
            "S",
            check_property(s, p)?,
            other_name,
            check_property(other, p)?
        ));
    }
    Ok(Verdict::Holds)
}

fn local_variety_iff(s: &FiniteSemigroup, other_name: &str, other: &FiniteSemigroup) -> Result<Verdict> {
    for v in [PropertyName::Group, PropertyName::Semilattice, PropertyName::Inverse] {
        check!(iff(
            &format!("locally {v}"),
            "S",
            in_local_variety(s, v)?,
            other_name,
            in_local_variety(other, v)?
        ));
    }
    Ok(Verdict::Holds)
}

/// Every maximal subgroup is trivial.
fn subgroups_trivial(s: &FiniteSemigroup) -> Verdict {
    let g = GreensStructure::compute(s);
    match s
        .idempotents()
        .iter()
        .find(|&e| g.class_of(GreenRelation::H, e).len() > 1)
    {
        Some(e) => fail(Witness::Element(e), "nontrivial maximal subgroup"),
        None => Verdict::Holds,
    }
}

/// Group and local-submonoid properties transfer in both directions.
fn subgroup_and_local_iff(s: &FiniteSemigroup, other_name: &str, other: &FiniteSemigroup) -> Result<Verdict> {
    check!(iff(
        "trivial subgroups",
        "S",
        subgroups_trivial(s),
        other_name,
        subgroups_trivial(other)
    ));
    for q in [PropertyName::Band, PropertyName::Semilattice] {
        check!(iff(
            &format!("local submonoids {q}"),
            "S",
            is_locally(s, q)?,
            other_name,
            is_locally(other, q)?
        ));
    }
    Ok(Verdict::Holds)
}

fn triple_of(b: &ConstructionBundle, i: usize) -> TripleElem {
    b.triple(i).expect("construction decodes to triples")
}

/// The table agrees with the triple product and is associative.
fn triple_table_verdict(s: &FiniteSemigroup, b: &ConstructionBundle) -> Verdict {
    let sg = &b.result;
    for i in sg.elements() {
        for j in sg.elements() {
            let p = triple_mul(s, triple_of(b, i), triple_of(b, j));
            if b.index_of(&Decoded::Triple(p)) != Some(sg.mul(i, j)) {
                return fail(
                    Witness::Pair(i, j),
                    format!("table entry differs from the triple product {p:?}"),
                );
            }
        }
    }
    match sg.find_non_associative() {
        Some((a, b, c)) => fail(Witness::Triple(a, b, c), "table is not associative"),
        None => Verdict::Holds,
    }
}

/// The decoded carrier is exactly the set of triples over `S` satisfying `member`.
fn carrier_verdict(s: &FiniteSemigroup, b: &ConstructionBundle, member: impl Fn(TripleElem) -> bool) -> Verdict {
    for i in b.result.elements() {
        let x = triple_of(b, i);
        if !member(x) || b.index_of(&Decoded::Triple(x)) != Some(i) {
            return fail(Witness::Element(i), format!("{x:?} does not belong to the carrier"));
        }
    }
    for x in s.elements() {
        for y in s.elements() {
            for flag in Flag::BOTH {
                let t = TripleElem::new(x, y, flag);
                if member(t) && b.index_of(&Decoded::Triple(t)).is_none() {
                    return fail(Witness::Triple(x, y, flag as usize), "triple missing from the carrier");
                }
            }
        }
    }
    Verdict::Holds
}

fn semiband_depth_verdict(b: &ConstructionBundle, depth: usize) -> Verdict {
    let d = depth_analysis(&b.result);
    let power = d.power(depth);
    match b.result.elements().find(|&x| !power.contains(x)) {
        Some(x) => fail(Witness::Element(x), format!("not a product of {depth} idempotents")),
        None => Verdict::Holds,
    }
}

/// Each listed factor is an idempotent of the construction and the factors multiply to `x`.
fn factorization_verdict(b: &ConstructionBundle, x: usize, factors: Option<&[TripleElem]>) -> Verdict {
    let Some(factors) = factors else {
        return fail(Witness::Element(x), "no factorisation into idempotents");
    };
    let mut idx = Vec::with_capacity(factors.len());
    for f in factors {
        match b.index_of(&Decoded::Triple(*f)) {
            Some(i) if b.result.is_idempotent(i) => idx.push(i),
            _ => {
                return fail(
                    Witness::Element(x),
                    format!("factor {f:?} is not an idempotent of the construction"),
                )
            }
        }
    }
    if b.result.product(&idx) != x {
        return fail(Witness::Element(x), "idempotent factors do not multiply back");
    }
    Verdict::Holds
}

/// `T(S)` as built: carrier, product, idempotents, depth and `φ`.
pub fn check_t_construction(s: &FiniteSemigroup, t: &ConstructionBundle) -> Verdict {
    let g = GreensStructure::compute(s);
    triple_table_verdict(s, t)
        .and_then(|| carrier_verdict(s, t, |x| g.left_divides(x.s, x.t)))
        .and_then(|| {
            let closed: HashSet<TripleElem> = t_idempotents_closed_form(s, &g).into_iter().collect();
            all(t.result.elements().map(|i| {
                if t.result.is_idempotent(i) == closed.contains(&triple_of(t, i)) {
                    Verdict::Holds
                } else {
                    fail(Witness::Element(i), "idempotency differs from the closed form")
                }
            }))
        })
        .and_then(|| semiband_depth_verdict(t, 4))
        .and_then(|| {
            all(t
                .result
                .elements()
                .map(|i| factorization_verdict(t, i, t_factorization(s, triple_of(t, i)).as_deref())))
        })
        .and_then(|| embedding_verdict(&t.embedding, "φ"))
        .and_then(|| diagonal_verdict(s, t))
}

/// `φ(s) = (s, s, σ)`.
fn diagonal_verdict(s: &FiniteSemigroup, b: &ConstructionBundle) -> Verdict {
    match s
        .elements()
        .find(|&x| b.decode[b.embedding.apply(x)] != Decoded::Triple(TripleElem::new(x, x, Flag::Sigma)))
    {
        Some(x) => fail(Witness::Element(x), "φ(s) is not (s,s,σ)"),
        None => Verdict::Holds,
    }
}

/// `(s, u) = a(t, v)` for some `a ∈ S¹`.
fn common_left_multiplier(s: &FiniteSemigroup, x: TripleElem, y: TripleElem) -> bool {
    (x.s == x.t && y.s == y.t) || s.elements().any(|a| s.mul(a, x.t) == x.s && s.mul(a, y.t) == y.s)
}

/// Closed forms of Green's relations and the natural order on `T(S)` against
/// brute force, over every pair.
pub fn check_green_formulas(s: &FiniteSemigroup, t: &ConstructionBundle) -> Verdict {
    use GreenRelation::*;
    let sg = GreensStructure::compute(s);
    let s_le = natural_order(s);
    let tg = GreensStructure::compute(&t.result);
    let t_le = natural_order(&t.result);
    for i in t.result.elements() {
        for j in t.result.elements() {
            let (x, y) = (triple_of(t, i), triple_of(t, j));
            let a = common_left_multiplier(s, x, y);
            let same = x.flag == y.flag;
            let cases = [
                ("(i) R", sg.related(R, x.t, y.t) && a, tg.related(R, i, j)),
                ("(ii) L", same && sg.related(L, x.t, y.t), tg.related(L, i, j)),
                ("(iii) H", same && sg.related(H, x.t, y.t) && a, tg.related(H, i, j)),
                ("(iv) D", sg.related(D, x.t, y.t), tg.related(D, i, j)),
                ("(v) J", sg.related(J, x.t, y.t), tg.related(J, i, j)),
                ("(vi) ≤", same && s_le.le(x.t, y.t) && a, t_le.le(i, j)),
            ];
            for (name, closed, brute) in cases {
                if closed != brute {
                    return fail(
                        Witness::Pair(i, j),
                        format!("{name}: closed form says {closed}, brute force says {brute}"),
                    );
                }
            }
        }
    }
    Verdict::Holds
}

/// `R(S)` as built: carrier, product, regularity, depth, idempotents and `φ`.
pub fn check_r_construction(s: &FiniteSemigroup, r: &ConstructionBundle) -> Verdict {
    let g = GreensStructure::compute(s);
    triple_table_verdict(s, r)
        .and_then(|| carrier_verdict(s, r, |x| g.related(GreenRelation::L, x.s, x.t)))
        .and_then(|| match non_regular_element(&r.result) {
            Some(x) => fail(Witness::Element(x), "R(S) is not regular"),
            None => Verdict::Holds,
        })
        .and_then(|| semiband_depth_verdict(r, 2))
        .and_then(|| {
            all(r.result.elements().map(|i| {
                let f = r_factorization(s, triple_of(r, i));
                factorization_verdict(r, i, f.as_ref().map(|f| &f[..]))
            }))
        })
        .and_then(|| {
            all(r.result.elements().map(|i| {
                let x = triple_of(r, i);
                let expected = match x.flag {
                    Flag::Sigma => s.is_idempotent(x.t),
                    Flag::Tau => s.is_idempotent(x.s),
                };
                if r.result.is_idempotent(i) == expected {
                    Verdict::Holds
                } else {
                    fail(Witness::Element(i), "idempotency differs from the flag rule")
                }
            }))
        })
        .and_then(|| embedding_verdict(&r.embedding, "φ"))
        .and_then(|| diagonal_verdict(s, r))
}

/// Green's relations and the natural order of the subsemigroup on `members` agree
/// with those of `t` restricted to it. Witnesses are indices of `t`.
pub fn check_restriction(t: &FiniteSemigroup, tg: &GreensStructure, members: &ElementSet) -> Result<Verdict> {
    let sub = t.induced_subsemigroup(members)?;
    let rg = GreensStructure::compute(&sub.semigroup);
    let r_le = natural_order(&sub.semigroup);
    let t_le = natural_order(t);
    for i in sub.semigroup.elements() {
        for j in sub.semigroup.elements() {
            let (pi, pj) = (sub.parent_index(i), sub.parent_index(j));
            for k in GreenRelation::ALL {
                if tg.related(k, pi, pj) != rg.related(k, i, j) {
                    return Ok(fail(
                        Witness::Pair(pi, pj),
                        format!("{k:?} of the subsemigroup differs"),
                    ));
                }
            }
            if t_le.le(pi, pj) != r_le.le(i, j) {
                return Ok(fail(Witness::Pair(pi, pj), "natural order of the subsemigroup differs"));
            }
        }
    }
    Ok(Verdict::Holds)
}

pub(super) fn dispatch(m: &Member<'_>, claim: ClaimId) -> Result<Outcome> {
    use ClaimId::*;
    match claim {
        ETr2Lemma => e_tr2_lemma(m),
        TsIdempotents => ts_idempotents(m),
        TsSemiband4 => ts_semiband4(m),
        PhiEmbeds => phi_embeds(m),
        FsOrders => fs_orders(m),
        TsIsoAs => ts_iso_as(m),
        A1Subsemigroup => a1_subsemigroup(m),
        PreserveFinPerReg => preserve_fin_per_reg(m),
        PreGreenLemma => pre_green_lemma(m),
        GreenFormulas => green_formulas(m),
        OrderFormula => order_formula(m),
        RestrictionCorollary => restriction_corollary(m),
        SubgroupIso => subgroup_iso(m),
        LocalMonoidIso => local_monoid_iso(m),
        LocallyV => locally_v(m),
        SimpleFamily => simple_family(m),
        Kernel0bar => kernel_0bar(m),
        ZeroSimpleFamily => zero_simple_family(m),
        RsSemiband2 => rs_semiband2(m),
        RegularSubRestriction => regular_sub_restriction(m),
        RsPreservations => rs_preservations(m),
        RStarZeroSimple => rstar_zero_simple(m),
        CompletelyRegularRs => completely_regular_rs(m),
        PastijnA1Cr => a1_completely_regular(m),
        HigginsIso => Ok(Outcome::Skipped("checked once per run".into())),
        SigmaRegBound => sigma_reg_bound(m),
        SigmaNmBound => sigma_nm_bound(m),
    }
}

const NOT_COVERED: &str = "S is not idempotent covered";
const NOT_REGULAR: &str = "S is not regular";
const NO_ZERO: &str = "S has no zero";

fn e_tr2_lemma(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    let tr = semidirect_tr2(s)?;
    let e = s.idempotents();
    let mut closed = HashSet::new();
    for f in e.iter() {
        for x in s.elements().filter(|&x| s.mul(x, f) == x) {
            closed.insert(TripleElem::new(x, f, Flag::Sigma));
            closed.insert(TripleElem::new(f, x, Flag::Tau));
        }
    }
    Ok(all(tr.result.elements().map(|i| {
        if tr.result.is_idempotent(i) == closed.contains(&triple_of(&tr, i)) {
            Verdict::Holds
        } else {
            fail(Witness::Element(i), "idempotency differs from the closed form")
        }
    }))
    .into())
}

fn ts_idempotents(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let s = m.s;
    let t = m.t()?;
    let closed: HashSet<TripleElem> = t_idempotents_closed_form(s, m.greens()).into_iter().collect();
    // idempotents of T*R₂ by the squaring rule, restricted to s ∈ S¹t
    let squares_to_itself = |x: TripleElem| match x.flag {
        Flag::Sigma => s.mul(x.s, x.t) == x.s && s.is_idempotent(x.t),
        Flag::Tau => s.is_idempotent(x.s) && s.mul(x.t, x.s) == x.t,
    };
    Ok(all(t.result.elements().map(|i| {
        let x = triple_of(t, i);
        let table = t.result.is_idempotent(i);
        if table != closed.contains(&x) {
            fail(Witness::Element(i), "idempotency differs from the closed form")
        } else if table != squares_to_itself(x) {
            fail(Witness::Element(i), "idempotency differs from E(T*R₂) ∩ T(S)")
        } else {
            Verdict::Holds
        }
    }))
    .into())
}

fn ts_semiband4(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    Ok(check_t_construction(m.s, m.t()?).into())
}

fn s1_identity(s: &FiniteSemigroup) -> usize {
    s.identity().unwrap_or(s.order())
}

fn f_index(f: &ConstructionBundle, s: usize, t: usize, hsuffix: bool) -> Result<usize> {
    f.index_of(&Decoded::Normal(FNormalForm { s, t, hsuffix }))
        .ok_or_else(|| SemigroupError::Internal(format!("normal form ({s},{t},{hsuffix}) missing")))
}

fn phi_embeds(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    if m.covered() {
        let t = m.t()?;
        check!(embedding_verdict(&t.embedding, "φ: S → T(S)").and_then(|| diagonal_verdict(s, t)));
        if m.has_zero() {
            check!(embedding_verdict(&m.t_star()?.embedding, "φ*: S → T*(S)"));
        }
    }
    let a = build_a(s, AVariant::Full)?;
    check!(embedding_verdict(&a.f.embedding, "s ↦ h̄s̄ into F(S)"));
    check!(embedding_verdict(&a.a.embedding, "s ↦ (h̄s̄)ρ into A(S)"));
    let one = s1_identity(s);
    let map = s
        .elements()
        .map(|x| Ok(a.quotient.apply(f_index(&a.f, one, x, true)?)))
        .collect::<Result<Vec<_>>>()?;
    check!(embedding_verdict(
        &SemigroupHom::new(s, &a.a.result, map)?,
        "s ↦ (h̄s̄h̄)ρ into A(S)"
    ));
    let phi = build_phi(s)?;
    check!(embedding_verdict(&phi.phi.embedding, "s ↦ (1,s,σ) into ΦS"));
    Ok(Outcome::Pass)
}

fn fs_orders(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    let n = s.order();
    let f = build_f(s)?;
    let size = f.result.order();
    if s.is_monoid() {
        if size != 2 * n * n {
            return Ok(fail(
                Witness::Element(0),
                format!("|F(S)| = {size}, expected 2n² = {}", 2 * n * n),
            )
            .into());
        }
    } else {
        let without = match f_without_one(s, &f) {
            Ok(sub) => sub,
            Err(SemigroupError::NotClosed { a, b }) => {
                return Ok(fail(Witness::Pair(a, b), "F(S)∖{1̄} is not closed").into())
            }
            Err(e) => return Err(e),
        };
        let expected = 2 * n * n + 4 * n + 1;
        if without.semigroup.order() != expected {
            return Ok(fail(
                Witness::Element(0),
                format!("|F(S)∖{{1̄}}| = {}, expected {expected}", without.semigroup.order()),
            )
            .into());
        }
        let one = f_generators(s).one;
        if let Some(x) = s.elements().find(|&x| f.embedding.apply(x) == one) {
            return Ok(fail(Witness::Element(x), "the embedding meets 1̄").into());
        }
    }
    check!(f_relations(s, &f));
    // h̄, 1̄, s̄, h̄s̄, s̄h̄, h̄s̄h̄, s̄h̄t̄, s̄h̄t̄h̄ over s, t ≠ 1 list F(S) without repetition
    let g = f_generators(s);
    let one = s1_identity(s);
    let rest: Vec<usize> = (0..g.bars.len()).filter(|&x| x != one).map(|x| g.bars[x]).collect();
    let mut words: Vec<Vec<usize>> = vec![vec![g.h], vec![g.one]];
    for &a in &rest {
        words.extend([vec![a], vec![g.h, a], vec![a, g.h], vec![g.h, a, g.h]]);
        for &b in &rest {
            words.extend([vec![a, g.h, b], vec![a, g.h, b, g.h]]);
        }
    }
    let mut seen = HashSet::new();
    for w in &words {
        let x = f.result.product(w);
        if !seen.insert(x) {
            return Ok(fail(Witness::Element(x), "listed elements of F(S) repeat").into());
        }
    }
    if seen.len() != size {
        return Ok(fail(Witness::Element(0), "listed elements do not exhaust F(S)").into());
    }
    let phi = build_phi(s)?;
    let m1 = g.bars.len();
    if phi.phi.result.order() != 2 * m1 * m1 {
        return Ok(fail(Witness::Element(0), "|ΦS| differs from 2|S¹|²").into());
    }
    check!(iso_verdict(&phi.chi, "χ: F(S) → ΦS"));
    let s1 = s.adjoin_identity();
    for i in phi.phi.result.elements() {
        let Decoded::Rees(x) = phi.phi.decode[i] else {
            unreachable!("ΦS decodes to Rees triples")
        };
        if x.lambda != Flag::Sigma {
            continue;
        }
        for j in phi.phi.result.elements() {
            let Decoded::Rees(y) = phi.phi.decode[j] else {
                unreachable!("ΦS decodes to Rees triples")
            };
            let expected = Decoded::Rees(crate::constructions::ReesTriple {
                i: x.i,
                a: s1.mul(x.a, y.a),
                lambda: y.lambda,
            });
            if phi.phi.decode[phi.phi.result.mul(i, j)] != expected {
                return Ok(fail(Witness::Pair(i, j), "the σ row does not absorb").into());
            }
        }
    }
    Ok(Outcome::Pass)
}

fn ts_iso_as(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    let a = build_a(s, AVariant::Full)?;
    check!(a.check_psi());
    let s1 = s.adjoin_identity();
    let t1 = &a.t_one;
    for i in t1.result.elements() {
        let x = triple_of(t1, i);
        for b in s1.elements().filter(|&b| s1.mul(b, x.t) == x.s) {
            if a.quotient.apply(f_index(&a.f, b, x.t, x.flag == Flag::Tau)?) != a.psi.apply(i) {
                return Ok(fail(Witness::Element(i), "ψ depends on the choice of a").into());
            }
        }
    }
    for (k, d) in a.f.decode.iter().enumerate() {
        let Decoded::Normal(nf) = d else {
            unreachable!("F(S) decodes to normal forms")
        };
        let flag = if nf.hsuffix { Flag::Tau } else { Flag::Sigma };
        let expected = Decoded::Triple(TripleElem::new(s1.mul(nf.s, nf.t), nf.t, flag));
        if t1.decode[a.psi_inv.apply(a.quotient.apply(k))] != expected {
            return Ok(fail(Witness::Element(k), "ψ⁻¹ differs from (a,t,·)ρ ↦ (at,t,·)").into());
        }
    }
    if s.is_monoid() && m.t()?.result.order() != a.a.result.order() {
        return Ok(fail(Witness::Element(0), "|T(S)| ≠ |A(S)| for a monoid").into());
    }
    Ok(Outcome::Pass)
}

fn a1_subsemigroup(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    require!(!m.s.is_monoid(), "S is a monoid");
    let s = m.s;
    let a = build_a(s, AVariant::A1General)?;
    let part = a.a1.as_ref().expect("A1 variant");
    check!(iso_verdict(&part.iso, "ψ⁻¹|A₁ → T(S)"));
    let one = s1_identity(s);
    let t1 = &a.t_one;
    let mut image = ElementSet::empty(a.a.result.order());
    for i in t1.result.elements() {
        let x = triple_of(t1, i);
        if x.t == one {
            continue;
        }
        let c = a.psi.apply(i);
        image.insert(c);
        let listed = if x.s == x.t {
            a.quotient.apply(f_index(&a.f, one, x.t, x.flag == Flag::Tau)?)
        } else {
            match s.elements().find(|&r| s.mul(r, x.t) == x.s) {
                Some(r) => a.quotient.apply(f_index(&a.f, r, x.t, x.flag == Flag::Tau)?),
                None => return Ok(fail(Witness::Element(i), "s ∉ St although s ≠ t").into()),
            }
        };
        if listed != c {
            return Ok(fail(Witness::Element(i), "ψ differs from its case description on T(S)").into());
        }
    }
    if image != part.sub.members {
        return Ok(fail(
            Witness::Element(image.difference(&part.sub.members).first().unwrap_or(0)),
            "ψ(T(S)) differs from A₁",
        )
        .into());
    }
    for x in s.elements() {
        if part.iso.apply(part.psi1.apply(x)) != part.target.embedding.apply(x) {
            return Ok(fail(Witness::Element(x), "ψ₁ψ⁻¹ ≠ φ").into());
        }
    }
    Ok(Outcome::Pass)
}

fn preserve_fin_per_reg(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let s = m.s;
    let t = m.t()?;
    let ts = &t.result;
    check!(property_iff(
        &[PropertyName::Periodic, PropertyName::Regular],
        s,
        "T(S)",
        ts
    )?);
    for i in ts.elements() {
        let x = triple_of(t, i);
        let (mut power, mut s_pow, mut t_pow) = (i, x.s, x.t);
        // x^k = (s t^(k-1), t^k, σ) or (s^k, t s^(k-1), τ)
        let (mut left, mut right) = (x.s, x.t);
        for _ in 0..=ts.order() {
            let expected = TripleElem::new(left, right, x.flag);
            if triple_of(t, power) != expected {
                return Ok(fail(Witness::Element(i), "powers differ from the monogenic formula").into());
            }
            power = ts.mul(power, i);
            match x.flag {
                Flag::Sigma => {
                    t_pow = s.mul(t_pow, x.t);
                    left = s.mul(left, x.t);
                    right = t_pow;
                }
                Flag::Tau => {
                    s_pow = s.mul(s_pow, x.s);
                    left = s_pow;
                    right = s.mul(right, x.s);
                }
            }
        }
    }
    if m.regular() {
        for i in ts.elements() {
            let x = triple_of(t, i);
            let tp = inner_inverse(s, x.t).expect("S is regular");
            let Some(y) = t.triple_index(tp, tp, Flag::Sigma) else {
                return Ok(fail(Witness::Element(i), "(t',t',σ) missing from T(S)").into());
            };
            if ts.product(&[i, y, i]) != i {
                return Ok(fail(Witness::Pair(i, y), "(t',t',σ) is not an inner inverse").into());
            }
        }
    }
    Ok(Outcome::Pass)
}

fn pre_green_lemma(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let t = m.t()?;
    let tg = m.t_greens()?;
    let ts = &t.result;
    let flip = |i: usize, flag: Flag| {
        let x = triple_of(t, i);
        t.triple_index(x.s, x.t, flag)
            .expect("T(S) is closed under changing the flag")
    };
    for i in ts.elements() {
        if !tg.related(GreenRelation::R, flip(i, Flag::Tau), flip(i, Flag::Sigma)) {
            return Ok(fail(Witness::Element(i), "(s,t,τ) and (s,t,σ) are not R-related").into());
        }
    }
    let sigma: Vec<usize> = ts.elements().filter(|&i| triple_of(t, i).flag == Flag::Sigma).collect();
    for i in ts.elements() {
        for j in ts.elements() {
            if tg.related(GreenRelation::L, i, j) && triple_of(t, i).flag != triple_of(t, j).flag {
                return Ok(fail(Witness::Pair(i, j), "L-related elements with different flags").into());
            }
        }
    }
    for &i in &sigma {
        for &j in &sigma {
            let l_sigma = tg.related(GreenRelation::L, i, j);
            if l_sigma != tg.related(GreenRelation::L, flip(i, Flag::Tau), flip(j, Flag::Tau)) {
                return Ok(fail(Witness::Pair(i, j), "L on σ-triples differs from L on τ-triples").into());
            }
            let reaches = |from: usize, to: usize| sigma.iter().any(|&k| ts.mul(k, from) == to);
            if l_sigma != (reaches(i, j) && reaches(j, i)) {
                return Ok(fail(Witness::Pair(i, j), "L on σ-triples differs from σ-multipliers").into());
            }
        }
    }
    Ok(Outcome::Pass)
}

fn green_formulas(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    Ok(check_green_formulas(m.s, m.t()?).into())
}

fn sum_of_squares(sizes: &[usize]) -> usize {
    sizes.iter().map(|c| c * c).sum()
}

fn order_formula(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    let n = s.order();
    let g = m.greens();
    let mut checks: Vec<(&str, usize, usize)> = vec![("|T*R₂| = 2n²", semidirect_tr2(s)?.result.order(), 2 * n * n)];
    if m.covered() {
        let t = m.t()?.result.order();
        let expected = 2 * s
            .elements()
            .map(|x| s.elements().filter(|&y| g.left_divides(y, x)).count())
            .sum::<usize>();
        checks.push(("|T(S)| = 2Σ|S¹t|", t, expected));
        if m.has_zero() {
            checks.push(("|T*(S)| = |T(S)| - 1", m.t_star()?.result.order(), t - 1));
        }
    }
    if m.regular() {
        let r = m.r()?.result.order();
        checks.push((
            "|R(S)| = 2Σ|L|²",
            r,
            2 * sum_of_squares(&g.class_sizes(GreenRelation::L)),
        ));
        checks.push((
            "|L(S)| = 2Σ|R|²",
            m.l()?.result.order(),
            2 * sum_of_squares(&g.class_sizes(GreenRelation::R)),
        ));
        if m.has_zero() {
            checks.push(("|R*(S)| = |R(S)| - 1", m.r_star()?.result.order(), r - 1));
        }
    }
    for (name, got, expected) in checks {
        if got != expected {
            return Ok(fail(Witness::Element(0), format!("{name}: got {got}, expected {expected}")).into());
        }
    }
    Ok(Outcome::Pass)
}

fn restriction_corollary(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let s = m.s;
    let sg = m.greens();
    let t = m.t()?;
    let tg = m.t_greens()?;
    let phi = |x: usize| t.embedding.apply(x);
    let image = ElementSet::from_indices(t.result.order(), s.elements().map(phi));
    for k in GreenRelation::ALL {
        for a in s.elements() {
            for b in s.elements() {
                if tg.related(k, phi(a), phi(b)) != sg.related(k, a, b) {
                    return Ok(fail(Witness::Pair(phi(a), phi(b)), format!("{k:?} restricted to Sφ differs")).into());
                }
            }
        }
    }
    for a in s.elements() {
        if let Some(x) = tg
            .class_of(GreenRelation::H, phi(a))
            .iter()
            .find(|&x| !image.contains(x))
        {
            return Ok(fail(Witness::Pair(phi(a), x), "H-class of T(S) leaves Sφ").into());
        }
    }
    for k in [GreenRelation::J, GreenRelation::D] {
        for class in tg.classes(k) {
            let inside: BTreeSet<usize> = s
                .elements()
                .filter(|&b| class.contains(&phi(b)))
                .map(|b| sg.class_ids(k)[b])
                .collect();
            if inside.len() != 1 {
                return Ok(fail(
                    Witness::Element(class[0]),
                    format!("{k:?}-class of T(S) contains {} classes of Sφ", inside.len()),
                )
                .into());
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `(s, t, σ) -> t`, `(s, t, τ) -> s`.
fn projection(x: TripleElem) -> usize {
    match x.flag {
        Flag::Sigma => x.t,
        Flag::Tau => x.s,
    }
}

/// Projection from `domain ⊆ T(S)` onto `codomain ⊆ S` is a bijective homomorphism.
fn projection_iso(
    s: &FiniteSemigroup,
    t: &ConstructionBundle,
    domain: &ElementSet,
    codomain: &ElementSet,
    what: &str,
) -> Verdict {
    let mut hit = ElementSet::empty(s.order());
    for x in domain.iter() {
        let p = projection(triple_of(t, x));
        if !codomain.contains(p) {
            return fail(Witness::Element(x), format!("{what}: image leaves the target"));
        }
        if !hit.insert(p) {
            return fail(Witness::Element(x), format!("{what}: projection is not injective"));
        }
        for y in domain.iter() {
            if projection(triple_of(t, t.result.mul(x, y))) != s.mul(p, projection(triple_of(t, y))) {
                return fail(Witness::Pair(x, y), format!("{what}: projection is not a homomorphism"));
            }
        }
    }
    if &hit != codomain {
        return fail(
            Witness::Element(codomain.difference(&hit).first().unwrap_or(0)),
            format!("{what}: projection is not onto"),
        );
    }
    Verdict::Holds
}

fn subgroup_iso(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let (s, sg) = (m.s, m.greens());
    let t = m.t()?;
    let tg = m.t_greens()?;
    for e in t.result.idempotents().iter() {
        let target = projection(triple_of(t, e));
        check!(projection_iso(
            s,
            t,
            &tg.class_of(GreenRelation::H, e),
            &sg.class_of(GreenRelation::H, target),
            "H_e"
        ));
    }
    Ok(Outcome::Pass)
}

fn local_monoid_iso(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let s = m.s;
    let t = m.t()?;
    let ts = &t.result;
    for e in ts.idempotents().iter() {
        let f = projection(triple_of(t, e));
        let ete = ElementSet::from_indices(ts.order(), ts.elements().map(|x| ts.product(&[e, x, e])));
        let fsf = ElementSet::from_indices(s.order(), s.elements().map(|x| s.product(&[f, x, f])));
        check!(projection_iso(s, t, &ete, &fsf, "eT(S)e"));
    }
    Ok(Outcome::Pass)
}

fn locally_v(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    let ts = &m.t()?.result;
    check!(local_variety_iff(m.s, "T(S)", ts)?);
    check!(subgroup_and_local_iff(m.s, "T(S)", ts)?);
    Ok(Outcome::Pass)
}

const SIMPLE_FAMILY: [PropertyName; 8] = [
    PropertyName::Simple,
    PropertyName::Bisimple,
    PropertyName::CompletelySimple,
    PropertyName::Semisimple,
    PropertyName::CompletelySemisimple,
    PropertyName::LeftCryptic,
    PropertyName::RightCryptic,
    PropertyName::Cryptic,
];

const ZERO_FAMILY: [PropertyName; 3] = [
    PropertyName::ZeroSimple,
    PropertyName::ZeroBisimple,
    PropertyName::CompletelyZeroSimple,
];

fn simple_family(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    Ok(property_iff(&SIMPLE_FAMILY, m.s, "T(S)", &m.t()?.result)?.into())
}

fn kernel_0bar(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    require!(m.has_zero(), NO_ZERO);
    let z = m.s.zero().expect("checked");
    let t = m.t()?;
    let tg = m.t_greens()?;
    let zero_bar = ElementSet::from_indices(
        t.result.order(),
        Flag::BOTH.map(|f| t.triple_index(z, z, f).expect("(0,0,α) ∈ T(S)")),
    );
    match check_ideal(&t.result, &zero_bar) {
        Ok(()) => {}
        Err(SemigroupError::NotAnIdeal { element, by }) => {
            return Ok(fail(Witness::Pair(element, by), "0̄ is not an ideal").into())
        }
        Err(e) => return Err(e),
    }
    if let Some(x) = t
        .result
        .elements()
        .find(|&x| !zero_bar.is_subset(&tg.principal_ideal(x)))
    {
        return Ok(fail(Witness::Element(x), "0̄ is not below this principal ideal").into());
    }
    let star = m.t_star()?;
    if !depth_analysis(&star.result).is_semiband() {
        return Ok(fail(Witness::Element(0), "T*(S) is not a semiband").into());
    }
    check!(embedding_verdict(&star.embedding, "φ*"));
    if star.result.zero() != Some(star.embedding.apply(z)) {
        return Ok(fail(Witness::Element(z), "φ*(0) is not the zero of T*(S)").into());
    }
    Ok(Outcome::Pass)
}

fn zero_simple_family(m: &Member<'_>) -> Result<Outcome> {
    require!(m.covered(), NOT_COVERED);
    require!(m.has_zero(), NO_ZERO);
    Ok(property_iff(&ZERO_FAMILY, m.s, "T*(S)", &m.t_star()?.result)?.into())
}

fn rs_semiband2(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    let r = m.r()?;
    check!(check_r_construction(m.s, r));
    let t = m.t()?;
    if let Some(i) = r.result.elements().find(|&i| t.index_of(&r.decode[i]).is_none()) {
        return Ok(fail(Witness::Element(i), "R(S) element missing from T(S)").into());
    }
    let l = m.l()?;
    if let Some(x) = non_regular_element(&l.result) {
        return Ok(fail(Witness::Element(x), "L(S) is not regular").into());
    }
    check!(semiband_depth_verdict(l, 2));
    check!(embedding_verdict(&l.embedding, "φ: S → L(S)"));
    Ok(Outcome::Pass)
}

/// `R(S)` as a subset of `T(S)`.
fn r_inside_t(r: &ConstructionBundle, t: &ConstructionBundle) -> Result<ElementSet> {
    let idx = r
        .decode
        .iter()
        .map(|d| {
            t.index_of(d)
                .ok_or_else(|| SemigroupError::Internal("R(S) ⊄ T(S)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ElementSet::from_indices(t.result.order(), idx))
}

fn regular_sub_restriction(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    let t = m.t()?;
    let tg = m.t_greens()?;
    check!(check_restriction(&t.result, tg, &r_inside_t(m.r()?, t)?)?);
    let base = ElementSet::from_indices(t.result.order(), m.s.elements().map(|x| t.embedding.apply(x)));
    let mut rng = ChaCha8Rng::seed_from_u64(m.sample_seed());
    for _ in 0..SAMPLES_PER_MEMBER {
        let sample = sample_regular_subsemigroup(&t.result, &base, &mut rng)
            .ok_or_else(|| SemigroupError::Internal("T(S) of a regular S is not regular".into()))?;
        check!(check_restriction(&t.result, tg, &sample)?);
    }
    Ok(Outcome::PassSampled)
}

const R_PRESERVED: [PropertyName; 9] = [
    PropertyName::Periodic,
    PropertyName::Simple,
    PropertyName::Bisimple,
    PropertyName::CompletelySimple,
    PropertyName::Semisimple,
    PropertyName::CompletelySemisimple,
    PropertyName::LeftCryptic,
    PropertyName::RightCryptic,
    PropertyName::Cryptic,
];

fn rs_preservations(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    let rs = &m.r()?.result;
    check!(property_iff(&R_PRESERVED, m.s, "R(S)", rs)?);
    check!(local_variety_iff(m.s, "R(S)", rs)?);
    check!(subgroup_and_local_iff(m.s, "R(S)", rs)?);
    Ok(Outcome::Pass)
}

fn rstar_zero_simple(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    require!(m.has_zero(), NO_ZERO);
    let star = m.r_star()?;
    check!(embedding_verdict(&star.embedding, "φ*: S → R*(S)"));
    Ok(property_iff(&ZERO_FAMILY, m.s, "R*(S)", &star.result)?.into())
}

fn completely_regular_rs(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    Ok(property_iff(&[PropertyName::CompletelyRegular], m.s, "R(S)", &m.r()?.result)?.into())
}

fn a1_completely_regular(m: &Member<'_>) -> Result<Outcome> {
    let s = m.s;
    require!(s.is_monoid(), "S is not a monoid");
    require!(
        check_property(s, PropertyName::CompletelyRegular)?.holds(),
        "S is not completely regular"
    );
    let a = build_a(s, AVariant::A1Cr)?;
    let part = a.a1.as_ref().expect("A1 variant");
    check!(iso_verdict(&part.iso, "ψ⁻¹|A₁ → R(S)"));
    for x in s.elements() {
        if part.iso.apply(part.psi1.apply(x)) != part.target.embedding.apply(x) {
            return Ok(fail(Witness::Element(x), "ψ₁ψ⁻¹ ≠ φ").into());
        }
    }
    let a1 = &part.sub.semigroup;
    check!(check_property(a1, PropertyName::CompletelyRegular)?);
    let d = depth_analysis(a1);
    if let Some(x) = a1.elements().find(|&x| !d.power(2).contains(x)) {
        return Ok(fail(
            Witness::Element(part.sub.parent_index(x)),
            "A₁ element of depth above 2",
        )
        .into());
    }
    // s ∈ D_ν, t ∈ D_μ with ν ≥ μ describes the same classes as s L t
    let g = m.greens();
    let mut by_layers = ElementSet::empty(a.a.result.order());
    for x in s.elements() {
        for y in s.elements().filter(|&y| g.ideal_divides(y, x)) {
            for h in [false, true] {
                by_layers.insert(a.quotient.apply(f_index(&a.f, x, y, h)?));
            }
        }
    }
    if by_layers != part.sub.members {
        let w = by_layers
            .difference(&part.sub.members)
            .first()
            .or(part.sub.members.difference(&by_layers).first());
        return Ok(fail(
            Witness::Element(w.unwrap_or(0)),
            "semilattice description of A₁ differs",
        )
        .into());
    }
    Ok(Outcome::Pass)
}

pub(super) fn higgins_iso(k: usize) -> Result<Outcome> {
    let h = iso_r_tx_to_t(k)?;
    check!(iso_verdict(&h.iso, "ψ: R(𝒯_X) → T"));
    if h.r.result.order() != h.t.result.order() {
        return Ok(fail(Witness::Element(0), "|R(𝒯_X)| ≠ |T|").into());
    }
    let tx = full_tf_monoid(k)?;
    let g = GreensStructure::compute(&tx.semigroup);
    if h.r.result.order() != 2 * sum_of_squares(&g.class_sizes(GreenRelation::L)) {
        return Ok(fail(Witness::Element(0), "|R(𝒯_X)| ≠ 2Σ|L|²").into());
    }
    let t = higgins_t(k)?;
    check!(semiband_depth_verdict(&t, 2));
    if let Some(x) = non_regular_element(&t.result) {
        return Ok(fail(Witness::Element(x), "T is not regular").into());
    }
    check!(embedding_verdict(&t.embedding, "α ↦ α′"));
    let mut by_filter = higgins_members_by_filter(k);
    let mut by_params = higgins_members_by_parameters(k);
    by_filter.sort();
    by_params.sort();
    if by_filter != by_params {
        return Ok(fail(Witness::Element(0), "filter and parameterisation of T disagree").into());
    }
    let id = Transformation::identity(k);
    let folded: Vec<usize> = (0..2 * k).map(|x| x % k).collect();
    if delta_bar(&id, &id, Flag::Sigma).images() != folded.as_slice() {
        return Ok(fail(Witness::Element(0), "δ̄(id, id, σ) does not fold X′ onto X").into());
    }
    Ok(Outcome::Pass)
}

fn sigma_reg_bound(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    let b = bound_report(m.s)?;
    let witness = Witness::Element(b.largest_l_class_rep);
    if !b.reg_ok() {
        return Ok(fail(
            witness,
            format!("|R(S)| = {} exceeds 2nl = {} or 2n²", b.r_order, b.two_n_l),
        )
        .into());
    }
    if b.l_order > b.two_n_r {
        return Ok(fail(witness, format!("|L(S)| = {} exceeds 2nr = {}", b.l_order, b.two_n_r)).into());
    }
    let g = m.greens();
    let one_l = g.class_count(GreenRelation::L) == 1;
    let one_r = g.class_count(GreenRelation::R) == 1;
    if b.tight != one_l || (b.l_order == b.two_n_squared) != one_r {
        return Ok(fail(witness, "order 2n² without a single L-class (or R-class for L(S))").into());
    }
    Ok(Outcome::Pass)
}

fn sigma_nm_bound(m: &Member<'_>) -> Result<Outcome> {
    require!(m.regular(), NOT_REGULAR);
    let b = bound_report(m.s)?;
    if !b.nm_ok {
        return Ok(fail(
            Witness::Element(b.largest_l_class_rep),
            format!("min(|R|,|L|)² = {} exceeds 4n³m = {}", b.min_squared, b.four_n_cubed_m),
        )
        .into());
    }
    Ok(Outcome::Pass)
}
