use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ConstructionBundle, Decoded, Flag, TripleElem};
use crate::error::{Result, SemigroupError};
use crate::green::{GreenRelation, GreensStructure};
use crate::hom::SemigroupHom;
use crate::ideal::rees_quotient;
use crate::properties::{inverse_of, non_regular_element};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// Product in `T*R₂` over `s`.
pub fn triple_mul(s: &FiniteSemigroup, x: TripleElem, y: TripleElem) -> TripleElem {
    match x.flag {
        Flag::Sigma => TripleElem::new(s.mul(x.s, y.t), s.mul(x.t, y.t), y.flag),
        Flag::Tau => TripleElem::new(s.mul(x.s, y.s), s.mul(x.t, y.s), y.flag),
    }
}

fn label(s: &FiniteSemigroup, x: TripleElem) -> String {
    format!("({},{},{})", s.label(x.s), s.label(x.t), x.flag)
}

/// Materialises the table of a set of triples closed under the product.
fn materialise(base: &FiniteSemigroup, mut members: Vec<TripleElem>) -> Result<(FiniteSemigroup, Vec<TripleElem>)> {
    members.sort();
    members.dedup();
    let index: HashMap<TripleElem, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = members.len();
    let mut table = Vec::with_capacity(m * m);
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            let p = triple_mul(base, x, y);
            table.push(*index.get(&p).ok_or(SemigroupError::NotClosed { a: i, b: j })?);
        }
    }
    let labels = members.iter().map(|&x| label(base, x)).collect();
    let result = FiniteSemigroup::from_flat(m, table, Some(labels))?;
    Ok((result, members))
}

/// `φ: s -> (s, s, σ)`.
fn diagonal_embedding(
    source: &FiniteSemigroup,
    result: &FiniteSemigroup,
    members: &[TripleElem],
) -> Result<SemigroupHom> {
    let map = source
        .elements()
        .map(|x| {
            members
                .binary_search(&TripleElem::new(x, x, Flag::Sigma))
                .map_err(|_| SemigroupError::Internal(format!("({x},{x},σ) missing from the construction")))
        })
        .collect::<Result<Vec<_>>>()?;
    SemigroupHom::new(source, result, map)
}

fn bundle(source: &FiniteSemigroup, members: Vec<TripleElem>, notes: String) -> Result<ConstructionBundle> {
    let (result, members) = materialise(source, members)?;
    let embedding = diagonal_embedding(source, &result, &members)?;
    Ok(ConstructionBundle::new(
        result,
        members.into_iter().map(Decoded::Triple).collect(),
        embedding,
        notes,
    ))
}

fn all_triples(n: usize) -> impl Iterator<Item = TripleElem> {
    (0..n).flat_map(move |s| (0..n).flat_map(move |t| Flag::BOTH.map(|f| TripleElem::new(s, t, f))))
}

/// The full semidirect product `T*R₂` of order `2n²`.
pub fn semidirect_tr2(s: &FiniteSemigroup) -> Result<ConstructionBundle> {
    bundle(s, all_triples(s.order()).collect(), "T*R2 on S x S x {σ,τ}".into())
}

/// `E(T(S)) = {(s, e, σ) : e ∈ E(S), se = s} ∪ {(e, s, τ) : e ∈ E(S), e L s}`, sorted.
pub fn t_idempotents_closed_form(s: &FiniteSemigroup, g: &GreensStructure) -> Vec<TripleElem> {
    let e = s.idempotents();
    let mut out = Vec::new();
    for f in e.iter() {
        for x in s.elements() {
            if s.mul(x, f) == x {
                out.push(TripleElem::new(x, f, Flag::Sigma));
            }
            if g.related(GreenRelation::L, f, x) {
                out.push(TripleElem::new(f, x, Flag::Tau));
            }
        }
    }
    out.sort();
    out
}

fn require_covered(s: &FiniteSemigroup) -> Result<()> {
    match s.is_idempotent_covered().witness() {
        Some(crate::verdict::Witness::Element(a)) => Err(SemigroupError::NotIdempotentCovered(*a)),
        Some(w) => Err(SemigroupError::Internal(format!("unexpected witness {w}"))),
        None => Ok(()),
    }
}

fn require_regular(s: &FiniteSemigroup) -> Result<()> {
    match non_regular_element(s) {
        Some(a) => Err(SemigroupError::NotRegular(a)),
        None => Ok(()),
    }
}

/// `T(S) = {(s, t, α) : s ∈ S¹t}` with `φ: s -> (s, s, σ)`.
pub fn build_t(s: &FiniteSemigroup) -> Result<ConstructionBundle> {
    require_covered(s)?;
    let g = GreensStructure::compute(s);
    let members: Vec<TripleElem> = all_triples(s.order()).filter(|x| g.left_divides(x.s, x.t)).collect();
    let b = bundle(s, members, "T(S) = {(s,t,α) : s ∈ S¹t}; φ(s) = (s,s,σ)".into())?;
    let squared: Vec<TripleElem> = b
        .result
        .idempotents()
        .iter()
        .map(|i| b.triple(i).expect("triple"))
        .collect();
    if squared != t_idempotents_closed_form(s, &g) {
        return Err(SemigroupError::Internal("E(T(S)) differs from its closed form".into()));
    }
    Ok(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// `R(S)`: triples with `s L t`.
    Right,
    /// `L(S)`: the opposite of `R(Sᵒᵖ)`.
    Left,
}

pub fn build_r(s: &FiniteSemigroup, side: Side) -> Result<ConstructionBundle> {
    require_regular(s)?;
    match side {
        Side::Right => {
            let g = GreensStructure::compute(s);
            let members = all_triples(s.order())
                .filter(|x| g.related(GreenRelation::L, x.s, x.t))
                .collect();
            bundle(s, members, "R(S) = {(s,t,α) ∈ T(S) : s L t}; φ(s) = (s,s,σ)".into())
        }
        Side::Left => {
            let r = build_r(&s.opposite(), Side::Right)?;
            let result = r.result.opposite();
            let embedding = SemigroupHom::new(s, &result, r.embedding.map().to_vec())?;
            Ok(ConstructionBundle::new(
                result,
                r.decode,
                embedding,
                "L(S) = R(S^op)^op; triples are coordinates in R(S^op), so s R t in S".into(),
            ))
        }
    }
}

pub fn build_l(s: &FiniteSemigroup) -> Result<ConstructionBundle> {
    build_r(s, Side::Left)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StarKind {
    Tstar,
    Rstar,
}

/// `T*(S) = T(S)/0̄` or `R*(S) = R(S)/0̄` with `φ*`.
pub fn build_star(s: &FiniteSemigroup, which: StarKind) -> Result<ConstructionBundle> {
    let z = s.zero().ok_or(SemigroupError::NoZeroElement)?;
    let base = match which {
        StarKind::Tstar => build_t(s)?,
        StarKind::Rstar => build_r(s, Side::Right)?,
    };
    let zero_bar = ElementSet::from_indices(
        base.result.order(),
        Flag::BOTH.map(|f| base.triple_index(z, z, f).expect("0̄ lies in every construction")),
    );
    let q = rees_quotient(&base.result, &zero_bar)?;
    let mut decode: Vec<Decoded> = base
        .result
        .elements()
        .filter(|&i| !zero_bar.contains(i))
        .map(|i| base.decode[i].clone())
        .collect();
    decode.push(Decoded::Zero);
    let map = s.elements().map(|x| q.map.apply(base.embedding.apply(x))).collect();
    let embedding = SemigroupHom::new(s, &q.semigroup, map)?;
    let name = match which {
        StarKind::Tstar => "T*(S) = T(S)/0̄",
        StarKind::Rstar => "R*(S) = R(S)/0̄",
    };
    Ok(ConstructionBundle::new(
        q.semigroup,
        decode,
        embedding,
        format!("{name}; the last element is 0̄"),
    ))
}

/// `x = at` for some `a ∈ S¹`; `None` stands for the adjoined identity.
fn left_factor(s: &FiniteSemigroup, x: usize, t: usize) -> Option<Option<usize>> {
    if x == t {
        return Some(None);
    }
    s.elements().find(|&a| s.mul(a, t) == x).map(Some)
}

fn times(s: &FiniteSemigroup, a: Option<usize>, x: usize) -> usize {
    a.map_or(x, |a| s.mul(a, x))
}

/// Idempotents of `T(S)` whose product is `x`: `(af, f, σ)(f, f, τ)(t, e, σ)` for
/// `x = (at, t, σ)`, followed by `(e, e, τ)` when `x` is a `τ`-triple.
pub fn t_factorization(s: &FiniteSemigroup, x: TripleElem) -> Option<Vec<TripleElem>> {
    let a = left_factor(s, x.s, x.t)?;
    let e = s.idempotents().iter().find(|&e| s.mul(x.t, e) == x.t)?;
    let f = s.idempotents().iter().find(|&f| s.mul(f, x.t) == x.t)?;
    let mut out = vec![
        TripleElem::new(times(s, a, f), f, Flag::Sigma),
        TripleElem::new(f, f, Flag::Tau),
        TripleElem::new(x.t, e, Flag::Sigma),
    ];
    if x.flag == Flag::Tau {
        out.push(TripleElem::new(e, e, Flag::Tau));
    }
    Some(out)
}

/// Two idempotents of `R(S)` whose product is `x`:
/// `(s, t, τ) = (st', tt', σ)(t't, t, τ)` and `(s, t, σ) = (ss', ts', τ)(s, s's, σ)`.
pub fn r_factorization(s: &FiniteSemigroup, x: TripleElem) -> Option<[TripleElem; 2]> {
    Some(match x.flag {
        Flag::Tau => {
            let t1 = inverse_of(s, x.t)?;
            [
                TripleElem::new(s.mul(x.s, t1), s.mul(x.t, t1), Flag::Sigma),
                TripleElem::new(s.mul(t1, x.t), x.t, Flag::Tau),
            ]
        }
        Flag::Sigma => {
            let s1 = inverse_of(s, x.s)?;
            [
                TripleElem::new(s.mul(x.s, s1), s.mul(x.t, s1), Flag::Tau),
                TripleElem::new(x.s, s.mul(s1, x.s), Flag::Sigma),
            ]
        }
    })
}
