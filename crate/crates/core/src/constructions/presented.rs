use super::{build_r, build_t, ConstructionBundle, Decoded, FNormalForm, Flag, ReesTriple, Side};
use crate::error::{Result, SemigroupError};
use crate::green::{GreenRelation, GreensStructure};
use crate::hom::SemigroupHom;
use crate::ideal::quotient_by_key;
use crate::properties::{check_property, PropertyName};
use crate::semigroup::{FiniteSemigroup, Subsemigroup};
use crate::set::ElementSet;
use crate::verdict::{Verdict, Witness};

/// Index of a pair-plus-bit carrier element, ordered lexicographically.
fn slot(m: usize, a: usize, b: usize, bit: bool) -> usize {
    (a * m + b) * 2 + usize::from(bit)
}

fn one_of(s1: &FiniteSemigroup) -> usize {
    s1.identity().expect("S¹ is a monoid")
}

/// `F(S)` on the normal forms `s̄h̄t̄`, `s̄h̄t̄h̄` over `S¹`, with `s -> h̄s̄`.
pub fn build_f(s: &FiniteSemigroup) -> Result<ConstructionBundle> {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    let mut decode = Vec::with_capacity(2 * m * m);
    let mut labels = Vec::with_capacity(2 * m * m);
    for a in 0..m {
        for b in 0..m {
            for hsuffix in [false, true] {
                decode.push(FNormalForm { s: a, t: b, hsuffix });
                let tail = if hsuffix { "h" } else { "" };
                labels.push(format!("{}h{}{}", s1.label(a), s1.label(b), tail));
            }
        }
    }
    let mut table = Vec::with_capacity(decode.len() * decode.len());
    for x in &decode {
        for y in &decode {
            // s̄t̄ = s̄ absorbs the right factor's prefix unless an h̄ separates them
            let middle = if x.hsuffix {
                s1.mul(s1.mul(x.t, y.s), y.t)
            } else {
                s1.mul(x.t, y.t)
            };
            table.push(slot(m, x.s, middle, y.hsuffix));
        }
    }
    let result = FiniteSemigroup::from_flat(decode.len(), table, Some(labels))?;
    let one = one_of(&s1);
    let map = s.elements().map(|x| slot(m, one, x, false)).collect();
    let embedding = SemigroupHom::new(s, &result, map)?;
    Ok(ConstructionBundle::new(
        result,
        decode.into_iter().map(Decoded::Normal).collect(),
        embedding,
        "F(S) on normal forms s h t and s h t h over S¹; embedding s -> h s".into(),
    ))
}

/// Indices of the generators `h̄`, `1̄` and `s̄` (`s ∈ S¹`) inside `F(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGenerators {
    pub h: usize,
    pub one: usize,
    pub bars: Vec<usize>,
}

pub fn f_generators(s: &FiniteSemigroup) -> FGenerators {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    let one = one_of(&s1);
    FGenerators {
        h: slot(m, one, one, true),
        one: slot(m, one, one, false),
        bars: (0..m).map(|x| slot(m, x, one, false)).collect(),
    }
}

/// Checks the defining relations of `F(S)` and that every normal form is the
/// product it names.
pub fn f_relations(s: &FiniteSemigroup, f: &ConstructionBundle) -> Verdict {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    let g = f_generators(s);
    let fs = &f.result;
    let prod = |w: &[usize]| fs.product(w);
    for &x in std::iter::once(&g.h).chain(&g.bars) {
        if !fs.is_idempotent(x) {
            return Verdict::fails(Witness::Element(x), "generator is not idempotent");
        }
    }
    if fs.mul(g.h, g.one) != g.one {
        return Verdict::fails(Witness::Pair(g.h, g.one), "h̄1̄ ≠ 1̄");
    }
    if fs.mul(g.one, g.h) != g.h {
        return Verdict::fails(Witness::Pair(g.one, g.h), "1̄h̄ ≠ h̄");
    }
    for a in 0..m {
        for b in 0..m {
            let (sa, sb) = (g.bars[a], g.bars[b]);
            if fs.mul(sa, sb) != sa {
                return Verdict::fails(Witness::Pair(sa, sb), "s̄t̄ ≠ s̄");
            }
            if prod(&[g.h, sa, g.h, sb]) != fs.mul(g.h, g.bars[s1.mul(a, b)]) {
                return Verdict::fails(Witness::Pair(sa, sb), "h̄s̄h̄t̄ ≠ h̄(st)̄");
            }
            if prod(&[sa, g.h, sb]) != slot(m, a, b, false) || prod(&[sa, g.h, sb, g.h]) != slot(m, a, b, true) {
                return Verdict::fails(Witness::Pair(sa, sb), "normal form differs from its word");
            }
        }
    }
    Verdict::Holds
}

/// `F(S) \ {1̄}`; closed when `S` is not a monoid.
pub fn f_without_one(s: &FiniteSemigroup, f: &ConstructionBundle) -> Result<Subsemigroup> {
    let mut members = ElementSet::full(f.result.order());
    members.remove(f_generators(s).one);
    f.result.induced_subsemigroup(&members)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AVariant {
    Full,
    /// The copy of `T(S)` inside `A(S)`.
    A1General,
    /// The completely regular subsemiband for completely regular monoids.
    A1Cr,
}

/// `A₁` together with `ψ⁻¹` restricted to it.
#[derive(Debug, Clone)]
pub struct A1Part {
    pub sub: Subsemigroup,
    /// `T(S)` for the general variant, `R(S)` for the completely regular one.
    pub target: ConstructionBundle,
    /// `ψ⁻¹|A₁: A₁ -> target`.
    pub iso: SemigroupHom,
    /// `ψ₁: s -> (1̄h̄s̄)ρ`, into `A₁`.
    pub psi1: SemigroupHom,
}

#[derive(Debug, Clone)]
pub struct AConstruction {
    /// `A(S) = F(S)/ρ`; each class decodes to its first normal form.
    pub a: ConstructionBundle,
    pub f: ConstructionBundle,
    /// The natural map `F(S) -> A(S)`.
    pub quotient: SemigroupHom,
    /// `T(S¹)`.
    pub t_one: ConstructionBundle,
    /// `ψ: T(S¹) -> A(S)`.
    pub psi: SemigroupHom,
    /// `ψ⁻¹: A(S) -> T(S¹)`.
    pub psi_inv: SemigroupHom,
    pub a1: Option<A1Part>,
}

impl AConstruction {
    /// `ψ` and `ψ⁻¹` are isomorphisms and compose to the identity both ways.
    pub fn check_psi(&self) -> Verdict {
        for (h, name) in [(&self.psi, "ψ"), (&self.psi_inv, "ψ⁻¹")] {
            if let Some((x, y)) = h.hom_failure() {
                return Verdict::fails(Witness::Pair(x, y), format!("{name} is not a homomorphism"));
            }
            if !h.is_isomorphism() {
                return Verdict::fails(Witness::Element(0), format!("{name} is not bijective"));
            }
        }
        for x in 0..self.psi.domain_order() {
            if self.psi_inv.apply(self.psi.apply(x)) != x {
                return Verdict::fails(Witness::Element(x), "ψψ⁻¹ is not the identity");
            }
        }
        Verdict::Holds
    }
}

fn a_decode(f: &ConstructionBundle, quotient: &SemigroupHom, classes: usize) -> Vec<FNormalForm> {
    let mut reps: Vec<Option<FNormalForm>> = vec![None; classes];
    for (i, d) in f.decode.iter().enumerate() {
        let c = quotient.apply(i);
        if reps[c].is_none() {
            if let Decoded::Normal(nf) = d {
                reps[c] = Some(*nf);
            }
        }
    }
    reps.into_iter().map(|r| r.expect("every class is inhabited")).collect()
}

fn flag_of(hsuffix: bool) -> Flag {
    if hsuffix {
        Flag::Tau
    } else {
        Flag::Sigma
    }
}

pub fn build_a(s: &FiniteSemigroup, variant: AVariant) -> Result<AConstruction> {
    match variant {
        AVariant::Full => {}
        AVariant::A1General => {
            if let Some(crate::verdict::Witness::Element(a)) = s.is_idempotent_covered().witness() {
                return Err(SemigroupError::NotIdempotentCovered(*a));
            }
        }
        AVariant::A1Cr => {
            if !s.is_monoid() {
                return Err(SemigroupError::NotAMonoid);
            }
            if let Some(Witness::Element(a)) = check_property(s, PropertyName::CompletelyRegular)?.witness() {
                return Err(SemigroupError::NotCompletelyRegular(*a));
            }
        }
    }
    let s1 = s.adjoin_identity();
    let m = s1.order();
    let f = build_f(s)?;
    let q = quotient_by_key(&f.result, |i| match f.decode[i] {
        Decoded::Normal(nf) => (s1.mul(nf.s, nf.t), nf.t, nf.hsuffix),
        _ => unreachable!("F(S) decodes to normal forms"),
    })?;
    let reps = a_decode(&f, &q.map, q.semigroup.order());
    let labels = reps
        .iter()
        .map(|nf| f.result.label(slot(m, nf.s, nf.t, nf.hsuffix)))
        .collect();
    let a_sg = q.semigroup.clone().with_labels(Some(labels))?;
    let one = one_of(&s1);
    let embed_map = s.elements().map(|x| q.map.apply(slot(m, one, x, false))).collect();
    let a_embedding = SemigroupHom::new(s, &a_sg, embed_map)?;

    let t_one = build_t(&s1)?;
    let psi_map = t_one
        .decode
        .iter()
        .map(|d| {
            let Decoded::Triple(x) = d else {
                unreachable!("T(S¹) decodes to triples")
            };
            let a = (0..m)
                .find(|&a| s1.mul(a, x.t) == x.s)
                .ok_or_else(|| SemigroupError::Internal(format!("{} not in S¹{}", x.s, x.t)))?;
            Ok(q.map.apply(slot(m, a, x.t, x.flag == Flag::Tau)))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi = SemigroupHom::new(&t_one.result, &a_sg, psi_map)?;
    let inv_map = reps
        .iter()
        .map(|nf| {
            t_one
                .triple_index(s1.mul(nf.s, nf.t), nf.t, flag_of(nf.hsuffix))
                .ok_or_else(|| SemigroupError::Internal("ψ⁻¹ leaves T(S¹)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi_inv = SemigroupHom::new(&a_sg, &t_one.result, inv_map)?;

    let a1 = match variant {
        AVariant::Full => None,
        AVariant::A1General => {
            let members = ElementSet::from_indices(
                reps.len(),
                (0..reps.len()).filter(|&c| reps[c].t != one || s.is_monoid()),
            );
            Some(a1_part(s, &a_sg, &reps, &q.map, members, build_t(s)?, m, one)?)
        }
        AVariant::A1Cr => {
            let g = GreensStructure::compute(s);
            let members = ElementSet::from_indices(
                reps.len(),
                f.decode.iter().enumerate().filter_map(|(i, d)| match d {
                    Decoded::Normal(nf) if g.related(GreenRelation::L, nf.s, nf.t) => Some(q.map.apply(i)),
                    _ => None,
                }),
            );
            Some(a1_part(
                s,
                &a_sg,
                &reps,
                &q.map,
                members,
                build_r(s, Side::Right)?,
                m,
                one,
            )?)
        }
    };

    let notes =
        "A(S) = F(S)/ρ with ρ the kernel of (s,t,flag) -> (st,t,flag); classes decode to their first normal form"
            .into();
    let out = AConstruction {
        a: ConstructionBundle::new(
            a_sg,
            reps.into_iter().map(Decoded::Normal).collect(),
            a_embedding,
            notes,
        ),
        f,
        quotient: q.map,
        t_one,
        psi,
        psi_inv,
        a1,
    };
    if let Some(fail) = out.check_psi().failure() {
        return Err(SemigroupError::Internal(format!(
            "ψ check failed: {} at {}",
            fail.reason, fail.witness
        )));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn a1_part(
    s: &FiniteSemigroup,
    a: &FiniteSemigroup,
    reps: &[FNormalForm],
    quotient: &SemigroupHom,
    members: ElementSet,
    target: ConstructionBundle,
    m: usize,
    one: usize,
) -> Result<A1Part> {
    let sub = a.induced_subsemigroup(&members)?;
    let s1 = s.adjoin_identity();
    let iso_map = (0..sub.semigroup.order())
        .map(|i| {
            let nf = reps[sub.parent_index(i)];
            target
                .triple_index(s1.mul(nf.s, nf.t), nf.t, flag_of(nf.hsuffix))
                .ok_or_else(|| SemigroupError::Internal("ψ⁻¹(A₁) leaves the target".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = SemigroupHom::new(&sub.semigroup, &target.result, iso_map)?;
    let members_list = members.to_vec();
    let psi1_map = s
        .elements()
        .map(|x| {
            let c = quotient.apply(slot(m, one, x, false));
            members_list
                .binary_search(&c)
                .map_err(|_| SemigroupError::Internal("ψ₁ leaves A₁".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi1 = SemigroupHom::new(s, &sub.semigroup, psi1_map)?;
    Ok(A1Part { sub, target, iso, psi1 })
}

/// `ΦS` with the isomorphism `χ: F(S) -> ΦS`, `s̄h̄t̄ -> (s, t, σ)`, `s̄h̄t̄h̄ -> (s, t, τ)`.
#[derive(Debug, Clone)]
pub struct PhiConstruction {
    pub phi: ConstructionBundle,
    pub f: ConstructionBundle,
    pub chi: SemigroupHom,
}

pub fn build_phi(s: &FiniteSemigroup) -> Result<PhiConstruction> {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    let one = one_of(&s1);
    let mut decode = Vec::with_capacity(2 * m * m);
    for i in 0..m {
        for a in 0..m {
            for lambda in Flag::BOTH {
                decode.push(ReesTriple { i, a, lambda });
            }
        }
    }
    let mut table = Vec::with_capacity(decode.len() * decode.len());
    for x in &decode {
        for y in &decode {
            let q = match x.lambda {
                Flag::Sigma => one,
                Flag::Tau => y.i,
            };
            table.push(slot(m, x.i, s1.mul(s1.mul(x.a, q), y.a), y.lambda == Flag::Tau));
        }
    }
    let labels = decode
        .iter()
        .map(|r| format!("({},{},{})", s1.label(r.i), s1.label(r.a), r.lambda))
        .collect();
    let result = FiniteSemigroup::from_flat(decode.len(), table, Some(labels))?;
    let embedding = SemigroupHom::new(s, &result, s.elements().map(|x| slot(m, one, x, false)).collect())?;
    let f = build_f(s)?;
    let chi_map = f
        .decode
        .iter()
        .map(|d| match d {
            Decoded::Normal(nf) => slot(m, nf.s, nf.t, nf.hsuffix),
            _ => unreachable!("F(S) decodes to normal forms"),
        })
        .collect();
    let chi = SemigroupHom::new(&f.result, &result, chi_map)?;
    let notes = "ΦS = M(S¹, S¹, {σ,τ}; Q), q_σj = 1, q_τj = j; χ sends h̄ to (1,1,τ) and s̄ to (s,1,σ). \
                 The assignment s̄ -> (1,s,σ) would break s̄t̄ = s̄ under this product."
        .into();
    Ok(PhiConstruction {
        phi: ConstructionBundle::new(
            result,
            decode.into_iter().map(Decoded::Rees).collect(),
            embedding,
            notes,
        ),
        f,
        chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::are_isomorphic;

    #[test]
    fn f_orders() {
        assert_eq!(build_f(&catalog::trivial()).unwrap().result.order(), 2);
        let sl = catalog::semilattice01();
        assert_eq!(build_f(&sl).unwrap().result.order(), 8);
        let l2 = catalog::left_zero(2);
        let f = build_f(&l2).unwrap();
        assert_eq!(f.result.order(), 18);
        assert_eq!(f_without_one(&l2, &f).unwrap().semigroup.order(), 17);
    }

    #[test]
    fn f_relations_hold() {
        for s in [
            catalog::trivial(),
            catalog::left_zero(2),
            catalog::cyclic_group(2),
            catalog::null_semigroup(2),
        ] {
            let f = build_f(&s).unwrap();
            assert!(f_relations(&s, &f).holds());
            assert!(f.embedding.is_embedding());
        }
    }

    #[test]
    fn f_rule_on_plain_forms() {
        // (s h t)(u h v) = s h (tv)
        let s = catalog::cyclic_group(3);
        let f = build_f(&s).unwrap();
        let m = 3;
        let x = slot(m, 1, 2, false);
        let y = slot(m, 0, 2, false);
        assert_eq!(f.result.mul(x, y), slot(m, 1, s.mul(2, 2), false));
    }

    #[test]
    fn a_of_monoid_is_t() {
        let sl = catalog::semilattice01();
        let a = build_a(&sl, AVariant::Full).unwrap();
        assert_eq!(a.a.result.order(), 6);
        assert!(are_isomorphic(&a.a.result, &build_t(&sl).unwrap().result).unwrap());
        assert!(a.check_psi().holds());
        assert_eq!(
            build_a(&catalog::trivial(), AVariant::Full).unwrap().a.result.order(),
            2
        );
    }

    #[test]
    fn a1_of_left_zero() {
        let l2 = catalog::left_zero(2);
        let a = build_a(&l2, AVariant::A1General).unwrap();
        assert_eq!(a.a.result.order(), 14);
        let part = a.a1.unwrap();
        assert_eq!(part.sub.semigroup.order(), 8);
        assert!(part.iso.is_isomorphism());
        assert!(part.psi1.is_embedding());
    }

    #[test]
    fn a1_for_completely_regular_monoid() {
        let sl = catalog::semilattice01();
        let a = build_a(&sl, AVariant::A1Cr).unwrap();
        let part = a.a1.unwrap();
        assert!(part.iso.is_isomorphism());
        let composed: Vec<usize> = sl.elements().map(|x| part.iso.apply(part.psi1.apply(x))).collect();
        assert_eq!(composed, part.target.embedding.map());
        assert_eq!(
            build_a(&catalog::left_zero(2), AVariant::A1Cr).unwrap_err(),
            SemigroupError::NotAMonoid
        );
    }

    #[test]
    fn phi_matches_f() {
        for s in [catalog::trivial(), catalog::left_zero(2), catalog::semilattice01()] {
            let p = build_phi(&s).unwrap();
            assert_eq!(p.phi.result.order(), 2 * s.adjoin_identity().order().pow(2));
            assert!(p.chi.is_isomorphism());
            assert!(p.phi.embedding.is_embedding());
        }
    }

    #[test]
    fn sigma_row_absorbs_and_stated_chi_fails() {
        let s = catalog::cyclic_group(3);
        let p = build_phi(&s).unwrap();
        let m = 3;
        let x = slot(m, 1, 2, false);
        let y = slot(m, 2, 2, true);
        assert_eq!(p.phi.result.mul(x, y), slot(m, 1, s.mul(2, 2), true));
        // (1,s,σ)(1,t,σ) = (1,st,σ), so s̄ -> (1,s,σ) does not respect s̄t̄ = s̄
        let one = 0;
        let a = slot(m, one, 1, false);
        let b = slot(m, one, 2, false);
        assert_ne!(p.phi.result.mul(a, b), a);
    }
}
