//! Full transformation monoids and the depth-2 subsemiband `T ⊆ 𝒯_Y`, `Y = X ∪ X'`.
//!
//! Maps act on the right and compose left to right: `x(αβ) = (xα)β`.
//! The primed copy `x'` of a point `x` of `X = {0..k}` is encoded as `x + k`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::{build_r, ConstructionBundle, Decoded, Flag, Side};
use crate::error::{Result, SemigroupError};
use crate::hom::SemigroupHom;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

pub const DEFAULT_DEGREE_CAP: usize = 4;
pub const HIGGINS_DEGREE_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        if k == 0 {
            return Err(SemigroupError::Empty);
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= k) {
            return Err(SemigroupError::ElementOutOfRange { index: bad, order: k });
        }
        Ok(Transformation { images })
    }

    pub fn identity(k: usize) -> Self {
        Transformation {
            images: (0..k).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `xα`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `αβ`: first `self`, then `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        }
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::from_indices(self.degree(), self.images.iter().copied())
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    /// Image of a subset of the domain.
    pub fn image_of(&self, points: impl IntoIterator<Item = usize>) -> ElementSet {
        ElementSet::from_indices(self.degree(), points.into_iter().map(|x| self.images[x]))
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A semigroup of transformations with its Cayley table.
#[derive(Debug, Clone)]
pub struct TransformationSemigroup {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<Transformation>,
    lookup: HashMap<Transformation, usize>,
}

impl TransformationSemigroup {
    /// Materialises the table of a composition-closed, sorted, duplicate-free list.
    fn from_sorted(elements: Vec<Transformation>) -> Result<Self> {
        let lookup: HashMap<Transformation, usize> =
            elements.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let p = a.then(b);
                let idx = *lookup.get(&p).ok_or_else(|| SemigroupError::NotClosed {
                    a: lookup[a],
                    b: lookup[b],
                })?;
                table.push(idx);
            }
        }
        let labels = elements
            .iter()
            .map(|t| t.images.iter().map(usize::to_string).collect::<String>())
            .collect();
        let semigroup = FiniteSemigroup::from_flat(n, table, Some(labels))?;
        Ok(TransformationSemigroup {
            semigroup,
            elements,
            lookup,
        })
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.lookup.get(t).copied()
    }
}

fn all_maps(k: usize) -> impl Iterator<Item = Transformation> {
    let count = k.pow(k as u32);
    (0..count).map(move |mut code| {
        let mut images = vec![0; k];
        for slot in images.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        Transformation { images }
    })
}

/// `𝒯_k` with elements in lexicographic order of their image sequences.
pub fn full_tf_monoid(k: usize) -> Result<TransformationSemigroup> {
    full_tf_monoid_capped(k, DEFAULT_DEGREE_CAP)
}

pub fn full_tf_monoid_capped(k: usize, cap: usize) -> Result<TransformationSemigroup> {
    if k == 0 {
        return Err(SemigroupError::Empty);
    }
    if k > cap {
        return Err(SemigroupError::DegreeTooLarge { degree: k, cap });
    }
    TransformationSemigroup::from_sorted(all_maps(k).collect())
}

/// The subsemigroup of `𝒯_k` generated by `gens`.
pub fn transformation_semigroup(gens: &[Transformation]) -> Result<TransformationSemigroup> {
    let first = gens.first().ok_or(SemigroupError::Empty)?;
    let k = first.degree();
    if let Some(bad) = gens.iter().find(|g| g.degree() != k) {
        return Err(SemigroupError::Parse {
            line: 0,
            message: format!("mixed degrees {k} and {}", bad.degree()),
        });
    }
    let mut seen: std::collections::BTreeSet<Transformation> = gens.iter().cloned().collect();
    let mut frontier: Vec<Transformation> = seen.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    TransformationSemigroup::from_sorted(seen.into_iter().collect())
}

/// Membership in `T`: `Xα = X'α ⊆ X` or `Xα = X'α ⊆ X'`, where `α` has degree `2k`.
pub fn in_higgins_t(alpha: &Transformation, k: usize) -> bool {
    if alpha.degree() != 2 * k {
        return false;
    }
    let from_x = alpha.image_of(0..k);
    let from_primed = alpha.image_of(k..2 * k);
    if from_x != from_primed {
        return false;
    }
    let lower = from_x.iter().all(|y| y < k);
    let upper = from_x.iter().all(|y| y >= k);
    lower || upper
}

/// Members of `T` found by scanning all of `𝒯_{2k}`.
pub fn higgins_members_by_filter(k: usize) -> Vec<Transformation> {
    all_maps(2 * k).filter(|a| in_higgins_t(a, k)).collect()
}

/// Members of `T` built directly: a side (`X` or `X'`) and two maps `X -> X` with
/// equal images, one for `X` and one for `X'`.
pub fn higgins_members_by_parameters(k: usize) -> Vec<Transformation> {
    let maps: Vec<Transformation> = all_maps(k).collect();
    let mut out = Vec::new();
    for offset in [0, k] {
        for f in &maps {
            for g in maps.iter().filter(|g| g.image() == f.image()) {
                let images = f.images.iter().chain(&g.images).map(|&y| y + offset).collect();
                out.push(Transformation { images });
            }
        }
    }
    out.sort();
    out
}

/// `α'`: `xα' = xα = x'α'`.
pub fn prime_extension(alpha: &Transformation) -> Transformation {
    Transformation {
        images: alpha.images.iter().chain(&alpha.images).copied().collect(),
    }
}

/// The depth-2 semiband `T ⊆ 𝒯_{2k}` with the embedding `𝒯_k -> T`, `α -> α'`.
pub fn higgins_t(k: usize) -> Result<ConstructionBundle> {
    if k == 0 {
        return Err(SemigroupError::Empty);
    }
    if k > HIGGINS_DEGREE_CAP {
        return Err(SemigroupError::DegreeTooLarge {
            degree: k,
            cap: HIGGINS_DEGREE_CAP,
        });
    }
    let members = if k <= 2 {
        higgins_members_by_filter(k)
    } else {
        higgins_members_by_parameters(k)
    };
    let t = TransformationSemigroup::from_sorted(members)?;
    let source = full_tf_monoid(k)?;
    let map = source
        .elements
        .iter()
        .map(|a| {
            t.index_of(&prime_extension(a))
                .ok_or_else(|| SemigroupError::Internal("α' not in T".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let embedding = SemigroupHom::new(&source.semigroup, &t.semigroup, map)?;
    Ok(ConstructionBundle::new(
        t.semigroup,
        t.elements.into_iter().map(Decoded::Map).collect(),
        embedding,
        format!("T in T_{{2k}} for k = {k}; points k..2k-1 are the primed copy"),
    ))
}

/// The explicit isomorphism `R(𝒯_k) -> T`, `(λ, μ, α) -> δ̄`.
#[derive(Debug, Clone)]
pub struct HigginsIso {
    pub r: ConstructionBundle,
    pub t: ConstructionBundle,
    pub iso: SemigroupHom,
}

/// `δ̄` for a triple `(λ, μ, α)` of `R(𝒯_k)`: on `X` it acts as `μ`, on `X'` as `λ`,
/// landing in `X` for `σ` and in `X'` for `τ`.
pub fn delta_bar(lambda: &Transformation, mu: &Transformation, flag: Flag) -> Transformation {
    let k = lambda.degree();
    let offset = match flag {
        Flag::Sigma => 0,
        Flag::Tau => k,
    };
    let images = (0..k)
        .map(|x| mu.apply(x) + offset)
        .chain((0..k).map(|x| lambda.apply(x) + offset))
        .collect();
    Transformation { images }
}

pub fn iso_r_tx_to_t(k: usize) -> Result<HigginsIso> {
    let t = higgins_t(k)?;
    let tx = full_tf_monoid(k)?;
    let r = build_r(&tx.semigroup, Side::Right)?;
    let lookup: HashMap<&Transformation, usize> = t
        .decode
        .iter()
        .enumerate()
        .filter_map(|(i, d)| match d {
            Decoded::Map(m) => Some((m, i)),
            _ => None,
        })
        .collect();
    let map = r
        .decode
        .iter()
        .map(|d| {
            let Decoded::Triple(tr) = d else {
                return Err(SemigroupError::Internal("R(T_X) element is not a triple".into()));
            };
            let delta = delta_bar(&tx.elements[tr.s], &tx.elements[tr.t], tr.flag);
            lookup
                .get(&delta)
                .copied()
                .ok_or_else(|| SemigroupError::Internal(format!("δ̄ = {delta} is not in T")))
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = SemigroupHom::new(&r.result, &t.result, map)?;
    Ok(HigginsIso { r, t, iso })
}

/// One transformation per line, images separated by spaces.
pub fn parse_tfm(text: &str) -> Result<Vec<Transformation>> {
    let mut out: Vec<Transformation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let images = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| SemigroupError::Parse {
                    line: i + 1,
                    message: format!("expected a point, got {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = out.first() {
            if first.degree() != images.len() {
                return Err(SemigroupError::Parse {
                    line: i + 1,
                    message: format!("degree {} differs from {}", images.len(), first.degree()),
                });
            }
        }
        let t = Transformation::new(images).map_err(|e| SemigroupError::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(t);
    }
    if out.is_empty() {
        return Err(SemigroupError::Parse {
            line: 0,
            message: "no transformations".into(),
        });
    }
    Ok(out)
}

pub fn to_tfm_string(ts: &[Transformation]) -> String {
    ts.iter()
        .map(|t| {
            let parts: Vec<String> = t.images.iter().map(usize::to_string).collect();
            parts.join(" ") + "\n"
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::depth_analysis;

    #[test]
    fn small_full_transformation_monoids() {
        let t1 = full_tf_monoid(1).unwrap();
        assert_eq!(t1.semigroup.order(), 1);
        let t2 = full_tf_monoid(2).unwrap();
        assert_eq!(t2.semigroup.order(), 4);
        assert_eq!(t2.semigroup.idempotents().len(), 3);
        assert_eq!(t2.semigroup.identity(), Some(1));
        assert_eq!(full_tf_monoid(3).unwrap().semigroup.order(), 27);
        assert_eq!(
            full_tf_monoid(5).unwrap_err(),
            SemigroupError::DegreeTooLarge { degree: 5, cap: 4 }
        );
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Transformation::new(vec![1, 1, 2]).unwrap();
        let b = Transformation::new(vec![2, 0, 0]).unwrap();
        // x(ab) = (xa)b: 0 -> 1 -> 0, 1 -> 1 -> 0, 2 -> 2 -> 0
        assert_eq!(a.then(&b).images(), &[0, 0, 0]);
        assert_eq!(b.then(&a).images(), &[2, 1, 1]);
    }

    #[test]
    fn higgins_orders() {
        assert_eq!(higgins_t(1).unwrap().result.order(), 2);
        let t2 = higgins_t(2).unwrap();
        assert_eq!(t2.result.order(), 12);
        assert!(t2.embedding.is_embedding());
        let d = depth_analysis(&t2.result);
        assert!(d.depth().unwrap() <= 2);
    }

    #[test]
    fn filter_and_parameterisation_agree() {
        for k in 1..=2 {
            assert_eq!(higgins_members_by_filter(k), higgins_members_by_parameters(k));
        }
    }

    #[test]
    fn identity_triple_folds_primed_points() {
        let id = Transformation::identity(2);
        assert_eq!(delta_bar(&id, &id, Flag::Sigma).images(), &[0, 1, 0, 1]);
        assert_eq!(delta_bar(&id, &id, Flag::Tau).images(), &[2, 3, 2, 3]);
    }

    #[test]
    fn tfm_round_trip_and_generation() {
        let text = "1 2 0\n0 0 2\n";
        let gens = parse_tfm(text).unwrap();
        assert_eq!(to_tfm_string(&gens), text);
        let s = transformation_semigroup(&gens).unwrap();
        assert!(s.semigroup.order() > 3);
        assert!(parse_tfm("0 1\n0\n").is_err());
        assert!(parse_tfm("0 3\n").is_err());
    }
}
