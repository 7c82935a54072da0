//! Semiband embeddings: the semidirect product `T*R₂` and its subsemigroups `T(S)`,
//! `R(S)`, `L(S)`, their quotients by `0̄`, the presented semigroup `F(S)`, its quotient
//! `A(S)`, and the Rees matrix semigroup `ΦS`.

mod presented;
mod triples;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hom::SemigroupHom;
use crate::semigroup::FiniteSemigroup;
use crate::transformations::Transformation;

pub use presented::{
    build_a, build_f, build_phi, f_generators, f_relations, f_without_one, AConstruction, AVariant, FGenerators,
    PhiConstruction,
};
pub use triples::{
    build_l, build_r, build_star, build_t, r_factorization, semidirect_tr2, t_factorization, t_idempotents_closed_form,
    triple_mul, Side, StarKind,
};

/// The two elements `σ`, `τ` of the right-zero semigroup `R₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Sigma,
    Tau,
}

impl Flag {
    pub const BOTH: [Flag; 2] = [Flag::Sigma, Flag::Tau];
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Sigma => "σ",
            Flag::Tau => "τ",
        })
    }
}

/// An element `(s, t, α)` of `T*R₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleElem {
    pub s: usize,
    pub t: usize,
    pub flag: Flag,
}

impl TripleElem {
    pub fn new(s: usize, t: usize, flag: Flag) -> Self {
        TripleElem { s, t, flag }
    }
}

/// The normal form `s̄h̄t̄` (`hsuffix = false`) or `s̄h̄t̄h̄` (`hsuffix = true`) of `F(S)`,
/// with `s`, `t` indices of `S¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FNormalForm {
    pub s: usize,
    pub t: usize,
    pub hsuffix: bool,
}

/// An element `(i, a, λ)` of `ΦS = M(S¹, S¹, Σ; Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReesTriple {
    pub i: usize,
    pub a: usize,
    pub lambda: Flag,
}

/// Structured form of one element of a constructed semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Decoded {
    Triple(TripleElem),
    Normal(FNormalForm),
    Rees(ReesTriple),
    Map(Transformation),
    /// The class collapsed to zero in a Rees quotient.
    Zero,
}

/// A constructed semigroup, the structured form of each of its elements, and the
/// embedding of the source semigroup.
#[derive(Debug, Clone)]
pub struct ConstructionBundle {
    pub result: FiniteSemigroup,
    pub decode: Vec<Decoded>,
    pub embedding: SemigroupHom,
    pub notes: String,
    lookup: HashMap<Decoded, usize>,
}

impl ConstructionBundle {
    pub fn new(result: FiniteSemigroup, decode: Vec<Decoded>, embedding: SemigroupHom, notes: String) -> Self {
        debug_assert_eq!(result.order(), decode.len());
        let lookup = decode.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        ConstructionBundle {
            result,
            decode,
            embedding,
            notes,
            lookup,
        }
    }

    pub fn index_of(&self, d: &Decoded) -> Option<usize> {
        self.lookup.get(d).copied()
    }

    pub fn triple_index(&self, s: usize, t: usize, flag: Flag) -> Option<usize> {
        self.index_of(&Decoded::Triple(TripleElem::new(s, t, flag)))
    }

    /// The triple at `i`, if this bundle decodes to triples.
    pub fn triple(&self, i: usize) -> Option<TripleElem> {
        match self.decode[i] {
            Decoded::Triple(t) => Some(t),
            _ => None,
        }
    }

    pub fn sidecar(&self, construction: &str) -> Sidecar {
        Sidecar {
            construction: construction.to_string(),
            order: self.result.order(),
            notes: self.notes.clone(),
            labels: self.result.elements().map(|i| self.result.label(i)).collect(),
            decode: self.decode.clone(),
            embedding: self.embedding.map().to_vec(),
            embedding_is_homomorphism: self.embedding.is_homomorphism(),
            embedding_is_injective: self.embedding.is_injective(),
        }
    }
}

/// JSON companion of a constructed `.sgp` table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub construction: String,
    pub order: usize,
    pub notes: String,
    pub labels: Vec<String>,
    pub decode: Vec<Decoded>,
    pub embedding: Vec<usize>,
    pub embedding_is_homomorphism: bool,
    pub embedding_is_injective: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoded_serialises_with_a_kind_tag() {
        let d = Decoded::Triple(TripleElem::new(0, 1, Flag::Tau));
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"kind":"triple","s":0,"t":1,"flag":"tau"}"#);
        assert_eq!(serde_json::from_str::<Decoded>(&json).unwrap(), d);
        assert_eq!(serde_json::to_string(&Decoded::Zero).unwrap(), r#"{"kind":"zero"}"#);
    }
}
