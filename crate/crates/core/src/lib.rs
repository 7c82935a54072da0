//! Finite semigroups, Green's relations, and embeddings of semigroups into
//! semibands (semigroups generated by their idempotents), with an exhaustive
//! checker for the structural claims about those embeddings.

pub mod catalog;
pub mod constructions;
pub mod depth;
pub mod enumeration;
pub mod error;
pub mod green;
pub mod hom;
pub mod ideal;
pub mod iso;
pub mod properties;
pub mod semigroup;
pub mod set;
pub mod sgp;
pub mod transformations;
pub mod verdict;
pub mod verification;

pub use error::{Result, SemigroupError};
pub use green::{GreenRelation, GreensStructure};
pub use hom::SemigroupHom;
pub use semigroup::{FiniteSemigroup, Subsemigroup};
pub use set::ElementSet;
pub use verdict::{Failure, Verdict, Witness};
