use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite counterexample attached to a failed check.
///
/// Indices refer to the semigroup the check ran on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "at", rename_all = "snake_case")]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(a) => write!(f, "{a}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Triple(a, b, c) => write!(f, "({a}, {b}, {c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub witness: Witness,
    pub reason: String,
}

/// Outcome of a decision procedure: either it holds, or it fails with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails(Failure),
}

impl Verdict {
    pub fn fails(witness: Witness, reason: impl Into<String>) -> Self {
        Verdict::Fails(Failure {
            witness,
            reason: reason.into(),
        })
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(f) => Some(&f.witness),
        }
    }

    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(f) => Some(f),
        }
    }

    /// Returns the first failing verdict, or `Holds`.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            failed => failed,
        }
    }
}

impl From<Option<Failure>> for Verdict {
    fn from(f: Option<Failure>) -> Self {
        match f {
            None => Verdict::Holds,
            Some(f) => Verdict::Fails(f),
        }
    }
}
