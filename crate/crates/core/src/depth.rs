//! Products of idempotents: the chain `E ⊆ E² ⊆ E³ ⊆ ...` and semiband depth.

use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthKind {
    NotSemiband,
    Semiband { depth: usize },
}

/// The idempotent power chain of a finite semigroup.
///
/// `chain[k]` holds `E^(k+1)`. The chain stops at the first power that equals the
/// next one, so the last entry is `<E>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub kind: DepthKind,
    pub chain: Vec<ElementSet>,
}

impl DepthResult {
    pub fn depth(&self) -> Option<usize> {
        match self.kind {
            DepthKind::Semiband { depth } => Some(depth),
            DepthKind::NotSemiband => None,
        }
    }

    pub fn is_semiband(&self) -> bool {
        matches!(self.kind, DepthKind::Semiband { .. })
    }

    /// `<E(S)>`.
    pub fn generated(&self) -> &ElementSet {
        self.chain.last().expect("chain is never empty")
    }

    /// Least `k` with `x ∈ E^k`, or `None` when `x ∉ <E>`.
    pub fn element_depth(&self, x: usize) -> Option<usize> {
        self.chain.iter().position(|e| e.contains(x)).map(|k| k + 1)
    }

    /// `E^k` for `k >= 1`; powers past the end of the chain equal the last entry.
    pub fn power(&self, k: usize) -> &ElementSet {
        assert!(k >= 1, "E^0 is the empty product");
        &self.chain[(k - 1).min(self.chain.len() - 1)]
    }
}

/// Computes `E¹, E², ...` by multiplying by `E` on the right until the chain stabilises.
pub fn depth_analysis(s: &FiniteSemigroup) -> DepthResult {
    let e = s.idempotents();
    let mut chain = vec![e.clone()];
    loop {
        let last = chain.last().unwrap();
        let next = s.set_product(last, &e);
        // E^k ⊆ E^(k+1) because every idempotent is its own square
        debug_assert!(last.is_subset(&next));
        if &next == last {
            break;
        }
        chain.push(next);
    }
    let kind = if chain.last().unwrap().is_full() {
        DepthKind::Semiband { depth: chain.len() }
    } else {
        DepthKind::NotSemiband
    };
    DepthResult { kind, chain }
}

pub fn element_depth(s: &FiniteSemigroup, x: usize) -> Option<usize> {
    depth_analysis(s).element_depth(x)
}
