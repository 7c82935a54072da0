use serde::{Deserialize, Serialize};

use crate::constructions::{build_l, build_r, Side};
use crate::error::{Result, SemigroupError};
use crate::green::{GreenRelation, GreensStructure};
use crate::properties::non_regular_element;
use crate::semigroup::FiniteSemigroup;

/// Orders of `R(S)` and `L(S)` for a regular `S` against the integer bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    /// Largest maximal subgroup.
    pub m: usize,
    /// Largest L-class.
    pub l: usize,
    /// Largest R-class.
    pub r: usize,
    pub r_order: usize,
    pub l_order: usize,
    pub two_n_l: usize,
    pub two_n_r: usize,
    pub two_n_squared: usize,
    pub min_squared: usize,
    pub four_n_cubed_m: usize,
    pub nm_ok: bool,
    /// `|R(S)| = 2n²`.
    pub tight: bool,
    /// `l·r ≤ m·n`.
    pub class_product_within_nm: bool,
    pub largest_l_class_rep: usize,
}

impl BoundReport {
    /// `|R(S)| ≤ 2nl ≤ 2n²`.
    pub fn reg_ok(&self) -> bool {
        self.r_order <= self.two_n_l && self.two_n_l <= self.two_n_squared
    }
}

pub fn bound_report(s: &FiniteSemigroup) -> Result<BoundReport> {
    if let Some(x) = non_regular_element(s) {
        return Err(SemigroupError::NotRegular(x));
    }
    let g = GreensStructure::compute(s);
    let n = s.order();
    let largest = |rel| g.class_sizes(rel).into_iter().max().unwrap_or(0);
    let (l, r) = (largest(GreenRelation::L), largest(GreenRelation::R));
    let m = s
        .idempotents()
        .iter()
        .map(|e| g.class_of(GreenRelation::H, e).len())
        .max()
        .unwrap_or(0);
    let largest_l_class_rep = g
        .classes(GreenRelation::L)
        .into_iter()
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
        .map(|c| c[0])
        .unwrap_or(0);
    let r_order = build_r(s, Side::Right)?.result.order();
    let l_order = build_l(s)?.result.order();
    let min = r_order.min(l_order);
    let min_squared = min * min;
    let four_n_cubed_m = 4 * n * n * n * m;
    Ok(BoundReport {
        n,
        m,
        l,
        r,
        r_order,
        l_order,
        two_n_l: 2 * n * l,
        two_n_r: 2 * n * r,
        two_n_squared: 2 * n * n,
        min_squared,
        four_n_cubed_m,
        nm_ok: min_squared <= four_n_cubed_m,
        tight: r_order == 2 * n * n,
        class_product_within_nm: l * r <= m * n,
        largest_l_class_rep,
    })
}

pub fn check_bounds(members: &[FiniteSemigroup]) -> Result<Vec<BoundReport>> {
    members.iter().map(bound_report).collect()
}
