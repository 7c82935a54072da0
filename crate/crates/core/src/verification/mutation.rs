use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::checks::{check_green_formulas, check_r_construction, check_t_construction};
use super::ClaimId;
use crate::constructions::{build_r, build_t, ConstructionBundle, Side};
use crate::error::{Result, SemigroupError};
use crate::hom::SemigroupHom;
use crate::properties::non_regular_element;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MutatedConstruction {
    T,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationTrial {
    pub member: usize,
    pub construction: MutatedConstruction,
    pub cell: (usize, usize),
    pub old: usize,
    pub new: usize,
    /// Claims whose checks reject the mutated table.
    pub caught_by: Vec<ClaimId>,
}

impl MutationTrial {
    pub fn caught(&self) -> bool {
        !self.caught_by.is_empty()
    }
}

/// A copy of `bundle` whose table has `value` at `(row, col)`. The table is not
/// required to stay associative.
pub fn mutate_cell(
    source: &FiniteSemigroup,
    bundle: &ConstructionBundle,
    (row, col): (usize, usize),
    value: usize,
) -> Result<ConstructionBundle> {
    let n = bundle.result.order();
    bundle.result.check_element(row)?;
    bundle.result.check_element(col)?;
    bundle.result.check_element(value)?;
    let mut table = bundle.result.table().to_vec();
    table[row * n + col] = value;
    let result = FiniteSemigroup::from_flat_unchecked(n, table)?;
    let embedding = SemigroupHom::new(source, &result, bundle.embedding.map().to_vec())?;
    Ok(ConstructionBundle::new(
        result,
        bundle.decode.clone(),
        embedding,
        bundle.notes.clone(),
    ))
}

/// Changes one random cell of `T(S)` or `R(S)` per trial and records which
/// construction checks notice. Trials alternate between the two constructions;
/// members are drawn from those the construction applies to.
pub fn run_mutation_trials(corpus: &[FiniteSemigroup], trials: usize, seed: u64) -> Result<Vec<MutationTrial>> {
    let covered: Vec<usize> = (0..corpus.len())
        .filter(|&i| corpus[i].is_idempotent_covered().holds())
        .collect();
    let regular: Vec<usize> = covered
        .iter()
        .copied()
        .filter(|&i| non_regular_element(&corpus[i]).is_none())
        .collect();
    if covered.is_empty() {
        return Err(SemigroupError::Internal(
            "no idempotent covered member to mutate".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let construction = if k % 2 == 1 && !regular.is_empty() {
            MutatedConstruction::R
        } else {
            MutatedConstruction::T
        };
        let pool = match construction {
            MutatedConstruction::T => &covered,
            MutatedConstruction::R => &regular,
        };
        let member = *pool.choose(&mut rng).expect("non-empty pool");
        let s = &corpus[member];
        let bundle = match construction {
            MutatedConstruction::T => build_t(s)?,
            MutatedConstruction::R => build_r(s, Side::Right)?,
        };
        let n = bundle.result.order();
        let cell = (rng.gen_range(0..n), rng.gen_range(0..n));
        let old = bundle.result.mul(cell.0, cell.1);
        let new = (old + rng.gen_range(1..n.max(2))) % n;
        let mutated = mutate_cell(s, &bundle, cell, new)?;
        let mut caught_by = Vec::new();
        match construction {
            MutatedConstruction::T => {
                if !check_t_construction(s, &mutated).holds() {
                    caught_by.push(ClaimId::TsSemiband4);
                }
                if !check_green_formulas(s, &mutated).holds() {
                    caught_by.push(ClaimId::GreenFormulas);
                }
            }
            MutatedConstruction::R => {
                if !check_r_construction(s, &mutated).holds() {
                    caught_by.push(ClaimId::RsSemiband2);
                }
            }
        }
        out.push(MutationTrial {
            member,
            construction,
            cell,
            old,
            new,
            caught_by,
        });
    }
    Ok(out)
}
