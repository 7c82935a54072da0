//! Exhaustive generation of small semigroups.
//!
//! Tables are filled cell by cell in row-major order; every assignment is checked
//! against all associativity triples whose products are already defined. Survivors
//! are reduced to a canonical form, the lexicographically least table over all
//! relabelings.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::properties::{check_property, PropertyName};
use crate::semigroup::FiniteSemigroup;
use crate::sgp::{parse_sgp, to_sgp_string};

pub const DEFAULT_ORDER_CAP: usize = 4;
/// Orders above this are never enumerated, whatever the configured cap.
pub const HARD_ORDER_CAP: usize = 5;
pub const ORDER_CAP_ENV: &str = "SBF_ORDER_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Modulo {
    /// Every associative table on `0..n`.
    None,
    Isomorphism,
    /// Isomorphism or anti-isomorphism.
    IsomorphismAndAnti,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub order: usize,
    pub members: Vec<FiniteSemigroup>,
    pub modulo: Modulo,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The order cap: `SBF_ORDER_CAP` if set, else the default, never above the hard cap.
pub fn order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
        .min(HARD_ORDER_CAP)
}

pub fn enumerate_semigroups(n: usize, modulo: Modulo) -> Result<Corpus> {
    enumerate_semigroups_capped(n, modulo, order_cap())
}

pub fn enumerate_semigroups_capped(n: usize, modulo: Modulo, cap: usize) -> Result<Corpus> {
    let cap = cap.min(HARD_ORDER_CAP);
    if n == 0 {
        return Err(SemigroupError::Empty);
    }
    if n > cap {
        return Err(SemigroupError::OrderTooLarge { order: n, cap });
    }
    let tables = associative_tables(n);
    let members = match modulo {
        Modulo::None => tables
            .into_iter()
            .map(|t| FiniteSemigroup::from_flat(n, t, None))
            .collect::<Result<Vec<_>>>()?,
        Modulo::Isomorphism | Modulo::IsomorphismAndAnti => {
            let perms = permutations(n);
            let reps: BTreeSet<Vec<usize>> = tables
                .iter()
                .map(|t| {
                    let c = canonical_table_with(n, t, &perms);
                    if modulo == Modulo::IsomorphismAndAnti {
                        c.min(canonical_table_with(n, &opposite_table(n, t), &perms))
                    } else {
                        c
                    }
                })
                .collect();
            reps.into_iter()
                .map(|t| FiniteSemigroup::from_flat(n, t, None))
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(Corpus {
        order: n,
        members,
        modulo,
    })
}

const UNSET: usize = usize::MAX;

/// All associative tables on `0..n`, in lexicographic order.
fn associative_tables(n: usize) -> Vec<Vec<usize>> {
    let mut table = vec![UNSET; n * n];
    let mut out = Vec::new();
    fill(n, 0, &mut table, &mut out);
    out
}

fn fill(n: usize, cell: usize, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(table.clone());
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if consistent(n, table) {
            fill(n, cell + 1, table, out);
        }
    }
    table[cell] = UNSET;
}

/// No fully defined triple violates associativity.
fn consistent(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (t[xy * n + z], t[x * n + yz]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

fn opposite_table(n: usize, t: &[usize]) -> Vec<usize> {
    (0..n * n).map(|i| t[(i % n) * n + i / n]).collect()
}

/// Table of the relabeled copy where old element `x` becomes `p[x]`.
fn relabel(n: usize, t: &[usize], p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[p[x] * n + p[y]] = p[t[x * n + y]];
        }
    }
    out
}

fn canonical_table_with(n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    perms
        .iter()
        .map(|p| relabel(n, t, p))
        .min()
        .expect("at least one permutation")
}

/// Lexicographically least table among all relabelings of `s`.
pub fn canonical_table(s: &FiniteSemigroup) -> Vec<usize> {
    canonical_table_with(s.order(), s.table(), &permutations(s.order()))
}

/// The relabeled copy of `s` carrying its canonical table; labels are dropped.
pub fn canonical_form(s: &FiniteSemigroup) -> FiniteSemigroup {
    FiniteSemigroup::from_flat(s.order(), canonical_table(s), None).expect("relabeling preserves associativity")
}

/// Members satisfying `pred`, in their original order.
pub fn corpus_filter(c: &Corpus, pred: impl Fn(&FiniteSemigroup) -> bool) -> Corpus {
    Corpus {
        order: c.order,
        members: c.members.iter().filter(|s| pred(s)).cloned().collect(),
        modulo: c.modulo,
    }
}

/// Members for which `p` holds; zero-requiring properties exclude members without a zero.
pub fn filter_property(c: &Corpus, p: PropertyName) -> Corpus {
    corpus_filter(c, |s| check_property(s, p).map(|v| v.holds()).unwrap_or(false))
}

/// Enumerates every order in `1..=max_order` and concatenates the members.
pub fn corpus_up_to(max_order: usize, modulo: Modulo) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_semigroups(n, modulo)?.members);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub order: usize,
    pub modulo: Modulo,
    pub count: usize,
    pub files: Vec<String>,
}

pub const MANIFEST_FILE: &str = "manifest.json";

/// Writes one `.sgp` file per member plus `manifest.json`.
pub fn export_corpus(c: &Corpus, dir: &Path) -> std::io::Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut files = Vec::with_capacity(c.len());
    for (i, s) in c.members.iter().enumerate() {
        let name = format!("order{}_{:04}.sgp", c.order, i);
        fs::write(dir.join(&name), to_sgp_string(s))?;
        files.push(name);
    }
    let manifest = Manifest {
        order: c.order,
        modulo: c.modulo,
        count: c.len(),
        files,
    };
    let json = serde_json::to_string_pretty(&manifest).map_err(std::io::Error::other)?;
    fs::write(dir.join(MANIFEST_FILE), json + "\n")?;
    Ok(manifest)
}

/// Reads every `.sgp` file of a directory, sorted by file name.
pub fn load_directory(dir: &Path) -> std::result::Result<Vec<(PathBuf, FiniteSemigroup)>, LoadError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| LoadError::Io(dir.to_path_buf(), e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sgp"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).map_err(|e| LoadError::Io(p.clone(), e.to_string()))?;
            let s = parse_sgp(&text).map_err(|e| LoadError::Parse(p.clone(), e))?;
            Ok((p, s))
        })
        .collect()
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{0}: {1}")]
    Io(PathBuf, String),
    #[error("{0}: {1}")]
    Parse(PathBuf, SemigroupError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn order_one_and_two() {
        assert_eq!(enumerate_semigroups(1, Modulo::Isomorphism).unwrap().len(), 1);
        assert_eq!(enumerate_semigroups(2, Modulo::None).unwrap().len(), 8);
    }

    #[test]
    fn anti_isomorphism_merges_left_and_right_zero() {
        let iso = enumerate_semigroups(2, Modulo::Isomorphism).unwrap();
        let both = enumerate_semigroups(2, Modulo::IsomorphismAndAnti).unwrap();
        assert_eq!(iso.len(), both.len() + 1);
    }

    #[test]
    fn caps() {
        assert_eq!(
            enumerate_semigroups_capped(5, Modulo::None, 4).unwrap_err(),
            SemigroupError::OrderTooLarge { order: 5, cap: 4 }
        );
        assert_eq!(
            enumerate_semigroups_capped(6, Modulo::None, 9).unwrap_err(),
            SemigroupError::OrderTooLarge { order: 6, cap: 5 }
        );
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant() {
        let b = catalog::brandt(2);
        let c = canonical_form(&b);
        assert_eq!(canonical_form(&c), c);
        let shuffled = FiniteSemigroup::from_flat(5, relabel(5, b.table(), &[2, 4, 0, 1, 3]), None).unwrap();
        assert_eq!(canonical_form(&shuffled), c);
    }

    #[test]
    fn filters_keep_order() {
        let c = enumerate_semigroups(2, Modulo::Isomorphism).unwrap();
        let regular = filter_property(&c, PropertyName::Regular);
        assert!(regular.members.windows(2).all(|w| w[0].table() < w[1].table()));
        assert_eq!(regular.len(), 4);
        let with_zero = corpus_filter(&c, |s| s.zero().is_some());
        assert!(with_zero.members.iter().all(|s| s.zero().is_some()));
    }
}
