#![allow(dead_code)]

use itertools::Itertools;

/// Every associative table on `0..n`, by scanning all `n^(n²)` tables.
pub fn full_scan(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0; cells];
            for c in (0..cells).rev() {
                t[c] = code % n;
                code /= n;
            }
            t
        })
        .filter(|t| associative(n, t))
        .collect()
}

pub fn associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

/// A bijection `p` with `p(a(x, y)) = b(p(x), p(y))`, by trying every permutation.
pub fn bijection(n: usize, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    (0..n)
        .permutations(n)
        .find(|p| (0..n).all(|x| (0..n).all(|y| p[a[x * n + y]] == b[p[x] * n + p[y]])))
}

use std::sync::OnceLock;

use proptest::prelude::*;
use semiband::enumeration::{corpus_up_to, Modulo};
use semiband::FiniteSemigroup;

/// Every semigroup of order at most 4, up to isomorphism.
pub fn corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus_up_to(4, Modulo::Isomorphism).unwrap())
}

/// Copy of `s` where old element `x` is renamed `p[x]`.
pub fn relabel(s: &FiniteSemigroup, p: &[usize]) -> FiniteSemigroup {
    let n = s.order();
    let mut t = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            t[p[x] * n + p[y]] = p[s.mul(x, y)];
        }
    }
    FiniteSemigroup::from_flat(n, t, None).unwrap()
}

/// A corpus member under a random relabelling.
pub fn member() -> impl Strategy<Value = FiniteSemigroup> {
    (0..corpus().len())
        .prop_flat_map(|i| {
            let s = &corpus()[i];
            Just((0..s.order()).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(move |p| (i, p))
        })
        .prop_map(|(i, p)| relabel(&corpus()[i], &p))
}
