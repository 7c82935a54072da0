//! Small named semigroups used in examples, tests and documentation.

use crate::semigroup::FiniteSemigroup;
use crate::transformations;

fn build(order: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(order, f).expect("catalog tables are associative")
}

pub fn trivial() -> FiniteSemigroup {
    build(1, |_, _| 0)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    build(n, |x, _| x)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    build(n, |_, y| y)
}

pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    build(n, |x, y| (x + y) % n)
}

/// `{0, 1}` under ordinary multiplication; 0 is the zero and 1 the identity.
pub fn semilattice01() -> FiniteSemigroup {
    chain(2)
}

/// The chain `0 < 1 < ... < n-1` under `min`.
pub fn chain(n: usize) -> FiniteSemigroup {
    build(n, |x, y| x.min(y))
}

/// Element 0 is the zero; every product is 0.
pub fn null_semigroup(n: usize) -> FiniteSemigroup {
    build(n, |_, _| 0)
}

/// `m × n` rectangular band: `(i, j)(k, l) = (i, l)`, element `(i, j)` at `i * n + j`.
pub fn rectangular_band(m: usize, n: usize) -> FiniteSemigroup {
    build(m * n, |x, y| (x / n) * n + y % n)
}

/// Monogenic semigroup `<a | a^(index+period) = a^index>`; element `k` is `a^(k+1)`.
pub fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
    let order = index + period - 1;
    build(order, |x, y| {
        let mut e = x + y + 2;
        while e > order {
            e -= period;
        }
        e - 1
    })
}

/// Brandt semigroup of `n × n` matrix units with zero at index 0;
/// `e_ij` sits at `1 + i * n + j`.
pub fn brandt(n: usize) -> FiniteSemigroup {
    build(n * n + 1, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let (i, j) = ((x - 1) / n, (x - 1) % n);
        let (k, l) = ((y - 1) / n, (y - 1) % n);
        if j == k {
            1 + i * n + l
        } else {
            0
        }
    })
}

/// The full transformation monoid on `k` points.
pub fn full_transformation(k: usize) -> FiniteSemigroup {
    transformations::full_tf_monoid(k).expect("degree within cap").semigroup
}
