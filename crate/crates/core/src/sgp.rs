//! The `.sgp` Cayley table format.
//!
//! ```text
//! # labels: 0 1
//! 2
//! 0 0
//! 0 1
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` rows of `n`
//! space-separated 0-based indices. Lines starting with `#` are comments; a comment
//! of the form `# labels: a b c` names the elements.

use crate::error::{Result, SemigroupError};
use crate::semigroup::FiniteSemigroup;

const LABELS: &str = "labels:";

pub fn parse_sgp(text: &str) -> Result<FiniteSemigroup> {
    let mut labels = None;
    let mut order = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix(LABELS) {
                labels = Some(rest.split_whitespace().map(str::to_string).collect::<Vec<_>>());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| SemigroupError::Parse {
                    line: lineno,
                    message: format!("expected a non-negative integer, got {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        match order {
            None => {
                if nums.len() != 1 {
                    return Err(SemigroupError::Parse {
                        line: lineno,
                        message: "first line must hold the order".into(),
                    });
                }
                order = Some(nums[0]);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(SemigroupError::Parse {
                        line: lineno,
                        message: format!("more than {n} rows"),
                    });
                }
                rows.push(nums);
            }
        }
    }
    let n = order.ok_or(SemigroupError::Parse {
        line: 0,
        message: "missing order line".into(),
    })?;
    if rows.len() != n {
        return Err(SemigroupError::Parse {
            line: 0,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    FiniteSemigroup::new(rows, labels)
}

pub fn to_sgp_string(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    if let Some(labels) = s.labels() {
        out.push_str("# labels: ");
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("{}\n", s.order()));
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments_and_labels() {
        let text = "# the semilattice {0,1}\n# labels: zero one\n2\n0 0\n0 1\n";
        let s = parse_sgp(text).unwrap();
        assert_eq!(
            s,
            catalog::semilattice01()
                .with_labels(Some(vec!["zero".into(), "one".into()]))
                .unwrap()
        );
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_sgp("2\n0 x\n0 1\n"),
            Err(SemigroupError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_sgp("2\n0 0\n"), Err(SemigroupError::Parse { .. })));
        assert!(matches!(
            parse_sgp("2\n0 1\n0 0\n"),
            Err(SemigroupError::NonAssociative { .. })
        ));
        assert!(matches!(parse_sgp(""), Err(SemigroupError::Parse { .. })));
        assert!(matches!(parse_sgp("0\n"), Err(SemigroupError::Empty)));
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(n in 1usize..6, which in 0usize..5, labelled: bool) {
            let s = match which {
                0 => catalog::left_zero(n),
                1 => catalog::cyclic_group(n),
                2 => catalog::chain(n),
                3 => catalog::null_semigroup(n),
                _ => catalog::right_zero(n),
            };
            let s = if labelled {
                s.with_labels(Some((0..n).map(|i| format!("x{i}")).collect())).unwrap()
            } else {
                s
            };
            prop_assert_eq!(parse_sgp(&to_sgp_string(&s)).unwrap(), s);
        }
    }
}
