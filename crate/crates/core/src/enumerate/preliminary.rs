//! Numerical types of special maps with `d1, d2 >= 2` and base locus of dimension at most 3.

use serde::{Deserialize, Serialize};

use crate::invariants::{dimension_solve, inverse_degrees};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PreliminaryRow {
    pub n: i64,
    pub r: i64,
    pub r_prime: i64,
    pub d1: i64,
    pub d2: i64,
    pub c: i64,
}

/// Every integer solution of the dimension relations with `d1, d2 >= 2`,
/// `c >= 0`, `1 <= r <= 3` and `1 <= r, r' <= n - 2`, ordered by `(r, n, r', d1, d2)`.
///
/// Finiteness: `r' = (n-r-1)d1 - 2 <= n - 2` with `d1 >= 2` gives `n <= 2r + 2`;
/// `d2 = (r-c+2)/(n-r'-1)` gives `d2 <= r + 2`.
pub fn preliminary_classification() -> Vec<PreliminaryRow> {
    let mut rows = Vec::new();
    for r in 1..=3 {
        for n in (r + 2)..=(2 * r + 2) {
            for d1 in 2..=n {
                let r_prime = (n - r - 1) * d1 - 2;
                if !(1..=n - 2).contains(&r_prime) {
                    continue;
                }
                for d2 in 2..=(r + 2) {
                    let c = r + 2 - d2 * (n - r_prime - 1);
                    if c < 0 {
                        continue;
                    }
                    let Ok(dims) = dimension_solve(n, d1, d2, c) else {
                        continue;
                    };
                    if dims.r == r
                        && dims.r_prime == r_prime
                        && inverse_degrees(n, r, r_prime, c) == Some((d1, d2))
                    {
                        rows.push(PreliminaryRow {
                            n,
                            r,
                            r_prime,
                            d1,
                            d2,
                            c,
                        });
                    }
                }
            }
        }
    }
    rows.sort_by_key(|p| (p.r, p.n, p.r_prime, p.d1, p.d2));
    rows
}
