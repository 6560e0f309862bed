//! Dimension relations between the base loci of a special map and of its inverse.

use super::DimensionPair;
use crate::arith::exact_div;
use crate::error::{Error, Result};

/// Solves for the base-locus dimensions `(r, r')` of a map of type `(d1, d2)`
/// from `P^n` into a variety of coindex `c`.
///
/// Returns [`Error::NonIntegral`] when `r` is not an integer, or when the
/// inverse relations fail to reproduce `(d1, d2)`; both reject the candidate.
pub fn dimension_solve(n: i64, d1: i64, d2: i64, c: i64) -> Result<DimensionPair> {
    if n < 3 || d1 < 1 || d2 < 1 || c < 0 || d1 * d2 <= 1 {
        return Err(Error::Precondition(format!(
            "dimension_solve needs n >= 3, d1, d2 >= 1, c >= 0, d1*d2 > 1 (got n={n}, d1={d1}, d2={d2}, c={c})"
        )));
    }
    let num = n * d1 * d2 - n * d2 - d1 * d2 - d2 - c + 2;
    let r = exact_div(num, d1 * d2 - 1).ok_or(Error::NonIntegral("r"))?;
    let r_prime = (n - r - 1) * d1 - 2;
    if inverse_degrees(n, r, r_prime, c) != Some((d1, d2)) {
        return Err(Error::NonIntegral("inverse degrees"));
    }
    Ok(DimensionPair { r, r_prime, c })
}

/// Recovers `(d1, d2)` from `(n, r, r', c)`, when both quotients are exact.
pub fn inverse_degrees(n: i64, r: i64, r_prime: i64, c: i64) -> Option<(i64, i64)> {
    let d1 = exact_div(r_prime + 2, n - r - 1)?;
    let d2 = exact_div(r - c + 2, n - r_prime - 1)?;
    Some((d1, d2))
}

/// Matrix expressing `(H', E')` in the basis `(H, E)` of the blow-up.
pub fn change_basis_matrix(d1: i64, d2: i64) -> [[i64; 2]; 2] {
    [[d1, -1], [d1 * d2 - 1, -d2]]
}

pub fn determinant(m: &[[i64; 2]; 2]) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}
