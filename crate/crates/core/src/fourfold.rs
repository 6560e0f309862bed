//! Special cubic fourfolds containing a hyperplane section of a cubic base locus.

use serde::{Deserialize, Serialize};

use crate::classify::fourfold_table;
use crate::error::{Error, Result};
use crate::invariants::delta_invariant;

/// Whether `delta` is an even integer above 6 divisible neither by 4, nor by 9,
/// nor by any odd prime `p ≡ 2 (mod 3)`.
pub fn kuznetsov_admissible(delta: i64) -> bool {
    if delta <= 6 || delta % 2 != 0 || delta % 4 == 0 || delta % 9 == 0 {
        return false;
    }
    let mut odd = delta / 2;
    let mut p = 3;
    while p * p <= odd {
        if odd % p == 0 {
            if p % 3 == 2 {
                return false;
            }
            while odd % p == 0 {
                odd /= p;
            }
        }
        p += 2;
    }
    odd % 3 != 2
}

/// The first `count` admissible values not below `from`.
pub fn admissible_values(from: i64, count: usize) -> Vec<i64> {
    (from..)
        .filter(|&d| kuznetsov_admissible(d))
        .take(count)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourfoldRecord {
    pub source: String,
    pub delta: i64,
    pub admissible: bool,
    /// `(h⁰(I(3)), h⁰(N_{S/P⁵}), h⁰(N_{S/X}))`, carried verbatim.
    pub reference_cohomology: Option<(i64, i64, i64)>,
    pub note: String,
}

/// Recomputes `δ` for every row of the fourfold table and checks it against the stored column.
pub fn table2_report() -> Result<Vec<FourfoldRecord>> {
    fourfold_table()
        .into_iter()
        .map(|e| {
            let computed = delta_invariant(&e.profile());
            if computed != e.delta {
                return Err(Error::DeltaMismatch {
                    row: e.row.clone(),
                    stored: e.delta,
                    computed,
                });
            }
            Ok(FourfoldRecord {
                source: e.row.clone(),
                delta: computed,
                admissible: kuznetsov_admissible(computed),
                reference_cohomology: Some((
                    e.h0_ideal_cubics,
                    e.h0_normal_p5,
                    e.h0_normal_fourfold,
                )),
                note: e.source.clone(),
            })
        })
        .collect()
}
