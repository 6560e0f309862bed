//! Cubo-linear transformations: type `(3, 1)`.

use super::cubic::expect_stage;
use super::row::{
    ClassificationOutcome, ClassificationRow, Family, Rejection, RejectionBasis, RowSource,
    StageRecord, StageSolution,
};
use super::tables::reference_table;
use crate::arith::as_integer;
use crate::enumerate::{ci_degree_options, enumerate_base_set, BaseSets, Columns};
use crate::error::{Error, Result};
use crate::invariants::{
    cubic_multidegree, dimension_solve, hilbert_conditions, hilbert_polynomial_solve, MultiDegree,
    TransformationProfile,
};

/// Dimension of the base locus of the inverse of a map with linear inverse,
/// read off the multidegree as `n` minus the length of its constant tail.
///
/// Only meaningful when the inverse is linear, i.e. `δ_(n-1) = δ_n`.
pub fn infer_inverse_base_dim(md: &MultiDegree) -> Result<i64> {
    let v = md.as_slice();
    let n = v.len() as i64 - 1;
    if n < 1 || v[v.len() - 2] != v[v.len() - 1] {
        return Err(Error::Precondition(format!(
            "multidegree {md} does not end with a linear inverse"
        )));
    }
    let last = v[v.len() - 1];
    let tail = v.iter().rev().take_while(|&&x| x == last).count() as i64;
    Ok(n - tail)
}

/// `(r, n)` with a one-dimensional inverse base locus.
const CURVE_INVERSE_CASES: [(i64, i64); 3] = [(1, 3), (2, 4), (3, 5)];

/// Expected `(λ, g, Δ, a)` solutions of the Hilbert conditions in each of those cases.
const EXPECTED_HILBERT: &[&[i64]] = &[&[6, 4, 3, 1], &[5, 2, 4, 2]];

const EXPECTED_LINEAR_SET: &[&[i64]] = &[
    &[13, 14, 16, 4],
    &[14, 17, 16, 4],
    &[15, 19, 12, 3],
    &[15, 20, 16, 4],
    &[15, 21, 16, 4],
    &[18, 28, 9, 2],
];

/// Tuples of the linear-inverse set excluded by running the adjunction
/// analysis of the cubic case on them; this is carried as a stored argument.
const EXCLUDED_BY_ADJUNCTION: [(i64, i64, i64, i64); 3] =
    [(15, 21, 16, 4), (15, 20, 16, 4), (14, 17, 16, 4)];

pub fn classify_cubo_linear() -> Result<ClassificationOutcome> {
    classify_cubo_linear_with(&enumerate_base_set())
}

pub fn classify_cubo_linear_with(base: &BaseSets) -> Result<ClassificationOutcome> {
    let mut out = ClassificationOutcome::new(Family::CuboLinear);
    let table5 = reference_table(5).expect("table 5 is embedded");

    for (r, n) in CURVE_INVERSE_CASES {
        let c = (0..=n)
            .find(|&c| dimension_solve(n, 3, 1, c).is_ok_and(|d| d.r == r && d.r_prime == 1))
            .ok_or_else(|| Error::ClassificationMismatch {
                stage: "curve-inverse".into(),
                expected: format!("a coindex giving r = {r}, r' = 1 in P^{n}"),
                found: "none".into(),
            })?;
        let mut solutions = Vec::new();
        for a in 1..=c {
            for big_d in ci_degree_options(a, c) {
                let conds = hilbert_conditions(n, 3, 1, a, 1);
                let Ok(poly) = hilbert_polynomial_solve(&conds, r as usize) else {
                    continue;
                };
                let (Some(l), Some(g)) = (
                    as_integer(&poly.degree()),
                    as_integer(&poly.sectional_genus()),
                ) else {
                    continue;
                };
                solutions.push(StageSolution {
                    tuple: vec![l, g, big_d, a],
                    multidegree: None,
                });
            }
        }
        let record = StageRecord {
            name: format!("curve-inverse-n{n}"),
            input: format!("hilbert conditions r={r} n={n} c={c}"),
            input_size: solutions.len(),
            solutions,
        };
        expect_stage(&record, EXPECTED_HILBERT)?;
        for s in &record.solutions {
            let [l, g, big_d, a] = s.tuple[..] else {
                unreachable!()
            };
            if a == 1 {
                out.rejections.push(Rejection {
                    stage: record.name.clone(),
                    candidate: s.tuple.clone(),
                    reason: "singular locus coincides with base locus of the inverse".into(),
                    basis: RejectionBasis::Reference,
                    multidegree: None,
                });
                continue;
            }
            let profile = TransformationProfile::new(n, 3, 1, a, big_d, l, g);
            let reference = table5
                .iter()
                .find(|row| row.dims.r == r && row.profile == profile)
                .ok_or_else(|| Error::ClassificationMismatch {
                    stage: record.name.clone(),
                    expected: "a line of table 5".into(),
                    found: format!("{:?}", s.tuple),
                })?;
            out.rows.push(ClassificationRow::new(
                5,
                reference.line.clone(),
                profile,
                r,
                reference.structure.clone(),
                RowSource::Derived,
            ));
        }
        out.stages.push(record);
    }

    // Threefold base locus in P^6: r' = 4 and coindex 4.
    let dims = dimension_solve(6, 3, 1, 4)?;
    let pairs: Vec<(i64, i64)> = (1..=dims.c)
        .flat_map(|a| {
            ci_degree_options(a, dims.c)
                .into_iter()
                .map(move |d| (d, a))
        })
        .collect();
    let linear = &base.linear_inverse;
    let found = linear.filter("gamma4_linear_ci", "complete-intersection", |p| {
        pairs.contains(&(p.image_degree, p.codim))
    });
    let record = StageRecord {
        name: "linear-inverse-ci".into(),
        input: linear.name().into(),
        input_size: linear.len(),
        solutions: found
            .iter()
            .map(|p| StageSolution {
                tuple: Columns::Four.record(p),
                multidegree: Some(cubic_multidegree(p)),
            })
            .collect(),
    };
    expect_stage(&record, EXPECTED_LINEAR_SET)?;
    for p in found.iter() {
        let md = cubic_multidegree(p);
        let r_prime = infer_inverse_base_dim(&md)?;
        let (reason, basis) = if EXCLUDED_BY_ADJUNCTION.contains(&p.four_tuple()) {
            (
                format!("excluded by the adjunction analysis of the cubic case (inverse base locus dimension read from multidegree: {r_prime})"),
                RejectionBasis::Reference,
            )
        } else if r_prime != dims.r_prime {
            (
                format!(
                    "inverse base locus has dimension {r_prime}, not {}",
                    dims.r_prime
                ),
                RejectionBasis::Computed,
            )
        } else {
            return Err(Error::ClassificationMismatch {
                stage: record.name.clone(),
                expected: "every linear-inverse candidate excluded".into(),
                found: format!("{:?} survives", p.four_tuple()),
            });
        };
        out.rejections.push(Rejection {
            stage: record.name.clone(),
            candidate: Columns::Four.record(p),
            reason,
            basis,
            multidegree: Some(md),
        });
    }
    out.stages.push(record);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_run_examples() {
        assert_eq!(
            infer_inverse_base_dim(&MultiDegree(vec![1, 3, 9, 14, 16, 16, 16])).unwrap(),
            3
        );
        assert_eq!(
            infer_inverse_base_dim(&MultiDegree(vec![1, 4, 6, 6, 6, 6])).unwrap(),
            1
        );
        assert_eq!(
            infer_inverse_base_dim(&MultiDegree(vec![1, 4, 7, 8, 8, 8])).unwrap(),
            2
        );
        assert_eq!(
            infer_inverse_base_dim(&MultiDegree(vec![1, 3, 9, 9, 9, 9, 9])).unwrap(),
            1
        );
    }

    #[test]
    fn non_linear_inverse_is_rejected() {
        assert!(matches!(
            infer_inverse_base_dim(&MultiDegree(vec![1, 3, 9, 13, 11, 5, 1])),
            Err(Error::Precondition(_))
        ));
    }
}
