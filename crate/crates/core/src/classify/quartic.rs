//! Quartic transformations of `P^4` and `P^5`.

use super::cubic::expect_stage;
use super::cubo_linear::infer_inverse_base_dim;
use super::row::{
    ClassificationOutcome, ClassificationRow, Family, Rejection, RejectionBasis, RowSource,
    StageRecord, StageSolution,
};
use super::tables::reference_table;
use crate::arith::as_integer;
use crate::enumerate::{ci_compatible, ci_degree_options, preliminary_classification};
use crate::error::{Error, Result};
use crate::invariants::{
    dimension_solve, quartic_p4_invariants, quartic_p5_invariants, quartic_p5_linear_solution,
    TransformationProfile,
};

/// Scan range for the degree of a quarto-quartic base surface: four times 16,
/// the degree of a complete intersection of two quartics in `P^4`.
pub const QUARTIC_DEGREE_SCAN: std::ops::RangeInclusive<i64> = 1..=64;

const EXPECTED_P4_CASES: &[&[i64]] = &[&[3, 1, 2], &[2, 1, 3], &[2, 2, 4]];
/// `(d, a, Δ, λ)`
const EXPECTED_P4_ROOTS: &[&[i64]] = &[&[2, 1, 3, 9], &[2, 1, 3, 16]];
/// `(λ, g, Δ, a)`
const EXPECTED_P5_LINEAR: &[&[i64]] = &[
    &[6, 2, 18, 8],
    &[7, 4, 14, 6],
    &[9, 9, 8, 3],
    &[10, 12, 6, 2],
    &[12, 19, 4, 1],
    &[13, 23, 4, 1],
    &[15, 32, 6, 2],
];

fn reference_row(
    table: u8,
    profile: &TransformationProfile,
    r: i64,
    stage: &str,
) -> Result<ClassificationRow> {
    reference_table(table)
        .expect("table is embedded")
        .into_iter()
        .find(|row| row.dims.r == r && row.profile == *profile)
        .ok_or_else(|| Error::ClassificationMismatch {
            stage: stage.into(),
            expected: format!("a line of table {table}"),
            found: format!("{profile:?}"),
        })
}

fn solutions(tuples: Vec<Vec<i64>>) -> Vec<StageSolution> {
    tuples
        .into_iter()
        .map(|tuple| StageSolution {
            tuple,
            multidegree: None,
        })
        .collect()
}

pub fn classify_quartic_p4() -> Result<ClassificationOutcome> {
    let mut out = ClassificationOutcome::new(Family::QuarticP4);
    let prelim: Vec<_> = preliminary_classification()
        .into_iter()
        .filter(|p| p.n == 4 && p.r == 2 && p.d1 == 4 && p.c > 0)
        .collect();

    let mut cases = Vec::new();
    for p in &prelim {
        for a in 1..=p.c {
            for big_d in ci_degree_options(a, p.c) {
                cases.push(vec![p.d2, a, big_d]);
            }
        }
    }
    let case_record = StageRecord {
        name: "quartic-p4-cases".into(),
        input: "preliminary n=4 r=2 d1=4 c>0".into(),
        input_size: prelim.len(),
        solutions: solutions(cases.clone()),
    };
    expect_stage(&case_record, EXPECTED_P4_CASES)?;
    out.stages.push(case_record);

    let mut roots = Vec::new();
    for case in &cases {
        let [d, a, big_d] = case[..] else {
            unreachable!()
        };
        for l in QUARTIC_DEGREE_SCAN {
            let q = quartic_p4_invariants(l, a);
            if q.integral_core().is_some_and(|(_, _, req)| req == big_d) {
                roots.push(vec![d, a, big_d, l]);
            }
        }
    }
    let root_record = StageRecord {
        name: "quartic-p4-roots".into(),
        input: "quartic-p4-cases".into(),
        input_size: cases.len() * QUARTIC_DEGREE_SCAN.count(),
        solutions: solutions(roots.clone()),
    };
    expect_stage(&root_record, EXPECTED_P4_ROOTS)?;
    out.stages.push(root_record);

    let mut invariants = Vec::new();
    for root in &roots {
        let [d, a, big_d, l] = root[..] else {
            unreachable!()
        };
        let q = quartic_p4_invariants(l, a);
        let g = as_integer(&q.genus).ok_or(Error::NonIntegral("genus"))?;
        if l != 9 {
            out.rejections.push(Rejection {
                stage: "quartic-p4-roots".into(),
                candidate: root.clone(),
                reason: "base surface cut out by quartics and is not a complete intersection"
                    .into(),
                basis: RejectionBasis::Reference,
                multidegree: None,
            });
            continue;
        }
        let (k2, c2, _) = q.integral_core().expect("root is integral");
        let chi = as_integer(&q.holomorphic_euler).ok_or(Error::NonIntegral("chi"))?;
        invariants.push(vec![l, g, k2, chi, c2]);
        let profile = TransformationProfile::new(4, 4, d, a, big_d, l, g);
        let reference = reference_row(4, &profile, 2, "quartic-p4-roots")?;
        let structure = if chi == 2 && k2 < 0 {
            format!("K3 surface with {} (-1)-lines", -k2)
        } else {
            format!("surface with K^2 = {k2} and chi = {chi}")
        };
        out.rows.push(ClassificationRow::new(
            4,
            reference.line,
            profile,
            2,
            structure,
            RowSource::Derived,
        ));
    }
    out.stages.push(StageRecord {
        name: "quartic-p4-invariants".into(),
        input: "quartic-p4-roots".into(),
        input_size: roots.len(),
        solutions: solutions(invariants),
    });

    out.rows.extend(
        reference_table(4)
            .expect("table 4 is embedded")
            .into_iter()
            .filter(|r| r.profile.ambient_dim == 4 && r.profile.codim == 0),
    );
    out.rows
        .sort_by(|x, y| x.line.len().cmp(&y.line.len()).then(x.line.cmp(&y.line)));
    Ok(out)
}

pub fn classify_quartic_p5() -> Result<ClassificationOutcome> {
    let mut out = ClassificationOutcome::new(Family::QuarticP5);
    let max_degree = 15;

    // Quadratic inverse.
    let mut quadratic = Vec::new();
    for p in preliminary_classification()
        .iter()
        .filter(|p| p.n == 5 && p.r == 3 && p.d1 == 4)
    {
        for a in 1..=p.c {
            for big_d in ci_degree_options(a, p.c) {
                for l in 1..=max_degree {
                    let q = quartic_p5_invariants(l, p.d2, big_d, a);
                    if q.codim_relation_holds && q.surface_relation == 0 {
                        quadratic.push(vec![l, q.genus, big_d, a]);
                    }
                }
                if !quadratic.iter().any(|t| t[2] == big_d && t[3] == a) {
                    out.rejections.push(Rejection {
                        stage: "quartic-p5-quadratic".into(),
                        candidate: vec![p.d2, big_d, a],
                        reason: "no integer degree satisfies both the codimension and the surface relation".into(),
                        basis: RejectionBasis::Computed,
                        multidegree: None,
                    });
                }
            }
        }
    }
    let record = StageRecord {
        name: "quartic-p5-quadratic".into(),
        input: "preliminary n=5 r=3 d1=4".into(),
        input_size: max_degree as usize,
        solutions: solutions(quadratic),
    };
    expect_stage(&record, &[])?;
    out.stages.push(record);

    // Linear inverse.
    let dims = (0..=5)
        .filter_map(|c| dimension_solve(5, 4, 1, c).ok())
        .find(|d| d.r == 3)
        .ok_or_else(|| Error::ClassificationMismatch {
            stage: "quartic-p5-linear".into(),
            expected: "a coindex with r = 3".into(),
            found: "none".into(),
        })?;
    let mut cases = Vec::new();
    for l in 1..=max_degree {
        let Some((big_d, a)) = quartic_p5_linear_solution(l) else {
            continue;
        };
        let q = quartic_p5_invariants(l, 1, big_d, a);
        if q.genus >= 0 {
            cases.push((
                TransformationProfile::new(5, 4, 1, a, big_d, l, q.genus),
                q.multidegree,
            ));
        }
    }
    let record = StageRecord {
        name: "quartic-p5-linear".into(),
        input: format!("degrees 1..={max_degree}"),
        input_size: max_degree as usize,
        solutions: cases
            .iter()
            .map(|(p, md)| StageSolution {
                tuple: vec![p.degree, p.genus, p.image_degree, p.codim],
                multidegree: Some(md.clone()),
            })
            .collect(),
    };
    expect_stage(&record, EXPECTED_P5_LINEAR)?;
    out.stages.push(record);

    for (p, md) in cases {
        let candidate = vec![p.degree, p.genus, p.image_degree, p.codim];
        let r_prime = infer_inverse_base_dim(&md)?;
        let reason = if !ci_compatible(p.codim, dims.c, p.image_degree) {
            Some(format!(
                "no complete intersection of codimension {} and coindex {} has degree {}",
                p.codim, dims.c, p.image_degree
            ))
        } else if r_prime != dims.r_prime {
            Some(format!(
                "inverse base locus has dimension {r_prime}, not {}",
                dims.r_prime
            ))
        } else {
            md.first_hodge_violation()
                .map(|i| format!("multidegree {md} violates log-concavity at position {i}"))
        };
        match reason {
            Some(reason) => out.rejections.push(Rejection {
                stage: "quartic-p5-linear".into(),
                candidate,
                reason,
                basis: RejectionBasis::Computed,
                multidegree: Some(md),
            }),
            None => {
                let reference = reference_row(5, &p, 3, "quartic-p5-linear")?;
                out.rows.push(ClassificationRow::new(
                    5,
                    reference.line,
                    p,
                    3,
                    reference.structure,
                    RowSource::Derived,
                ));
            }
        }
    }
    Ok(out)
}
