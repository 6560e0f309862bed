//! Cubic transformations of `P^6` with a three-dimensional base locus.

use super::row::{
    ClassificationOutcome, ClassificationRow, Family, ReferenceDiscrepancy, Rejection,
    RejectionBasis, RowSource, StageRecord, StageSolution,
};
use super::systems::{self, reduced_degrees, reduced_pluridegrees, solve_case_system, CaseSystem};
use super::tables::reference_table;
use crate::enumerate::{
    ci_restriction, difference, enumerate_base_set, enumerate_base_set_parallel, enumerate_with_nu,
    BaseSets, CandidateSet,
};
use crate::error::{Error, Result};
use crate::invariants::TransformationProfile;

/// Base-surface invariants `(χ(O_Y), K_Y², c1(E)², c2(E))` of the scroll over a
/// surface with `(λ, g, Δ, d, a) = (12, 11, 8, 2, 3)`, taken from the
/// classification of scrolls in `P^6`.
pub const SCROLL_12_11_BASE: (i64, i64, i64, i64) = (4, 18, 29, 17);

/// `d2² - d3·d1` for `(18, 28, 0, 3, 3, 1)` as printed in the source.
pub const PRINTED_SECOND_GAP: i64 = 1521;

const EXPECTED_EMPTY: &[&[i64]] = &[];
const EXPECTED_SCROLL_OVER_SURFACE: &[&[i64]] = &[&[10, 6, 8, 2, 3], &[12, 11, 8, 2, 3]];
const EXPECTED_REDUCTION: &[&[i64]] = &[&[14, 15, 0, 1, 5, 0], &[18, 28, 0, 3, 3, 1]];
const EXPECTED_MUKAI: &[&[i64]] = &[&[11, 8, 3, 4, 3, 2]];
const EXPECTED_DEL_PEZZO_FIBRATION: &[&[i64]] = &[&[12, 10, 0, 3, 3, 1], &[12, 10, 1, 2, 4, 1]];
const EXPECTED_CONIC_BUNDLE: &[&[i64]] = &[&[13, 12, 0, 1, 5, 0]];

/// The candidate sets of the cubic analysis.
#[derive(Debug, Clone)]
pub struct CubicSets {
    pub base: BaseSets,
    pub ci: CandidateSet,
    pub scroll_over_surface: CandidateSet,
    pub gamma6: CandidateSet,
}

impl CubicSets {
    pub fn compute(jobs: usize) -> Self {
        let base = if jobs > 1 {
            enumerate_base_set_parallel(jobs)
        } else {
            enumerate_base_set()
        };
        let ci = ci_restriction(&base.quadratic_or_higher);
        let scroll_over_surface = solve_case_system(&systems::scroll_over_surface(), &ci);
        let gamma6 = enumerate_with_nu(&difference("gamma5_ci_reduced", &ci, &scroll_over_surface));
        CubicSets {
            base,
            ci,
            scroll_over_surface,
            gamma6,
        }
    }
}

fn stage(name: &str, input: &CandidateSet, found: &CandidateSet) -> StageRecord {
    StageRecord {
        name: name.to_string(),
        input: input.name().to_string(),
        input_size: input.len(),
        solutions: found
            .iter()
            .map(|p| StageSolution {
                tuple: found.columns().record(p),
                multidegree: None,
            })
            .collect(),
    }
}

pub(crate) fn expect_stage(record: &StageRecord, expected: &[&[i64]]) -> Result<()> {
    let found = record.tuples();
    let mut want: Vec<Vec<i64>> = expected.iter().map(|t| t.to_vec()).collect();
    want.sort();
    let mut got = found.clone();
    got.sort();
    if got != want {
        return Err(Error::ClassificationMismatch {
            stage: record.name.clone(),
            expected: format!("{want:?}"),
            found: format!("{got:?}"),
        });
    }
    Ok(())
}

fn run(
    out: &mut ClassificationOutcome,
    system: &CaseSystem,
    input: &CandidateSet,
    expected: &[&[i64]],
) -> Result<CandidateSet> {
    let found = solve_case_system(system, input);
    let record = stage(system.name, input, &found);
    expect_stage(&record, expected)?;
    out.stages.push(record);
    Ok(found)
}

fn number_word(k: i64) -> String {
    const WORDS: [&str; 10] = [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    ];
    WORDS
        .get(k as usize)
        .map_or_else(|| k.to_string(), |w| w.to_string())
}

fn degree_word(k: i64) -> String {
    match k {
        5 => "quintic".into(),
        6 => "sextic".into(),
        _ => format!("degree {k}"),
    }
}

fn with_blow_up(nu: i64, of: String) -> String {
    match nu {
        0 => {
            let bare = of.strip_prefix("a ").unwrap_or(&of);
            let mut c = bare.chars();
            c.next()
                .map(|f| f.to_uppercase().collect::<String>() + c.as_str())
                .unwrap_or_default()
        }
        1 => format!("Blow up at one point of {of}"),
        k => format!("Blow up at {} points of {of}", number_word(k)),
    }
}

fn table1_line(p: &TransformationProfile) -> Result<String> {
    reference_table(1)
        .expect("table 1 is embedded")
        .into_iter()
        .find(|r| r.profile.five_tuple() == p.five_tuple())
        .map(|r| r.line)
        .ok_or_else(|| Error::ClassificationMismatch {
            stage: "table-1-lookup".into(),
            expected: "a line of table 1".into(),
            found: format!("{:?}", p.five_tuple()),
        })
}

fn derived_row(p: TransformationProfile, structure: String) -> Result<ClassificationRow> {
    Ok(ClassificationRow::new(
        1,
        table1_line(&p)?,
        p,
        3,
        structure,
        RowSource::Derived,
    ))
}

pub fn classify_cubic() -> Result<ClassificationOutcome> {
    classify_cubic_with(&CubicSets::compute(1))
}

pub fn classify_cubic_with(sets: &CubicSets) -> Result<ClassificationOutcome> {
    let mut out = ClassificationOutcome::new(Family::Cubic);
    let ci = &sets.ci;

    run(&mut out, &systems::scroll_over_curve(), ci, EXPECTED_EMPTY)?;
    run(&mut out, &systems::del_pezzo(), ci, EXPECTED_EMPTY)?;
    run(&mut out, &systems::quadric_fibration(), ci, EXPECTED_EMPTY)?;
    let scrolls = run(
        &mut out,
        &systems::scroll_over_surface(),
        ci,
        EXPECTED_SCROLL_OVER_SURFACE,
    )?;
    let mut rows = Vec::new();
    for p in scrolls.iter() {
        if p.five_tuple() == (12, 11, 8, 2, 3) {
            let (_, _, c1_sq, _) = SCROLL_12_11_BASE;
            out.rejections.push(Rejection {
                stage: "scroll-over-surface".into(),
                candidate: ci.columns().record(p),
                reason: format!(
                    "base surface bundle has c1(E)^2 = {c1_sq} > 2g - 2 = {}",
                    2 * p.genus - 2
                ),
                basis: RejectionBasis::Reference,
                multidegree: None,
            });
        } else {
            rows.push(derived_row(
                *p,
                "Scroll over P2 with four double points blown up".into(),
            )?);
        }
    }

    let gamma6 = &sets.gamma6;
    let survivors = run(&mut out, &systems::reduction(), gamma6, EXPECTED_REDUCTION)?;
    for p in survivors.iter() {
        let t = reduced_degrees(p);
        let pl = reduced_pluridegrees(p);
        if t.kh2 == 0 && t.k2h == 0 && t.k3 == 0 {
            rows.push(derived_row(*p, "Pfaffian threefold".into())?);
        } else if pl.first_gap() == 0 && pl.second_gap() != 0 {
            out.rejections.push(Rejection {
                stage: "reduction".into(),
                candidate: gamma6.columns().record(p),
                reason: format!(
                    "d1^2 - d2 d0 = 0 forces d2^2 - d3 d1 = 0 by the Hodge index theorem, but it is {}",
                    pl.second_gap()
                ),
                basis: RejectionBasis::Computed,
                multidegree: None,
            });
            if pl.second_gap() != PRINTED_SECOND_GAP {
                out.discrepancies.push(ReferenceDiscrepancy {
                    quantity: "d2^2 - d3 d1".into(),
                    candidate: gamma6.columns().record(p),
                    printed: PRINTED_SECOND_GAP,
                    computed: pl.second_gap(),
                });
            }
        } else {
            return Err(Error::ClassificationMismatch {
                stage: "reduction".into(),
                expected: "trivial canonical class or a Hodge index violation".into(),
                found: format!("{:?}", p.six_tuple()),
            });
        }
    }

    run(&mut out, &systems::veronese(), gamma6, EXPECTED_EMPTY)?;
    for p in run(&mut out, &systems::mukai(), gamma6, EXPECTED_MUKAI)?.iter() {
        let nu = p.nu.unwrap_or(0);
        let target = match p.degree + nu {
            14 => "G(1,5)∩P9".to_string(),
            k => format!("a Mukai threefold of degree {k}"),
        };
        rows.push(derived_row(*p, with_blow_up(nu, target))?);
    }
    for p in run(
        &mut out,
        &systems::del_pezzo_fibration(),
        gamma6,
        EXPECTED_DEL_PEZZO_FIBRATION,
    )?
    .iter()
    {
        let fibre = degree_word(reduced_pluridegrees(p).d1);
        rows.push(derived_row(
            *p,
            with_blow_up(
                p.nu.unwrap_or(0),
                format!("a {fibre} del Pezzo fibration over P1"),
            ),
        )?);
    }
    for p in run(
        &mut out,
        &systems::conic_bundle(),
        gamma6,
        EXPECTED_CONIC_BUNDLE,
    )?
    .iter()
    {
        rows.push(derived_row(
            *p,
            with_blow_up(p.nu.unwrap_or(0), "a conic bundle over P2".into()),
        )?);
    }

    let reference = reference_table(1).expect("table 1 is embedded");
    let order = |line: &str| {
        reference
            .iter()
            .position(|r| r.line == line)
            .unwrap_or(usize::MAX)
    };
    rows.extend(
        reference
            .iter()
            .filter(|r| r.source == RowSource::Reference)
            .cloned(),
    );
    rows.sort_by_key(|r| order(&r.line));
    out.rows = rows;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(
            with_blow_up(0, "a sextic del Pezzo fibration over P1".into()),
            "Sextic del Pezzo fibration over P1"
        );
        assert_eq!(
            with_blow_up(3, "G(1,5)∩P9".into()),
            "Blow up at three points of G(1,5)∩P9"
        );
        assert_eq!(degree_word(4), "degree 4");
    }

    #[test]
    fn mismatch_names_stage() {
        let rec = StageRecord {
            name: "mukai".into(),
            input: "gamma6".into(),
            input_size: 0,
            solutions: vec![],
        };
        let err = expect_stage(&rec, EXPECTED_MUKAI).unwrap_err();
        assert!(matches!(err, Error::ClassificationMismatch { ref stage, .. } if stage == "mukai"));
    }
}
