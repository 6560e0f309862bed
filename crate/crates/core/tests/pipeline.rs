use std::collections::BTreeSet;

use birclass::classify::{
    classify, scroll_over_surface, solve_case_system, validate_row, CubicSets, Family,
};
use birclass::enumerate::{
    difference, reduction_check, reduction_quantities, restrict_to_allowlist, CandidateCache,
    Columns,
};
use birclass::invariants::{cubic_invariants, TransformationProfile};
use birclass::report::{diff_against_reference, set_provenance, standard_set, ReportDocument};

fn sets() -> CubicSets {
    CubicSets::compute(1)
}

#[test]
fn every_emitted_row_validates() {
    let sets = sets();
    for family in Family::ALL {
        let outcome = classify(family, &sets).unwrap();
        for row in &outcome.rows {
            let report = validate_row(row);
            assert!(
                report.passed(),
                "{family}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn every_family_matches_its_reference_rows() {
    let sets = sets();
    for family in Family::ALL {
        let outcome = classify(family, &sets).unwrap();
        assert_eq!(diff_against_reference(&outcome), vec![], "{family}");
    }
}

#[test]
fn reduction_passes_exactly_two_tuples() {
    let sets = sets();
    let passing: Vec<_> = sets
        .gamma6
        .iter()
        .filter(|p| reduction_check(p))
        .map(|p| p.six_tuple())
        .collect();
    assert_eq!(passing, vec![(14, 15, 0, 1, 5, 0), (18, 28, 0, 3, 3, 1)]);
}

#[test]
fn pfaffian_reduction_data() {
    let p = TransformationProfile::cubic_with_nu(14, 15, 0, 1, 5, 0);
    assert_eq!(reduction_quantities(&p), [13, 13, 13, 0]);
    let (cd, _) = cubic_invariants(&p);
    assert_eq!([cd.kh2, cd.k2h, cd.k3], [0, 0, 0]);
}

/// Coindex-at-most-3 Fano data for the images outside the complete-intersection set.
/// Supplied here by hand; the library never derives it.
const FANO_ALLOWLIST: [(i64, i64, i64); 5] =
    [(5, 3, 3), (10, 2, 4), (12, 2, 5), (14, 2, 6), (16, 2, 7)];

#[test]
fn fano_allowlist_gives_88_tuples() {
    let sets = sets();
    let outside = difference("outside_ci", &sets.base.quadratic_or_higher, &sets.ci);
    assert_eq!(outside.len(), 2480 - 174);
    let conditional = restrict_to_allowlist("gamma5_fano", &outside, &FANO_ALLOWLIST);
    assert_eq!(conditional.len(), 88);
    let scrolls: Vec<_> = solve_case_system(&scroll_over_surface(), &conditional)
        .iter()
        .map(|p| p.five_tuple())
        .collect();
    assert!(scrolls.contains(&(10, 6, 5, 3, 3)));
}

#[test]
fn cache_serves_identical_sets() {
    let dir = tempfile::tempdir().unwrap();
    let cache = CandidateCache::new(dir.path());
    let fresh = standard_set("gamma5_ci", 1, None).unwrap().unwrap();
    let stored = standard_set("gamma5_ci", 1, Some(&cache)).unwrap().unwrap();
    let (columns, provenance) = set_provenance("gamma5_ci").unwrap();
    assert_eq!(columns, Columns::Five);
    assert_eq!(
        cache
            .load("gamma5_ci", columns, &provenance)
            .unwrap()
            .as_ref(),
        Some(&fresh)
    );
    let served = standard_set("gamma5_ci", 1, Some(&cache)).unwrap().unwrap();
    assert_eq!(stored, fresh);
    assert_eq!(served, fresh);
}

#[test]
fn full_report_round_trips_through_json() {
    let sets = sets();
    let mut doc = ReportDocument::new(vec!["classify all".into()]);
    for family in Family::ALL {
        doc.classifications.push(classify(family, &sets).unwrap());
    }
    doc.fourfolds = birclass::fourfold::table2_report().unwrap();
    let json = doc.to_json().unwrap();
    assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
    assert_eq!(
        ReportDocument::from_json(&json).unwrap().to_json().unwrap(),
        json
    );
}

#[test]
fn cubic_rows_cover_the_divisor_values() {
    let sets = sets();
    let outcome = classify(Family::Cubic, &sets).unwrap();
    let deltas: BTreeSet<i64> = outcome.rows.iter().filter_map(|r| r.delta).collect();
    assert_eq!(deltas, [12, 14, 18].into_iter().collect());
}
