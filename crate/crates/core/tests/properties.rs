use proptest::prelude::*;
use proptest::sample::subsequence;

use birclass::classify::infer_inverse_base_dim;
use birclass::enumerate::{
    ci_restriction, enumerate_base_set, enumerate_base_set_parallel, CandidateSet, Columns,
};
use birclass::format::Format;
use birclass::invariants::{
    change_basis_matrix, cubic_invariants, cubic_multidegree, delta_invariant, determinant,
    segre_multidegree, MultiDegree, TransformationProfile,
};

fn cubic_tuple() -> impl Strategy<Value = TransformationProfile> {
    (3i64..60, 0i64..200, 1i64..200, 1i64..8, 0i64..30)
        .prop_map(|(l, g, big_d, d, a)| TransformationProfile::cubic(l, g, big_d, d, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn noether_identity(p in cubic_tuple()) {
        let (_, surface) = cubic_invariants(&p);
        prop_assert!(surface.noether_holds());
    }

    #[test]
    fn change_of_basis_is_unimodular(d1 in 1i64..10_000, d2 in 1i64..10_000) {
        prop_assert_eq!(determinant(&change_basis_matrix(d1, d2)), -1);
    }

    #[test]
    fn segre_path_agrees_with_closed_form(p in cubic_tuple()) {
        let (cd, _) = cubic_invariants(&p);
        prop_assert_eq!(segre_multidegree(6, 3, 3, p.degree, &cd.segre_sequence()), cubic_multidegree(&p));
    }

    #[test]
    fn whitney_product_holds(p in cubic_tuple()) {
        let (cd, _) = cubic_invariants(&p);
        prop_assert!(cd.whitney_holds());
    }

    #[test]
    fn lengthening_trailing_run_lowers_inverse_dim(
        prefix in prop::collection::vec(1i64..50, 1..6),
        last in 50i64..100,
        run in 2usize..5,
        k in 0usize..6,
    ) {
        let k = k.min(prefix.len() - 1);
        let mut md = prefix.clone();
        md.extend(std::iter::repeat_n(last, run));
        let base = infer_inverse_base_dim(&MultiDegree(md.clone())).unwrap();
        let start = prefix.len() - k;
        md[start..prefix.len()].iter_mut().for_each(|v| *v = last);
        prop_assert_eq!(infer_inverse_base_dim(&MultiDegree(md)).unwrap(), base - k as i64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn parallel_enumeration_is_deterministic(jobs in 2usize..9) {
        let serial = enumerate_base_set();
        let parallel = enumerate_base_set_parallel(jobs);
        prop_assert_eq!(serial.full.tuples(), parallel.full.tuples());
        prop_assert_eq!(serial.linear_inverse.tuples(), parallel.linear_inverse.tuples());
    }
}

fn candidate_sets() -> impl Strategy<Value = CandidateSet> {
    let base = enumerate_base_set();
    let five: Vec<TransformationProfile> = base.full.tuples().to_vec();
    let four: Vec<TransformationProfile> = base.linear_inverse.tuples().to_vec();
    let six: Vec<TransformationProfile> = five
        .iter()
        .filter(|p| p.inverse_degree > 1)
        .flat_map(|p| [p.with_nu(0), p.with_nu(7)])
        .collect();
    prop_oneof![
        subsequence(five, 0..40).prop_map(|t| (Columns::Five, t)),
        subsequence(four, 0..40).prop_map(|t| (Columns::Four, t)),
        subsequence(six, 0..40).prop_map(|t| (Columns::Six, t)),
    ]
    .prop_flat_map(|(columns, tuples)| {
        (
            prop::collection::vec("[a-z0-9-]{1,8}", 0..4),
            "[a-z][a-z0-9_]{0,10}",
        )
            .prop_map(move |(prov, name)| CandidateSet::new(name, columns, prov, tuples.clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn candidate_sets_round_trip(set in candidate_sets()) {
        for format in [Format::Text, Format::Json, Format::Csv, Format::Markdown] {
            let text = set.serialize(format).unwrap();
            prop_assert_eq!(&CandidateSet::parse(&text, format).unwrap(), &set, "{}", format);
            prop_assert_eq!(CandidateSet::parse(&text, format).unwrap().serialize(format).unwrap(), text);
        }
    }
}

#[test]
fn segre_path_over_ci_set() {
    let ci = ci_restriction(&enumerate_base_set().quadratic_or_higher);
    assert_eq!(ci.len(), 174);
    for p in ci.iter() {
        let (cd, _) = cubic_invariants(p);
        assert_eq!(
            segre_multidegree(6, 3, 3, p.degree, &cd.segre_sequence()),
            cubic_multidegree(p),
            "{:?}",
            p.five_tuple()
        );
    }
}

#[test]
fn delta_residue_over_ci_set() {
    let ci = ci_restriction(&enumerate_base_set().quadratic_or_higher);
    for p in ci.iter() {
        let r = delta_invariant(p).rem_euclid(6);
        assert!(
            r == 0 || r == 2,
            "{:?} gives {}",
            p.five_tuple(),
            delta_invariant(p)
        );
    }
}
