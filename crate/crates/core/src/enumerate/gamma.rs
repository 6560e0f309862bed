//! The candidate sets of the cubic analysis.

use rayon::prelude::*;

use super::bounds::{
    castelnuovo_bound_p4, codim_range, hodge_check, le_barz_max_nu, livorni_sommese_check,
};
use super::candidates::{CandidateSet, Columns};
use super::ci::ci_compatible;
use crate::arith::floor_i64;
use crate::invariants::TransformationProfile;

pub const DEGREE_RANGE: std::ops::RangeInclusive<i64> = 3..=27;

pub const BASE_PROVENANCE: &[&str] = &[
    "castelnuovo-p4",
    "image-pairing",
    "hodge",
    "livorni-sommese",
];

/// All 5-tuples `(λ, g, Δ, d, a)` with base-locus degree `degree` passing the
/// Castelnuovo, Hodge and adjunction inequalities.
///
/// `Δ` is bounded by the second Hodge inequality `Δd <= 237 + 6g - 21λ`, and
/// `a` by the adjunction inequalities, which are linear in `a`.
pub fn degree_slice(degree: i64) -> Vec<TransformationProfile> {
    let l = degree;
    let mut out = Vec::new();
    for g in 0..=floor_i64(&castelnuovo_bound_p4(l)) {
        for d in 1..=5 {
            let eps = i64::from(d == 1);
            let max_dd = 237 + 6 * g - 21 * l;
            if max_dd < d {
                continue;
            }
            let image_degrees = match d {
                5 => 1..=1,
                4 => 2..=2,
                _ => 3..=max_dd / d,
            };
            for big_d in image_degrees {
                if !hodge_check(l, g, big_d, d) {
                    continue;
                }
                let codims = match big_d {
                    1 => 0..=0,
                    2 => 1..=1,
                    _ => {
                        let r = codim_range(l, g, big_d, d, eps);
                        (*r.start()).max(1)..=*r.end()
                    }
                };
                for a in codims {
                    if livorni_sommese_check(l, g, big_d, d, a, eps) {
                        out.push(TransformationProfile::cubic(l, g, big_d, d, a));
                    }
                }
            }
        }
    }
    out
}

/// The base set split as `(full, d ≠ 1, d = 1)`; the last is laid out as 4-tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSets {
    pub full: CandidateSet,
    pub quadratic_or_higher: CandidateSet,
    pub linear_inverse: CandidateSet,
}

fn split(all: Vec<TransformationProfile>) -> BaseSets {
    let provenance: Vec<String> = BASE_PROVENANCE.iter().map(|s| s.to_string()).collect();
    let (lin, rest): (Vec<_>, Vec<_>) = all.iter().partition(|p| p.inverse_degree == 1);
    let with = |step: &str| {
        let mut p = provenance.clone();
        p.push(step.to_string());
        p
    };
    BaseSets {
        full: CandidateSet::new("gamma5", Columns::Five, provenance.clone(), all),
        quadratic_or_higher: CandidateSet::new(
            "gamma5_nonlinear",
            Columns::Five,
            with("inverse-degree-ge-2"),
            rest,
        ),
        linear_inverse: CandidateSet::new(
            "gamma4_linear",
            Columns::Four,
            with("inverse-degree-1"),
            lin,
        ),
    }
}

pub fn enumerate_base_set() -> BaseSets {
    split(DEGREE_RANGE.flat_map(degree_slice).collect())
}

/// Same as [`enumerate_base_set`], with the degree slices spread over `jobs` threads.
pub fn enumerate_base_set_parallel(jobs: usize) -> BaseSets {
    let run = || {
        DEGREE_RANGE
            .into_par_iter()
            .flat_map_iter(degree_slice)
            .collect::<Vec<_>>()
    };
    let all = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    split(all)
}

/// Tuples whose image can be a factorial complete intersection of coindex `5 - d`.
pub fn ci_restriction(base: &CandidateSet) -> CandidateSet {
    base.filter("gamma5_ci", "complete-intersection", |p| {
        p.inverse_degree <= 5 && ci_compatible(p.codim, 5 - p.inverse_degree, p.image_degree)
    })
}

/// Extends each 5-tuple by every `ν` allowed by the 4-secant bound.
pub fn enumerate_with_nu(ci: &CandidateSet) -> CandidateSet {
    let mut provenance = ci.provenance().to_vec();
    provenance.push("le-barz".into());
    let tuples = ci
        .iter()
        .flat_map(|p| {
            let (l, g, big_d, d, a) = p.five_tuple();
            (0..=le_barz_max_nu(l, g, big_d, d, a)).map(move |nu| p.with_nu(nu))
        })
        .collect();
    CandidateSet::new("gamma6", Columns::Six, provenance, tuples)
}

/// Tuples of `base` not in `minus`.
pub fn difference(name: &str, base: &CandidateSet, minus: &CandidateSet) -> CandidateSet {
    base.filter(name, &format!("minus-{}", minus.name()), |p| {
        !minus.contains(p)
    })
}

/// Tuples whose `(Δ, d, a)` lies in a caller-supplied allowlist.
pub fn restrict_to_allowlist(
    name: &str,
    base: &CandidateSet,
    allow: &[(i64, i64, i64)],
) -> CandidateSet {
    base.filter(name, "allowlist", |p| {
        allow.contains(&(p.image_degree, p.inverse_degree, p.codim))
    })
}
