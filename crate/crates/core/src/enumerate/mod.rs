//! Exhaustive enumeration of candidate invariant tuples.

mod bounds;
mod cache;
mod candidates;
mod ci;
mod gamma;
mod preliminary;

pub use bounds::{
    castelnuovo_bound_p4, hodge_check, le_barz_bound, le_barz_max_nu, livorni_sommese_check,
    reduction_check, reduction_quantities,
};
pub use cache::{CandidateCache, CACHE_ENV};
pub use candidates::{CandidateSet, Columns, CANDIDATE_SCHEMA};
pub use ci::{ci_compatible, ci_degree_options, ci_types, CIType};
pub use gamma::{
    ci_restriction, degree_slice, difference, enumerate_base_set, enumerate_base_set_parallel,
    enumerate_with_nu, restrict_to_allowlist, BaseSets, BASE_PROVENANCE, DEGREE_RANGE,
};
pub use preliminary::{preliminary_classification, PreliminaryRow};
