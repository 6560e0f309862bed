//! Staged adjunction-theoretic case analysis and table validation.

mod cubic;
mod cubo_linear;
mod quartic;
mod row;
mod systems;
mod tables;
mod validate;

pub use cubic::{
    classify_cubic, classify_cubic_with, CubicSets, PRINTED_SECOND_GAP, SCROLL_12_11_BASE,
};
pub use cubo_linear::{classify_cubo_linear, classify_cubo_linear_with, infer_inverse_base_dim};
pub use quartic::{classify_quartic_p4, classify_quartic_p5, QUARTIC_DEGREE_SCAN};
pub use row::{
    ClassificationOutcome, ClassificationRow, Family, ReferenceDiscrepancy, Rejection,
    RejectionBasis, RowSource, StageRecord, StageSolution,
};
pub use systems::{
    conic_bundle, del_pezzo, del_pezzo_fibration, mukai, quadric_fibration, reduced_degrees,
    reduced_pluridegrees, reduction, scroll_over_curve, scroll_over_surface, solve_case_system,
    veronese, CaseSystem, Quantity,
};
pub use tables::{fourfold_table, preliminary_table, reference_table, FourfoldEntry, ROW_TABLES};
pub use validate::{validate_row, Check, ValidationReport};

use crate::error::Result;

/// Runs the pipeline of one family.
pub fn classify(family: Family, sets: &CubicSets) -> Result<ClassificationOutcome> {
    match family {
        Family::Cubic => classify_cubic_with(sets),
        Family::CuboLinear => classify_cubo_linear_with(&sets.base),
        Family::QuarticP4 => classify_quartic_p4(),
        Family::QuarticP5 => classify_quartic_p5(),
    }
}
