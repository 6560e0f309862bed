//! Closed-form invariants of special birational maps.

mod cubic;
mod dimension;
mod hilbert;
mod profile;
mod quartic;
mod segre;

pub use cubic::{
    cubic_invariants, cubic_multidegree, delta_invariant, pluridegrees, CanonicalDegrees,
    Pluridegrees, SurfaceSectionInvariants, ThreefoldDegrees,
};
pub use dimension::{change_basis_matrix, determinant, dimension_solve, inverse_degrees};
pub use hilbert::{
    hilbert_conditions, hilbert_polynomial_solve, HilbertConditions, HilbertPolynomial,
};
pub use profile::{DimensionPair, MultiDegree, TransformationProfile};
pub use quartic::{
    quartic_p4_invariants, quartic_p5_invariants, quartic_p5_linear_solution, QuarticP4Invariants,
    QuarticP5Invariants,
};
pub use segre::segre_multidegree;
