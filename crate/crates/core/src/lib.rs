//! Exact enumeration and classification of special birational maps of
//! projective space with low-dimensional base locus.

pub mod arith;
pub mod error;
pub mod invariants;

pub use error::{Error, Result};
pub mod classify;
pub mod enumerate;
pub mod format;
pub mod fourfold;
pub mod report;
