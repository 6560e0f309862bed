use std::fmt;

use serde::{Deserialize, Serialize};

use crate::invariants::{DimensionPair, MultiDegree, TransformationProfile};

/// Whether a row is produced by a pipeline here or carried as reference data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowSource {
    Derived,
    Reference,
}

/// A line of one of the classification tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub table: u8,
    pub line: String,
    pub profile: TransformationProfile,
    pub structure: String,
    pub dims: DimensionPair,
    pub delta: Option<i64>,
    pub source: RowSource,
}

impl ClassificationRow {
    /// Builds a row for a base locus of dimension `r`, deriving `r'` and `c`
    /// from the dimension relations.
    pub fn new(
        table: u8,
        line: impl Into<String>,
        profile: TransformationProfile,
        r: i64,
        structure: impl Into<String>,
        source: RowSource,
    ) -> Self {
        let (n, d1, d2) = (
            profile.ambient_dim,
            profile.forward_degree,
            profile.inverse_degree,
        );
        let r_prime = (n - r - 1) * d1 - 2;
        let c = r + 2 - d2 * (n - r_prime - 1);
        let delta = (profile.is_cubic_sextic() && r == 3)
            .then(|| crate::invariants::delta_invariant(&profile));
        ClassificationRow {
            table,
            line: line.into(),
            profile,
            structure: structure.into(),
            dims: DimensionPair { r, r_prime, c },
            delta,
            source,
        }
    }

    pub fn id(&self) -> String {
        format!("table {} line {}", self.table, self.line)
    }

    /// `(r, n, d1, d2, a, λ, g, Δ)`, the fields compared against reference tables.
    pub fn key(&self) -> [i64; 8] {
        let p = &self.profile;
        [
            self.dims.r,
            p.ambient_dim,
            p.forward_degree,
            p.inverse_degree,
            p.codim,
            p.degree,
            p.genus,
            p.image_degree,
        ]
    }
}

/// Whether a rejection follows from a computation here or from a stored argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectionBasis {
    Computed,
    Reference,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub stage: String,
    pub candidate: Vec<i64>,
    pub reason: String,
    pub basis: RejectionBasis,
    pub multidegree: Option<MultiDegree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSolution {
    pub tuple: Vec<i64>,
    pub multidegree: Option<MultiDegree>,
}

/// The solutions found at one stage of a pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub name: String,
    pub input: String,
    pub input_size: usize,
    pub solutions: Vec<StageSolution>,
}

impl StageRecord {
    pub fn tuples(&self) -> Vec<Vec<i64>> {
        self.solutions.iter().map(|s| s.tuple.clone()).collect()
    }
}

/// A value computed here that differs from the one printed in the source table or text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceDiscrepancy {
    pub quantity: String,
    pub candidate: Vec<i64>,
    pub printed: i64,
    pub computed: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cubic,
    CuboLinear,
    QuarticP4,
    QuarticP5,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Cubic,
        Family::CuboLinear,
        Family::QuarticP4,
        Family::QuarticP5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cubic => "cubic",
            Family::CuboLinear => "cubo-linear",
            Family::QuarticP4 => "quartic-p4",
            Family::QuarticP5 => "quartic-p5",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationOutcome {
    pub family: Family,
    pub rows: Vec<ClassificationRow>,
    pub stages: Vec<StageRecord>,
    pub rejections: Vec<Rejection>,
    pub discrepancies: Vec<ReferenceDiscrepancy>,
}

impl ClassificationOutcome {
    pub(crate) fn new(family: Family) -> Self {
        ClassificationOutcome {
            family,
            rows: Vec::new(),
            stages: Vec::new(),
            rejections: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn stage(&self, name: &str) -> Option<&StageRecord> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn derived_rows(&self) -> impl Iterator<Item = &ClassificationRow> {
        self.rows.iter().filter(|r| r.source == RowSource::Derived)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_dims_and_delta() {
        let row = ClassificationRow::new(
            1,
            "IV",
            TransformationProfile::cubic(14, 15, 1, 5, 0),
            3,
            "Pfaffian threefold",
            RowSource::Derived,
        );
        assert_eq!((row.dims.r_prime, row.dims.c), (4, 0));
        assert_eq!(row.delta, Some(14));
        assert_eq!(row.key(), [3, 6, 3, 5, 0, 14, 15, 1]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("quintic".parse::<Family>().is_err());
    }
}
