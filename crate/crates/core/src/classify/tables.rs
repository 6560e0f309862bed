//! Classification tables compiled into the binary.

use serde::Deserialize;

use super::row::{ClassificationRow, RowSource};
use crate::enumerate::PreliminaryRow;
use crate::invariants::TransformationProfile;

const TABLE1: &str = include_str!("../../data/table1.csv");
const TABLE2: &str = include_str!("../../data/table2.csv");
const TABLE3: &str = include_str!("../../data/table3.csv");
const TABLE4: &str = include_str!("../../data/table4.csv");
const TABLE5: &str = include_str!("../../data/table5.csv");
const PRELIMINARY: &str = include_str!("../../data/preliminary.csv");

/// Tables of classification rows; table 2 holds fourfold data instead.
pub const ROW_TABLES: [u8; 4] = [1, 3, 4, 5];

#[derive(Deserialize)]
struct RowRecord {
    line: String,
    r: i64,
    n: i64,
    d1: i64,
    d2: i64,
    a: i64,
    lambda: i64,
    g: i64,
    #[serde(rename = "Delta")]
    image_degree: i64,
    source: String,
    structure: String,
}

fn records<T: for<'de> Deserialize<'de>>(data: &str) -> Vec<T> {
    csv::Reader::from_reader(data.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .expect("embedded table is well formed")
}

/// Rows of table 1, 3, 4 or 5; `None` for any other id.
pub fn reference_table(table: u8) -> Option<Vec<ClassificationRow>> {
    let data = match table {
        1 => TABLE1,
        3 => TABLE3,
        4 => TABLE4,
        5 => TABLE5,
        _ => return None,
    };
    Some(
        records::<RowRecord>(data)
            .into_iter()
            .map(|rec| {
                let profile = TransformationProfile::new(
                    rec.n,
                    rec.d1,
                    rec.d2,
                    rec.a,
                    rec.image_degree,
                    rec.lambda,
                    rec.g,
                );
                let source = if rec.source == "derived" {
                    RowSource::Derived
                } else {
                    RowSource::Reference
                };
                ClassificationRow::new(table, rec.line, profile, rec.r, rec.structure, source)
            })
            .collect(),
    )
}

/// A row of the fourfold table: a cubic profile, its printed `δ`, and
/// cohomology dimensions carried verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, serde::Serialize)]
pub struct FourfoldEntry {
    pub row: String,
    pub lambda: i64,
    pub g: i64,
    #[serde(rename = "Delta")]
    pub image_degree: i64,
    pub d: i64,
    pub a: i64,
    pub delta: i64,
    pub h0_ideal_cubics: i64,
    pub h0_normal_p5: i64,
    pub h0_normal_fourfold: i64,
    pub source: String,
}

impl FourfoldEntry {
    pub fn profile(&self) -> TransformationProfile {
        TransformationProfile::cubic(self.lambda, self.g, self.image_degree, self.d, self.a)
    }

    /// Whether the row is one of the transformations of table 1.
    pub fn is_table1(&self) -> bool {
        self.source == "table1"
    }
}

pub fn fourfold_table() -> Vec<FourfoldEntry> {
    records(TABLE2)
}

pub fn preliminary_table() -> Vec<PreliminaryRow> {
    #[derive(Deserialize)]
    struct Rec {
        n: i64,
        r: i64,
        r_prime: i64,
        d1: i64,
        d2: i64,
        c: i64,
    }
    records::<Rec>(PRELIMINARY)
        .into_iter()
        .map(|r| PreliminaryRow {
            n: r.n,
            r: r.r,
            r_prime: r.r_prime,
            d1: r.d1,
            d2: r.d2,
            c: r.c,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let sizes: Vec<usize> = ROW_TABLES
            .iter()
            .map(|&t| reference_table(t).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![9, 15, 4, 9]);
        assert!(reference_table(2).is_none());
        assert_eq!(fourfold_table().len(), 11);
        assert_eq!(preliminary_table().len(), 26);
    }

    #[test]
    fn quoted_labels_survive() {
        let t5 = reference_table(5).unwrap();
        assert_eq!(
            t5[4].structure,
            "Surface linked to a cubic scroll in the c.i. of type (3,4)"
        );
        assert_eq!(t5[8].structure, "");
    }

    #[test]
    fn table1_derived_flags() {
        let t1 = reference_table(1).unwrap();
        let derived: Vec<&str> = t1
            .iter()
            .filter(|r| r.source == RowSource::Derived)
            .map(|r| r.line.as_str())
            .collect();
        assert_eq!(derived, vec!["IV", "V", "VI", "VII", "VIII", "IX"]);
    }
}
