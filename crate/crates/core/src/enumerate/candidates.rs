//! Canonically ordered candidate sets and their file formats.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::Format;
use crate::invariants::TransformationProfile;

pub const CANDIDATE_SCHEMA: &str = "birclass-candidates/v1";

/// Which fields of a cubic profile a record carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Columns {
    /// `lambda g Delta a`, inverse degree 1 implied.
    Four,
    /// `lambda g Delta d a`
    Five,
    /// `lambda g nu Delta d a`
    Six,
}

impl Columns {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            Columns::Four => &["lambda", "g", "Delta", "a"],
            Columns::Five => &["lambda", "g", "Delta", "d", "a"],
            Columns::Six => &["lambda", "g", "nu", "Delta", "d", "a"],
        }
    }

    fn from_names(names: &[&str]) -> Option<Self> {
        [Columns::Four, Columns::Five, Columns::Six]
            .into_iter()
            .find(|c| c.names() == names)
    }

    pub fn record(self, p: &TransformationProfile) -> Vec<i64> {
        let (l, g, nu, big_d, d, a) = p.six_tuple();
        match self {
            Columns::Four => vec![l, g, big_d, a],
            Columns::Five => vec![l, g, big_d, d, a],
            Columns::Six => vec![l, g, nu, big_d, d, a],
        }
    }

    pub fn profile(self, v: &[i64]) -> Option<TransformationProfile> {
        match (self, v) {
            (Columns::Four, &[l, g, big_d, a]) => {
                Some(TransformationProfile::cubic(l, g, big_d, 1, a))
            }
            (Columns::Five, &[l, g, big_d, d, a]) => {
                Some(TransformationProfile::cubic(l, g, big_d, d, a))
            }
            (Columns::Six, &[l, g, nu, big_d, d, a]) => {
                Some(TransformationProfile::cubic_with_nu(l, g, nu, big_d, d, a))
            }
            _ => None,
        }
    }
}

/// A named, sorted, duplicate-free set of cubic profiles with the list of
/// constraints that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    name: String,
    columns: Columns,
    provenance: Vec<String>,
    tuples: Vec<TransformationProfile>,
}

#[derive(Serialize, Deserialize)]
struct JsonRepr {
    schema: String,
    name: String,
    columns: Vec<String>,
    provenance: Vec<String>,
    count: usize,
    tuples: Vec<Vec<i64>>,
}

impl CandidateSet {
    pub fn new(
        name: impl Into<String>,
        columns: Columns,
        provenance: Vec<String>,
        mut tuples: Vec<TransformationProfile>,
    ) -> Self {
        tuples.sort_by_key(TransformationProfile::sort_key);
        tuples.dedup_by_key(|p| p.sort_key());
        CandidateSet {
            name: name.into(),
            columns,
            provenance,
            tuples,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn columns(&self) -> Columns {
        self.columns
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn tuples(&self) -> &[TransformationProfile] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TransformationProfile> {
        self.tuples.iter()
    }

    pub fn contains(&self, p: &TransformationProfile) -> bool {
        self.tuples
            .binary_search_by_key(&p.sort_key(), TransformationProfile::sort_key)
            .is_ok()
    }

    /// The subset satisfying `keep`, with `step` appended to the provenance.
    pub fn filter(
        &self,
        name: impl Into<String>,
        step: &str,
        keep: impl Fn(&TransformationProfile) -> bool,
    ) -> CandidateSet {
        let mut provenance = self.provenance.clone();
        provenance.push(step.to_string());
        CandidateSet {
            name: name.into(),
            columns: self.columns,
            provenance,
            tuples: self.tuples.iter().filter(|p| keep(p)).copied().collect(),
        }
    }

    /// Inclusive `(min, max)` of a field over the set.
    pub fn range_of(&self, field: impl Fn(&TransformationProfile) -> i64) -> Option<(i64, i64)> {
        let min = self.tuples.iter().map(&field).min()?;
        let max = self.tuples.iter().map(&field).max()?;
        Some((min, max))
    }

    fn header_fields(&self) -> String {
        format!(
            "name={} columns={} provenance={}",
            self.name,
            self.columns.names().join(","),
            self.provenance.join(",")
        )
    }

    pub fn serialize(&self, format: Format) -> Result<String> {
        let records = self.tuples.iter().map(|p| self.columns.record(p));
        let mut out = String::new();
        match format {
            Format::Text => {
                writeln!(out, "#{CANDIDATE_SCHEMA} {}", self.header_fields()).unwrap();
                for r in records {
                    writeln!(out, "{}", join(&r, " ")).unwrap();
                }
            }
            Format::Csv => {
                writeln!(out, "#{CANDIDATE_SCHEMA} {}", self.header_fields()).unwrap();
                writeln!(out, "{}", self.columns.names().join(",")).unwrap();
                for r in records {
                    writeln!(out, "{}", join(&r, ",")).unwrap();
                }
            }
            Format::Markdown => {
                writeln!(out, "<!-- {CANDIDATE_SCHEMA} {} -->", self.header_fields()).unwrap();
                writeln!(out, "| {} |", self.columns.names().join(" | ")).unwrap();
                writeln!(out, "|{}", "---|".repeat(self.columns.names().len())).unwrap();
                for r in records {
                    writeln!(out, "| {} |", join(&r, " | ")).unwrap();
                }
            }
            Format::Json => {
                let repr = JsonRepr {
                    schema: CANDIDATE_SCHEMA.to_string(),
                    name: self.name.clone(),
                    columns: self.columns.names().iter().map(|s| s.to_string()).collect(),
                    provenance: self.provenance.clone(),
                    count: self.tuples.len(),
                    tuples: records.collect(),
                };
                out = serde_json::to_string_pretty(&repr)?;
                out.push('\n');
            }
        }
        Ok(out)
    }

    pub fn parse(input: &str, format: Format) -> Result<CandidateSet> {
        if format == Format::Json {
            let repr: JsonRepr = serde_json::from_str(input)?;
            if repr.schema != CANDIDATE_SCHEMA {
                return Err(Error::parse(
                    1,
                    format!("unsupported schema `{}`", repr.schema),
                ));
            }
            let names: Vec<&str> = repr.columns.iter().map(String::as_str).collect();
            let columns = Columns::from_names(&names)
                .ok_or_else(|| Error::parse(1, "unknown column layout"))?;
            let tuples = repr
                .tuples
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    columns
                        .profile(r)
                        .ok_or_else(|| Error::parse(i + 1, "wrong record width"))
                })
                .collect::<Result<Vec<_>>>()?;
            if tuples.len() != repr.count {
                return Err(Error::parse(1, "count does not match the number of tuples"));
            }
            return Ok(CandidateSet::new(
                repr.name,
                columns,
                repr.provenance,
                tuples,
            ));
        }

        let mut lines = input
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let header = match format {
            Format::Markdown => first
                .trim()
                .strip_prefix("<!--")
                .and_then(|s| s.strip_suffix("-->"))
                .map(str::trim),
            _ => first.strip_prefix('#'),
        }
        .ok_or_else(|| Error::parse(1, "missing header line"))?;
        let (name, columns, provenance) = parse_header(header)?;

        let sep = match format {
            Format::Text => ' ',
            Format::Csv => ',',
            _ => '|',
        };
        let skip = match format {
            Format::Text => 0,
            Format::Csv => 1,
            _ => 2,
        };
        let mut tuples = Vec::new();
        for (idx, line) in lines.skip(skip) {
            let fields = line
                .trim()
                .trim_matches('|')
                .split(sep)
                .map(|f| {
                    f.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::parse(idx + 1, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            tuples.push(
                columns
                    .profile(&fields)
                    .ok_or_else(|| Error::parse(idx + 1, "wrong record width"))?,
            );
        }
        Ok(CandidateSet::new(name, columns, provenance, tuples))
    }
}

fn join(v: &[i64], sep: &str) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(sep)
}

fn parse_header(header: &str) -> Result<(String, Columns, Vec<String>)> {
    let mut parts = header.split_whitespace();
    if parts.next() != Some(CANDIDATE_SCHEMA) {
        return Err(Error::parse(
            1,
            format!("expected schema {CANDIDATE_SCHEMA}"),
        ));
    }
    let (mut name, mut columns, mut provenance) = (None, None, Vec::new());
    for kv in parts {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::parse(1, format!("bad header field `{kv}`")))?;
        match k {
            "name" => name = Some(v.to_string()),
            "columns" => {
                let names: Vec<&str> = v.split(',').collect();
                columns = Some(
                    Columns::from_names(&names)
                        .ok_or_else(|| Error::parse(1, "unknown column layout"))?,
                );
            }
            "provenance" => {
                provenance = v
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
            }
            _ => return Err(Error::parse(1, format!("unknown header key `{k}`"))),
        }
    }
    Ok((
        name.ok_or_else(|| Error::parse(1, "header lacks name"))?,
        columns.ok_or_else(|| Error::parse(1, "header lacks columns"))?,
        provenance,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CandidateSet {
        CandidateSet::new(
            "sample",
            Columns::Six,
            vec!["hodge".into(), "le-barz".into()],
            vec![
                TransformationProfile::cubic_with_nu(14, 15, 0, 1, 5, 0),
                TransformationProfile::cubic_with_nu(12, 10, 1, 2, 4, 1),
                TransformationProfile::cubic_with_nu(12, 10, 0, 3, 3, 1),
                TransformationProfile::cubic_with_nu(12, 10, 0, 3, 3, 1),
            ],
        )
    }

    #[test]
    fn sorted_and_deduplicated() {
        let s = sample();
        assert_eq!(s.len(), 3);
        assert_eq!(s.tuples()[0].six_tuple(), (12, 10, 1, 2, 4, 1));
        assert!(s.contains(&TransformationProfile::cubic_with_nu(14, 15, 0, 1, 5, 0)));
    }

    #[test]
    fn canonical_text() {
        let text = sample().serialize(Format::Text).unwrap();
        let expected = "#birclass-candidates/v1 name=sample columns=lambda,g,nu,Delta,d,a provenance=hodge,le-barz\n\
                        12 10 1 2 4 1\n12 10 0 3 3 1\n14 15 0 1 5 0\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn round_trip_all_formats() {
        let s = sample();
        for f in [Format::Text, Format::Json, Format::Csv, Format::Markdown] {
            let back = CandidateSet::parse(&s.serialize(f).unwrap(), f).unwrap();
            assert_eq!(back, s, "format {f}");
        }
    }

    #[test]
    fn four_column_layout_implies_linear_inverse() {
        let s = CandidateSet::parse(
            "#birclass-candidates/v1 name=x columns=lambda,g,Delta,a provenance=\n15 19 12 3\n",
            Format::Text,
        )
        .unwrap();
        assert_eq!(s.tuples()[0].inverse_degree, 1);
        assert_eq!(s.tuples()[0].eps(), 1);
    }

    #[test]
    fn malformed_inputs() {
        assert!(CandidateSet::parse("", Format::Text).is_err());
        assert!(
            CandidateSet::parse("#other/v1 name=x columns=lambda,g,Delta,a\n", Format::Text)
                .is_err()
        );
        let bad = "#birclass-candidates/v1 name=x columns=lambda,g,Delta,a provenance=\n1 2 3\n";
        assert!(matches!(
            CandidateSet::parse(bad, Format::Text),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
