//! Report documents and their renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{
    reference_table, ClassificationOutcome, ClassificationRow, CubicSets, Family, RowSource,
    ValidationReport, ROW_TABLES,
};
use crate::enumerate::{
    preliminary_classification, CandidateCache, CandidateSet, Columns, PreliminaryRow,
    BASE_PROVENANCE,
};
use crate::error::Result;
use crate::format::Format;
use crate::fourfold::FourfoldRecord;

pub const REPORT_SCHEMA: &str = "birclass-report/v1";
pub const PRELIMINARY_SCHEMA: &str = "birclass-preliminary/v1";

/// Candidate sets that `enumerate` can produce, besides the preliminary table.
pub const SET_NAMES: [&str; 5] = [
    "gamma5",
    "gamma5_nonlinear",
    "gamma4_linear",
    "gamma5_ci",
    "gamma6",
];

/// The constraint list a named set is built from, known before enumerating it.
pub fn set_provenance(name: &str) -> Option<(Columns, Vec<String>)> {
    let mut steps: Vec<&str> = BASE_PROVENANCE.to_vec();
    let columns = match name {
        "gamma5" => Columns::Five,
        "gamma4_linear" => {
            steps.push("inverse-degree-1");
            Columns::Four
        }
        "gamma5_nonlinear" | "gamma5_ci" | "gamma6" => {
            steps.push("inverse-degree-ge-2");
            if name != "gamma5_nonlinear" {
                steps.push("complete-intersection");
            }
            if name == "gamma6" {
                steps.extend(["minus-scroll-over-surface", "le-barz"]);
                Columns::Six
            } else {
                Columns::Five
            }
        }
        _ => return None,
    };
    Some((columns, steps.into_iter().map(str::to_string).collect()))
}

fn pick(sets: CubicSets, name: &str) -> Option<CandidateSet> {
    match name {
        "gamma5" => Some(sets.base.full),
        "gamma5_nonlinear" => Some(sets.base.quadratic_or_higher),
        "gamma4_linear" => Some(sets.base.linear_inverse),
        "gamma5_ci" => Some(sets.ci),
        "gamma6" => Some(sets.gamma6),
        _ => None,
    }
}

/// A named candidate set, read from `cache` when present there.
pub fn standard_set(
    name: &str,
    jobs: usize,
    cache: Option<&CandidateCache>,
) -> Result<Option<CandidateSet>> {
    let Some((columns, provenance)) = set_provenance(name) else {
        return Ok(None);
    };
    let compute = || pick(CubicSets::compute(jobs), name).expect("known set name");
    let set = match cache {
        Some(c) => c.get_or_compute(name, columns, &provenance, compute)?,
        None => compute(),
    };
    Ok(Some(set))
}

pub fn render_preliminary(rows: &[PreliminaryRow], format: Format) -> Result<String> {
    let mut out = String::new();
    let cols = ["n", "r", "r_prime", "d1", "d2", "c"];
    let rec = |p: &PreliminaryRow| [p.n, p.r, p.r_prime, p.d1, p.d2, p.c].map(|v| v.to_string());
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                schema: &'a str,
                count: usize,
                rows: &'a [PreliminaryRow],
            }
            out = serde_json::to_string_pretty(&Doc {
                schema: PRELIMINARY_SCHEMA,
                count: rows.len(),
                rows,
            })?;
            out.push('\n');
        }
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            writeln!(out, "#{PRELIMINARY_SCHEMA} columns={}", cols.join(",")).unwrap();
            for p in rows {
                writeln!(out, "{}", rec(p).join(sep)).unwrap();
            }
        }
        Format::Markdown => {
            writeln!(out, "<!-- {PRELIMINARY_SCHEMA} -->").unwrap();
            writeln!(
                out,
                "| n | r | r' | d1 | d2 | c |\n|---|---|---|---|---|---|"
            )
            .unwrap();
            for p in rows {
                writeln!(out, "| {} |", rec(p).join(" | ")).unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub provenance: Vec<String>,
    /// Seconds since the epoch, taken from `SOURCE_DATE_EPOCH` so output stays reproducible.
    pub generated_at: Option<String>,
}

impl Metadata {
    pub fn new(provenance: Vec<String>) -> Self {
        Metadata {
            tool: "birclass".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            provenance,
            generated_at: std::env::var("SOURCE_DATE_EPOCH").ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRange {
    pub field: String,
    pub min: i64,
    pub max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSummary {
    pub name: String,
    pub count: usize,
    pub provenance: Vec<String>,
    pub ranges: Vec<FieldRange>,
}

impl CandidateSummary {
    pub fn of(set: &CandidateSet) -> Self {
        let ranges = set
            .columns()
            .names()
            .iter()
            .enumerate()
            .filter_map(|(i, field)| {
                let (min, max) = set.range_of(|p| set.columns().record(p)[i])?;
                Some(FieldRange {
                    field: field.to_string(),
                    min,
                    max,
                })
            })
            .collect();
        CandidateSummary {
            name: set.name().to_string(),
            count: set.len(),
            provenance: set.provenance().to_vec(),
            ranges,
        }
    }
}

/// A disagreement between emitted rows and the embedded reference tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDiff {
    pub row: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub metadata: Metadata,
    pub candidate_sets: Vec<CandidateSummary>,
    pub classifications: Vec<ClassificationOutcome>,
    pub diffs: Vec<TableDiff>,
    pub validations: Vec<ValidationReport>,
    pub fourfolds: Vec<FourfoldRecord>,
}

impl ReportDocument {
    pub fn new(provenance: Vec<String>) -> Self {
        ReportDocument {
            schema: REPORT_SCHEMA.into(),
            metadata: Metadata::new(provenance),
            candidate_sets: Vec::new(),
            classifications: Vec::new(),
            diffs: Vec::new(),
            validations: Vec::new(),
            fourfolds: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => Ok(self.to_csv()),
            Format::Markdown | Format::Text => Ok(self.to_markdown()),
        }
    }

    /// One flat record per row, rejection, check and δ entry.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |fields: &[String]| w.write_record(fields).expect("in-memory csv write");
        put(&[
            "section", "id", "r", "n", "d1", "d2", "a", "lambda", "g", "Delta", "nu", "detail",
        ]
        .map(String::from));
        for s in &self.candidate_sets {
            put(&section(
                "candidate-set",
                &s.name,
                &[],
                &s.count.to_string(),
            ));
        }
        for c in &self.classifications {
            for row in &c.rows {
                let mut v: Vec<String> = row.key().iter().map(i64::to_string).collect();
                v.push(row.profile.nu.map(|n| n.to_string()).unwrap_or_default());
                put(&section(
                    "row",
                    &format!("{} {}", c.family, row.id()),
                    &v,
                    &row.structure,
                ));
            }
            for r in &c.rejections {
                let id = format!("{} {} {:?}", c.family, r.stage, r.candidate);
                put(&section("rejection", &id, &[], &r.reason));
            }
            for d in &c.discrepancies {
                let detail = format!(
                    "{} printed {} computed {}",
                    d.quantity, d.printed, d.computed
                );
                put(&section(
                    "discrepancy",
                    &format!("{:?}", d.candidate),
                    &[],
                    &detail,
                ));
            }
        }
        for d in &self.diffs {
            put(&section("diff", &d.row, &[], &d.detail));
        }
        for v in &self.validations {
            for c in &v.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                put(&section(
                    "check",
                    &format!("{} {}", v.row, c.id),
                    &[],
                    &format!("{status} {}", c.value),
                ));
            }
        }
        for f in &self.fourfolds {
            put(&section(
                "delta",
                &f.source,
                &[],
                &format!("delta={} admissible={}", f.delta, f.admissible),
            ));
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory csv flush"))
            .expect("csv output is utf-8");
        format!(
            "#{REPORT_SCHEMA} tool={} version={}\n{body}",
            self.metadata.tool, self.metadata.version
        )
    }

    /// Tables in the column order of the printed classification tables.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "<!-- {REPORT_SCHEMA} {} {} -->",
            self.metadata.tool, self.metadata.version
        )
        .unwrap();
        if !self.candidate_sets.is_empty() {
            writeln!(
                out,
                "\n## Candidate sets\n\n| name | count | ranges |\n|---|---|---|"
            )
            .unwrap();
            for s in &self.candidate_sets {
                let ranges: Vec<String> = s
                    .ranges
                    .iter()
                    .map(|r| format!("{} {}..{}", r.field, r.min, r.max))
                    .collect();
                writeln!(out, "| {} | {} | {} |", s.name, s.count, ranges.join(", ")).unwrap();
            }
        }
        for c in &self.classifications {
            writeln!(out, "\n## {}\n\n| table | line | r | n | a | λ | g | structure | d1 | d | Δ | ν | δ | source |", c.family).unwrap();
            writeln!(
                out,
                "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|"
            )
            .unwrap();
            for row in &c.rows {
                let p = &row.profile;
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    row.table,
                    row.line,
                    row.dims.r,
                    p.ambient_dim,
                    p.codim,
                    p.degree,
                    p.genus,
                    row.structure,
                    p.forward_degree,
                    p.inverse_degree,
                    p.image_degree,
                    opt(p.nu),
                    opt(row.delta),
                    if row.source == RowSource::Derived {
                        "derived"
                    } else {
                        "reference"
                    },
                )
                .unwrap();
            }
            if !c.rejections.is_empty() {
                writeln!(out, "\nRejected:\n").unwrap();
                for r in &c.rejections {
                    let md = r
                        .multidegree
                        .as_ref()
                        .map(|m| format!(" {m}"))
                        .unwrap_or_default();
                    writeln!(out, "- {} {:?}{}: {}", r.stage, r.candidate, md, r.reason).unwrap();
                }
            }
            for d in &c.discrepancies {
                writeln!(
                    out,
                    "\nNote: {} for {:?} is {} (printed {}).",
                    d.quantity, d.candidate, d.computed, d.printed
                )
                .unwrap();
            }
        }
        if !self.diffs.is_empty() {
            writeln!(out, "\n## Differences from reference tables\n").unwrap();
            for d in &self.diffs {
                writeln!(out, "- {}: {}", d.row, d.detail).unwrap();
            }
        }
        if !self.validations.is_empty() {
            writeln!(
                out,
                "\n## Validation\n\n| row | check | result | value |\n|---|---|---|---|"
            )
            .unwrap();
            for v in &self.validations {
                for c in &v.checks {
                    writeln!(
                        out,
                        "| {} | {} | {} | {} |",
                        v.row,
                        c.id,
                        if c.passed { "pass" } else { "FAIL" },
                        c.value
                    )
                    .unwrap();
                }
            }
        }
        if !self.fourfolds.is_empty() {
            writeln!(out, "\n## Fourfold divisors\n\n| transformation | δ | admissible | h⁰(I(3)) | h⁰(N) | h⁰(N_X) |").unwrap();
            writeln!(out, "|---|---|---|---|---|---|").unwrap();
            for f in &self.fourfolds {
                let (a, b, c) = f.reference_cohomology.unwrap_or_default();
                writeln!(
                    out,
                    "| {} | {} | {} | {a} | {b} | {c} |",
                    f.source, f.delta, f.admissible
                )
                .unwrap();
            }
        }
        out
    }
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn section(kind: &str, id: &str, values: &[String], detail: &str) -> [String; 12] {
    let mut out: [String; 12] = Default::default();
    out[0] = kind.into();
    out[1] = id.into();
    for (slot, v) in out[2..11].iter_mut().zip(values) {
        *slot = v.clone();
    }
    out[11] = detail.into();
    out
}

/// The family whose pipeline derives a reference row, if any.
pub fn deriving_family(row: &ClassificationRow) -> Option<Family> {
    if row.source != RowSource::Derived {
        return None;
    }
    let p = &row.profile;
    match (row.table, p.ambient_dim, p.forward_degree) {
        (1, 6, 3) => Some(Family::Cubic),
        (5, _, 3) => Some(Family::CuboLinear),
        (4, 4, 4) => Some(Family::QuarticP4),
        (5, 5, 4) => Some(Family::QuarticP5),
        _ => None,
    }
}

/// Compares the derived rows of `outcome` with the reference rows its pipeline should produce.
pub fn diff_against_reference(outcome: &ClassificationOutcome) -> Vec<TableDiff> {
    let expected: Vec<ClassificationRow> = ROW_TABLES
        .iter()
        .flat_map(|&t| reference_table(t).expect("row table"))
        .filter(|r| deriving_family(r) == Some(outcome.family))
        .collect();
    let mut diffs = Vec::new();
    for want in &expected {
        match outcome
            .derived_rows()
            .find(|r| r.table == want.table && r.line == want.line)
        {
            None => diffs.push(TableDiff {
                row: want.id(),
                detail: "not produced".into(),
            }),
            Some(got) if got.key() != want.key() => diffs.push(TableDiff {
                row: want.id(),
                detail: format!("invariants {:?}, expected {:?}", got.key(), want.key()),
            }),
            Some(got) if got.structure != want.structure => diffs.push(TableDiff {
                row: want.id(),
                detail: format!(
                    "structure `{}`, expected `{}`",
                    got.structure, want.structure
                ),
            }),
            Some(_) => {}
        }
    }
    for got in outcome.derived_rows() {
        if !expected
            .iter()
            .any(|w| w.table == got.table && w.line == got.line)
        {
            diffs.push(TableDiff {
                row: got.id(),
                detail: "not in the reference table".into(),
            });
        }
    }
    diffs
}

/// All preliminary types, as enumerated.
pub fn preliminary_rows() -> Vec<PreliminaryRow> {
    preliminary_classification()
}
