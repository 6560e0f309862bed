use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use birclass::classify::{classify, reference_table, validate_row, CubicSets, Family, ROW_TABLES};
use birclass::enumerate::{preliminary_classification, CandidateCache};
use birclass::format::Format;
use birclass::fourfold::{kuznetsov_admissible, table2_report};
use birclass::invariants::{delta_invariant, TransformationProfile};
use birclass::report::{
    diff_against_reference, render_preliminary, standard_set, CandidateSummary, ReportDocument,
    TableDiff, SET_NAMES,
};
use birclass::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "birclass",
    version,
    about = "Enumerate and classify special birational transformations"
)]
struct Cli {
    /// Output format: text, json, csv or md.
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Treat disagreements with printed intermediate values as failures.
    #[arg(long = "strict-paper", global = true)]
    strict_reference: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a candidate set: gamma5, gamma5_nonlinear, gamma4_linear, gamma5_ci, gamma6 or preliminary.
    Enumerate { set: String },
    /// Run a classification pipeline: cubic, cubo-linear, quartic-p4, quartic-p5 or all.
    Classify { family: String },
    /// Check a reference table: 1, 2, 3, 4, 5 or preliminary.
    Validate { table: String },
    /// Discriminant of the divisor of special cubic fourfolds for a cubic 5-tuple.
    #[command(allow_negative_numbers = true)]
    Delta {
        lambda: i64,
        g: i64,
        #[arg(value_name = "BIG_DELTA")]
        image_degree: i64,
        d: i64,
        a: i64,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) | Error::Parse { .. } => Failure::Io(e.to_string()),
            Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate { set } => enumerate(&cli, set),
        Command::Classify { family } => run_classify(&cli, family),
        Command::Validate { table } => validate(&cli, table),
        Command::Delta {
            lambda,
            g,
            image_degree,
            d,
            a,
        } => delta(&cli, *lambda, *g, *image_degree, *d, *a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Outcome {
    let written = match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    written.map_err(Failure::Io)
}

/// Prints the cardinality on stdout when the set goes to a file, on stderr otherwise.
fn announce(cli: &Cli, name: &str, count: usize) {
    if cli.out.is_some() {
        println!("{name} {count}");
    } else {
        eprintln!("{name} {count}");
    }
}

fn enumerate(cli: &Cli, name: &str) -> Outcome {
    if name == "preliminary" {
        let rows = preliminary_classification();
        emit(cli, &render_preliminary(&rows, cli.format)?)?;
        announce(cli, name, rows.len());
        return Ok(());
    }
    let cache = CandidateCache::from_env();
    let set = standard_set(name, cli.jobs, cache.as_ref())?.ok_or_else(|| {
        Failure::Usage(format!(
            "unknown set `{name}` (expected {} or preliminary)",
            SET_NAMES.join(", ")
        ))
    })?;
    emit(cli, &set.serialize(cli.format)?)?;
    announce(cli, name, set.len());
    Ok(())
}

fn parse_families(name: &str) -> Result<Vec<Family>, Failure> {
    if name == "all" {
        return Ok(Family::ALL.to_vec());
    }
    name.parse::<Family>().map(|f| vec![f]).map_err(|_| {
        Failure::Usage(format!(
            "unknown family `{name}` (expected cubic, cubo-linear, quartic-p4, quartic-p5 or all)"
        ))
    })
}

fn run_classify(cli: &Cli, name: &str) -> Outcome {
    let families = parse_families(name)?;
    let sets = CubicSets::compute(cli.jobs);
    let mut doc = ReportDocument::new(vec![format!("classify {name}")]);
    if families.contains(&Family::Cubic) {
        for set in [&sets.base.full, &sets.ci, &sets.gamma6] {
            doc.candidate_sets.push(CandidateSummary::of(set));
        }
    }
    for family in families {
        let outcome = classify(family, &sets)?;
        doc.diffs.extend(diff_against_reference(&outcome));
        if cli.strict_reference {
            doc.diffs
                .extend(outcome.discrepancies.iter().map(|d| TableDiff {
                    row: format!("{} {:?}", family, d.candidate),
                    detail: format!(
                        "{} computed {}, printed {}",
                        d.quantity, d.computed, d.printed
                    ),
                }));
        }
        doc.classifications.push(outcome);
    }
    emit(cli, &doc.render(cli.format)?)?;
    finish(&doc.diffs)
}

fn finish(diffs: &[TableDiff]) -> Outcome {
    if diffs.is_empty() {
        return Ok(());
    }
    let lines: Vec<String> = diffs
        .iter()
        .map(|d| format!("mismatch: {}: {}", d.row, d.detail))
        .collect();
    Err(Failure::Mismatch(lines.join("\n")))
}

fn validate(cli: &Cli, table: &str) -> Outcome {
    let mut doc = ReportDocument::new(vec![format!("validate {table}")]);
    match table {
        "2" => doc.fourfolds = table2_report()?,
        "preliminary" => {
            let printed: BTreeSet<_> = birclass::classify::preliminary_table()
                .into_iter()
                .collect();
            let derived: BTreeSet<_> = preliminary_classification().into_iter().collect();
            for row in printed.difference(&derived) {
                doc.diffs.push(TableDiff {
                    row: format!("{row:?}"),
                    detail: "printed but not derived".into(),
                });
            }
            for row in derived.difference(&printed) {
                doc.diffs.push(TableDiff {
                    row: format!("{row:?}"),
                    detail: "derived but not printed".into(),
                });
            }
        }
        t => {
            let rows = t
                .parse::<u8>()
                .ok()
                .filter(|n| ROW_TABLES.contains(n))
                .and_then(reference_table)
                .ok_or_else(|| {
                    Failure::Usage(format!("unknown table `{t}` (expected 1-5 or preliminary)"))
                })?;
            for row in &rows {
                let report = validate_row(row);
                for c in report.failures() {
                    doc.diffs.push(TableDiff {
                        row: report.row.clone(),
                        detail: format!("{} failed: {}", c.id, c.value),
                    });
                }
                doc.validations.push(report);
            }
        }
    }
    emit(cli, &doc.render(cli.format)?)?;
    finish(&doc.diffs)
}

fn delta(cli: &Cli, lambda: i64, g: i64, image_degree: i64, d: i64, a: i64) -> Outcome {
    if d < 1 {
        return Err(Failure::Usage(format!(
            "inverse degree must be at least 1, got {d}"
        )));
    }
    let profile = TransformationProfile::cubic(lambda, g, image_degree, d, a);
    profile.check_invariants().map_err(Failure::Usage)?;
    let value = delta_invariant(&profile);
    let admissible = kuznetsov_admissible(value);
    let body = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::json!({ "delta": value, "admissible": admissible })
        ),
        Format::Csv => format!("delta,admissible\n{value},{admissible}\n"),
        Format::Text | Format::Markdown => format!("delta={value} admissible={admissible}\n"),
    };
    emit(cli, &body)
}
