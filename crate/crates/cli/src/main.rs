//! `latri` — exact lattice-triangle statistics, canonical normalization,
//! totients, and the 2-collinear classification from the command line.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 domain error, 4 resource
//! limit exceeded, 5 internal invariant failure. Every failure prints one
//! machine-parsable line `error: <code>: <detail>` on stderr.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latri_core::sampling::{random_triangle, Lcg64};
use latri_core::{classifier, normalize, totient, Error, Triangle64};
use report::{
    pair, tri, AnalyzeReport, ClassifyReport, DsetReport, NormalizeReport, PickCheckReport, Report,
    SurveyEntry, SurveyReport, TotientReport, WitnessReport,
};

const PICK_CHECK_COORD_MIN: i64 = -30;
const PICK_CHECK_COORD_MAX: i64 = 30;

#[derive(Parser)]
#[command(
    name = "latri",
    version,
    about = "Exact lattice-triangle statistics and the 2-collinear classification"
)]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write the JSON report verbatim to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum MethodArg {
    /// Enumerate every candidate triangle's interior points.
    Brute,
    /// Decide from the D-set / Schemmel-totient criterion.
    Theorem,
    /// Run both methods and require agreement.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Exact statistics of one lattice triangle.
    Analyze {
        x1: i64,
        y1: i64,
        x2: i64,
        y2: i64,
        x3: i64,
        y3: i64,
    },
    /// Canonical form (0,0), (d,0), (a,b) and the witness map.
    Normalize {
        x1: i64,
        y1: i64,
        x2: i64,
        y2: i64,
        x3: i64,
        y3: i64,
    },
    /// Decide whether k is 2-collinear.
    Classify {
        k: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Witness triangle for a non-2-collinear k, or a no-witness notice.
    Witness { k: i64 },
    /// Generalized totient phi(k, m); m defaults to 1 (Schemmel totient).
    Totient { k: i64, m: Option<i64> },
    /// Members of D_n: residues a with gcd(a, n) = gcd(a-1, n) = 1, n odd.
    Dset { n: i64 },
    /// Classify every k in [k_min, k_max] with both methods.
    Survey { k_min: i64, k_max: i64 },
    /// Seeded random agreement check of the interior-count formula against
    /// row-scan enumeration.
    PickCheck { samples: u64, seed: u64 },
}

fn run(command: &Command) -> Result<Report, Error> {
    match *command {
        Command::Analyze {
            x1,
            y1,
            x2,
            y2,
            x3,
            y3,
        } => {
            let t = Triangle64::from_coords(x1, y1, x2, y2, x3, y3)?;
            let stats = t.stats()?;
            let interior = t.interior_points()?;
            Ok(Report::Analyze(AnalyzeReport {
                command: "analyze".into(),
                triangle: tri(&t),
                twice_area: stats.twice_area,
                boundary: stats.boundary,
                interior_pick: stats.interior,
                interior_scan: interior.len() as i64,
                collinear: latri_core::collinear(&interior),
                interior_points: interior.into_iter().map(pair).collect(),
            }))
        }
        Command::Normalize {
            x1,
            y1,
            x2,
            y2,
            x3,
            y3,
        } => {
            let t = Triangle64::from_coords(x1, y1, x2, y2, x3, y3)?;
            let (canonical, witness) = normalize(&t)?;
            Ok(Report::Normalize(NormalizeReport {
                command: "normalize".into(),
                triangle: tri(&t),
                canonical: (&canonical).into(),
                witness: (&witness).into(),
            }))
        }
        Command::Classify { k, method } => {
            let result = match method {
                MethodArg::Brute => classifier::is_2_collinear_bruteforce(k)?,
                MethodArg::Theorem => classifier::is_2_collinear_theorem(k)?,
                MethodArg::Both => classifier::classify_both(k)?,
            };
            Ok(Report::Classify(ClassifyReport::from_result(&result)))
        }
        Command::Witness { k } => {
            let result = classifier::is_2_collinear_theorem(k)?;
            Ok(Report::Witness(WitnessReport {
                command: "witness".into(),
                k,
                is_2_collinear: result.is_2_collinear,
                witness: result.witness.as_ref().map(tri),
                witness_interior: result
                    .witness_interior
                    .as_ref()
                    .map(|ps| ps.iter().copied().map(pair).collect()),
            }))
        }
        Command::Totient { k, m } => {
            let m = m.unwrap_or(1);
            Ok(Report::Totient(TotientReport {
                command: "totient".into(),
                k,
                m,
                value: totient::generalized_totient(k, m)?,
            }))
        }
        Command::Dset { n } => {
            let d = classifier::d_set(n)?;
            Ok(Report::Dset(DsetReport {
                command: "dset".into(),
                n,
                size: d.len() as i64,
                members: d.members().to_vec(),
            }))
        }
        Command::Survey { k_min, k_max } => {
            let results = classifier::survey(k_min, k_max)?;
            let entries: Vec<SurveyEntry> = results
                .iter()
                .map(|r| SurveyEntry {
                    k: r.k,
                    is_2_collinear: r.is_2_collinear,
                    witness_a: r.witness.as_ref().map(|w| w.vertices()[2].x),
                })
                .collect();
            let two_collinear = results
                .iter()
                .filter(|r| r.is_2_collinear)
                .map(|r| r.k)
                .collect();
            Ok(Report::Survey(SurveyReport {
                command: "survey".into(),
                k_min,
                k_max,
                results: entries,
                two_collinear,
            }))
        }
        Command::PickCheck { samples, seed } => {
            let mut rng = Lcg64::new(seed);
            let mut mismatches = 0u64;
            for _ in 0..samples {
                let t: Triangle64 =
                    random_triangle(&mut rng, PICK_CHECK_COORD_MIN, PICK_CHECK_COORD_MAX);
                let stats = t.stats()?;
                let scanned = t.interior_points()?.len() as i64;
                let pick_holds = stats.twice_area == stats.boundary + 2 * stats.interior - 2;
                if stats.interior != scanned || !pick_holds {
                    mismatches += 1;
                }
            }
            Ok(Report::PickCheck(PickCheckReport {
                command: "pick-check".into(),
                samples,
                seed,
                coord_min: PICK_CHECK_COORD_MIN,
                coord_max: PICK_CHECK_COORD_MAX,
                mismatches,
                agree: mismatches == 0,
            }))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err.code() {
        "resource_limit" => 4,
        "invariant" => 5,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => match err.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                err.exit()
            }
            _ => {
                // Collapse clap's multi-line usage message into the one-line
                // machine-parsable form every other error uses.
                let raw = err.to_string();
                let reason = raw
                    .split("\nUsage:")
                    .next()
                    .unwrap_or(&raw)
                    .trim_start_matches("error: ")
                    .split_whitespace()
                    .collect::<Vec<_>>()
                    .join(" ");
                eprintln!("error: invalid_arguments: {reason}");
                return ExitCode::from(2);
            }
        },
    };
    let report = match run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(exit_code_for(&err));
        }
    };

    let json = report.to_json();
    match cli.format {
        Format::Text => println!("{}", report.to_text()),
        Format::Json => println!("{json}"),
    }
    if let Some(path) = &cli.out {
        if let Err(err) = std::fs::write(path, format!("{json}\n")) {
            eprintln!(
                "error: invalid_arguments: cannot write {}: {err}",
                path.display()
            );
            return ExitCode::from(2);
        }
    }

    // A pick-check disagreement means a library bug, not a bad request.
    if let Report::PickCheck(r) = &report {
        if !r.agree {
            eprintln!(
                "error: invariant: pick-check found {} mismatches",
                r.mismatches
            );
            return ExitCode::from(5);
        }
    }
    ExitCode::SUCCESS
}
