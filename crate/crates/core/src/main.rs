//! Command-line front end: descent-map verification, descent chains,
//! figure rendering with verification, the triangular-number survey,
//! the brute-force oracle, and the exact pentagon lemma.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use geodescent::analysis::{run_survey, square_ratio_witness, SurveyRowReport};
use geodescent::constructions::{
    build_figure, pentagon_angle_chase, pentagon_lemma_side, FigureError, FigureKind,
};
use geodescent::descent::{catalog, map_by_name, MapReport, Termination};
use geodescent::exact::Rational;
use geodescent::geometry::{set_precision_bits, DEFAULT_PRECISION_BITS};
use geodescent::render::{default_filename, figure_to_svg, RenderStyle};

#[derive(Parser)]
#[command(
    name = "geodescent",
    version,
    about = "Verify geometric infinite-descent irrationality arguments"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Mantissa bits for polygon arithmetic (min 64)
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION_BITS)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every shipped descent map: form multiplier, shrink factor,
    /// descent validity
    VerifyMaps {
        /// Largest triangular index to include
        #[arg(long, default_value_t = 8)]
        triangular_max: u32,
    },
    /// Iterate a descent map from (a, b) and print the chain
    Descend {
        /// Map name: sqrt2, sqrt3, sqrt5, sqrt6 or tri<n>
        map: String,
        a: String,
        b: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Build a figure, write it as SVG, and verify its identities
    Figure {
        /// Figure kind: sqrt2, sqrt3, sqrt5, sqrt6 or tri
        kind: String,
        /// `a b` for the named kinds; `n a b` for tri
        #[arg(num_args = 2..=3)]
        values: Vec<u64>,
        /// Output path (defaults to <kind>_<a>_<b>.svg)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Canvas size in pixels
        #[arg(long, default_value_t = 800)]
        canvas: u32,
    },
    /// Survey triangular numbers up to n_max
    Survey { n_max: u32 },
    /// Search 1 ≤ b ≤ b_max for an integer solution of a² = k·b²
    Oracle { k: u64, b_max: u64 },
    /// Verify the exact pentagon side and angle facts
    PentagonLemma,
}

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_precision_bits(cli.precision);
    let code = match cli.command {
        Command::VerifyMaps { triangular_max } => cmd_verify_maps(triangular_max, cli.format),
        Command::Descend {
            map,
            a,
            b,
            max_steps,
        } => cmd_descend(&map, &a, &b, max_steps, cli.format),
        Command::Figure {
            kind,
            values,
            output,
            canvas,
        } => cmd_figure(&kind, &values, output, canvas, cli.format),
        Command::Survey { n_max } => cmd_survey(n_max, cli.format),
        Command::Oracle { k, b_max } => cmd_oracle(k, b_max, cli.format),
        Command::PentagonLemma => cmd_pentagon_lemma(cli.format),
    };
    ExitCode::from(code)
}

/// Re-checks the multiplier identity of a map over a small grid.
fn map_identity_holds(map: &geodescent::descent::DescentMap) -> bool {
    let c = map.form_multiplier();
    for a in -20i64..=20 {
        for b in -20i64..=20 {
            let before = map.form().value(&BigInt::from(a), &BigInt::from(b));
            let Ok((na, nb)) = map.apply_i64(a, b) else {
                return false;
            };
            let after = map.form().value(&na, &nb);
            if Rational::from_integer(after) != c * Rational::from_integer(before) {
                return false;
            }
        }
    }
    true
}

fn cmd_verify_maps(triangular_max: u32, format: Format) -> u8 {
    if triangular_max < 2 {
        return usage_error("--triangular-max must be at least 2");
    }
    let maps = catalog(triangular_max);
    let mut all_ok = true;
    let mut rows = Vec::new();
    for map in &maps {
        let ok = map_identity_holds(map);
        all_ok &= ok;
        rows.push((MapReport::for_map(map), ok));
    }
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                #[serde(flatten)]
                report: MapReport,
                identity_ok: bool,
            }
            let out: Vec<Row> = rows
                .into_iter()
                .map(|(report, identity_ok)| Row {
                    report,
                    identity_ok,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!(
                "{:<8} {:>6} {:>24} {:>4} {:>8} {:>14} {:>9} {:>9}",
                "name", "k", "matrix [α β γ δ]", "d", "c", "λ", "descent", "identity"
            );
            for (r, ok) in &rows {
                println!(
                    "{:<8} {:>6} {:>24} {:>4} {:>8} {:>14} {:>9} {:>9}",
                    r.name,
                    r.k,
                    format!("{:?}", r.matrix),
                    r.d,
                    r.c,
                    r.lambda,
                    if r.valid_descent { "valid" } else { "no" },
                    if *ok { "ok" } else { "FAILED" },
                );
            }
        }
    }
    if all_ok {
        0
    } else {
        EXIT_VERIFICATION
    }
}

#[derive(Serialize)]
struct TrajectoryReport {
    map: String,
    k: u64,
    termination: Termination,
    steps: Vec<TrajectoryStepReport>,
}

#[derive(Serialize)]
struct TrajectoryStepReport {
    a: String,
    b: String,
    form_value: String,
}

fn cmd_descend(map_name: &str, a: &str, b: &str, max_steps: usize, format: Format) -> u8 {
    let map = match map_by_name(map_name) {
        Ok(map) => map,
        Err(err) => return usage_error(&err.to_string()),
    };
    let parse = |text: &str, label: &str| -> Result<BigInt, String> {
        let value: BigInt = text
            .parse()
            .map_err(|_| format!("{label} must be an integer, got '{text}'"))?;
        if value < BigInt::zero() {
            return Err(format!("{label} must be nonnegative, got {value}"));
        }
        Ok(value)
    };
    let (a, b) = match (parse(a, "a"), parse(b, "b")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    if max_steps == 0 {
        return usage_error("--max-steps must be at least 1");
    }
    let trajectory = map.descend(a, b, max_steps);
    match format {
        Format::Json => {
            let report = TrajectoryReport {
                map: map.name().to_owned(),
                k: map.k(),
                termination: trajectory.termination,
                steps: trajectory
                    .steps
                    .iter()
                    .map(|s| TrajectoryStepReport {
                        a: s.a.to_string(),
                        b: s.b.to_string(),
                        form_value: s.form_value.to_string(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Text => {
            println!("descending {} (k = {})", map.name(), map.k());
            for (i, s) in trajectory.steps.iter().enumerate() {
                println!(
                    "step {:>3}: a = {:>12}  b = {:>12}  a² − {}·b² = {}",
                    i,
                    s.a,
                    s.b,
                    map.k(),
                    s.form_value
                );
            }
            println!("termination: {:?}", trajectory.termination);
        }
    }
    0
}

fn parse_figure_kind(kind: &str, values: &[u64]) -> Result<(FigureKind, u64, u64), String> {
    match (kind, values) {
        ("sqrt2", [a, b]) => Ok((FigureKind::Sqrt2, *a, *b)),
        ("sqrt3", [a, b]) => Ok((FigureKind::Sqrt3, *a, *b)),
        ("sqrt5", [a, b]) => Ok((FigureKind::Sqrt5, *a, *b)),
        ("sqrt6", [a, b]) => Ok((FigureKind::Sqrt6, *a, *b)),
        ("tri", [n, a, b]) => {
            let n = u32::try_from(*n).map_err(|_| format!("n = {n} is too large"))?;
            Ok((FigureKind::Triangular(n), *a, *b))
        }
        ("tri", _) => Err("tri needs three values: n a b".to_owned()),
        ("sqrt2" | "sqrt3" | "sqrt5" | "sqrt6", _) => Err(format!("{kind} needs two values: a b")),
        _ => Err(format!(
            "unknown figure kind '{kind}' (expected sqrt2, sqrt3, sqrt5, sqrt6 or tri)"
        )),
    }
}

fn cmd_figure(
    kind: &str,
    values: &[u64],
    output: Option<PathBuf>,
    canvas: u32,
    format: Format,
) -> u8 {
    let (kind, a, b) = match parse_figure_kind(kind, values) {
        Ok(parsed) => parsed,
        Err(message) => return usage_error(&message),
    };
    let figure = match build_figure(kind, a, b) {
        Ok(figure) => figure,
        Err(
            err @ (FigureError::OutOfRange { .. }
            | FigureError::TriangularIndexTooSmall(_)
            | FigureError::SquareTriangular { .. }),
        ) => return usage_error(&err.to_string()),
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_VERIFICATION;
        }
    };
    let style = RenderStyle {
        canvas_px: canvas,
        ..RenderStyle::default()
    };
    let svg = match figure_to_svg(&figure, &style) {
        Ok(svg) => svg,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_VERIFICATION;
        }
    };
    let path = output.unwrap_or_else(|| PathBuf::from(default_filename(&figure)));
    if let Err(err) = std::fs::write(&path, &svg) {
        eprintln!("error: cannot write {}: {err}", path.display());
        return EXIT_VERIFICATION;
    }
    let report = match figure.verify() {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_VERIFICATION;
        }
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => {
            println!("wrote {}", path.display());
            println!(
                "figure {} (a = {}, b = {}): excess = {:.6}, uncovered = {:.6}, a² − k·b² = {}",
                report.kind, report.a, report.b, report.excess, report.uncovered, report.residual
            );
            for check in &report.identities {
                println!(
                    "  {:<26} {}  (lhs = {:.9}, rhs = {:.9}, tol = {:e})",
                    check.name,
                    if check.pass { "pass" } else { "FAIL" },
                    check.lhs,
                    check.rhs,
                    check.tol
                );
            }
            println!("verdict: {}", if report.pass { "pass" } else { "FAIL" });
        }
    }
    if report.pass {
        0
    } else {
        EXIT_VERIFICATION
    }
}

fn cmd_survey(n_max: u32, format: Format) -> u8 {
    if n_max < 2 {
        return usage_error("n_max must be at least 2");
    }
    let rows = run_survey(n_max);
    match format {
        Format::Json => {
            let out: Vec<SurveyRowReport> = rows.iter().map(SurveyRowReport::for_row).collect();
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!(
                "{:>4} {:>8} {:>8} {:>10} {:>10} {:>14}",
                "n", "T_n", "square", "descent", "c", "λ = n−√T_n"
            );
            for row in &rows {
                println!(
                    "{:>4} {:>8} {:>8} {:>10} {:>10} {:>14}",
                    row.n,
                    row.t_n,
                    row.is_square
                        .map(|r| format!("{r}²"))
                        .unwrap_or_else(|| "-".to_owned()),
                    if row.is_square.is_some() {
                        "n/a"
                    } else if row.descent_applicable {
                        "yes"
                    } else {
                        "no"
                    },
                    row.multiplier_c,
                    row.lambda
                        .as_ref()
                        .map(|l| l.to_decimal(6))
                        .unwrap_or_else(|| "-".to_owned()),
                );
            }
        }
    }
    0
}

#[derive(Serialize)]
struct OracleReport {
    k: u64,
    b_max: u64,
    no_solution: bool,
    witness: Option<(u64, u64)>,
}

fn cmd_oracle(k: u64, b_max: u64, format: Format) -> u8 {
    if k < 2 || b_max < 1 {
        return usage_error("need k ≥ 2 and b_max ≥ 1");
    }
    let witness = square_ratio_witness(k, b_max);
    match format {
        Format::Json => {
            let report = OracleReport {
                k,
                b_max,
                no_solution: witness.is_none(),
                witness,
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Text => match witness {
            Some((a, b)) => println!("a² = {k}·b² has the witness (a, b) = ({a}, {b})"),
            None => println!("no solution of a² = {k}·b² with 1 ≤ b ≤ {b_max}"),
        },
    }
    0
}

#[derive(Serialize)]
struct PentagonReport {
    x_rational_part: String,
    x_radical_part: String,
    radicand: u64,
    x_decimal: String,
    angles: Vec<PentagonAngle>,
}

#[derive(Serialize)]
struct PentagonAngle {
    name: String,
    multiple_of_pi: String,
}

fn cmd_pentagon_lemma(format: Format) -> u8 {
    let x = match pentagon_lemma_side() {
        Ok(x) => x,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_VERIFICATION;
        }
    };
    let angles = pentagon_angle_chase();
    match format {
        Format::Json => {
            let report = PentagonReport {
                x_rational_part: x.rational_part().to_string(),
                x_radical_part: x.radical_part().to_string(),
                radicand: x.radicand(),
                x_decimal: x.to_decimal(12),
                angles: angles
                    .iter()
                    .map(|(name, angle)| PentagonAngle {
                        name: name.clone(),
                        multiple_of_pi: angle.multiple_of_pi().to_string(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Text => {
            println!(
                "slanted pentagon side: x = {x} = a − 2b exactly (≈ {})",
                x.to_decimal(10)
            );
            println!("angle chase (multiples of π):");
            for (name, angle) in &angles {
                println!("  {name:<24} {angle}");
            }
            println!("all five small-pentagon angles equal 3π/5: verified exactly");
        }
    }
    0
}
