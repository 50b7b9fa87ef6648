//! `cdr`: command-line access to the operator products, the invariant
//! theory computations and the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cdr_core::fock::FockSpace;
use cdr_core::graded::{format_combination, parse_word, straighten};
use cdr_core::invariants::{dimension_report, invariant_subspace, standard_count};
use cdr_core::sections::{parse_section_field, weight_space_report};
use cdr_core::verify::{run_named, BracketCache, OutputFormat, RunConfig};
use cdr_core::Error;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cdr", version, about = "Exact operator products and invariant checks for the rank-2 free-field system")]
struct Cli {
    /// Highest weight for the weight-graded checks.
    #[arg(long, global = true, default_value_t = 4)]
    max_weight: i64,
    /// Truncation order of the chart series.
    #[arg(long = "trunc-K", global = true, default_value_t = 4)]
    trunc_k: i32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON file caching operator products between runs.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every nonzero `a∘_n b`, one line per pole order.
    Ope { a: String, b: String },
    /// Run a verification suite: n4, quadratics, invariants, charts, basis or all.
    Verify { suite: String },
    /// Dimension of the weight-w invariants and a basis of them.
    Invariants { weight: i64 },
    /// Rewrite a product of generators such as "A[bc] A[bb]" in standard words.
    Straighten { word: String },
    /// Number of standard words of weight w.
    StandardCount { weight: i64 },
    /// The lifted standard words of weight w and their independence.
    Basis { weight: i64 },
}

/// Outcome of a command: `Ok(true)` when every check passed.
type Outcome = Result<bool, Error>;

fn config(cli: &Cli) -> RunConfig {
    RunConfig {
        max_weight: cli.max_weight,
        trunc_k: cli.trunc_k,
        format: match cli.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        cache: cli.cache.clone(),
        seed: cli.seed,
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn ope(cli: &Cli, a: &str, b: &str) -> Outcome {
    let space = FockSpace::new(2);
    let fa = parse_section_field(&space, a)?;
    let fb = parse_section_field(&space, b)?;
    let mut cache = match &cli.cache {
        Some(path) => BracketCache::open(path, &space, cli.seed)?,
        None => BracketCache::in_memory(),
    };
    let bracket = cache.bracket(&space, &fa, &fb)?;
    cache.save()?;
    match cli.format {
        Format::Text => {
            if bracket.is_empty() {
                println!("0");
            }
            for (n, v) in bracket.entries() {
                println!("{n}: {v}");
            }
        }
        Format::Json => {
            let poles: serde_json::Map<String, serde_json::Value> = bracket
                .entries()
                .map(|(n, v)| (n.to_string(), v.to_string().into()))
                .collect();
            print_json(&json!({ "a": fa.to_string(), "b": fb.to_string(), "bracket": poles }));
        }
    }
    Ok(true)
}

fn verify(cli: &Cli, suite: &str) -> Outcome {
    let cfg = config(cli);
    let (report, stats) = run_named(suite, &cfg)?;
    if stats.discarded {
        eprintln!("warning: cache file failed its spot check and was rebuilt");
    }
    match cfg.format {
        OutputFormat::Text => print!("{}", report.to_text()),
        OutputFormat::Json => print_json(&report),
    }
    Ok(report.passed())
}

fn invariants(cli: &Cli, w: i64) -> Outcome {
    let report = dimension_report(w);
    let basis: Vec<String> = invariant_subspace(w).iter().map(|p| p.to_string()).collect();
    match cli.format {
        Format::Text => {
            println!(
                "weight {w}: dim invariants {}, standard words {}, rank {}, match {}",
                report.dim_invariants, report.dim_standard, report.rank_standard, report.matches
            );
            for p in &basis {
                println!("  {p}");
            }
        }
        Format::Json => print_json(&json!({ "report": report, "basis": basis })),
    }
    Ok(report.matches)
}

fn straighten_cmd(cli: &Cli, word: &str) -> Outcome {
    let word = parse_word(word)?;
    let combination = straighten(&word)?;
    let text = format_combination(&combination);
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Json => {
            let terms: serde_json::Map<String, serde_json::Value> = combination
                .iter()
                .map(|(w, c)| (w.to_string(), c.to_string().into()))
                .collect();
            print_json(&json!({ "combination": text, "terms": terms }));
        }
    }
    Ok(true)
}

fn standard_count_cmd(cli: &Cli, w: i64) -> Outcome {
    let n = standard_count(w);
    match cli.format {
        Format::Text => println!("{n}"),
        Format::Json => print_json(&json!({ "weight": w, "count": n })),
    }
    Ok(true)
}

fn basis(cli: &Cli, w: i64) -> Outcome {
    let report = weight_space_report(&FockSpace::new(2), w)?;
    match cli.format {
        Format::Text => {
            println!("weight {w}: {{{}}}", report.words.join(", "));
            println!(
                "dimension {}, independent {}, symbols match {}",
                report.dimension, report.independent, report.symbols_match
            );
        }
        Format::Json => print_json(&report),
    }
    Ok(report.independent && report.symbols_match)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Ope { a, b } => ope(&cli, a, b),
        Command::Verify { suite } => verify(&cli, suite),
        Command::Invariants { weight } => invariants(&cli, *weight),
        Command::Straighten { word } => straighten_cmd(&cli, word),
        Command::StandardCount { weight } => standard_count_cmd(&cli, *weight),
        Command::Basis { weight } => basis(&cli, *weight),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. }
                | Error::UnknownSuite(_)
                | Error::TruncationTooDeep { .. }
                | Error::NotStandard(_)
                | Error::IndexOutOfRange { .. } => ExitCode::from(2),
                _=> ExitCode::from(1),
            }
        }
    }
}
