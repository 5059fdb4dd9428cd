use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wilf_core::enumeration::Check;
use wilf_core::report::{
    render_summary, run_enumerate, run_extremal, write_records, Analysis, EnumerateOptions,
    ExtremalOptions, Filter, Format,
};
use wilf_core::NumericalSemigroup;

/// Worker count for sweeps; unset means 1 (sequential, deterministic order).
const WORKERS_ENV: &str = "WILF_WORKERS";

const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "wilf",
    version,
    about = "Numerical semigroup invariants and Wilf-type verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every invariant and bound for one semigroup.
    Analyze {
        /// Comma-separated generators, e.g. 5,7,9.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Visit every semigroup up to a genus bound and run checks.
    Enumerate {
        #[arg(long)]
        max_genus: usize,
        /// Comma-separated check ids (wilf, thm1, type, cprime, apery, lemma31, lemma42); default all.
        #[arg(long, value_delimiter = ',')]
        check: Vec<Check>,
        /// Filters such as e=2, m=3, g=5, c=8; all must match.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<Filter>,
        /// Emit only records failing a selected check.
        #[arg(long)]
        violations_only: bool,
        /// Print the sweep summary to standard output.
        #[arg(long)]
        summary: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum Wilf quotient for a fixed embedding dimension and multiplicity floor.
    Extremal {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        min_multiplicity: u64,
        #[arg(long)]
        max_genus: usize,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn workers() -> Result<usize, String> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got `{v}`")),
        Err(_) => Ok(1),
    }
}

fn sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Analyze { gens, format, out } => {
            let s = NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())?;
            let analysis = Analysis::of(&s);
            let mut w = sink(&out).map_err(|e| e.to_string())?;
            w.write_all(analysis.render(format).as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| e.to_string())?;
            Ok(analysis.record.all_ok())
        }
        Command::Enumerate {
            max_genus,
            check,
            filter,
            violations_only,
            summary,
            format,
            out,
        } => {
            let checks: BTreeSet<Check> = if check.is_empty() {
                Check::ALL.into_iter().collect()
            } else {
                check.into_iter().collect()
            };
            let opts = EnumerateOptions {
                max_genus,
                checks,
                filters: filter,
                violations_only,
                workers: workers()?,
            };
            let result = run_enumerate(&opts);
            if out.is_some() || !summary {
                let w = sink(&out).map_err(|e| e.to_string())?;
                write_records(w, &result.records, format).map_err(|e| e.to_string())?;
            }
            if summary || out.is_some() {
                let summary_format = if format == Format::Json {
                    Format::Json
                } else {
                    Format::Text
                };
                print!("{}", render_summary(&result.summary, summary_format));
            }
            Ok(result.summary.is_clean())
        }
        Command::Extremal {
            k,
            min_multiplicity,
            max_genus,
            format,
            out,
        } => {
            if k < 2 {
                return Err("--k must be at least 2".into());
            }
            let report = run_extremal(&ExtremalOptions {
                k,
                min_multiplicity,
                max_genus,
                workers: workers()?,
            });
            let mut w = sink(&out).map_err(|e| e.to_string())?;
            w.write_all(report.render(format).as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| e.to_string())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
