//! `gamma-ratio`: evaluate gamma-function ratios and their asymptotic
//! expansions, classify points by region, reproduce the golden tables and
//! run the verification suites.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical domain
//! error, 3 fixture mismatch, 4 verification failure.

mod commands;
mod record;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gamma_ratio::verify::{FixtureSource, Suite, SuiteOptions, TableId};
use gamma_ratio::Variant;

use commands::{Output, PointArgs, ScanArgs, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "gamma-ratio", version, about = "Gamma-function ratios and their asymptotic expansions")]
struct Cli {
    /// Output format; json is one object per line.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Point {
    #[arg(short = 'a', allow_negative_numbers = true)]
    a: f64,
    #[arg(short = 'b', allow_negative_numbers = true)]
    b: f64,
    #[arg(short = 'c', allow_negative_numbers = true)]
    c: f64,
    /// The large parameter (need not be an integer).
    #[arg(short = 'n', allow_negative_numbers = true)]
    n: f64,
}

#[derive(Debug, Args)]
struct FixtureArgs {
    /// Directory holding table_<ID>.csv fixtures; defaults to
    /// $GAMMA_RATIO_FIXTURE_DIR, then to the built-in copies.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

impl FixtureArgs {
    fn source(&self) -> FixtureSource {
        match &self.fixtures {
            Some(dir) => FixtureSource::Dir(dir.clone()),
            None => FixtureSource::from_env(),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact ratio, partial sums, closed-form limit and regions at one point.
    Eval {
        #[command(flatten)]
        point: Point,
        /// Truncation order.
        #[arg(short = 'M', long = "order")]
        order: usize,
        /// Restrict to one series (default: both).
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
    },
    /// Convergence/validity regions of both series at one point.
    Classify {
        #[command(flatten)]
        point: Point,
    },
    /// Reproduce a golden table and diff it against its fixture.
    Table {
        /// T1, T2, T3a, T3b, T4a, T4b or all.
        #[arg(value_parser = parse_table)]
        id: TableChoice,
        #[command(flatten)]
        fixtures: FixtureArgs,
    },
    /// Evaluate over an arithmetic grid of n.
    Scan {
        #[arg(short = 'a', allow_negative_numbers = true)]
        a: f64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        b: f64,
        #[arg(short = 'c', allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        n_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        n_max: f64,
        #[arg(long, default_value_t = 1.0)]
        n_step: f64,
        #[arg(short = 'M', long = "order")]
        order: usize,
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
    },
    /// Run verification suites.
    Verify {
        /// oracle, decay, limit, tables or all.
        #[arg(value_parser = parse_suite, default_value = "all")]
        which: Suite,
        /// Number of random points for the oracle suite.
        #[arg(long, default_value_t = gamma_ratio::verify::suite::DEFAULT_ORACLE_POINTS)]
        points: usize,
        #[arg(long, default_value_t = gamma_ratio::verify::suite::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        fixtures: FixtureArgs,
    },
}

#[derive(Debug, Clone, Copy)]
enum TableChoice {
    One(TableId),
    All,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_table(s: &str) -> Result<TableChoice, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(TableChoice::All)
    } else {
        s.parse().map(TableChoice::One)
    }
}

fn run(command: Command) -> Output {
    match command {
        Command::Eval {
            point,
            order,
            variant,
        } => commands::eval(PointArgs {
            a: point.a,
            b: point.b,
            c: point.c,
            n: point.n,
            order: Some(order),
            variant,
        }),
        Command::Classify { point } => commands::classify_point(PointArgs {
            a: point.a,
            b: point.b,
            c: point.c,
            n: point.n,
            order: None,
            variant: None,
        }),
        Command::Table { id, fixtures } => {
            let which = match id {
                TableChoice::One(id) => Some(id),
                TableChoice::All => None,
            };
            commands::table(which, &fixtures.source())
        }
        Command::Scan {
            a,
            b,
            c,
            n_min,
            n_max,
            n_step,
            order,
            variant,
        } => commands::scan(ScanArgs {
            a,
            b,
            c,
            n_min,
            n_max,
            n_step,
            order,
            variant,
        }),
        Command::Verify {
            which,
            points,
            seed,
            fixtures,
        } => commands::verify(
            which,
            &SuiteOptions {
                oracle_points: points,
                seed,
                fixtures: fixtures.source(),
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let output = run(cli.command);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match cli.format {
        Format::Text => out.write_all(output.text.as_bytes()),
        Format::Json => record::write_json(&mut out, &output.records),
        Format::Csv => record::write_csv(&mut out, &output.records),
    };
    if written.and_then(|_| out.flush()).is_err() {
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(output.exit_code as u8)
}
