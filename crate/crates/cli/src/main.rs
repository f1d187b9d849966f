use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use excla_cli::{cmd_conformance, cmd_probe, cmd_solve, Format, ReportMode, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "excla", version, about = "Inf/NaN-aware dense linear algebra: probes, conformance runs and checked solves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Verbose,
    Terse,
}

#[derive(Subcommand)]
enum Command {
    /// Report how this platform's complex arithmetic, min/max and subnormals behave.
    Probe {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run the exceptional-value test catalog in both precisions.
    Conformance {
        /// iamax, nrm2, rotg, trsv, ger, gesv, regression or all; repeatable.
        #[arg(long = "routine")]
        routines: Vec<String>,
        /// Vector lengths, comma separated.
        #[arg(long = "n", value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Tolerance for approximate expectations.
        #[arg(long, default_value_t = 4)]
        ulps: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Solve A X = B from a matrix file with the checked driver.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        what: i32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        how: i32,
        #[arg(long, value_enum, default_value = "verbose")]
        report: ReportArg,
        /// Solve in single precision.
        #[arg(long)]
        f32: bool,
    },
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match cli.command {
        Command::Probe { format: f } => cmd_probe(format(f), &mut out),
        Command::Conformance { routines, sizes, ulps, format: f } => cmd_conformance(&routines, &sizes, ulps, format(f), &mut out, &mut err),
        Command::Solve { file, what, how, report, f32 } => match std::fs::read_to_string(&file) {
            Ok(text) => {
                let report = match report {
                    ReportArg::Verbose => ReportMode::Verbose,
                    ReportArg::Terse => ReportMode::Terse,
                };
                cmd_solve(&text, what, how, report, f32, &mut out, &mut err)
            }
            Err(e) => {
                eprintln!("cannot read {}: {e}", file.display());
                EXIT_USAGE
            }
        },
    };
    ExitCode::from(code as u8)
}
