use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dwork::check::Params;
use dworklines_cli::{parse_rat, plot, resolve_precision, run, CliError};

#[derive(Parser)]
#[command(name = "dworklines", version, about = "Verify the line families on the Dwork pencil")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a suite (all, dwork, dp5, pluecker, picard, fiber) or a glob on check-ids.
    Verify {
        suite: String,
        #[arg(long, default_value = "1/2")]
        psi5: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Bits for high-precision retries; defaults to $DWORKLINES_PRECISION or 128.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit sign grids of F+ and F- as CSV.
    PlotCurves {
        #[arg(long)]
        psi5: String,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, default_value_t = 3.0)]
        window: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main_inner(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Verify { suite, psi5, seed, samples, precision, format, out } => {
            let params = Params { psi5: parse_rat(&psi5)?, seed, samples, precision: resolve_precision(precision)? };
            let report = run(&suite, &params)?;
            let text = match format {
                Format::Json => report.to_json()? + "\n",
                Format::Text => report.to_text(),
            };
            emit(&text, out)?;
            Ok(report.exit_code())
        }
        Cmd::PlotCurves { psi5, grid, window, out } => {
            let g = plot(&psi5, grid, window)?;
            for w in &g.warnings {
                eprintln!("warning: {w}");
            }
            emit(&g.to_csv(), out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
