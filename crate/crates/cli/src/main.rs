use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use surdcf::cf::DEFAULT_MAX_STEPS;
use surdcf_cli::{report, sweep, CliError, ExitStatus};

/// Exact periodic continued fractions and quadratic irrationals.
#[derive(Parser, Debug)]
#[command(name = "surdcf", version)]
struct Cli {
    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expansion such as "[0; (1,2,2,3)]".
    Eval {
        cf: String,
        #[arg(long)]
        json: bool,
    },
    /// Expand a quadratic irrational such as "sqrt(39/44)".
    Expand {
        quad: String,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Epsilon and its ingredients for "[0; (c1,...,cn)]".
    Epsilon {
        cf: String,
        #[arg(long)]
        json: bool,
    },
    /// Check every block up to a length and digit bound.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_len: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_digit: u32,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate, re-expand and compare digit streams.
    Roundtrip {
        cf: String,
        #[arg(long, default_value_t = 200)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit<T: Serialize>(report: &T, text: String, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    } else {
        text
    }
}

fn run(command: Command) -> Result<(String, ExitStatus), CliError> {
    let ok = |s| Ok((s, ExitStatus::Success));
    match command {
        Command::Eval { cf, json } => {
            let r = report::eval(&cf)?;
            ok(emit(&r, r.to_text(), json))
        }
        Command::Expand { quad, steps, json } => {
            let r = report::expand_quad(&quad, steps)?;
            ok(emit(&r, r.to_text(), json))
        }
        Command::Epsilon { cf, json } => {
            let r = report::epsilon(&cf)?;
            ok(emit(&r, r.to_text(), json))
        }
        Command::Enumerate { max_len, max_digit, workers, json } => {
            let r = sweep::enumerate(max_len, max_digit, workers);
            eprintln!("elapsed {:.3}s", r.elapsed.as_secs_f64());
            let status = if r.violations.is_empty() { ExitStatus::Success } else { ExitStatus::Violation };
            Ok((emit(&r, r.to_text(), json), status))
        }
        Command::Roundtrip { cf, digits, json } => {
            let r = report::roundtrip(&cf, digits, DEFAULT_MAX_STEPS)?;
            let status = if r.pass { ExitStatus::Success } else { ExitStatus::Violation };
            Ok((emit(&r, r.to_text(), json), status))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, status) = match run(cli.command) {
        Ok(done) => done,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.status.code() as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output),
        None => std::io::stdout().write_all(output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(ExitStatus::Internal.code() as u8);
    }
    ExitCode::from(status.code() as u8)
}
