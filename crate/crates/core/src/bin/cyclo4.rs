use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cyclo4::commands::{
    cmd_classes, cmd_lc, cmd_seq, cmd_sweep, cmd_verify, Format, Method, Output,
};
use cyclo4::verification::ReportOptions;
use cyclo4::Error;

const EXIT_INVALID: u8 = 1;
const EXIT_FAILED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Quaternary cyclotomic sequences of period 2p and their linear complexity.
#[derive(Parser)]
#[command(name = "cyclo4", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator and the classes D0, D1, E0, E1 modulo 2p.
    Classes {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print one period of the sequence.
    Seq {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the linear complexity and, except for `theorem`, a witness.
    Lc {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "reeds-sloane")]
        method: Method,
        /// Allow brute force above p = 7.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the algebraic checks for p, one line per check.
    Verify {
        #[arg(long)]
        p: u64,
        /// Comma-separated check names, e.g. `s0-quadratic,s0-value`.
        #[arg(long, alias = "checks")]
        lemmas: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare Reeds–Sloane with the closed form over a range of primes.
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

fn emit(out: Output) -> ExitCode {
    print!("{}", out.body);
    ExitCode::from(if out.failed { EXIT_FAILED } else { 0 })
}

fn run(cli: Cli) -> Result<ExitCode, (u8, String)> {
    let fail = |e: Error| (exit_code(&e), e.to_string());
    match cli.command {
        Command::Classes { p, format } => cmd_classes(p, format).map(emit).map_err(fail),
        Command::Seq { p, format } => cmd_seq(p, format).map(emit).map_err(fail),
        Command::Lc { p, method, force, format } => {
            cmd_lc(p, method, force, format).map(emit).map_err(fail)
        }
        Command::Verify { p, lemmas, format } => {
            let opts = ReportOptions::from_env().map_err(fail)?;
            cmd_verify(p, lemmas.as_deref(), &opts, format).map(emit).map_err(fail)
        }
        Command::Sweep { from, to, out, format } => {
            let sweep = cmd_sweep(from, to, format).map_err(fail)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &sweep.body)
                        .map_err(|e| (EXIT_INVALID, format!("{}: {e}", path.display())))?;
                    println!("{}", sweep.summary());
                }
                None => {
                    print!("{}", sweep.body);
                    eprintln!("{}", sweep.summary());
                }
            }
            Ok(ExitCode::from(if sweep.mismatches() > 0 { EXIT_FAILED } else { 0 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
