//! Command-line front end: problem files in, reports out.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ptelescoper::problem::{run_command, Flags, Report};
use ptelescoper::Error;

#[derive(Parser)]
#[command(
    name = "ptelescoper",
    about = "Decide existence of telescopers for bivariate P-recursive sequences",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Problem files (`key = value` format); processed concurrently.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Emit single-line machine-readable records instead of human text.
    #[arg(long)]
    json: bool,
    /// Write the machine-readable record(s) to this file. For
    /// `telescope`, the file is a valid operator file that `verify
    /// --operator` accepts.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Seed for the randomized identity pre-check in `verify`.
    #[arg(long)]
    seed: Option<u64>,
    /// Exit with status 4 if the verdict is not `exists`.
    #[arg(long)]
    expect_exists: bool,
    /// Stop the telescoper search at this order (overrides the bound).
    #[arg(long)]
    max_order: Option<usize>,
    /// Operator file for `verify` (default: problem path with `.tel`).
    #[arg(long)]
    operator: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the system and run compatibility/suitability diagnostics.
    Check(Common),
    /// Full additive decomposition f = Delta_x(g) + remainders.
    Reduce(Common),
    /// Decide summability and print the certificate if one exists.
    Summable(Common),
    /// Stem of the element's denominator; properness verdict.
    Stem(Common),
    /// Decide whether a telescoper exists.
    Existence(Common),
    /// Construct and verify a telescoper.
    Telescope(Common),
    /// Verify an operator file as a telescoper for the problem.
    Verify(Common),
}

fn severity(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.cmd {
        Cmd::Check(c) => ("check", c),
        Cmd::Reduce(c) => ("reduce", c),
        Cmd::Summable(c) => ("summable", c),
        Cmd::Stem(c) => ("stem", c),
        Cmd::Existence(c) => ("existence", c),
        Cmd::Telescope(c) => ("telescope", c),
        Cmd::Verify(c) => ("verify", c),
    };
    let flags = Flags {
        max_order: common.max_order,
        expect_exists: common.expect_exists,
        json: common.json,
        seed: common.seed,
        operator_path: common.operator.clone(),
    };
    let results: Vec<(PathBuf, Result<Report, Error>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = common
            .files
            .iter()
            .map(|path| {
                let flags = &flags;
                scope.spawn(move || (path.clone(), run_command(name, path, flags)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut exit = 0u8;
    let mut report_lines = String::new();
    for (path, result) in &results {
        match result {
            Ok(report) => {
                if flags.json {
                    println!("{}", report.machine());
                } else {
                    print!("{}", report.human());
                }
                report_lines.push_str(&report.machine());
                report_lines.push('\n');
                if name == "telescope" && !report.telescoper.is_empty() {
                    report_lines.push_str(&format!(
                        "coeffs = [{}]\n",
                        report.telescoper.join(", ")
                    ));
                }
                if report.expectation_violated {
                    exit = exit.max(4);
                }
            }
            Err(e) => {
                eprintln!("{}: error: {}", path.display(), e);
                exit = exit.max(severity(e));
            }
        }
    }
    if let Some(path) = &common.report {
        // machine records as comments are ignored by the operator parser
        let body = report_lines
            .lines()
            .map(|l| {
                if l.starts_with('{') {
                    format!("# {l}")
                } else {
                    l.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
            + "\n";
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("{}: error: {}", path.display(), e);
            exit = exit.max(2);
        }
    }
    ExitCode::from(exit)
}
