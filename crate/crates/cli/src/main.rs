//! `slitpath`: generating functions for weighted +2/+1/-1 paths absorbed at
//! two barriers, with exact oracle checks and numeric root diagnostics.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or validation error.

mod conjecture;
mod gf;
mod output;
mod roots;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "slitpath",
    version,
    about = "Absorption generating functions for +2/+1/-1 paths between two barriers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating function and its series expansion
    #[command(after_help = gf::CSV_HELP)]
    Gf(gf::GfArgs),
    /// Compare the closed form against the independent oracles
    #[command(after_help = verify::CSV_HELP)]
    Verify(verify::VerifyArgs),
    /// Check the predicted minimal number of terms in the denominator
    #[command(after_help = conjecture::CSV_HELP)]
    Conjecture(conjecture::ConjectureArgs),
    /// Numeric checks on the characteristic cubic and its roots at one z
    #[command(after_help = roots::CSV_HELP)]
    Roots(roots::RootsArgs),
}

/// `Ok(true)`: everything passed; `Ok(false)`: a check failed;
/// `Err`: the request itself was invalid.
pub type CmdResult = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gf(args) => gf::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Conjecture(args) => conjecture::run(&args),
        Command::Roots(args) => roots::run(&args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
