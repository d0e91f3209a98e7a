//! `parry`: factor and palindromic complexity of Parry-number fixed points.

mod commands;
mod output;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use parry_core::Error;

use commands::{analyze, numeration, verify, words};
use output::{Format, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "parry",
    version,
    about = "Infinite words of quadratic and general Parry numbers"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Working precision in decimal digits for real arithmetic
    #[arg(long, env = "PARRY_PRECISION", default_value_t = parry_core::numeration::DEFAULT_PRECISION, global = true)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// C(n), ΔC(n) and P(n), oracle against closed form
    Analyze(analyze::AnalyzeArgs),
    /// Run the invariant suite over a grid, one point, or an expansion
    Verify(verify::VerifyArgs),
    /// Prefix of the fixed point
    Word(words::WordArgs),
    /// Left and right special factors of one length, with the U/V tower
    Specials(words::LengthArgs),
    /// Palindromes of one length and the infinite palindromic branches
    Palindromes(words::PalindromeArgs),
    /// Parry admissibility of a digit sequence
    ParryCheck(numeration::ParryCheckArgs),
    /// Greedy β-expansion of a number
    BetaExpand(numeration::BetaExpandArgs),
    /// First β-integers and the coding of their gaps
    BetaIntegers(numeration::BetaIntegersArgs),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::InvalidParams { .. } => 2,
        Error::Precision(_) => 3,
        Error::Verification { .. } => 4,
        Error::Unsupported(_) => 5,
    }
}

fn dispatch(cli: &Cli) -> parry_core::Result<Outcome> {
    let (f, p) = (cli.format, cli.precision);
    match &cli.command {
        Command::Analyze(a) => analyze::run(a, f),
        Command::Verify(a) => verify::run(a, f, p),
        Command::Word(a) => words::word(a, f),
        Command::Specials(a) => words::specials(a, f),
        Command::Palindromes(a) => words::palindromes(a, f),
        Command::ParryCheck(a) => numeration::parry_check(a, f),
        Command::BetaExpand(a) => numeration::beta_expand_cmd(a, f, p),
        Command::BetaIntegers(a) => numeration::beta_integers_cmd(a, f, p),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = dispatch(&cli).unwrap_or_else(|e| {
        let mut msg = format!("error: {e}\n");
        if let Error::Verification { context, .. } = &e {
            msg += &serde_json::to_string_pretty(context).unwrap_or_default();
            msg.push('\n');
        }
        Outcome {
            stdout: String::new(),
            stderr: msg,
            code: exit_code(&e),
        }
    });
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
