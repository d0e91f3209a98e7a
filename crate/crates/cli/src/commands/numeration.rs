//! `parry-check`, `beta-expand` and `beta-integers`.

use std::fmt::Write;

use clap::Args;
use parry_core::numeration::{
    approx, beta_expand, beta_from_renyi, beta_integers, parse_real, BetaIntegerRow,
};
use parry_core::{DigitSequence, Result};
use serde::Serialize;

use crate::output::{csv_with_header, json_doc, Format, Outcome};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct ParryCheckArgs {
    /// Digit sequence: preperiod then parenthesized period, e.g. "3 (1)"
    #[arg(long)]
    pub digits: String,
}

pub fn parry_check(args: &ParryCheckArgs, format: Format) -> Result<Outcome> {
    let seq: DigitSequence = args.digits.parse()?;
    let check = seq.parry_check()?;
    #[derive(Serialize)]
    struct Doc {
        digits: String,
        valid: bool,
        violating_shift: Option<usize>,
        simple: bool,
        minimal: String,
    }
    let doc = Doc {
        digits: seq.to_string(),
        valid: check.valid,
        violating_shift: check.violating_shift,
        simple: seq.is_simple(),
        minimal: seq.minimal().to_string(),
    };
    let stdout = match format {
        Format::Json => json_doc("parry_check", &doc),
        Format::Csv => csv_with_header(
            &["digits", "valid", "violating_shift", "simple", "minimal"],
            [(
                &doc.digits,
                doc.valid,
                doc.violating_shift,
                doc.simple,
                &doc.minimal,
            )],
        ),
        Format::Text => match check.violating_shift {
            None => format!(
                "{}: valid ({}, minimal form {})\n",
                doc.digits,
                if doc.simple { "simple" } else { "non-simple" },
                doc.minimal
            ),
            Some(j) => format!(
                "{}: invalid (shift starting at t_{j} is not smaller)\n",
                doc.digits
            ),
        },
    };
    let out = Outcome::ok(stdout);
    Ok(if check.valid {
        out
    } else {
        out.with_code(1, "")
    })
}

#[derive(Args, Debug)]
pub struct BetaExpandArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Nonnegative decimal number to expand
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Number of digits produced
    #[arg(long, default_value_t = 30)]
    pub count: usize,
}

pub fn beta_expand_cmd(args: &BetaExpandArgs, format: Format, precision: usize) -> Result<Outcome> {
    let source = args.source.resolve()?;
    let beta = beta_from_renyi(&source.renyi(), precision)?;
    let x = parse_real(&args.x, precision)?;
    let e = beta_expand(&x, &beta, args.count)?;
    #[derive(Serialize)]
    struct Doc<'a> {
        source: String,
        beta: String,
        x: &'a str,
        leading_exponent: i64,
        digits: &'a [u32],
        expansion: String,
    }
    #[derive(Serialize)]
    struct Row {
        exponent: i64,
        digit: u32,
    }
    let stdout = match format {
        Format::Json => json_doc(
            "beta_expand",
            Doc {
                source: source.label(),
                beta: beta.to_string(),
                x: &args.x,
                leading_exponent: e.leading_exponent,
                digits: &e.digits,
                expansion: e.to_string(),
            },
        ),
        Format::Csv => csv_with_header(
            &["exponent", "digit"],
            e.digits.iter().enumerate().map(|(i, &digit)| Row {
                exponent: e.exponent(i),
                digit,
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "beta = {}", beta).unwrap();
            writeln!(s, "x = {}", args.x).unwrap();
            writeln!(s, "expansion = {}", e).unwrap();
            writeln!(s, "leading exponent = {}", e.leading_exponent).unwrap();
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

#[derive(Args, Debug)]
pub struct BetaIntegersArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Number of β-integers, starting from 0
    #[arg(long, default_value_t = 20)]
    pub count: usize,
}

pub fn beta_integers_cmd(
    args: &BetaIntegersArgs,
    format: Format,
    precision: usize,
) -> Result<Outcome> {
    let source = args.source.resolve()?;
    let renyi = source.renyi();
    let beta = beta_from_renyi(&renyi, precision)?;
    let ints = beta_integers(&renyi, &beta, args.count)?;
    let gaps: String = ints
        .letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(if ints.letters.iter().any(|&l| l >= 10) {
            ","
        } else {
            ""
        });
    let rows = ints.rows();
    #[derive(Serialize)]
    struct Doc<'a> {
        source: String,
        beta: String,
        count: usize,
        integers: &'a [BetaIntegerRow],
        gaps: &'a str,
    }
    let stdout = match format {
        Format::Json => json_doc(
            "beta_integers",
            Doc {
                source: source.label(),
                beta: beta.to_string(),
                count: rows.len(),
                integers: &rows,
                gaps: &gaps,
            },
        ),
        Format::Csv => csv_with_header(&["index", "digits", "value"], &rows),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "beta ≈ {}", approx(beta.value())).unwrap();
            for r in &rows {
                writeln!(s, "{:>6}  {:>12}  {}", r.index, r.digits, r.value).unwrap();
            }
            writeln!(s, "gaps: {gaps}").unwrap();
            s
        }
    };
    Ok(Outcome::ok(stdout))
}
