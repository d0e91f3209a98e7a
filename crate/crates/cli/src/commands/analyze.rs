use std::fmt::Write;

use clap::Args;
use parry_core::{factor_complexity, palindromic_complexity, Error, Mode, Result};
use serde::Serialize;

use crate::output::{csv_doc, json_doc, Format, Outcome};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    #[serde(rename = "C")]
    c: u64,
    #[serde(rename = "deltaC")]
    delta_c: u64,
    #[serde(rename = "P")]
    p: u64,
    #[serde(rename = "C_closed")]
    c_closed: Option<u64>,
    #[serde(rename = "P_closed")]
    p_closed: Option<u64>,
    /// empty when there is no closed form
    agree: Option<bool>,
}

#[derive(Serialize)]
struct Report<'a> {
    source: String,
    substitution: String,
    n_max: usize,
    closed_form: bool,
    notice: Option<&'a str>,
    agree: bool,
    rows: Vec<Row>,
}

const STURMIAN: &str = "Sturmian parameters (b = a - 1): C(n) = n + 1, oracle only";
const NO_CLOSED_FORM: &str = "not a quadratic substitution: oracle only";

pub fn run(args: &AnalyzeArgs, format: Format) -> Result<Outcome> {
    if args.n_max == 0 {
        return Err(Error::InvalidInput("--n-max must be at least 1".into()));
    }
    let source = args.source.resolve()?;
    let sub = source.substitution()?;
    let c = factor_complexity(&sub, args.n_max, Mode::Oracle)?;
    let p = palindromic_complexity(&sub, args.n_max, Mode::Oracle)?;
    let (closed, notice) = match source.quadratic() {
        Some(q) if q.is_sturmian() => (None, Some(STURMIAN)),
        Some(_) => (
            Some((
                factor_complexity(&sub, args.n_max, Mode::ClosedForm)?,
                palindromic_complexity(&sub, args.n_max, Mode::ClosedForm)?,
            )),
            None,
        ),
        None => (None, Some(NO_CLOSED_FORM)),
    };
    let rows: Vec<Row> = (1..=args.n_max)
        .map(|n| {
            let cc = closed.as_ref().map(|(ct, _)| ct.c(n));
            let pc = closed.as_ref().map(|(_, pt)| pt.p(n));
            Row {
                n,
                c: c.c(n),
                delta_c: c.delta_c(n),
                p: p.p(n),
                c_closed: cc,
                p_closed: pc,
                agree: closed
                    .as_ref()
                    .map(|_| cc == Some(c.c(n)) && pc == Some(p.p(n))),
            }
        })
        .collect();
    let disagreements: Vec<usize> = rows
        .iter()
        .filter(|r| r.agree == Some(false))
        .map(|r| r.n)
        .collect();
    // Sturmian rows must still be n + 1
    let sturmian_bad = notice == Some(STURMIAN) && rows.iter().any(|r| r.c != r.n as u64 + 1);

    let stdout = match format {
        Format::Json => json_doc(
            "analyze",
            Report {
                source: source.label(),
                substitution: sub.to_string(),
                n_max: args.n_max,
                closed_form: closed.is_some(),
                notice,
                agree: disagreements.is_empty() && !sturmian_bad,
                rows,
            },
        ),
        Format::Csv => csv_doc(&rows),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}  ({sub})", source.label()).unwrap();
            if let Some(msg) = notice {
                writeln!(s, "note: {msg}").unwrap();
            }
            if closed.is_some() {
                writeln!(
                    s,
                    "{:>5} {:>7} {:>6} {:>4} {:>8} {:>8}  agree",
                    "n", "C", "dC", "P", "C_closed", "P_closed"
                )
                .unwrap();
                for r in &rows {
                    writeln!(
                        s,
                        "{:>5} {:>7} {:>6} {:>4} {:>8} {:>8}  {}",
                        r.n,
                        r.c,
                        r.delta_c,
                        r.p,
                        r.c_closed.unwrap(),
                        r.p_closed.unwrap(),
                        if r.agree == Some(true) { "yes" } else { "NO" }
                    )
                    .unwrap();
                }
            } else {
                writeln!(s, "{:>5} {:>7} {:>6} {:>4}", "n", "C", "dC", "P").unwrap();
                for r in &rows {
                    writeln!(s, "{:>5} {:>7} {:>6} {:>4}", r.n, r.c, r.delta_c, r.p).unwrap();
                }
            }
            s
        }
    };
    let mut out = Outcome::ok(stdout);
    if let (Some(msg), Format::Csv) = (notice, format) {
        out.stderr = format!("note: {msg}\n");
    }
    if !disagreements.is_empty() {
        out = out.with_code(
            4,
            format!("oracle and closed form disagree at n = {disagreements:?}\n"),
        );
    } else if sturmian_bad {
        out = out.with_code(4, "C(n) != n + 1 on Sturmian parameters\n");
    }
    Ok(out)
}
