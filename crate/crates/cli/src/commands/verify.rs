use std::fmt::Write;

use clap::Args;
use parry_core::numeration::check_precision;
use parry_core::verify::{
    full_grid, verify_expansion, verify_grid, verify_point, GridReport, PointReport, VerifyOptions,
};
use parry_core::{Error, Result};
use serde::Serialize;

use crate::output::{csv_doc, json_doc, Format, Outcome};
use crate::source::{Source, SourceArgs};

/// Largest grid run without complaint.
pub const MAX_POINTS: usize = 100;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verify one point (or one expansion) instead of a grid
    #[command(flatten)]
    pub source: SourceArgs,
    /// Grid bound: every 2 <= a <= a_max, 1 <= b <= a - 1
    #[arg(long, default_value_t = 6, conflicts_with_all = ["a", "digits"])]
    pub a_max: u32,
    #[arg(long, default_value_t = 120)]
    pub n_max: usize,
    /// Number of β-integer gaps compared with the fixed point
    #[arg(long, default_value_t = 10_000)]
    pub gaps: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    point: &'a str,
    check: &'a str,
    passed: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct FailureDump<'a> {
    points: Vec<FailedPoint<'a>>,
}

#[derive(Serialize)]
struct FailedPoint<'a> {
    label: &'a str,
    failures: Vec<&'a parry_core::verify::Check>,
}

pub fn run(args: &VerifyArgs, format: Format, precision: usize) -> Result<Outcome> {
    let opts = VerifyOptions {
        n_max: args.n_max,
        beta_integer_gaps: args.gaps,
        precision,
        seed: args.seed,
        ..VerifyOptions::default()
    };
    if args.n_max == 0 {
        return Err(Error::InvalidInput("--n-max must be at least 1".into()));
    }
    // bad precision is an error, not a failed check
    check_precision(precision)?;

    let report = if args.source.is_given() {
        let point = match args.source.resolve()? {
            Source::Quadratic(p) => verify_point(p, &opts),
            Source::Expansion(r) => verify_expansion(&r, &opts),
        };
        let passed = point.passed as usize;
        GridReport {
            a_max: 0,
            passed: point.passed,
            points_passed: passed,
            points_failed: 1 - passed,
            points: vec![point],
        }
    } else {
        if args.a_max < 2 {
            return Err(Error::InvalidInput("--a-max must be at least 2".into()));
        }
        let count = full_grid(args.a_max).len();
        if count > MAX_POINTS {
            return Err(Error::InvalidInput(format!(
                "--a-max {} gives {count} parameter points; the limit is {MAX_POINTS}",
                args.a_max
            )));
        }
        verify_grid(args.a_max, &opts)
    };

    let stdout = match format {
        Format::Json => json_doc("verify", &report),
        Format::Csv => csv_doc(report.points.iter().flat_map(|p| {
            p.checks.iter().map(move |c| CsvRow {
                point: &p.label,
                check: &c.name,
                passed: c.passed,
                detail: &c.detail,
            })
        })),
        Format::Text => text(&report),
    };
    let out = Outcome::ok(stdout);
    if report.passed {
        return Ok(out);
    }
    let dump = FailureDump {
        points: report
            .points
            .iter()
            .filter(|p| !p.passed)
            .map(|p| FailedPoint {
                label: &p.label,
                failures: p.failures().collect(),
            })
            .collect(),
    };
    Ok(out.with_code(1, json_doc("verify_failures", dump)))
}

fn text(report: &GridReport) -> String {
    let mut s = String::new();
    for p in &report.points {
        point_text(&mut s, p);
    }
    writeln!(
        s,
        "{} points: {} passed, {} failed",
        report.points.len(),
        report.points_passed,
        report.points_failed
    )
    .unwrap();
    s
}

fn point_text(s: &mut String, p: &PointReport) {
    writeln!(s, "{}: {}", p.label, if p.passed { "PASS" } else { "FAIL" }).unwrap();
    for c in &p.checks {
        writeln!(
            s,
            "  [{}] {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        )
        .unwrap();
    }
}
