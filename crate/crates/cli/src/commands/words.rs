//! `word`, `specials` and `palindromes`.

use std::fmt::Write;

use clap::Args;
use parry_core::complexity::{
    left_special_factors, uv_tower_covering, TowerLevel, DEFAULT_MATERIALIZE_CAP,
};
use parry_core::palindrome::{infinite_branches, palindromes_of_length, BranchSpec};
use parry_core::{fixed_point_prefix, Error, Result};
use serde::Serialize;

use crate::output::{csv_with_header, json_doc, Format, Outcome};
use crate::source::SourceArgs;

/// Tower words longer than this are shown by length only.
const WORD_DISPLAY_LIMIT: usize = 200;

#[derive(Args, Debug)]
pub struct WordArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 50)]
    pub length: usize,
}

pub fn word(args: &WordArgs, format: Format) -> Result<Outcome> {
    let source = args.source.resolve()?;
    let sub = source.substitution()?;
    let w = fixed_point_prefix(&sub, args.length);
    let rendered = w.render(sub.alphabet_size());
    #[derive(Serialize)]
    struct Doc<'a> {
        source: String,
        substitution: &'a parry_core::Substitution,
        length: usize,
        word: &'a str,
    }
    #[derive(Serialize)]
    struct Row {
        index: usize,
        letter: u8,
    }
    Ok(Outcome::ok(match format {
        Format::Text => format!("{rendered}\n"),
        Format::Json => json_doc(
            "word",
            Doc {
                source: source.label(),
                substitution: &sub,
                length: w.len(),
                word: &rendered,
            },
        ),
        Format::Csv => csv_with_header(
            &["index", "letter"],
            w.letters()
                .iter()
                .enumerate()
                .map(|(index, &letter)| Row { index, letter }),
        ),
    }))
}

#[derive(Args, Debug)]
pub struct LengthArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Factor length
    #[arg(long)]
    pub length: usize,
}

#[derive(Serialize)]
struct SpecialRow {
    word: String,
    side: &'static str,
    extensions: String,
}

fn letters(ls: &[u8]) -> String {
    ls.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn specials(args: &LengthArgs, format: Format) -> Result<Outcome> {
    let source = args.source.resolve()?;
    let sub = source.substitution()?;
    let rep = left_special_factors(&sub, args.length)?;
    // the tower only exists for non-Sturmian quadratic parameters
    let tower = match source.quadratic() {
        Some(p) if !p.is_sturmian() => {
            Some(uv_tower_covering(p, args.length, DEFAULT_MATERIALIZE_CAP)?)
        }
        _ => None,
    };
    let interval = tower
        .as_ref()
        .and_then(|t| t.interval_containing(args.length));
    let rows: Vec<SpecialRow> = rep
        .left_extensions
        .iter()
        .map(|(w, e)| SpecialRow {
            word: w.to_string(),
            side: "left",
            extensions: letters(e),
        })
        .chain(rep.right_extensions.iter().map(|(w, e)| SpecialRow {
            word: w.to_string(),
            side: "right",
            extensions: letters(e),
        }))
        .collect();

    #[derive(Serialize)]
    struct Doc<'a> {
        source: String,
        length: usize,
        #[serde(rename = "deltaC")]
        delta_c: usize,
        specials: &'a [SpecialRow],
        /// `k` with `|V_k| < n <= |U_k|`, when there is one
        tower_interval: Option<usize>,
        tower: Option<Vec<TowerLevel>>,
    }
    Ok(Outcome::ok(match format {
        Format::Json => json_doc(
            "specials",
            Doc {
                source: source.label(),
                length: args.length,
                delta_c: rep.left_excess(),
                specials: &rows,
                tower_interval: interval,
                tower: tower.as_ref().map(|t| t.levels(WORD_DISPLAY_LIMIT)),
            },
        ),
        Format::Csv => csv_with_header(&["word", "side", "extensions"], &rows),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{}, n = {}: {} left special, {} right special",
                source.label(),
                args.length,
                rep.left.len(),
                rep.right.len()
            )
            .unwrap();
            for r in &rows {
                writeln!(s, "  {:<5} {}  [{}]", r.side, r.word, r.extensions).unwrap();
            }
            if let Some(t) = &tower {
                match interval {
                    Some(k) => writeln!(s, "|V({k})| < {} <= |U({k})|", args.length).unwrap(),
                    None => {
                        writeln!(s, "{} lies in no interval (|V(k)|, |U(k)|]", args.length).unwrap()
                    }
                }
                for level in t.levels(WORD_DISPLAY_LIMIT) {
                    tower_line(&mut s, &level);
                }
            }
            s
        }
    }))
}

fn tower_line(s: &mut String, level: &TowerLevel) {
    let show = |len: &str, w: &Option<String>| match w {
        Some(w) => w.clone(),
        None => format!("<{len} letters>"),
    };
    writeln!(s, "  V({}) = {}", level.n, show(&level.v_len, &level.v)).unwrap();
    writeln!(s, "  U({}) = {}", level.n, show(&level.u_len, &level.u)).unwrap();
}

#[derive(Args, Debug)]
pub struct PalindromeArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Branch central factors are built past this many letters
    #[arg(long, default_value_t = 1_000)]
    pub branch_budget: usize,
}

#[derive(Serialize)]
struct PalRow {
    word: String,
    center: String,
    kind: parry_core::palindrome::ExtensionKind,
    extensions: String,
}

pub fn palindromes(args: &PalindromeArgs, format: Format) -> Result<Outcome> {
    let source = args.length.source.resolve()?;
    let sub = source.substitution()?;
    let n = args.length.length;
    let rows: Vec<PalRow> = palindromes_of_length(&sub, n)
        .into_iter()
        .map(|r| PalRow {
            word: r.word.to_string(),
            center: r.center.to_string(),
            kind: r.kind(),
            extensions: letters(&r.extensions),
        })
        .collect();
    let branches: Vec<BranchSpec> = match source.quadratic() {
        Some(p) if !p.is_sturmian() => {
            if args.branch_budget == 0 {
                return Err(Error::InvalidInput(
                    "--branch-budget must be at least 1".into(),
                ));
            }
            infinite_branches(p, args.branch_budget)?
        }
        _ => Vec::new(),
    };
    if let Some(b) = branches.iter().find(|b| !b.verified) {
        return Err(Error::Verification {
            summary: format!("branch with center {} failed: {:?}", b.center, b.failures),
            context: serde_json::to_value(b).expect("serializes"),
        });
    }

    #[derive(Serialize)]
    struct Doc<'a> {
        source: String,
        length: usize,
        #[serde(rename = "P")]
        p: usize,
        palindromes: &'a [PalRow],
        branches: &'a [BranchSpec],
    }
    Ok(Outcome::ok(match format {
        Format::Json => json_doc(
            "palindromes",
            Doc {
                source: source.label(),
                length: n,
                p: rows.len(),
                palindromes: &rows,
                branches: &branches,
            },
        ),
        Format::Csv => csv_with_header(&["word", "center", "kind", "extensions"], &rows),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}, n = {n}: P = {}", source.label(), rows.len()).unwrap();
            for r in &rows {
                let kind = serde_json::to_value(r.kind).unwrap();
                writeln!(
                    s,
                    "  {}  center {}  {}  [{}]",
                    r.word,
                    r.center,
                    kind.as_str().unwrap(),
                    r.extensions
                )
                .unwrap();
            }
            for b in &branches {
                let gen = match b.generator {
                    parry_core::palindrome::BranchGenerator::V { start, step } => {
                        format!("V({start} + {step}i)")
                    }
                    parry_core::palindrome::BranchGenerator::W => "W(n)".into(),
                };
                let lens: Vec<String> = b.lengths.iter().map(|l| l.to_string()).collect();
                writeln!(
                    s,
                    "branch center {}: {gen}, lengths {}",
                    b.center,
                    lens.join(" ")
                )
                .unwrap();
            }
            s
        }
    }))
}
