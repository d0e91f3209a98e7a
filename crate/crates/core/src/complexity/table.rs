use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complexity::{uv_tower_covering, UVTower};
use crate::error::{Error, Result};
use crate::numeration::QuadraticParams;
use crate::substitution::{Language, Substitution};

/// Where a table's values come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Counting enumerated factors.
    Oracle,
    /// Interval formulas over the exact tower lengths.
    ClosedForm,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Oracle => "oracle",
            Mode::ClosedForm => "closed_form",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Mode::Oracle),
            "closed_form" | "closed-form" => Ok(Mode::ClosedForm),
            _ => Err(Error::input(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityRow {
    pub n: usize,
    #[serde(rename = "C")]
    pub c: u64,
    #[serde(rename = "deltaC")]
    pub delta_c: u64,
    pub source: Mode,
}

/// `C(n)` and `ΔC(n) = C(n+1) - C(n)` for `1 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityTable {
    pub rows: Vec<ComplexityRow>,
}

impl ComplexityTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// `C(n)` for `1 <= n <= n_max`.
    pub fn c(&self, n: usize) -> u64 {
        self.rows[n - 1].c
    }

    pub fn delta_c(&self, n: usize) -> u64 {
        self.rows[n - 1].delta_c
    }

    /// CSV with header `n,C,deltaC,source`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
    }

    /// First `n` where the two tables disagree on `C(n)` or `ΔC(n)`.
    pub fn first_disagreement(&self, other: &ComplexityTable) -> Option<usize> {
        self.rows
            .iter()
            .zip(&other.rows)
            .find(|(x, y)| x.c != y.c || x.delta_c != y.delta_c)
            .map(|(x, _)| x.n)
            .or_else(|| {
                (self.rows.len() != other.rows.len())
                    .then(|| self.rows.len().min(other.rows.len()) + 1)
            })
    }
}

/// Counts factors in `lang`, which must hold lengths up to `n_max + 1`.
pub fn oracle_complexity(lang: &Language, n_max: usize) -> Result<ComplexityTable> {
    if n_max + 1 > lang.max_len() {
        return Err(Error::input(format!(
            "complexity up to {n_max} needs factors of length {}",
            n_max + 1
        )));
    }
    let rows = (1..=n_max)
        .map(|n| {
            let c = lang.complexity(n) as u64;
            ComplexityRow {
                n,
                c,
                delta_c: lang.complexity(n + 1) as u64 - c,
                source: Mode::Oracle,
            }
        })
        .collect();
    Ok(ComplexityTable { rows })
}

/// `ΔC(n)`: 2 when `|V^(k)| < n <= |U^(k)|` for some `k`, else 1.
pub fn closed_form_delta_c(tower: &UVTower, n: usize) -> u64 {
    if tower.interval_containing(n).is_some() {
        2
    } else {
        1
    }
}

/// Integrates the closed-form `ΔC` from `C(1) = 2`.
pub fn closed_form_complexity(params: QuadraticParams, n_max: usize) -> Result<ComplexityTable> {
    let tower = uv_tower_covering(params, n_max + 1, 0)?;
    Ok(closed_form_complexity_with(&tower, n_max))
}

/// As [`closed_form_complexity`] with a tower that covers `n_max`.
pub fn closed_form_complexity_with(tower: &UVTower, n_max: usize) -> ComplexityTable {
    let mut c = 2u64;
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let delta_c = closed_form_delta_c(tower, n);
        rows.push(ComplexityRow {
            n,
            c,
            delta_c,
            source: Mode::ClosedForm,
        });
        c += delta_c;
    }
    ComplexityTable { rows }
}

/// Factor complexity of the fixed point of `sub` for `1 <= n <= n_max`.
pub fn factor_complexity(sub: &Substitution, n_max: usize, mode: Mode) -> Result<ComplexityTable> {
    match mode {
        Mode::Oracle => oracle_complexity(&Language::new(sub, n_max + 1), n_max),
        Mode::ClosedForm => {
            let params = sub.quadratic_params().ok_or_else(|| {
                Error::unsupported(format!(
                    "no closed form for {sub}: not a quadratic substitution"
                ))
            })?;
            closed_form_complexity(params, n_max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{QuadraticParams, RenyiExpansion};
    use crate::substitution::{parry_substitution, quadratic_substitution};

    fn q(a: u32, b: u32) -> Substitution {
        quadratic_substitution(QuadraticParams::new(a, b).unwrap())
    }

    #[test]
    fn three_one_both_modes() {
        let expected = [2, 3, 5, 6, 7, 8, 9, 10, 12, 14, 16, 18];
        let delta = [1, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1];
        for mode in [Mode::Oracle, Mode::ClosedForm] {
            let t = factor_complexity(&q(3, 1), 12, mode).unwrap();
            let c: Vec<u64> = t.rows.iter().map(|r| r.c).collect();
            let d: Vec<u64> = t.rows.iter().map(|r| r.delta_c).collect();
            assert_eq!(c, expected, "{mode}");
            assert_eq!(d, delta, "{mode}");
        }
    }

    #[test]
    fn sturmian_oracle_only() {
        let t = factor_complexity(&q(2, 1), 60, Mode::Oracle).unwrap();
        assert!(t.rows.iter().all(|r| r.c == r.n as u64 + 1));
        assert!(matches!(
            factor_complexity(&q(2, 1), 5, Mode::ClosedForm),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn non_quadratic_has_no_closed_form() {
        let r: RenyiExpansion = "3 1 (2)".parse().unwrap();
        let sub = parry_substitution(&r).unwrap();
        assert!(matches!(
            factor_complexity(&sub, 5, Mode::ClosedForm),
            Err(Error::Unsupported(_))
        ));
        assert!(factor_complexity(&sub, 30, Mode::Oracle).is_ok());
    }

    #[test]
    fn csv_header() {
        let t = factor_complexity(&q(3, 1), 2, Mode::ClosedForm).unwrap();
        assert_eq!(
            t.to_csv(),
            "n,C,deltaC,source\n1,2,1,closed_form\n2,3,2,closed_form\n"
        );
    }

    #[test]
    fn disagreement_is_located() {
        let a = factor_complexity(&q(3, 1), 10, Mode::Oracle).unwrap();
        let mut b = a.clone();
        assert_eq!(a.first_disagreement(&b), None);
        b.rows[4].c += 1;
        assert_eq!(a.first_disagreement(&b), Some(5));
    }
}
