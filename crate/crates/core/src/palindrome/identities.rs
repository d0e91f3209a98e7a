use serde::Serialize;

use crate::complexity::{uv_tower_covering, UVTower};
use crate::error::{Error, Result};
use crate::numeration::QuadraticParams;
use crate::palindrome::palindrome_counts;
use crate::substitution::{quadratic_substitution, Language};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub n: usize,
    #[serde(rename = "P_n")]
    pub p_n: i64,
    #[serde(rename = "P_n1")]
    pub p_n1: i64,
    #[serde(rename = "P_n2")]
    pub p_n2: i64,
    #[serde(rename = "deltaC_n")]
    pub delta_c: i64,
    #[serde(rename = "deltaC_n1")]
    pub delta_c_next: i64,
    /// +1 at `|V^(k)|`, -1 at `|U^(k)|`, else 0.
    pub expected_step: i64,
    /// `P(n+1) + P(n) = ΔC(n) + 2`
    pub sum_ok: bool,
    /// `P(n+2) - P(n) = expected_step`
    pub step_ok: bool,
    /// `ΔC(n+1) - ΔC(n) = P(n+2) - P(n)`
    pub second_difference_ok: bool,
}

impl IdentityRow {
    pub fn passed(&self) -> bool {
        self.sum_ok && self.step_ok && self.second_difference_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub a: u32,
    pub b: u32,
    pub n_max: usize,
    pub passed: bool,
    pub rows: Vec<IdentityRow>,
}

/// Evaluates the three identities on enumerated counts. `lang` must hold
/// factors of length `n_max + 2` and `tower` must cover `n_max`.
pub fn identity_rows(lang: &Language, tower: &UVTower, n_max: usize) -> Result<IdentityReport> {
    let p = palindrome_counts(lang, n_max + 2)?;
    let c = |n: usize| lang.complexity(n) as i64;
    let rows: Vec<IdentityRow> = (1..=n_max)
        .map(|n| {
            let (p_n, p_n1, p_n2) = (p[n] as i64, p[n + 1] as i64, p[n + 2] as i64);
            let delta_c = c(n + 1) - c(n);
            let delta_c_next = c(n + 2) - c(n + 1);
            let expected_step = if tower.v_level_of_len(n).is_some() {
                1
            } else if tower.u_level_of_len(n).is_some() {
                -1
            } else {
                0
            };
            IdentityRow {
                n,
                p_n,
                p_n1,
                p_n2,
                delta_c,
                delta_c_next,
                expected_step,
                sum_ok: p_n1 + p_n == delta_c + 2,
                step_ok: p_n2 - p_n == expected_step,
                second_difference_ok: delta_c_next - delta_c == p_n2 - p_n,
            }
        })
        .collect();
    let params = tower.params();
    Ok(IdentityReport {
        a: params.a(),
        b: params.b(),
        n_max,
        passed: rows.iter().all(IdentityRow::passed),
        rows,
    })
}

/// Checks the palindrome/complexity identities for `1 <= n <= n_max`;
/// any violation is an [`Error::Verification`] carrying the full report.
pub fn verify_identities(params: QuadraticParams, n_max: usize) -> Result<IdentityReport> {
    let lang = Language::new(&quadratic_substitution(params), n_max + 2);
    let tower = uv_tower_covering(params, n_max + 2, 0)?;
    let report = identity_rows(&lang, &tower, n_max)?;
    if report.passed {
        Ok(report)
    } else {
        let failing: Vec<usize> = report
            .rows
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.n)
            .collect();
        Err(Error::Verification {
            summary: format!("identities fail for {params} at n = {failing:?}"),
            context: serde_json::to_value(&report).expect("report serializes"),
        })
    }
}
