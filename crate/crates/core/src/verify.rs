//! The invariant suite run per parameter point, and its fan-out over a grid.

use dashu_float::ops::Abs;
use memchr::memmem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexity::{
    closed_form_complexity_with, oracle_complexity, t_map, uv_tower, uv_tower_covering, UVTower,
};
use crate::error::Result;
use crate::numeration::{
    beta_from_renyi, beta_integers, beta_of, expansion_sum, BetaValue, ParityClass,
    QuadraticParams, RenyiExpansion, DEFAULT_PRECISION,
};
use crate::palindrome::{
    branch_uniqueness, classify_tower_centers, closed_form_palindromes_with, identity_rows,
    infinite_branches, last_palindromic_length, oracle_palindromes, palindromes_in,
    reversal_closure_probe, t_map_palindrome_check, ExtensionKind, DEFAULT_BRANCH_BUDGET,
};
use crate::substitution::{
    is_palindrome, parry_substitution, quadratic_substitution, FixedPointStream, Language,
    Substitution,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Range for the complexity, palindrome and identity comparisons.
    pub n_max: usize,
    /// Longest palindrome classified by extension count.
    pub trichotomy_max: usize,
    pub pt_samples: usize,
    /// Longest sampled factor for the T-map property.
    pub pt_max_len: usize,
    pub reversal_n: usize,
    pub interleaving_n: usize,
    pub beta_integer_gaps: usize,
    pub precision: usize,
    pub branch_budget: usize,
    /// Range for the Sturmian checks.
    pub sturmian_n: usize,
    /// Horizon for the reversal and vanishing probe of a general expansion.
    pub expansion_n: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 120,
            trichotomy_max: 200,
            pt_samples: 500,
            pt_max_len: 40,
            reversal_n: 50,
            interleaving_n: 200,
            beta_integer_gaps: 10_000,
            precision: DEFAULT_PRECISION,
            branch_budget: DEFAULT_BRANCH_BUDGET,
            sturmian_n: 60,
            expansion_n: 60,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub label: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl PointReport {
    fn new(label: String) -> Self {
        PointReport {
            label,
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records an error as a failed check instead of aborting the point.
    fn attempt(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.push(name, ok, detail),
            Err(e) => self.push(name, false, e.to_string()),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub a_max: u32,
    pub passed: bool,
    pub points_passed: usize,
    pub points_failed: usize,
    pub points: Vec<PointReport>,
}

/// Every point `2 <= a <= a_max`, `1 <= b <= a - 1`, Sturmian ones included,
/// in grid order.
pub fn full_grid(a_max: u32) -> Vec<QuadraticParams> {
    (2..=a_max)
        .flat_map(|a| (1..a).map(move |b| QuadraticParams::new(a, b).expect("inside the grid")))
        .collect()
}

/// Runs [`verify_point`] over [`full_grid`] in parallel; the report keeps
/// grid order.
pub fn verify_grid(a_max: u32, opts: &VerifyOptions) -> GridReport {
    let points: Vec<PointReport> = full_grid(a_max)
        .into_par_iter()
        .map(|p| verify_point(p, opts))
        .collect();
    let points_passed = points.iter().filter(|p| p.passed).count();
    GridReport {
        a_max,
        passed: points_passed == points.len(),
        points_passed,
        points_failed: points.len() - points_passed,
        points,
    }
}

/// The full suite for one quadratic point; Sturmian points get the
/// Sturmian subset.
pub fn verify_point(params: QuadraticParams, opts: &VerifyOptions) -> PointReport {
    if params.is_sturmian() {
        return verify_sturmian(params, opts);
    }
    let mut r = PointReport::new(format!("a={} b={}", params.a(), params.b()));
    let sub = quadratic_substitution(params);
    let a = params.a() as usize;
    let b = params.b() as usize;
    let pt_horizon = 2 * b + 1 + (a + 1) * (opts.pt_max_len + 1) + 2;
    let horizon = (opts.n_max + 2)
        .max(opts.trichotomy_max + 2)
        .max(pt_horizon)
        .max(opts.reversal_n);
    let lang = Language::new(&sub, horizon);
    r.push(
        "language",
        lang.stabilized(),
        format!(
            "factors up to length {horizon} from a prefix of {}",
            lang.prefix_len()
        ),
    );
    let cover = horizon.max(opts.trichotomy_max) + 2;
    let tower = match uv_tower_covering(params, cover, 64 * cover) {
        Ok(t) => t,
        Err(e) => {
            r.push("tower", false, e.to_string());
            return r;
        }
    };

    r.attempt("factor_complexity", || {
        let oracle = oracle_complexity(&lang, opts.n_max)?;
        let closed = closed_form_complexity_with(&tower, opts.n_max);
        Ok(match oracle.first_disagreement(&closed) {
            None => (
                true,
                format!("oracle = closed form for n <= {}", opts.n_max),
            ),
            Some(n) => (false, format!("first disagreement at n = {n}")),
        })
    });

    r.attempt("palindromic_complexity", || {
        let oracle = oracle_palindromes(&lang, opts.n_max)?;
        let closed = closed_form_palindromes_with(&tower, opts.n_max);
        Ok(match oracle.first_disagreement(&closed) {
            None => (
                true,
                format!("oracle = closed form for n <= {}", opts.n_max),
            ),
            Some(n) => (false, format!("first disagreement at n = {n}")),
        })
    });

    r.attempt("identities", || {
        let report = identity_rows(&lang, &tower, opts.n_max)?;
        let bad: Vec<usize> = report
            .rows
            .iter()
            .filter(|x| !x.passed())
            .map(|x| x.n)
            .collect();
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                format!("1 <= n <= {}", opts.n_max)
            } else {
                format!("fail at {bad:?}")
            },
        ))
    });

    r.attempt("extension_trichotomy", || {
        trichotomy(&lang, &tower, opts.trichotomy_max)
    });
    r.attempt("t_map_property", || pt_property(&lang, params, opts));
    r.attempt("reversal_closure", || {
        let rep = reversal_closure_probe(&lang, opts.reversal_n)?;
        Ok((
            rep.is_closed(),
            format!("closed up to {}", rep.closed_up_to),
        ))
    });
    r.attempt("length_interleaving", || {
        let t = uv_tower(params, opts.interleaving_n + 1, 0)?;
        Ok(match t.interleaving_violation() {
            Some(n) if n <= opts.interleaving_n => (false, format!("fails at n = {n}")),
            _ => (
                true,
                format!(
                    "|V(n)| < |U(n)| < |V(n+1)| for n <= {}",
                    opts.interleaving_n
                ),
            ),
        })
    });
    r.attempt("tower_words", || tower_words(&sub, &lang, &tower));
    r.attempt("block_structure", || Ok(block_structure(&sub, params)));
    r.attempt("tower_centers", || tower_center_relations(params));
    r.attempt("infinite_branches", || {
        let branches = infinite_branches(params, opts.branch_budget)?;
        let ok = branches.iter().all(|s| s.verified);
        let centers: Vec<String> = branches.iter().map(|s| s.center.to_string()).collect();
        let fails: Vec<&String> = branches.iter().flat_map(|s| &s.failures).collect();
        Ok((
            ok,
            if ok {
                format!("centers {centers:?}")
            } else {
                format!("{fails:?}")
            },
        ))
    });
    r.attempt("branch_uniqueness", || {
        let rep = branch_uniqueness(&lang, &tower, 50, opts.trichotomy_max)?;
        let ok = rep.iter().all(|x| x.nested);
        Ok((ok, format!("{} centers checked", rep.len())))
    });
    beta_checks(
        &mut r,
        &RenyiExpansion::quadratic(params),
        beta_of(params, opts.precision),
        &sub,
        opts,
    );
    r
}

fn verify_sturmian(params: QuadraticParams, opts: &VerifyOptions) -> PointReport {
    let mut r = PointReport::new(format!("a={} b={} (Sturmian)", params.a(), params.b()));
    let sub = quadratic_substitution(params);
    let n = opts.sturmian_n;
    let lang = Language::new(&sub, n + 2);
    r.attempt("sturmian_complexity", || {
        let t = oracle_complexity(&lang, n)?;
        let bad = t.rows.iter().find(|row| row.c != row.n as u64 + 1);
        Ok((bad.is_none(), format!("C(n) = n+1 for n <= {n}")))
    });
    r.attempt("sturmian_palindromes", || {
        let t = oracle_palindromes(&lang, n)?;
        let bad = t
            .rows
            .iter()
            .find(|row| row.p != if row.n % 2 == 0 { 1 } else { 2 });
        let one_ext = t.rows.iter().all(|row| row.one_ext_count == row.p);
        Ok((
            bad.is_none() && one_ext,
            format!("P(even) = 1, P(odd) = 2, one extension each, n <= {n}"),
        ))
    });
    r.attempt("reversal_closure", || {
        let rep = reversal_closure_probe(&lang, opts.reversal_n.min(n))?;
        Ok((
            rep.is_closed(),
            format!("closed up to {}", rep.closed_up_to),
        ))
    });
    beta_checks(
        &mut r,
        &RenyiExpansion::quadratic(params),
        beta_of(params, opts.precision),
        &sub,
        opts,
    );
    r
}

/// Suite for an explicit expansion: Parry validity is enforced on parse;
/// checks β, the β-integer coding, reversal closure, and where palindromes
/// stop.
pub fn verify_expansion(renyi: &RenyiExpansion, opts: &VerifyOptions) -> PointReport {
    let mut r = PointReport::new(format!("digits {renyi}"));
    r.push("parry_check", true, "admissible");
    let sub = match parry_substitution(renyi) {
        Ok(s) => s,
        Err(e) => {
            r.push("substitution", false, e.to_string());
            return r;
        }
    };
    let n = opts.expansion_n;
    let lang = Language::new(&sub, n + 2);
    r.attempt("reversal_closure", || {
        let rep = reversal_closure_probe(&lang, n)?;
        let expect_closed = renyi.m() == 1 && renyi.p() == 1;
        let detail = match &rep.witness {
            Some(w) => format!(
                "witness {w} at length {} (its reversal is not a factor)",
                w.len()
            ),
            None => format!("closed up to {n}"),
        };
        Ok((rep.is_closed() == expect_closed, detail))
    });
    r.attempt("palindrome_horizon", || {
        let last = last_palindromic_length(&lang, n);
        let closed = renyi.m() == 1 && renyi.p() == 1;
        let ok = closed || last.is_some_and(|l| l < n);
        let detail = match last {
            Some(l) => format!(
                "longest palindrome has length {l}; P(n) = 0 for {} <= n <= {n}",
                l + 1
            ),
            None => "no palindromes".into(),
        };
        Ok((ok, detail))
    });
    let minimal_sub = parry_substitution(&renyi.minimal()).unwrap_or_else(|_| sub.clone());
    beta_checks(
        &mut r,
        renyi,
        beta_from_renyi(renyi, opts.precision),
        &minimal_sub,
        opts,
    );
    r
}

fn beta_checks(
    r: &mut PointReport,
    renyi: &RenyiExpansion,
    beta: Result<BetaValue>,
    sub: &Substitution,
    opts: &VerifyOptions,
) {
    let beta = match beta {
        Ok(b) => b,
        Err(e) => {
            r.push("beta", false, e.to_string());
            return;
        }
    };
    r.attempt("renyi_sum", || {
        let err =
            (expansion_sum(renyi, &beta) - crate::numeration::real_int(1, beta.precision())).abs();
        let tol = crate::numeration::real_pow10(-30, beta.precision());
        Ok((
            err <= tol,
            format!("|Σ t_i β^-i - 1| = {:.3e}", crate::numeration::approx(&err)),
        ))
    });
    r.attempt("beta_integers", || {
        let count = opts.beta_integer_gaps + 1;
        let ints = beta_integers(renyi, &beta, count)?;
        let mut stream = FixedPointStream::new(sub.clone());
        let prefix = stream.prefix(opts.beta_integer_gaps);
        let first_bad = ints.letters.iter().zip(prefix).position(|(x, y)| x != y);
        Ok(match first_bad {
            None => (
                true,
                format!("first {} gaps code the fixed point", opts.beta_integer_gaps),
            ),
            Some(i) => (false, format!("gap #{i} differs from the fixed point")),
        })
    });
}

fn trichotomy(lang: &Language, tower: &UVTower, max_len: usize) -> Result<(bool, String)> {
    let mut seen = 0;
    for n in 0..=max_len {
        for rec in palindromes_in(lang, n)? {
            seen += 1;
            let is_u = tower
                .u_level_of_len(n)
                .and_then(|k| tower.u(k))
                .is_some_and(|u| *u == rec.word);
            let is_v = tower
                .v_level_of_len(n)
                .and_then(|k| tower.v(k))
                .is_some_and(|v| *v == rec.word);
            let ok = match rec.kind() {
                ExtensionKind::Maximal => is_u,
                ExtensionKind::Two => is_v,
                ExtensionKind::One => !is_u && !is_v,
            };
            if !ok {
                return Ok((
                    false,
                    format!("{} has {:?} extensions", rec.word, rec.extensions),
                ));
            }
        }
    }
    Ok((true, format!("{seen} palindromes up to length {max_len}")))
}

fn pt_property(
    lang: &Language,
    params: QuadraticParams,
    opts: &VerifyOptions,
) -> Result<(bool, String)> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(opts.seed ^ ((params.a() as u64) << 32 | params.b() as u64));
    let prefix = lang.prefix();
    let window = prefix.len() - opts.pt_max_len;
    let mut palindromes = 0;
    for _ in 0..opts.pt_samples {
        let len = rng.gen_range(0..=opts.pt_max_len);
        let start = rng.gen_range(0..window);
        let p = &prefix[start..start + len];
        let check = t_map_palindrome_check(lang, p, params)?;
        palindromes += check.is_pal_p as usize;
        if !check.holds() {
            return Ok((false, format!("fails for {}", check.word)));
        }
        // T(w) is a factor iff w is
        let mut q = p.to_vec();
        q.push(rng.gen_range(0..2));
        let tq = t_map(&q, params)?;
        if lang.contains(&q) != lang.contains(tq.letters()) {
            return Ok((
                false,
                format!(
                    "membership of {} and its image differ",
                    crate::substitution::Word::new(q)
                ),
            ));
        }
    }
    Ok((
        true,
        format!("{} samples, {palindromes} palindromes", opts.pt_samples),
    ))
}

fn tower_words(sub: &Substitution, lang: &Language, tower: &UVTower) -> Result<(bool, String)> {
    let longest = tower
        .u_words()
        .iter()
        .chain(tower.v_words())
        .map(|w| w.len())
        .max()
        .unwrap_or(0);
    let mut stream = FixedPointStream::new(sub.clone());
    let prefix = stream.prefix(64 * longest.max(1)).to_vec();
    for (k, w) in tower.u_words().iter().chain(tower.v_words()).enumerate() {
        if memmem::find(&prefix, w.letters()).is_none() {
            return Ok((
                false,
                format!("tower word #{k} (length {}) not found", w.len()),
            ));
        }
    }
    // maximal left special / total bispecial, where the language reaches
    let mut checked = 0;
    for (u, v) in tower.u_words().iter().zip(tower.v_words()) {
        if u.len() + 2 > lang.max_len() {
            break;
        }
        let ext = |w: &[u8], z: u8| {
            let mut x = w.to_vec();
            x.push(z);
            lang.is_left_special(&x)
        };
        let u_ok =
            lang.is_left_special(u.letters()) && !ext(u.letters(), 0) && !ext(u.letters(), 1);
        let v_ok = ext(v.letters(), 0) && ext(v.letters(), 1);
        if !(u_ok && v_ok) {
            return Ok((
                false,
                format!("level {} fails the special-factor shape", checked + 1),
            ));
        }
        checked += 1;
    }
    Ok((
        true,
        format!("all tower words are factors; {checked} levels special-checked"),
    ))
}

fn block_structure(sub: &Substitution, params: QuadraticParams) -> (bool, String) {
    let mut stream = FixedPointStream::new(sub.clone());
    let u = stream.prefix(100_000);
    let (a, b) = (params.a() as usize, params.b() as usize);
    // interior blocks: between two 1s
    let ones: Vec<usize> = u
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .map(|(i, _)| i)
        .collect();
    let bad = ones
        .windows(2)
        .map(|w| w[1] - w[0] - 1)
        .find(|&r| r != a && r != b);
    match bad {
        None => (true, format!("every 0-block has length {a} or {b}")),
        Some(r) => (false, format!("0-block of length {r}")),
    }
}

/// Center labels and central-factor relations against the per-class table.
fn tower_center_relations(params: QuadraticParams) -> Result<(bool, String)> {
    let tower = uv_tower(params, 8, 200_000)?;
    let rows = classify_tower_centers(&tower)?;
    let (v_step, u_lag) = match params.parity_class() {
        ParityClass::EvenBOddA => (2, 0),
        ParityClass::BothEven => (2, 1),
        ParityClass::OddBEvenA => (3, 0),
        ParityClass::BothOdd => (1, 2),
    };
    for row in &rows {
        let n = row.n;
        if tower.v(n + v_step).is_some() && row.v_central_in != Some(n + v_step) {
            return Ok((
                false,
                format!(
                    "V({n}) central in {:?}, expected V({})",
                    row.v_central_in,
                    n + v_step
                ),
            ));
        }
        if n > u_lag && tower.u(n).is_some() && row.u_central_v != Some(n - u_lag) {
            return Ok((
                false,
                format!(
                    "U({n}) has central V({:?}), expected V({})",
                    row.u_central_v,
                    n - u_lag
                ),
            ));
        }
        for w in tower.u(n).into_iter().chain(tower.v(n)) {
            if !is_palindrome(w.letters()) {
                return Ok((
                    false,
                    format!("tower word at level {n} is not a palindrome"),
                ));
            }
        }
    }
    Ok((true, format!("{} levels", rows.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            n_max: 40,
            trichotomy_max: 60,
            pt_samples: 50,
            pt_max_len: 12,
            interleaving_n: 40,
            beta_integer_gaps: 500,
            branch_budget: 500,
            sturmian_n: 30,
            expansion_n: 30,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn one_point_per_class_passes() {
        for (a, b) in [(5, 2), (4, 2), (4, 1), (3, 1)] {
            let r = verify_point(QuadraticParams::new(a, b).unwrap(), &quick());
            let fails: Vec<_> = r.failures().collect();
            assert!(r.passed, "({a},{b}): {fails:?}");
        }
    }

    #[test]
    fn sturmian_subset() {
        let r = verify_point(QuadraticParams::new(2, 1).unwrap(), &quick());
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.check("sturmian_complexity").is_some());
        assert!(r.check("factor_complexity").is_none());
    }

    #[test]
    fn grid_order_and_size() {
        let g = full_grid(4);
        let labels: Vec<(u32, u32)> = g.iter().map(|p| (p.a(), p.b())).collect();
        assert_eq!(labels, [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]);
    }

    #[test]
    fn expansion_with_longer_preperiod() {
        let renyi: RenyiExpansion = "2 1 (1)".parse().unwrap();
        let r = verify_expansion(&renyi, &quick());
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.check("reversal_closure").unwrap().detail.contains("102"));
    }
}
