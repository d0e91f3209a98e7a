//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure. Runs without the test harness so the lines stay in order.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dashu_float::ops::Abs;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use parry_core::complexity::{
    closed_form_complexity_with, oracle_complexity, uv_tower, uv_tower_covering, UVTower,
};
use parry_core::numeration::{beta_integers, beta_of, expansion_sum, parse_real, RenyiExpansion};
use parry_core::palindrome::{
    closed_form_palindromes_with, identity_rows, last_palindromic_length, oracle_palindromes,
    palindromes_in, reversal_closure_probe, t_map_palindrome_check, ExtensionKind,
};
use parry_core::{
    fixed_point_prefix, parry_substitution, quadratic_substitution, Language, QuadraticParams,
    Substitution,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid() -> Vec<QuadraticParams> {
    common::grid()
        .into_iter()
        .map(|(a, b)| QuadraticParams::new(a as u32, b as u32).unwrap())
        .collect()
}

fn label(p: QuadraticParams) -> String {
    format!("({},{})", p.a(), p.b())
}

/// Language and covering tower for a grid point.
fn setup(p: QuadraticParams, horizon: usize) -> (Language, UVTower) {
    let lang = Language::new(&quadratic_substitution(p), horizon);
    let tower = uv_tower_covering(p, horizon + 2, 64 * (horizon + 2)).unwrap();
    (lang, tower)
}

/// Runs `f` on every grid point in parallel; errors are reported in grid order.
fn over_grid(f: impl Fn(QuadraticParams) -> Result<(), String> + Sync) -> Result<usize, String> {
    let points = grid();
    let errs: Vec<String> = points
        .par_iter()
        .map(|&p| f(p).err().map(|e| format!("{}: {e}", label(p))))
        .flatten()
        .collect();
    if errs.is_empty() {
        Ok(points.len())
    } else {
        Err(errs.join("; "))
    }
}

fn within(limit: Duration, t: Duration) -> Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

fn tower_words() -> Outcome {
    let start = Instant::now();
    let t = uv_tower(QuadraticParams::new(3, 1).unwrap(), 2, 1_000).map_err(|e| e.to_string())?;
    let got =
        [t.v(1), t.u(1), t.v(2), t.u(2)].map(|w| w.map(|w| w.to_string()).unwrap_or_default());
    let want = ["0", "00", "0100010", "01000100010"];
    if got != want {
        return Err(format!("got {got:?}"));
    }
    within(Duration::from_secs(1), start.elapsed())?;
    Ok("V1=0 U1=00 V2=0100010 U2=01000100010".into())
}

fn factor_complexity_grid() -> Outcome {
    let start = Instant::now();
    let points = over_grid(|p| {
        let (lang, tower) = setup(p, 122);
        let oracle = oracle_complexity(&lang, 120).map_err(|e| e.to_string())?;
        let closed = closed_form_complexity_with(&tower, 120);
        match oracle.first_disagreement(&closed) {
            None => Ok(()),
            Some(n) => Err(format!("C differs at n = {n}")),
        }
    })?;
    within(Duration::from_secs(60), start.elapsed())?;
    Ok(format!("{points} points, n <= 120"))
}

fn palindrome_grid() -> Outcome {
    let points = over_grid(|p| {
        let (lang, tower) = setup(p, 122);
        let oracle = oracle_palindromes(&lang, 120).map_err(|e| e.to_string())?;
        let closed = closed_form_palindromes_with(&tower, 120);
        match oracle.first_disagreement(&closed) {
            None => Ok(()),
            Some(n) => Err(format!("P differs at n = {n}")),
        }
    })?;
    // spot values checked against plain string enumeration
    let u = common::naive_fixed_point(3, 1, 50_000);
    let (_, p) = common::naive_counts(&u, 60);
    if p[9] != 4 || p[11] != 4 || !(4..=60).step_by(2).all(|n| p[n] == 0) {
        return Err(format!("(3,1) spot values: {:?}", &p[..14]));
    }
    Ok(format!(
        "{points} points, n <= 120; (3,1) P(9)=P(11)=4, P(even >= 4)=0"
    ))
}

fn identities() -> Outcome {
    let points = over_grid(|p| {
        let (lang, tower) = setup(p, 122);
        let report = identity_rows(&lang, &tower, 120).map_err(|e| e.to_string())?;
        match report.rows.iter().find(|r| !r.passed()) {
            None => Ok(()),
            Some(r) => Err(format!("fails at n = {}", r.n)),
        }
    })?;
    Ok(format!("{points} points, n <= 120"))
}

fn trichotomy() -> Outcome {
    let counts = std::sync::Mutex::new(0usize);
    let points = over_grid(|p| {
        let (lang, tower) = setup(p, 202);
        for n in 0..=200 {
            for rec in palindromes_in(&lang, n).map_err(|e| e.to_string())? {
                let is_u = tower.u_level_of_len(n).and_then(|k| tower.u(k)) == Some(&rec.word);
                let is_v = tower.v_level_of_len(n).and_then(|k| tower.v(k)) == Some(&rec.word);
                let ok = match rec.kind() {
                    ExtensionKind::Maximal => is_u,
                    ExtensionKind::Two => is_v,
                    ExtensionKind::One => !is_u && !is_v,
                };
                if !ok {
                    return Err(format!("{} has extensions {:?}", rec.word, rec.extensions));
                }
                *counts.lock().unwrap() += 1;
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{points} points, {} palindromes of length <= 200",
        counts.into_inner().unwrap()
    ))
}

fn sturmian() -> Outcome {
    let lang = Language::new(
        &quadratic_substitution(QuadraticParams::new(2, 1).unwrap()),
        62,
    );
    let c = oracle_complexity(&lang, 60).map_err(|e| e.to_string())?;
    if let Some(r) = c.rows.iter().find(|r| r.c != r.n as u64 + 1) {
        return Err(format!("C({}) = {}", r.n, r.c));
    }
    let p = oracle_palindromes(&lang, 60).map_err(|e| e.to_string())?;
    if let Some(r) = p
        .rows
        .iter()
        .find(|r| r.p != if r.n % 2 == 0 { 1 } else { 2 } || r.one_ext_count != r.p)
    {
        return Err(format!("P({}) = {}", r.n, r.p));
    }
    Ok("C(n)=n+1, P(even)=1, P(odd)=2 for n <= 60".into())
}

fn reversal() -> Outcome {
    let points = over_grid(|p| {
        let lang = Language::new(&quadratic_substitution(p), 52);
        let rep = reversal_closure_probe(&lang, 50).map_err(|e| e.to_string())?;
        if rep.is_closed() {
            Ok(())
        } else {
            Err(format!(
                "not closed: {:?}",
                rep.witness.map(|w| w.to_string())
            ))
        }
    })?;
    let renyi: RenyiExpansion = "2 1 (1)"
        .parse()
        .map_err(|e: parry_core::Error| e.to_string())?;
    let sub: Substitution = parry_substitution(&renyi).map_err(|e| e.to_string())?;
    let lang = Language::new(&sub, 62);
    let rep = reversal_closure_probe(&lang, 60).map_err(|e| e.to_string())?;
    let witness = rep.witness.ok_or("no reversal witness for 2 1 (1)")?;
    let reversed = witness.reversed();
    if !lang.contains(witness.letters()) || lang.contains(reversed.letters()) {
        return Err(format!("bad witness {witness}"));
    }
    let last = last_palindromic_length(&lang, 60).ok_or("no palindromes at all")?;
    let p = oracle_palindromes(&lang, 60).map_err(|e| e.to_string())?;
    if last >= 60 || p.rows[last + 1..].iter().any(|r| r.p != 0) {
        return Err(format!("palindromes persist past {last}"));
    }
    Ok(format!(
        "{points} points closed to 50; 2 1 (1): witness {witness}, P(n)=0 for {} <= n <= 60",
        last + 1
    ))
}

fn beta_numeration() -> Outcome {
    let slowest = std::sync::Mutex::new(Duration::ZERO);
    let points = over_grid(|p| {
        let start = Instant::now();
        let beta = beta_of(p, 64).map_err(|e| e.to_string())?;
        let renyi = RenyiExpansion::quadratic(p);
        let err = (expansion_sum(&renyi, &beta) - parse_real("1", 64).unwrap()).abs();
        if err > parse_real("1e-30", 64).unwrap() {
            return Err(format!("Rényi sum off by {err}"));
        }
        let ints = beta_integers(&renyi, &beta, 10_001).map_err(|e| e.to_string())?;
        let prefix = fixed_point_prefix(&quadratic_substitution(p), 10_000);
        if ints.letters.len() < 10_000 || ints.letters[..10_000] != *prefix.letters() {
            return Err("gap coding differs from the fixed point".into());
        }
        let t = start.elapsed();
        let mut s = slowest.lock().unwrap();
        *s = (*s).max(t);
        within(Duration::from_secs(30), t)
    })?;
    Ok(format!(
        "{points} points; 10^4 gaps each; slowest point {:.2?}",
        slowest.into_inner().unwrap()
    ))
}

fn properties() -> Outcome {
    let points = over_grid(|p| {
        let (a, b) = (p.a() as usize, p.b() as usize);
        let max_len = 40;
        let lang = Language::new(
            &quadratic_substitution(p),
            2 * b + 1 + (a + 1) * (max_len + 1) + 2,
        );
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (a as u64) << 8 ^ b as u64);
        let prefix = lang.prefix();
        for _ in 0..500 {
            let len = rng.gen_range(1..=max_len);
            let at = rng.gen_range(0..prefix.len() - len);
            let check = t_map_palindrome_check(&lang, &prefix[at..at + len], p)
                .map_err(|e| e.to_string())?;
            if !check.holds() {
                return Err(format!("T-map property fails for {}", check.word));
            }
        }
        let tower = uv_tower(p, 201, 0).map_err(|e| e.to_string())?;
        match tower.interleaving_violation() {
            Some(n) if n <= 200 => Err(format!("interleaving fails at n = {n}")),
            _ => Ok(()),
        }
    })?;
    Ok(format!(
        "{points} points; 500 sampled factors each; interleaving n <= 200"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("tower words for (3,1)", tower_words),
        ("factor complexity", factor_complexity_grid),
        ("palindromic complexity", palindrome_grid),
        ("palindrome/complexity identities", identities),
        ("extension trichotomy", trichotomy),
        ("Sturmian boundary", sturmian),
        ("reversal closure", reversal),
        ("beta-numeration", beta_numeration),
        ("T-map property and interleaving", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({t:.2?}) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({t:.2?}) {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
