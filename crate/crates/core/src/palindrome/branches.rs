use std::collections::BTreeMap;

use memchr::memmem;
use serde::Serialize;

use crate::complexity::{t_map, UVTower};
use crate::error::{Error, Result};
use crate::numeration::{ParityClass, QuadraticParams};
use crate::palindrome::{center_evolution, center_of, Center};
use crate::substitution::{
    is_palindrome, quadratic_substitution, FixedPointStream, Language, Word,
};

/// Default length budget for materializing branch central factors.
pub const DEFAULT_BRANCH_BUDGET: usize = 10_000;

/// Branch membership is checked in a prefix of this many times the budget.
pub const BRANCH_PREFIX_FACTOR: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerCenterRow {
    pub n: usize,
    pub v_center: Center,
    pub u_center: Center,
    /// Smallest `j > n` with `V^(n)` a central factor of `V^(j)`, among
    /// materialized words.
    pub v_central_in: Option<usize>,
    /// Largest `j` with `V^(j)` a central factor of `U^(n)`.
    pub u_central_v: Option<usize>,
}

/// Centers of `U^(n)` and `V^(n)` for `n <= depth`, plus the central-factor
/// relations between materialized tower words.
///
/// Centers are propagated through `T` symbolically and cross-checked against
/// every materialized word.
pub fn classify_tower_centers(tower: &UVTower) -> Result<Vec<TowerCenterRow>> {
    let params = tower.params();
    let initial = |len: u32| {
        if len.is_multiple_of(2) {
            Center::Empty
        } else {
            Center::ZERO
        }
    };
    let mut u_center = initial(params.a() - 1);
    let mut v_center = initial(params.b());
    let mut rows = Vec::with_capacity(tower.depth());
    for n in 1..=tower.depth() {
        for (word, claimed) in [(tower.u(n), u_center), (tower.v(n), v_center)] {
            if let Some(w) = word {
                let actual = center_of(w.letters())?;
                if actual != claimed {
                    return Err(Error::Verification {
                        summary: format!(
                            "tower word at level {n} has center {actual}, expected {claimed}"
                        ),
                        context: serde_json::json!({ "a": params.a(), "b": params.b(), "n": n }),
                    });
                }
            }
        }
        let v_central_in = tower.v(n).and_then(|v| {
            (n + 1..=tower.depth())
                .find(|&j| tower.v(j).is_some_and(|vj| v.is_central_factor_of(vj)))
        });
        let u_central_v = tower.u(n).and_then(|u| {
            (1..=n)
                .rev()
                .find(|&j| tower.v(j).is_some_and(|vj| vj.is_central_factor_of(u)))
        });
        rows.push(TowerCenterRow {
            n,
            v_center,
            u_center,
            v_central_in,
            u_central_v,
        });
        u_center = center_evolution(u_center, params);
        v_center = center_evolution(v_center, params);
    }
    Ok(rows)
}

/// The palindromes whose bidirectional limit is a branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tower", rename_all = "snake_case")]
pub enum BranchGenerator {
    /// `V^(start + step·i)` for `i >= 0`.
    V { start: usize, step: usize },
    /// `W^(1) = 0`, `W^(n) = T(W^(n-1))`.
    W,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchSpec {
    pub center: Center,
    pub generator: BranchGenerator,
    #[serde(skip)]
    pub central_factors: Vec<Word>,
    /// Lengths of the materialized central factors.
    pub lengths: Vec<usize>,
    pub verified: bool,
    pub failures: Vec<String>,
}

fn branch_table(class: ParityClass) -> &'static [(Center, BranchGenerator)] {
    use BranchGenerator::{V, W};
    match class {
        ParityClass::EvenBOddA => &[
            (Center::Empty, V { start: 1, step: 2 }),
            (Center::ONE, V { start: 2, step: 2 }),
            (Center::ZERO, W),
        ],
        ParityClass::BothEven => &[
            (Center::Empty, V { start: 1, step: 2 }),
            (Center::ONE, V { start: 2, step: 2 }),
        ],
        ParityClass::OddBEvenA => &[
            (Center::ZERO, V { start: 1, step: 3 }),
            (Center::Empty, V { start: 2, step: 3 }),
            (Center::ONE, V { start: 3, step: 3 }),
        ],
        ParityClass::BothOdd => &[(Center::ZERO, V { start: 1, step: 1 })],
    }
}

/// Iterates `T` from `seed` until a word longer than `budget` is produced;
/// that last word is included.
fn t_orbit(seed: Word, params: QuadraticParams, budget: usize) -> Result<Vec<Word>> {
    let mut out = vec![seed];
    while out.last().unwrap().len() <= budget {
        let next = t_map(out.last().unwrap().letters(), params)?;
        out.push(next);
    }
    Ok(out)
}

/// The infinite palindromic branches for `params`, each with central factors
/// materialized past `budget` letters and checked: palindromic, declared
/// center, nested as central factors, and present in the first
/// `64·budget` letters of the fixed point.
pub fn infinite_branches(params: QuadraticParams, budget: usize) -> Result<Vec<BranchSpec>> {
    params.require_non_sturmian()?;
    let mut stream = FixedPointStream::new(quadratic_substitution(params));
    stream.ensure(BRANCH_PREFIX_FACTOR * budget.max(1));
    let prefix = &stream.materialized()[..BRANCH_PREFIX_FACTOR * budget.max(1)];

    let v_tower = t_orbit(Word::power(0, params.b() as usize), params, budget)?;
    let mut out = Vec::new();
    for &(center, generator) in branch_table(params.parity_class()) {
        let words = match generator {
            BranchGenerator::V { start, step } => v_tower
                .iter()
                .skip(start - 1)
                .step_by(step)
                .cloned()
                .collect::<Vec<_>>(),
            BranchGenerator::W => t_orbit(Word::power(0, 1), params, budget)?,
        };
        let mut failures = Vec::new();
        for (i, w) in words.iter().enumerate() {
            if !is_palindrome(w.letters()) {
                failures.push(format!("central factor #{i} is not a palindrome"));
                continue;
            }
            let c = center_of(w.letters())?;
            if c != center {
                failures.push(format!("central factor #{i} has center {c}"));
            }
            if memmem::find(prefix, w.letters()).is_none() {
                failures.push(format!(
                    "central factor #{i} (length {}) not found in the prefix",
                    w.len()
                ));
            }
            if let Some(next) = words.get(i + 1) {
                if !w.is_central_factor_of(next) {
                    failures.push(format!("central factor #{i} is not central in #{}", i + 1));
                }
            }
        }
        out.push(BranchSpec {
            center,
            generator,
            lengths: words.iter().map(Word::len).collect(),
            central_factors: words,
            verified: failures.is_empty(),
            failures,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchUniqueness {
    pub center: Center,
    /// Palindromes considered: length `>= min_len`, not maximal, and not on
    /// the private part of a maximal palindrome.
    pub candidates: usize,
    /// Whether each candidate is central in every longer one.
    pub nested: bool,
}

/// At most one infinite branch per center.
///
/// A palindrome central in `U^(k)` but longer than the longest `V^(j)`
/// central in `U^(k)` (the point where `U^(k)` leaves its branch) can only
/// extend to `U^(k)`. All other non-maximal palindromes of length in
/// `min_len..=max_len` with the same center must be central factors of one
/// another. `lang` must hold lengths up to `max_len + 2`; `tower` should
/// materialize every `U^(k)` that is not much longer than `max_len`.
pub fn branch_uniqueness(
    lang: &Language,
    tower: &UVTower,
    min_len: usize,
    max_len: usize,
) -> Result<Vec<BranchUniqueness>> {
    let forks: Vec<(&Word, usize)> = classify_tower_centers(tower)?
        .iter()
        .filter_map(|row| {
            let u = tower.u(row.n)?;
            let fork = row
                .u_central_v
                .and_then(|j| tower.v(j))
                .map_or(0, Word::len);
            Some((u, fork))
        })
        .collect();
    let mut by_center: BTreeMap<Center, Vec<Word>> = BTreeMap::new();
    for n in min_len..=max_len {
        for rec in crate::palindrome::palindromes_in(lang, n)? {
            if rec.extensions.is_empty() {
                continue;
            }
            let private = forks
                .iter()
                .any(|(u, fork)| n > *fork && u.len() >= n && rec.word.is_central_factor_of(u));
            if !private {
                by_center.entry(rec.center).or_default().push(rec.word);
            }
        }
    }
    Ok(by_center
        .into_iter()
        .map(|(center, words)| {
            // sorted by length; nesting is transitive along the chain
            let nested = words.windows(2).all(|w| w[0].is_central_factor_of(&w[1]));
            BranchUniqueness {
                center,
                candidates: words.len(),
                nested,
            }
        })
        .collect())
}
