use serde::Serialize;

use crate::error::{Error, Result};
use crate::substitution::{is_palindrome, Language, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReversalReport {
    pub n_max: usize,
    /// Largest `n` such that every length `<= n` is closed under reversal.
    pub closed_up_to: usize,
    /// First factor (shortest, then lexicographic) whose reversal is absent.
    pub witness: Option<Word>,
}

impl ReversalReport {
    pub fn is_closed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks reversal invariance of the factor sets of lengths `1..=n_max`.
pub fn reversal_closure_probe(lang: &Language, n_max: usize) -> Result<ReversalReport> {
    if n_max > lang.max_len() {
        return Err(Error::input(format!(
            "language stops at {} < {n_max}",
            lang.max_len()
        )));
    }
    for n in 1..=n_max {
        let witness = lang.factor_letters(n).find(|w| {
            let r: Vec<_> = w.iter().rev().copied().collect();
            !lang.contains(&r)
        });
        if let Some(w) = witness {
            return Ok(ReversalReport {
                n_max,
                closed_up_to: n - 1,
                witness: Some(Word::new(w)),
            });
        }
    }
    Ok(ReversalReport {
        n_max,
        closed_up_to: n_max,
        witness: None,
    })
}

/// Largest `n <= n_max` with a palindromic factor of length `n`.
pub fn last_palindromic_length(lang: &Language, n_max: usize) -> Option<usize> {
    (0..=n_max.min(lang.max_len()))
        .rev()
        .find(|&n| lang.factor_letters(n).any(|w| is_palindrome(&w)))
}
