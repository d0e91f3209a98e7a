use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::substitution::{Language, Letter, Substitution, Word};

/// Left and right special factors of one length.
#[derive(Clone, Debug, Serialize)]
pub struct SpecialFactorReport {
    pub n: usize,
    pub left: BTreeSet<Word>,
    pub right: BTreeSet<Word>,
    /// Left extensions of every left special factor.
    pub left_extensions: BTreeMap<Word, Vec<Letter>>,
    /// Right extensions of every right special factor.
    pub right_extensions: BTreeMap<Word, Vec<Letter>>,
}

impl SpecialFactorReport {
    /// `Σ (#left extensions - 1)` over left special factors, which equals
    /// `C(n+1) - C(n)`. On a binary alphabet this is just the count.
    pub fn left_excess(&self) -> usize {
        self.left_extensions.values().map(|e| e.len() - 1).sum()
    }
}

/// Special factors of length `n` read from `lang`, which must hold
/// factors of length `n + 1`.
pub fn special_factors(lang: &Language, n: usize) -> Result<SpecialFactorReport> {
    if n + 1 > lang.max_len() {
        return Err(Error::input(format!(
            "need factors of length {} but the language stops at {}",
            n + 1,
            lang.max_len()
        )));
    }
    let mut report = SpecialFactorReport {
        n,
        left: BTreeSet::new(),
        right: BTreeSet::new(),
        left_extensions: BTreeMap::new(),
        right_extensions: BTreeMap::new(),
    };
    for w in lang.factor_letters(n) {
        let left = lang.left_extensions(&w);
        let right = lang.right_extensions(&w);
        if left.len() >= 2 {
            let w = Word::from_slice(&w);
            report.left.insert(w.clone());
            report.left_extensions.insert(w, left);
        }
        if right.len() >= 2 {
            let w = Word::new(w);
            report.right.insert(w.clone());
            report.right_extensions.insert(w, right);
        }
    }
    Ok(report)
}

/// Special factors of length `n >= 1` of the fixed point of `sub`.
pub fn left_special_factors(sub: &Substitution, n: usize) -> Result<SpecialFactorReport> {
    if n == 0 {
        return Err(Error::input("special factor length must be at least 1"));
    }
    special_factors(&Language::new(sub, n + 1), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::QuadraticParams;
    use crate::substitution::quadratic_substitution;

    fn q(a: u32, b: u32) -> Substitution {
        quadratic_substitution(QuadraticParams::new(a, b).unwrap())
    }

    fn set(ws: &BTreeSet<Word>) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn three_one_short_lengths() {
        let r = left_special_factors(&q(3, 1), 1).unwrap();
        assert_eq!(set(&r.left), ["0"]);
        assert_eq!(r.left_excess(), 1);
        let r = left_special_factors(&q(3, 1), 2).unwrap();
        assert_eq!(set(&r.left), ["00", "01"]);
        assert_eq!(r.left_excess(), 2);
        assert_eq!(set(&r.right), ["00", "10"]);
    }

    #[test]
    fn excess_matches_complexity_difference() {
        let lang = Language::new(&q(5, 2), 40);
        for n in 1..40 {
            let r = special_factors(&lang, n).unwrap();
            assert_eq!(r.left_excess(), lang.complexity(n + 1) - lang.complexity(n));
        }
    }

    #[test]
    fn left_specials_with_a_one_start_with_block() {
        let params = QuadraticParams::new(6, 3).unwrap();
        let lang = Language::new(&quadratic_substitution(params), 60);
        for n in 1..60 {
            for w in special_factors(&lang, n).unwrap().left {
                if w.count(1) > 0 {
                    assert!(w.letters().starts_with(&[0, 0, 0, 1]), "{w}");
                }
            }
        }
    }

    #[test]
    fn too_short_language() {
        let lang = Language::new(&q(3, 1), 5);
        assert!(special_factors(&lang, 5).is_err());
    }
}
