use std::fmt;

use serde::{Serialize, Serializer};

use crate::complexity::t_map;
use crate::error::{Error, Result};
use crate::numeration::QuadraticParams;
use crate::substitution::{is_palindrome, Language, Letter, Substitution, Word};

/// Middle of a palindrome: ε for even length, else the middle letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Center {
    Empty,
    Letter(Letter),
}

impl Center {
    pub const ZERO: Center = Center::Letter(0);
    pub const ONE: Center = Center::Letter(1);
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Empty => f.write_str("ε"),
            Center::Letter(l) => write!(f, "{l}"),
        }
    }
}

impl Serialize for Center {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Center of a palindrome.
pub fn center_of(p: &[Letter]) -> Result<Center> {
    if !is_palindrome(p) {
        return Err(Error::input(format!(
            "{} is not a palindrome",
            Word::from_slice(p)
        )));
    }
    Ok(if p.len().is_multiple_of(2) {
        Center::Empty
    } else {
        Center::Letter(p[p.len() / 2])
    })
}

/// Center of `T(p)` given the center of a palindrome `p`.
pub fn center_evolution(center: Center, params: QuadraticParams) -> Center {
    let odd_to_zero = |x: u32| {
        if x % 2 == 1 {
            Center::ZERO
        } else {
            Center::Empty
        }
    };
    match center {
        Center::Empty => Center::ONE,
        Center::Letter(0) => odd_to_zero(params.a()),
        Center::Letter(_) => odd_to_zero(params.b()),
    }
}

/// How many palindromic extensions a palindrome has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    Maximal,
    One,
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalindromeRecord {
    pub word: Word,
    pub center: Center,
    /// Letters `z` with `z·word·z` a factor.
    pub extensions: Vec<Letter>,
}

impl PalindromeRecord {
    pub fn kind(&self) -> ExtensionKind {
        match self.extensions.len() {
            0 => ExtensionKind::Maximal,
            1 => ExtensionKind::One,
            _ => ExtensionKind::Two,
        }
    }
}

fn require_len(lang: &Language, len: usize) -> Result<()> {
    if len > lang.max_len() {
        return Err(Error::input(format!(
            "need factors of length {len} but the language stops at {}",
            lang.max_len()
        )));
    }
    Ok(())
}

/// Palindromic factors of length `n`, lexicographic, with their
/// extensions. `lang` must hold factors of length `n + 2`.
pub fn palindromes_in(lang: &Language, n: usize) -> Result<Vec<PalindromeRecord>> {
    require_len(lang, n + 2)?;
    Ok(lang
        .factor_letters(n)
        .filter(|w| is_palindrome(w))
        .map(|w| {
            let extensions = lang.palindromic_extensions(&w);
            let center = center_of(&w).expect("filtered to palindromes");
            PalindromeRecord {
                word: Word::new(w),
                center,
                extensions,
            }
        })
        .collect())
}

/// Palindromic factors of length `n` of the fixed point of `sub`.
pub fn palindromes_of_length(sub: &Substitution, n: usize) -> Vec<PalindromeRecord> {
    palindromes_in(&Language::new(sub, n + 2), n).expect("language built long enough")
}

/// `P(n)` for `0 <= n <= n_max` without extension data.
pub fn palindrome_counts(lang: &Language, n_max: usize) -> Result<Vec<usize>> {
    require_len(lang, n_max)?;
    Ok((0..=n_max)
        .map(|n| lang.factor_letters(n).filter(|w| is_palindrome(w)).count())
        .collect())
}

/// `{z : z·p·z ∈ L}` for a palindromic factor `p`.
pub fn palindromic_extensions(lang: &Language, p: &[Letter]) -> Result<Vec<Letter>> {
    if !is_palindrome(p) {
        return Err(Error::input(format!(
            "{} is not a palindrome",
            Word::from_slice(p)
        )));
    }
    if !lang.contains(p) {
        return Err(Error::input(format!(
            "{} is not a factor",
            Word::from_slice(p)
        )));
    }
    Ok(lang.palindromic_extensions(p))
}

/// Palindromicity and palindromic extensions of `p` and `T(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PtCheck {
    pub word: Word,
    pub is_pal_p: bool,
    pub is_pal_tp: bool,
    pub ext_p: Vec<Letter>,
    pub ext_tp: Vec<Letter>,
}

impl PtCheck {
    pub fn holds(&self) -> bool {
        self.is_pal_p == self.is_pal_tp && self.ext_p == self.ext_tp
    }
}

/// Compares `p` with `T(p)`. Long images are looked up in the language's
/// prefix, so the language should be built with a horizon of at least
/// `|T(p)| + 2` for an exact answer.
pub fn t_map_palindrome_check(
    lang: &Language,
    p: &[Letter],
    params: QuadraticParams,
) -> Result<PtCheck> {
    if !lang.contains(p) {
        return Err(Error::input(format!(
            "{} is not a factor",
            Word::from_slice(p)
        )));
    }
    let tp = t_map(p, params)?;
    Ok(PtCheck {
        word: Word::from_slice(p),
        is_pal_p: is_palindrome(p),
        is_pal_tp: tp.is_palindrome(),
        ext_p: lang.palindromic_extensions(p),
        ext_tp: lang.palindromic_extensions(tp.letters()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::substitution::quadratic_substitution;

    fn p(a: u32, b: u32) -> QuadraticParams {
        QuadraticParams::new(a, b).unwrap()
    }

    fn w(s: &str) -> Vec<Letter> {
        s.parse::<Word>().unwrap().into_letters()
    }

    #[test]
    fn centers() {
        assert_eq!(center_of(&w("0100010")).unwrap(), Center::ZERO);
        assert_eq!(center_of(&w("00")).unwrap(), Center::Empty);
        assert_eq!(center_of(&w("1")).unwrap(), Center::ONE);
        assert_eq!(center_of(&[]).unwrap(), Center::Empty);
        assert!(center_of(&w("01")).is_err());
    }

    #[test]
    fn evolution_tables() {
        let e = |c, a, b| center_evolution(c, p(a, b));
        assert_eq!(
            [
                e(Center::Empty, 3, 1),
                e(Center::ZERO, 3, 1),
                e(Center::ONE, 3, 1)
            ],
            [Center::ONE, Center::ZERO, Center::ZERO]
        );
        assert_eq!(
            [
                e(Center::Empty, 4, 2),
                e(Center::ZERO, 4, 2),
                e(Center::ONE, 4, 2)
            ],
            [Center::ONE, Center::Empty, Center::Empty]
        );
    }

    #[test]
    fn palindromes_three_one() {
        let sub = quadratic_substitution(p(3, 1));
        let zero = palindromes_of_length(&sub, 0);
        assert_eq!(zero.len(), 1);
        assert!(zero[0].word.is_empty());
        let one = palindromes_of_length(&sub, 1);
        assert_eq!(
            one.iter().map(|r| r.word.to_string()).collect::<Vec<_>>(),
            ["0", "1"]
        );
        assert_eq!(one[0].kind(), ExtensionKind::Two);
        assert!(palindromes_of_length(&sub, 4).is_empty());
        let lang = Language::new(&sub, 20);
        assert_eq!(
            palindrome_counts(&lang, 13).unwrap(),
            [1, 2, 1, 3, 0, 3, 0, 3, 0, 4, 0, 4, 0, 3]
        );
    }

    #[test]
    fn extensions_three_one() {
        let lang = Language::new(&quadratic_substitution(p(3, 1)), 20);
        assert_eq!(palindromic_extensions(&lang, &w("0")).unwrap(), [0, 1]);
        assert!(palindromic_extensions(&lang, &w("00")).unwrap().is_empty());
        assert_eq!(palindromic_extensions(&lang, &w("010")).unwrap(), [0]);
        assert!(palindromic_extensions(&lang, &w("01")).is_err());
        assert!(palindromic_extensions(&lang, &w("11")).is_err());
    }

    #[test]
    fn pt_examples() {
        let params = p(3, 1);
        let lang = Language::new(&quadratic_substitution(params), 40);
        let r = t_map_palindrome_check(&lang, &w("0"), params).unwrap();
        assert!(r.holds() && r.is_pal_tp);
        assert_eq!(r.ext_tp, [0, 1]);
        let r = t_map_palindrome_check(&lang, &w("01"), params).unwrap();
        assert!(r.holds() && !r.is_pal_tp);
        let r = t_map_palindrome_check(&lang, &w("00"), params).unwrap();
        assert!(r.holds() && r.ext_tp.is_empty());
    }
}
