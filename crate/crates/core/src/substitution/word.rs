use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter is a dense index into the alphabet `{0, …, k-1}`.
pub type Letter = u8;

/// A finite word with a cached letter-count vector.
///
/// Ordering is lexicographic on the letters (then by length), which makes
/// sorted factor listings deterministic.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    counts: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut counts = Vec::new();
        for &l in &letters {
            let l = l as usize;
            if counts.len() <= l {
                counts.resize(l + 1, 0);
            }
            counts[l] += 1;
        }
        Word { letters, counts }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// `letter^n`
    pub fn power(letter: Letter, n: usize) -> Self {
        Word::new(vec![letter; n])
    }

    pub fn from_slice(letters: &[Letter]) -> Self {
        Word::new(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.counts.get(letter as usize).copied().unwrap_or(0)
    }

    /// Letter-count vector padded to `alphabet` entries.
    pub fn parikh(&self, alphabet: usize) -> Vec<usize> {
        let mut v = self.counts.clone();
        v.resize(alphabet.max(v.len()), 0);
        v
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            counts: self.counts.clone(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    /// `z · self · z`
    pub fn wrapped(&self, z: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.push(z);
        letters.extend_from_slice(&self.letters);
        letters.push(z);
        Word::new(letters)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// True if `other = w · self · reverse(w)` for some `w`, i.e. `self`
    /// sits exactly in the middle of `other`.
    pub fn is_central_factor_of(&self, other: &Word) -> bool {
        if other.len() < self.len() || !(other.len() - self.len()).is_multiple_of(2) {
            return false;
        }
        let start = (other.len() - self.len()) / 2;
        other.letters[start..start + self.len()] == self.letters[..]
    }

    fn largest_letter(&self) -> Option<Letter> {
        self.letters.iter().copied().max()
    }

    /// Renders as a digit string when every letter is below 10, otherwise as
    /// comma-separated indices. The empty word renders as the empty string.
    pub fn render(&self, alphabet: usize) -> String {
        render_letters(&self.letters, alphabet)
    }
}

pub(crate) fn is_palindrome(w: &[Letter]) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w[i] == w[n - 1 - i])
}

pub fn render_letters(letters: &[Letter], alphabet: usize) -> String {
    if alphabet <= 10 {
        letters.iter().map(|&l| char::from(b'0' + l)).collect()
    } else {
        letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Inverse of [`render_letters`]: digit strings for alphabets up to 10,
/// comma-separated indices otherwise.
pub fn parse_letters(s: &str, alphabet: usize) -> Result<Word> {
    if alphabet > 10 && !s.trim().is_empty() && !s.contains(',') {
        let l = s
            .trim()
            .parse::<Letter>()
            .map_err(|_| Error::input(format!("bad letter {s:?}")))?;
        return Ok(Word::new(vec![l]));
    }
    s.parse()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.largest_letter().map_or(0, |l| l as usize + 1);
        f.write_str(&self.render(alphabet))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a digit string (`"0001"`) or comma-separated indices
    /// (`"0,11,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Letter>()
                        .map_err(|_| Error::input(format!("bad letter {t:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Letter)
                        .ok_or_else(|| Error::input(format!("bad letter {c:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word::new(letters))
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word::from_slice(letters)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
