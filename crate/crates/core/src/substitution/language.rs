use std::collections::BTreeSet;

use memchr::memmem;

use crate::substitution::{FixedPointStream, Letter, Substitution, Word};

const NONE: u32 = u32::MAX;

/// Smallest prefix inspected is `PREFIX_FLOOR_FACTOR * max_len`.
pub const PREFIX_FLOOR_FACTOR: usize = 64;

/// Hard cap on the inspected prefix length.
const PREFIX_CAP: usize = 1 << 27;

/// The factors of a fixed point up to a given length, stored as a trie.
///
/// Factors are read off a prefix of the fixed point. The prefix starts at
/// `64 · max_len` letters and is doubled until the number of factors of every
/// length `<= max_len` is unchanged by a doubling.
#[derive(Clone, Debug)]
pub struct Language {
    stream: FixedPointStream,
    alphabet: usize,
    max_len: usize,
    prefix_len: usize,
    stabilized: bool,
    children: Vec<u32>,
    parent: Vec<u32>,
    letter: Vec<Letter>,
    per_depth: Vec<usize>,
    // node ids per depth in lexicographic order
    by_depth: Vec<Vec<u32>>,
}

impl Language {
    pub fn new(sub: &Substitution, max_len: usize) -> Self {
        Self::with_floor(sub, max_len, PREFIX_FLOOR_FACTOR * max_len)
    }

    /// Like [`Language::new`] with an explicit minimum prefix length.
    pub fn with_floor(sub: &Substitution, max_len: usize, floor: usize) -> Self {
        let alphabet = sub.alphabet_size();
        let mut lang = Language {
            stream: FixedPointStream::new(sub.clone()),
            alphabet,
            max_len,
            prefix_len: 0,
            stabilized: false,
            children: vec![NONE; alphabet],
            parent: vec![NONE],
            letter: vec![0],
            per_depth: vec![0; max_len + 1],
            by_depth: Vec::new(),
        };
        lang.per_depth[0] = 1;

        let mut len = floor.clamp(256, PREFIX_CAP);
        lang.extend_to(len);
        loop {
            let before = lang.per_depth.clone();
            if 2 * len > PREFIX_CAP {
                break;
            }
            len *= 2;
            lang.extend_to(len);
            if lang.per_depth == before {
                lang.stabilized = true;
                break;
            }
        }
        lang.index_by_depth();
        lang
    }

    fn extend_to(&mut self, new_len: usize) {
        let old_len = self.prefix_len;
        self.stream.ensure(new_len);
        // suffixes that were truncated by the old end get re-walked
        let start = old_len.saturating_sub(self.max_len);
        for i in start..new_len {
            let end = (i + self.max_len).min(new_len);
            let mut node = 0u32;
            for depth in i..end {
                let l = self.stream.materialized()[depth];
                let slot = node as usize * self.alphabet + l as usize;
                let next = self.children[slot];
                node = if next == NONE {
                    let id = self.parent.len() as u32;
                    self.children[slot] = id;
                    self.children
                        .extend(std::iter::repeat_n(NONE, self.alphabet));
                    self.parent.push(node);
                    self.letter.push(l);
                    self.per_depth[depth - i + 1] += 1;
                    id
                } else {
                    next
                };
            }
        }
        self.prefix_len = new_len;
    }

    fn index_by_depth(&mut self) {
        let mut by_depth = vec![Vec::new(); self.max_len + 1];
        // BFS visiting children in letter order keeps each level sorted
        let mut level = vec![0u32];
        for bucket in by_depth.iter_mut() {
            let mut next = Vec::new();
            for &node in &level {
                for l in 0..self.alphabet {
                    let c = self.children[node as usize * self.alphabet + l];
                    if c != NONE {
                        next.push(c);
                    }
                }
            }
            *bucket = std::mem::replace(&mut level, next);
        }
        self.by_depth = by_depth;
    }

    pub fn substitution(&self) -> &Substitution {
        self.stream.substitution()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Longest factor length held in the trie.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Length of the fixed-point prefix the factors were read from.
    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    /// False only if the prefix cap was hit before the counts stabilized.
    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    /// The inspected prefix of the fixed point.
    pub fn prefix(&self) -> &[Letter] {
        &self.stream.materialized()[..self.prefix_len]
    }

    fn check_len(&self, n: usize) {
        assert!(
            n <= self.max_len,
            "factor length {n} exceeds the language horizon {}",
            self.max_len
        );
    }

    /// Number of distinct factors of length `n`.
    pub fn complexity(&self, n: usize) -> usize {
        self.check_len(n);
        self.per_depth[n]
    }

    fn node_of(&self, w: &[Letter]) -> Option<u32> {
        let mut node = 0u32;
        for &l in w {
            if l as usize >= self.alphabet {
                return None;
            }
            node = self.children[node as usize * self.alphabet + l as usize];
            if node == NONE {
                return None;
            }
        }
        Some(node)
    }

    fn node_letters(&self, mut node: u32) -> Vec<Letter> {
        let mut out = Vec::new();
        while node != 0 {
            out.push(self.letter[node as usize]);
            node = self.parent[node as usize];
        }
        out.reverse();
        out
    }

    /// Whether `w` is a factor. Words longer than the horizon are searched
    /// directly in the inspected prefix.
    pub fn contains(&self, w: &[Letter]) -> bool {
        if w.len() <= self.max_len {
            self.node_of(w).is_some()
        } else {
            memmem::find(self.prefix(), w).is_some()
        }
    }

    /// Factors of length `n` in lexicographic order, as raw letter vectors.
    pub fn factor_letters(&self, n: usize) -> impl Iterator<Item = Vec<Letter>> + '_ {
        self.check_len(n);
        self.by_depth[n]
            .iter()
            .map(move |&id| self.node_letters(id))
    }

    /// Factors of length `n` in lexicographic order.
    pub fn factors(&self, n: usize) -> Vec<Word> {
        self.factor_letters(n).map(Word::new).collect()
    }

    /// Letters `z` with `z·w` a factor.
    pub fn left_extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let mut buf = Vec::with_capacity(w.len() + 1);
        (0..self.alphabet as Letter)
            .filter(|&z| {
                buf.clear();
                buf.push(z);
                buf.extend_from_slice(w);
                self.contains(&buf)
            })
            .collect()
    }

    /// Letters `z` with `w·z` a factor.
    pub fn right_extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let mut buf = w.to_vec();
        buf.push(0);
        (0..self.alphabet as Letter)
            .filter(|&z| {
                *buf.last_mut().unwrap() = z;
                self.contains(&buf)
            })
            .collect()
    }

    /// Letters `z` with `z·w·z` a factor.
    pub fn palindromic_extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let mut buf = Vec::with_capacity(w.len() + 2);
        (0..self.alphabet as Letter)
            .filter(|&z| {
                buf.clear();
                buf.push(z);
                buf.extend_from_slice(w);
                buf.push(z);
                self.contains(&buf)
            })
            .collect()
    }

    pub fn is_left_special(&self, w: &[Letter]) -> bool {
        self.left_extensions(w).len() >= 2
    }

    pub fn is_right_special(&self, w: &[Letter]) -> bool {
        self.right_extensions(w).len() >= 2
    }
}

/// The set of factors of length `n` of the fixed point of `sub`.
pub fn factors_of_length(sub: &Substitution, n: usize) -> BTreeSet<Word> {
    Language::new(sub, n).factors(n).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::QuadraticParams;
    use crate::substitution::quadratic_substitution;

    fn q(a: u32, b: u32) -> Substitution {
        quadratic_substitution(QuadraticParams::new(a, b).unwrap())
    }

    fn strings(ws: &BTreeSet<Word>) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_factor_sets() {
        assert_eq!(strings(&factors_of_length(&q(3, 1), 1)), ["0", "1"]);
        assert_eq!(strings(&factors_of_length(&q(3, 1), 2)), ["00", "01", "10"]);
    }

    #[test]
    fn complexity_and_lookup() {
        let lang = Language::new(&q(3, 1), 12);
        assert!(lang.stabilized());
        let c: Vec<usize> = (1..=12).map(|n| lang.complexity(n)).collect();
        assert_eq!(c, [2, 3, 5, 6, 7, 8, 9, 10, 12, 14, 16, 18]);
        assert!(lang.contains(&[0, 1, 0]));
        assert!(!lang.contains(&[1, 1]));
        assert_eq!(lang.left_extensions(&[0]), vec![0, 1]);
        assert_eq!(lang.right_extensions(&[1]), vec![0]);
        assert_eq!(lang.palindromic_extensions(&[0, 0]), Vec::<u8>::new());
        let f = lang.factors(3);
        assert!(f.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn long_words_fall_back_to_prefix_search() {
        let lang = Language::new(&q(3, 1), 4);
        let w: Word = "00010001000101".parse().unwrap();
        assert!(lang.contains(w.letters()));
        assert!(!lang.contains(&[1, 1, 0, 0, 0, 0]));
    }
}
