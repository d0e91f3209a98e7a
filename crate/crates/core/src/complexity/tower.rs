use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeration::QuadraticParams;
use crate::substitution::{Letter, Word};

/// Default longest tower word kept as letters.
pub const DEFAULT_MATERIALIZE_CAP: usize = 1_000_000;

/// `T(w) = 0^b 1 φ(w) 0^b` for `φ(0) = 0^a 1`, `φ(1) = 0^b 1`.
pub fn t_map(w: &[Letter], params: QuadraticParams) -> Result<Word> {
    let (a, b) = (params.a() as usize, params.b() as usize);
    let mut out = Vec::with_capacity(t_map_len(
        w.len(),
        w.iter().filter(|&&l| l == 1).count(),
        params,
    ));
    out.extend(std::iter::repeat_n(0, b));
    out.push(1);
    for &l in w {
        let run = match l {
            0 => a,
            1 => b,
            _ => {
                return Err(Error::input(format!(
                    "T is defined on binary words, got letter {l}"
                )))
            }
        };
        out.extend(std::iter::repeat_n(0, run));
        out.push(1);
    }
    out.extend(std::iter::repeat_n(0, b));
    Ok(Word::new(out))
}

fn t_map_len(len: usize, ones: usize, params: QuadraticParams) -> usize {
    let (a, b) = (params.a() as usize, params.b() as usize);
    2 * b + 1 + (a + 1) * (len - ones) + (b + 1) * ones
}

/// Letter counts `(|w|_0, |w|_1)` pushed through `T`.
fn t_counts(zeros: &BigUint, ones: &BigUint, params: QuadraticParams) -> (BigUint, BigUint) {
    let (a, b) = (params.a(), params.b());
    let z = BigUint::from(2 * b) + zeros * a + ones * b;
    let o = BigUint::from(1u32) + zeros + ones;
    (z, o)
}

/// The towers `U^(n) = T^(n-1)(0^(a-1))` (maximal left special factors)
/// and `V^(n) = T^(n-1)(0^b)` (total bispecial factors).
///
/// Lengths are exact for every level up to `depth`; words are kept only
/// while they fit in the materialization cap. Levels are 1-based.
#[derive(Clone, Debug)]
pub struct UVTower {
    params: QuadraticParams,
    cap: usize,
    u_words: Vec<Word>,
    v_words: Vec<Word>,
    u_lens: Vec<BigUint>,
    v_lens: Vec<BigUint>,
}

/// One tower level, lengths as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct TowerLevel {
    pub n: usize,
    pub v_len: String,
    pub u_len: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
}

pub fn uv_tower(params: QuadraticParams, depth: usize, cap: usize) -> Result<UVTower> {
    params.require_non_sturmian()?;
    if depth == 0 {
        return Err(Error::input("tower depth must be at least 1"));
    }
    let a = params.a() as usize;
    let b = params.b() as usize;
    let mut tower = UVTower {
        params,
        cap,
        u_words: Vec::new(),
        v_words: Vec::new(),
        u_lens: Vec::with_capacity(depth),
        v_lens: Vec::with_capacity(depth),
    };
    let mut u = (BigUint::from(a - 1), BigUint::zero());
    let mut v = (BigUint::from(b), BigUint::zero());
    let mut u_word = Some(Word::power(0, a - 1));
    let mut v_word = Some(Word::power(0, b));
    for _ in 0..depth {
        let u_len = &u.0 + &u.1;
        let v_len = &v.0 + &v.1;
        for (slot, words, len) in [
            (&mut u_word, &mut tower.u_words, &u_len),
            (&mut v_word, &mut tower.v_words, &v_len),
        ] {
            match slot.take() {
                Some(w) if len.to_usize().is_some_and(|l| l <= cap) => {
                    *slot = Some(t_map(w.letters(), params)?);
                    words.push(w);
                }
                _ => {}
            }
        }
        tower.u_lens.push(u_len);
        tower.v_lens.push(v_len);
        u = t_counts(&u.0, &u.1, params);
        v = t_counts(&v.0, &v.1, params);
    }
    Ok(tower)
}

/// A tower deep enough that `|V^(depth)| > n`, so every interval
/// `(|V^(k)|, |U^(k)|]` meeting `[1, n]` is present.
pub fn uv_tower_covering(params: QuadraticParams, n: usize, cap: usize) -> Result<UVTower> {
    params.require_non_sturmian()?;
    // |V^(k)| grows at least like 2^k
    let mut depth = 2;
    loop {
        let tower = uv_tower(params, depth, cap)?;
        if tower.v_len(depth).to_usize().is_none_or(|l| l > n) {
            return Ok(tower);
        }
        depth += (usize::BITS - n.leading_zeros()) as usize;
    }
}

impl UVTower {
    pub fn params(&self) -> QuadraticParams {
        self.params
    }

    pub fn depth(&self) -> usize {
        self.u_lens.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `U^(k)` if materialized.
    pub fn u(&self, k: usize) -> Option<&Word> {
        k.checked_sub(1).and_then(|i| self.u_words.get(i))
    }

    /// `V^(k)` if materialized.
    pub fn v(&self, k: usize) -> Option<&Word> {
        k.checked_sub(1).and_then(|i| self.v_words.get(i))
    }

    pub fn u_words(&self) -> &[Word] {
        &self.u_words
    }

    pub fn v_words(&self) -> &[Word] {
        &self.v_words
    }

    pub fn u_len(&self, k: usize) -> &BigUint {
        &self.u_lens[k - 1]
    }

    pub fn v_len(&self, k: usize) -> &BigUint {
        &self.v_lens[k - 1]
    }

    pub fn u_lens(&self) -> &[BigUint] {
        &self.u_lens
    }

    pub fn v_lens(&self) -> &[BigUint] {
        &self.v_lens
    }

    /// Levels `k` with `|V^(k)| < n <= |U^(k)|`. At most one by interleaving.
    pub fn interval_containing(&self, n: usize) -> Option<usize> {
        let n = BigUint::from(n);
        (1..=self.depth()).find(|&k| self.v_len(k) < &n && &n <= self.u_len(k))
    }

    /// The `k` with `|V^(k)| = n`, if any.
    pub fn v_level_of_len(&self, n: usize) -> Option<usize> {
        let n = BigUint::from(n);
        self.v_lens.iter().position(|l| *l == n).map(|i| i + 1)
    }

    /// The `k` with `|U^(k)| = n`, if any.
    pub fn u_level_of_len(&self, n: usize) -> Option<usize> {
        let n = BigUint::from(n);
        self.u_lens.iter().position(|l| *l == n).map(|i| i + 1)
    }

    /// First `n` (if any) where `|V^(n)| < |U^(n)| < |V^(n+1)|` fails.
    pub fn interleaving_violation(&self) -> Option<usize> {
        (1..=self.depth()).find(|&k| {
            let inner = self.v_len(k) < self.u_len(k);
            let outer = k == self.depth() || self.u_len(k) < self.v_len(k + 1);
            !(inner && outer)
        })
    }

    /// Lengths (and words up to `word_limit` letters) per level.
    pub fn levels(&self, word_limit: usize) -> Vec<TowerLevel> {
        let show = |w: Option<&Word>| w.filter(|w| w.len() <= word_limit).map(|w| w.to_string());
        (1..=self.depth())
            .map(|n| TowerLevel {
                n,
                v_len: self.v_len(n).to_string(),
                u_len: self.u_len(n).to_string(),
                v: show(self.v(n)),
                u: show(self.u(n)),
            })
            .collect()
    }
}
