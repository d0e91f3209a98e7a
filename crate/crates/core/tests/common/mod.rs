//! Brute-force oracles: plain string manipulation, no shared code with the
//! library's trie, tower or rule tables.

#![allow(dead_code)]

use std::collections::HashSet;

/// First `len` letters of the fixed point of `0 -> 0^a 1`, `1 -> 0^b 1`.
pub fn naive_fixed_point(a: usize, b: usize, len: usize) -> Vec<u8> {
    naive_fixed_point_of(&[image(a), image(b)], len)
}

fn image(run: usize) -> Vec<u8> {
    let mut v = vec![0; run];
    v.push(1);
    v
}

/// Fixed point of an arbitrary substitution starting with letter 0:
/// iterate `w -> φ(w)` until long enough.
pub fn naive_fixed_point_of(images: &[Vec<u8>], len: usize) -> Vec<u8> {
    let mut w = vec![0u8];
    while w.len() < len {
        w = w
            .iter()
            .flat_map(|&l| images[l as usize].iter().copied())
            .collect();
    }
    w.truncate(len);
    w
}

/// Distinct factors of length `n` of `u`.
pub fn factor_set(u: &[u8], n: usize) -> HashSet<Vec<u8>> {
    u.windows(n.max(1)).map(|w| w[..n].to_vec()).collect()
}

pub fn is_pal(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// `(C(n), P(n))` for `0 <= n <= n_max`, read from a prefix long enough that
/// doubling it changes nothing.
pub fn naive_counts(u: &[u8], n_max: usize) -> (Vec<usize>, Vec<usize>) {
    let mut c = Vec::new();
    let mut p = Vec::new();
    for n in 0..=n_max {
        let f = factor_set(u, n);
        c.push(f.len());
        p.push(f.iter().filter(|w| is_pal(w)).count());
    }
    (c, p)
}

/// `T(w) = 0^b 1 φ(w) 0^b` built as a string.
pub fn naive_t(w: &str, a: usize, b: usize) -> String {
    let mut s = "0".repeat(b) + "1";
    for ch in w.chars() {
        s += &"0".repeat(if ch == '0' { a } else { b });
        s += "1";
    }
    s + &"0".repeat(b)
}

pub fn to_string(w: &[u8]) -> String {
    w.iter().map(|l| char::from(b'0' + l)).collect()
}

pub fn from_str(s: &str) -> Vec<u8> {
    s.bytes().map(|c| c - b'0').collect()
}

/// Non-Sturmian grid `2 <= a <= 6`, `1 <= b <= a - 2`.
pub fn grid() -> Vec<(usize, usize)> {
    (2..=6)
        .flat_map(|a| (1..a - 1).map(move |b| (a, b)))
        .collect()
}
