//! Library results against plain string enumeration across the grid.

mod common;

use std::collections::BTreeSet;

use common::{
    factor_set, from_str, is_pal, naive_fixed_point, naive_fixed_point_of, naive_t, to_string,
};
use parry_core::complexity::{special_factors, uv_tower};
use parry_core::palindrome::{palindromes_in, reversal_closure_probe};
use parry_core::{
    fixed_point_prefix, parry_substitution, quadratic_substitution, Language, QuadraticParams,
    RenyiExpansion,
};

const PREFIX: usize = 40_000;

fn params(a: usize, b: usize) -> QuadraticParams {
    QuadraticParams::new(a as u32, b as u32).unwrap()
}

#[test]
fn fixed_point_prefix_matches_iteration() {
    for (a, b) in common::grid() {
        let lib = fixed_point_prefix(&quadratic_substitution(params(a, b)), 5_000);
        assert_eq!(lib.letters(), &naive_fixed_point(a, b, 5_000)[..]);
    }
}

#[test]
fn factor_sets_match() {
    for (a, b) in common::grid() {
        let u = naive_fixed_point(a, b, PREFIX);
        let lang = Language::new(&quadratic_substitution(params(a, b)), 62);
        for n in [0, 1, 5, 17, 33, 60] {
            let lib: BTreeSet<String> = lang.factors(n).iter().map(|w| w.to_string()).collect();
            let naive: BTreeSet<String> = factor_set(&u, n).iter().map(|w| to_string(w)).collect();
            assert_eq!(lib, naive, "({a},{b}) n={n}");
        }
    }
}

#[test]
fn palindromes_and_extensions_match() {
    for (a, b) in common::grid() {
        let u = naive_fixed_point(a, b, PREFIX);
        let lang = Language::new(&quadratic_substitution(params(a, b)), 62);
        for n in 0..=60 {
            let longer = factor_set(&u, n + 2);
            let mut naive: Vec<(Vec<u8>, Vec<u8>)> = factor_set(&u, n)
                .into_iter()
                .filter(|w| is_pal(w))
                .map(|w| {
                    let ext = (0..2u8)
                        .filter(|&z| {
                            let mut zwz = vec![z];
                            zwz.extend(&w);
                            zwz.push(z);
                            longer.contains(&zwz)
                        })
                        .collect();
                    (w, ext)
                })
                .collect();
            naive.sort();
            let lib: Vec<(Vec<u8>, Vec<u8>)> = palindromes_in(&lang, n)
                .unwrap()
                .into_iter()
                .map(|r| (r.word.into_letters(), r.extensions))
                .collect();
            assert_eq!(lib, naive, "({a},{b}) n={n}");
        }
    }
}

#[test]
fn special_factors_match() {
    for (a, b) in common::grid() {
        let u = naive_fixed_point(a, b, PREFIX);
        let lang = Language::new(&quadratic_substitution(params(a, b)), 42);
        for n in 1..=40 {
            let longer = factor_set(&u, n + 1);
            let left: BTreeSet<String> = factor_set(&u, n)
                .into_iter()
                .filter(|w| (0..2u8).all(|z| longer.contains(&[&[z][..], w].concat())))
                .map(|w| to_string(&w))
                .collect();
            let right: BTreeSet<String> = factor_set(&u, n)
                .into_iter()
                .filter(|w| (0..2u8).all(|z| longer.contains(&[w, &[z][..]].concat())))
                .map(|w| to_string(&w))
                .collect();
            let rep = special_factors(&lang, n).unwrap();
            assert_eq!(
                rep.left
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<BTreeSet<_>>(),
                left,
                "({a},{b}) n={n}"
            );
            assert_eq!(
                rep.right
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<BTreeSet<_>>(),
                right,
                "({a},{b}) n={n}"
            );
        }
    }
}

#[test]
fn tower_words_match_string_t_map() {
    for (a, b) in common::grid() {
        let tower = uv_tower(params(a, b), 4, 1_000_000).unwrap();
        let (mut v, mut w) = ("0".repeat(b), "0".repeat(a - 1));
        for k in 1..=4 {
            assert_eq!(tower.v(k).unwrap().to_string(), v);
            assert_eq!(tower.u(k).unwrap().to_string(), w);
            v = naive_t(&v, a, b);
            w = naive_t(&w, a, b);
        }
    }
}

#[test]
fn tower_words_are_special_as_claimed() {
    // U words are maximal left special, V words are left special with both
    // continuations left special
    for (a, b) in common::grid() {
        let u = naive_fixed_point(a, b, PREFIX);
        let tower = uv_tower(params(a, b), 3, 1_000_000).unwrap();
        let left_special = |w: &[u8]| {
            let f = factor_set(&u, w.len() + 1);
            (0..2u8).all(|z| f.contains(&[&[z][..], w].concat()))
        };
        for k in 1..=3 {
            let (uk, vk) = (tower.u(k).unwrap().letters(), tower.v(k).unwrap().letters());
            if uk.len() + 1 > 300 {
                break;
            }
            assert!(left_special(uk));
            assert!(
                (0..2u8).all(|z| !left_special(&[uk, &[z][..]].concat())),
                "U{k} ({a},{b})"
            );
            assert!(
                (0..2u8).all(|z| left_special(&[vk, &[z][..]].concat())),
                "V{k} ({a},{b})"
            );
        }
    }
}

#[test]
fn non_simple_parry_word_is_not_closed_under_reversal() {
    let renyi: RenyiExpansion = "2 1 (1)".parse().unwrap();
    let sub = parry_substitution(&renyi).unwrap();
    let images: Vec<Vec<u8>> = sub.images().iter().map(|w| w.letters().to_vec()).collect();
    let u = naive_fixed_point_of(&images, PREFIX);
    let f3 = factor_set(&u, 3);
    let lang = Language::new(&sub, 12);
    let rep = reversal_closure_probe(&lang, 10).unwrap();
    let witness = rep.witness.unwrap();
    assert_eq!(witness.to_string(), "102");
    assert!(f3.contains(&from_str("102")) && !f3.contains(&from_str("201")));
    // no palindromes of length 7 through 40 in the oracle either
    assert!((7..=40).all(|n| !factor_set(&u, n).iter().any(|w| is_pal(w))));
}
