use serde::Serialize;

use crate::complexity::{uv_tower_covering, Mode, UVTower};
use crate::error::{Error, Result};
use crate::numeration::{ParityClass, QuadraticParams};
use crate::palindrome::{palindromes_in, ExtensionKind};
use crate::substitution::{Language, Substitution};

/// Tower level `mul·k + off` for `k >= 1`.
#[derive(Clone, Copy, Debug)]
struct Level {
    mul: usize,
    off: isize,
}

impl Level {
    // every level used is >= 1 for k >= 1
    fn at(self, k: usize) -> usize {
        ((self.mul * k) as isize + self.off) as usize
    }
}

#[derive(Clone, Copy, Debug)]
enum KFilter {
    Any,
    NotTwoMod3,
    AtLeast(usize),
}

impl KFilter {
    fn admits(self, k: usize) -> bool {
        match self {
            KFilter::Any => true,
            KFilter::NotTwoMod3 => k % 3 != 2,
            KFilter::AtLeast(m) => k >= m,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Clause {
    /// `n <= |U^(1)| = a - 1`
    UpToU1(u8),
    /// `n <= |V^(1)| = b`
    UpToV1(u8),
    /// `|V^(v(k))| < n <= |U^(u(k))|` for some admitted `k`
    Between {
        v: Level,
        u: Level,
        k: KFilter,
        value: u8,
    },
}

#[derive(Clone, Copy, Debug)]
struct LengthRule {
    clauses: &'static [Clause],
    otherwise: u8,
}

/// Closed-form rule for one parity class: even and odd lengths.
#[derive(Clone, Copy, Debug)]
struct ParityRule {
    class: ParityClass,
    even: LengthRule,
    odd: LengthRule,
}

const L2M1: Level = Level { mul: 2, off: -1 };
const L2: Level = Level { mul: 2, off: 0 };
const L2P1: Level = Level { mul: 2, off: 1 };
const L3M1: Level = Level { mul: 3, off: -1 };
const L1: Level = Level { mul: 1, off: 0 };

// First matching clause wins; one row per parity class.
const RULES: [ParityRule; 4] = [
    ParityRule {
        class: ParityClass::EvenBOddA,
        even: LengthRule {
            clauses: &[Clause::Between {
                v: L2M1,
                u: L2M1,
                k: KFilter::Any,
                value: 2,
            }],
            otherwise: 1,
        },
        odd: LengthRule {
            clauses: &[Clause::Between {
                v: L2,
                u: L2,
                k: KFilter::Any,
                value: 3,
            }],
            otherwise: 2,
        },
    },
    ParityRule {
        class: ParityClass::BothEven,
        even: LengthRule {
            clauses: &[Clause::Between {
                v: L2M1,
                u: L2,
                k: KFilter::Any,
                value: 2,
            }],
            otherwise: 1,
        },
        odd: LengthRule {
            clauses: &[
                Clause::UpToU1(2),
                Clause::Between {
                    v: L2,
                    u: L2P1,
                    k: KFilter::Any,
                    value: 2,
                },
            ],
            otherwise: 1,
        },
    },
    ParityRule {
        class: ParityClass::OddBEvenA,
        even: LengthRule {
            clauses: &[Clause::Between {
                v: L3M1,
                u: L3M1,
                k: KFilter::Any,
                value: 2,
            }],
            otherwise: 1,
        },
        odd: LengthRule {
            clauses: &[Clause::Between {
                v: L1,
                u: L1,
                k: KFilter::NotTwoMod3,
                value: 3,
            }],
            otherwise: 2,
        },
    },
    ParityRule {
        class: ParityClass::BothOdd,
        even: LengthRule {
            clauses: &[Clause::UpToU1(1)],
            otherwise: 0,
        },
        odd: LengthRule {
            clauses: &[
                Clause::UpToV1(2),
                Clause::Between {
                    v: L1,
                    u: L1,
                    k: KFilter::AtLeast(2),
                    value: 4,
                },
            ],
            otherwise: 3,
        },
    },
];

fn rule_for(class: ParityClass) -> &'static ParityRule {
    RULES
        .iter()
        .find(|r| r.class == class)
        .expect("every class has a rule")
}

fn clause_value(clause: Clause, tower: &UVTower, n: usize) -> Option<u8> {
    let params = tower.params();
    match clause {
        Clause::UpToU1(value) => (n < params.a() as usize).then_some(value),
        Clause::UpToV1(value) => (n <= params.b() as usize).then_some(value),
        Clause::Between {
            v,
            u,
            k: filter,
            value,
        } => {
            let n_big = num_bigint::BigUint::from(n);
            // levels beyond the tower depth start past n
            let hit = (1..)
                .take_while(|&k| v.at(k) <= tower.depth())
                .filter(|&k| filter.admits(k) && u.at(k) <= tower.depth())
                .any(|k| tower.v_len(v.at(k)) < &n_big && &n_big <= tower.u_len(u.at(k)));
            hit.then_some(value)
        }
    }
}

/// Closed-form `P(n)` for non-Sturmian quadratic parameters. The tower must
/// satisfy `|V^(depth)| > n`.
pub fn closed_form_palindromes(tower: &UVTower, n: usize) -> u8 {
    let rule = rule_for(tower.params().parity_class());
    let lr = if n.is_multiple_of(2) {
        rule.even
    } else {
        rule.odd
    };
    lr.clauses
        .iter()
        .find_map(|&c| clause_value(c, tower, n))
        .unwrap_or(lr.otherwise)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalindromeRow {
    pub n: usize,
    #[serde(rename = "P")]
    pub p: u64,
    pub maximal_count: u64,
    pub one_ext_count: u64,
    pub two_ext_count: u64,
    pub source: Mode,
}

/// `P(n)` for `0 <= n <= n_max` with the extension classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalindromeTable {
    pub rows: Vec<PalindromeRow>,
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    #[serde(rename = "P")]
    p: u64,
    maximal_count: u64,
    two_ext_count: u64,
}

impl PalindromeTable {
    pub fn p(&self, n: usize) -> u64 {
        self.rows[n].p
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// CSV with header `n,P,maximal_count,two_ext_count`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(CsvRow {
                n: r.n,
                p: r.p,
                maximal_count: r.maximal_count,
                two_ext_count: r.two_ext_count,
            })
            .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
    }

    /// First `n` where the two tables disagree on any count.
    pub fn first_disagreement(&self, other: &PalindromeTable) -> Option<usize> {
        let key = |r: &PalindromeRow| (r.p, r.maximal_count, r.one_ext_count, r.two_ext_count);
        self.rows
            .iter()
            .zip(&other.rows)
            .find(|(x, y)| key(x) != key(y))
            .map(|(x, _)| x.n)
            .or_else(|| {
                (self.rows.len() != other.rows.len()).then(|| self.rows.len().min(other.rows.len()))
            })
    }
}

/// Enumerated palindromes; `lang` must hold lengths up to `n_max + 2`.
pub fn oracle_palindromes(lang: &Language, n_max: usize) -> Result<PalindromeTable> {
    let rows = (0..=n_max)
        .map(|n| {
            let recs = palindromes_in(lang, n)?;
            let count = |k| recs.iter().filter(|r| r.kind() == k).count() as u64;
            Ok(PalindromeRow {
                n,
                p: recs.len() as u64,
                maximal_count: count(ExtensionKind::Maximal),
                one_ext_count: count(ExtensionKind::One),
                two_ext_count: count(ExtensionKind::Two),
                source: Mode::Oracle,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PalindromeTable { rows })
}

/// Closed-form table. Maximal palindromes are the `U^(k)` and the
/// two-extension ones the `V^(k)`, so those counts come from the lengths.
pub fn closed_form_palindromes_with(tower: &UVTower, n_max: usize) -> PalindromeTable {
    let rows = (0..=n_max)
        .map(|n| {
            let p = closed_form_palindromes(tower, n) as u64;
            let maximal_count = tower.u_level_of_len(n).is_some() as u64;
            let two_ext_count = tower.v_level_of_len(n).is_some() as u64;
            PalindromeRow {
                n,
                p,
                maximal_count,
                one_ext_count: p.saturating_sub(maximal_count + two_ext_count),
                two_ext_count,
                source: Mode::ClosedForm,
            }
        })
        .collect();
    PalindromeTable { rows }
}

pub fn closed_form_palindrome_table(
    params: QuadraticParams,
    n_max: usize,
) -> Result<PalindromeTable> {
    let tower = uv_tower_covering(params, n_max + 1, 0)?;
    Ok(closed_form_palindromes_with(&tower, n_max))
}

/// Palindromic complexity of the fixed point of `sub` for `0 <= n <= n_max`.
pub fn palindromic_complexity(
    sub: &Substitution,
    n_max: usize,
    mode: Mode,
) -> Result<PalindromeTable> {
    match mode {
        Mode::Oracle => oracle_palindromes(&Language::new(sub, n_max + 2), n_max),
        Mode::ClosedForm => {
            let params = sub.quadratic_params().ok_or_else(|| {
                Error::unsupported(format!(
                    "no closed form for {sub}: not a quadratic substitution"
                ))
            })?;
            closed_form_palindrome_table(params, n_max)
        }
    }
}
