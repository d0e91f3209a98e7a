use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeration::beta::{gap_distances, int, pow10, to_f64, BetaValue, Real};
use crate::numeration::{DigitSequence, QuadraticParams, RenyiExpansion};

/// Tolerance used to match a numeric gap to its `Δ_k`.
pub const GAP_TOLERANCE_EXP: i64 = -9;

/// The first nonnegative β-integers and the letter coding of their gaps.
#[derive(Clone, Debug)]
pub struct BetaIntegers {
    /// Increasing values; `values[0] = 0`.
    pub values: Vec<Real>,
    /// Greedy digit strings (most significant first, no leading zeros).
    pub expansions: Vec<Vec<u32>>,
    /// `letters[i] = k` where `values[i+1] - values[i] = Δ_k`.
    pub letters: Vec<u8>,
}

#[derive(Serialize)]
pub struct BetaIntegerRow {
    pub index: usize,
    pub digits: String,
    pub value: f64,
}

impl BetaIntegers {
    pub fn rows(&self) -> Vec<BetaIntegerRow> {
        self.values
            .iter()
            .zip(&self.expansions)
            .enumerate()
            .map(|(index, (v, d))| BetaIntegerRow {
                index,
                digits: digit_string(d),
                value: to_f64(v),
            })
            .collect()
    }
}

fn digit_string(d: &[u32]) -> String {
    if d.is_empty() {
        return "0".into();
    }
    let wide = d.iter().any(|&x| x >= 10);
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    parts.join(if wide { "," } else { "" })
}

/// Enumerates admissible integer digit strings of a fixed length in
/// lexicographic (= numeric) order: every tail `x_j … x_0 0^ω` must be
/// strictly smaller than the quasi-greedy expansion `d*_β(1)`.
struct AdmissibleStrings<'a> {
    bound: &'a DigitSequence,
    len: usize,
    limit: usize,
    out: Vec<Vec<u32>>,
}

impl AdmissibleStrings<'_> {
    fn run(&mut self, prefix: &mut Vec<u32>, pending: &[usize]) {
        if self.out.len() >= self.limit {
            return;
        }
        if prefix.len() == self.len {
            // pending tails continue with 0^ω against a nonzero remainder of d*
            self.out.push(prefix.clone());
            return;
        }
        let top = self.bound.digit(0);
        for c in 0..=top {
            let mut next = Vec::with_capacity(pending.len() + 1);
            let mut ok = true;
            for &r in pending.iter().chain(std::iter::once(&0)) {
                let t = self.bound.digit(r);
                if c > t {
                    ok = false;
                    break;
                }
                if c == t {
                    next.push(r + 1);
                }
            }
            if !ok {
                // larger digits only make it worse
                break;
            }
            prefix.push(c);
            self.run(prefix, &next);
            prefix.pop();
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// Coordinates `(x, y)` of `x + yβ` in `Z[β]` for quadratic β.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ZBeta(i128, i128);

impl ZBeta {
    /// Multiplication by β using `β² = (a+1)β - (a-b)`.
    fn times_beta(self, params: QuadraticParams) -> Option<ZBeta> {
        let (a, b) = (params.a() as i128, params.b() as i128);
        let x = self.1.checked_mul(-(a - b))?;
        let y = self.1.checked_mul(a + 1)?.checked_add(self.0)?;
        Some(ZBeta(x, y))
    }

    fn eval(digits: &[u32], params: QuadraticParams) -> Option<ZBeta> {
        // Horner
        let mut acc = ZBeta(0, 0);
        for &d in digits {
            acc = acc.times_beta(params)?;
            acc.0 = acc.0.checked_add(d as i128)?;
        }
        Some(acc)
    }
}

/// The first `count` nonnegative β-integers in increasing order and the
/// letters coding their consecutive gaps.
///
/// Gaps are matched to the nearest `Δ_k` of the minimal form of `renyi`
/// within `10^-9`. For quadratic β the gaps are also classified exactly in
/// `Z[β]` (`Δ_0 = 1`, `Δ_1 = β - a`) and both classifications must agree.
pub fn beta_integers(
    renyi: &RenyiExpansion,
    beta: &BetaValue,
    count: usize,
) -> Result<BetaIntegers> {
    if count < 2 {
        return Err(Error::input("count must be at least 2"));
    }
    let bound = renyi.quasi_greedy();
    let mut strings = Vec::new();
    for len in 1..=64 {
        let mut gen = AdmissibleStrings {
            bound: &bound,
            len,
            limit: count,
            out: Vec::new(),
        };
        gen.run(&mut Vec::with_capacity(len), &[]);
        if gen.out.len() >= count {
            strings = gen.out;
            break;
        }
    }
    if strings.len() < count {
        return Err(Error::input(format!("cannot enumerate {count} β-integers")));
    }

    let precision = beta.precision();
    let b = beta.value();
    let mut entries: Vec<(Real, Vec<u32>)> = strings
        .into_iter()
        .map(|s| {
            let mut acc = int(0, precision);
            for &d in &s {
                acc = acc * b + int(d as i64, precision);
            }
            let first = s.iter().position(|&d| d != 0).unwrap_or(s.len());
            (acc, s[first..].to_vec())
        })
        .collect();
    entries.sort_by(|x, y| x.0.cmp(&y.0));

    let minimal = renyi.minimal();
    let gaps = gap_distances(&minimal, beta);
    let tolerance = pow10(GAP_TOLERANCE_EXP, precision);
    let exact = beta
        .quadratic_params()
        .filter(|p| renyi.quadratic_params() == Some(*p));

    let mut letters = Vec::with_capacity(count - 1);
    for (i, pair) in entries.windows(2).enumerate() {
        let gap = &pair[1].0 - &pair[0].0;
        let numeric = gaps.classify(&gap, &tolerance).ok_or_else(|| {
            Error::Precision(format!(
                "gap {} between β-integers #{i} and #{} matches no Δ_k within 1e-9",
                to_f64(&gap),
                i + 1
            ))
        })?;
        if let Some(params) = exact {
            let lo = ZBeta::eval(&pair[0].1, params);
            let hi = ZBeta::eval(&pair[1].1, params);
            let (lo, hi) = lo
                .zip(hi)
                .ok_or_else(|| Error::Precision("Z[β] coordinates overflow".into()))?;
            let d = ZBeta(hi.0 - lo.0, hi.1 - lo.1);
            let exact_letter = if d == ZBeta(1, 0) {
                0
            } else if d == ZBeta(-(params.a() as i128), 1) {
                1
            } else {
                return Err(Error::Precision(format!(
                    "exact gap {d:?} is neither Δ_0 nor Δ_1"
                )));
            };
            if exact_letter != numeric {
                return Err(Error::Precision(format!(
                    "numeric gap classification disagrees with exact arithmetic at #{i}"
                )));
            }
        }
        letters.push(numeric as u8);
    }

    let (values, expansions) = entries.into_iter().unzip();
    Ok(BetaIntegers {
        values,
        expansions,
        letters,
    })
}
