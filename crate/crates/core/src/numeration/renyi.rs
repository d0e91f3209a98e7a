use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeration::QuadraticParams;

/// An eventually periodic digit sequence `t_1 … t_m (t_{m+1} … t_{m+p})^ω`.
///
/// This is the unvalidated candidate form; [`RenyiExpansion`] is the
/// Parry-admissible one. A period of `[0]` encodes a finite expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitSequence {
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

/// Outcome of the Parry admissibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParryCheck {
    pub valid: bool,
    /// Smallest `j > 1` (1-based, as in `t_j t_{j+1} …`) whose shifted
    /// sequence is not strictly smaller than the whole sequence.
    pub violating_shift: Option<usize>,
}

impl DigitSequence {
    pub fn new(preperiod: Vec<u32>, period: Vec<u32>) -> Self {
        DigitSequence { preperiod, period }
    }

    pub fn m(&self) -> usize {
        self.preperiod.len()
    }

    pub fn p(&self) -> usize {
        self.period.len()
    }

    /// `t_{i+1}`, 0-based.
    pub fn digit(&self, i: usize) -> u32 {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Finite expansion (trailing zeros).
    pub fn is_simple(&self) -> bool {
        self.period.iter().all(|&d| d == 0)
    }

    /// The sequence `t_{k+1} t_{k+2} …` in eventually periodic form.
    pub fn shifted(&self, k: usize) -> DigitSequence {
        let m = self.preperiod.len();
        if k <= m {
            DigitSequence::new(self.preperiod[k..].to_vec(), self.period.clone())
        } else {
            let r = (k - m) % self.period.len();
            let mut period = self.period[r..].to_vec();
            period.extend_from_slice(&self.period[..r]);
            DigitSequence::new(Vec::new(), period)
        }
    }

    /// Shortest preperiod and period describing the same infinite sequence.
    pub fn minimal(&self) -> DigitSequence {
        let p = self.period.len();
        let mut period = self.period.clone();
        for q in 1..=p {
            if p.is_multiple_of(q) && (0..p).all(|i| self.period[i] == self.period[i % q]) {
                period.truncate(q);
                break;
            }
        }
        let mut preperiod = self.preperiod.clone();
        // rotate the period backwards into the preperiod while it matches
        while let Some(&last) = preperiod.last() {
            if last != *period.last().unwrap() {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        DigitSequence::new(preperiod, period)
    }

    pub fn is_minimal(&self) -> bool {
        let min = self.minimal();
        min.m() == self.m() && min.p() == self.p()
    }

    fn validate_shape(&self) -> Result<()> {
        if self.period.is_empty() {
            return Err(Error::input("digit sequence needs a period of length >= 1"));
        }
        Ok(())
    }

    /// Parry's criterion: every shift `t_j t_{j+1} …`, `j > 1`, is strictly
    /// lexicographically smaller than `t_1 t_2 …`.
    ///
    /// Both sides are eventually periodic with period `p`, so comparing the
    /// first `m + 2p` digits decides the order.
    pub fn parry_check(&self) -> Result<ParryCheck> {
        self.validate_shape()?;
        let m = self.m();
        let p = self.p();
        let window = m + 2 * p;
        // shifts by m + p + r repeat shift m + r, so 1..m+p covers all of them
        let shifts = (m + p).max(2);
        for k in 1..shifts {
            let ord = (0..window)
                .map(|i| self.digit(i + k).cmp(&self.digit(i)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal);
            if ord != Ordering::Less {
                return Ok(ParryCheck {
                    valid: false,
                    violating_shift: Some(k + 1),
                });
            }
        }
        Ok(ParryCheck {
            valid: true,
            violating_shift: None,
        })
    }
}

impl fmt::Display for DigitSequence {
    /// `"t1 t2 … tm (tm+1 … tm+p)"`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.preperiod {
            write!(f, "{d} ")?;
        }
        let period: Vec<String> = self.period.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", period.join(" "))
    }
}

impl FromStr for DigitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::input("empty digit sequence"));
        }
        let (pre, per) = match s.find('(') {
            Some(open) => {
                let close = s
                    .rfind(')')
                    .filter(|&c| c > open && s[c + 1..].trim().is_empty())
                    .ok_or_else(|| Error::input(format!("unbalanced parentheses in {s:?}")))?;
                (&s[..open], &s[open + 1..close])
            }
            // no period given: a finite expansion
            None => (s, "0"),
        };
        let digits = |part: &str| -> Result<Vec<u32>> {
            part.split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::input(format!("bad digit {t:?} in {s:?}")))
                })
                .collect()
        };
        let seq = DigitSequence::new(digits(pre)?, digits(per)?);
        seq.validate_shape()?;
        if seq.preperiod.is_empty() && seq.period.iter().all(|&d| d == 0) {
            return Err(Error::input("digit sequence is identically zero"));
        }
        Ok(seq)
    }
}

/// A Parry-admissible Rényi expansion of unity `d_β(1)`.
///
/// The representation is kept as given; use [`RenyiExpansion::minimal`] to
/// normalize `(m, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "DigitSequence")]
pub struct RenyiExpansion {
    digits: DigitSequence,
}

impl RenyiExpansion {
    pub fn new(digits: DigitSequence) -> Result<Self> {
        digits.validate_shape()?;
        if digits.digit(0) == 0 {
            return Err(Error::input("t_1 must be at least 1"));
        }
        let check = digits.parry_check()?;
        if !check.valid {
            return Err(Error::input(format!(
                "{digits} is not Parry-admissible: shift j={} is not smaller",
                check.violating_shift.unwrap_or(0)
            )));
        }
        Ok(RenyiExpansion { digits })
    }

    /// `a b^ω`
    pub fn quadratic(params: QuadraticParams) -> Self {
        let digits = DigitSequence::new(vec![params.a()], vec![params.b()]);
        RenyiExpansion::new(digits).expect("a b^ω with a-1 >= b >= 1 is admissible")
    }

    pub fn digits(&self) -> &DigitSequence {
        &self.digits
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.digits.preperiod
    }

    pub fn period(&self) -> &[u32] {
        &self.digits.period
    }

    pub fn m(&self) -> usize {
        self.digits.m()
    }

    pub fn p(&self) -> usize {
        self.digits.p()
    }

    /// `t_{i+1}`, 0-based.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.digit(i)
    }

    pub fn is_simple(&self) -> bool {
        self.digits.is_simple()
    }

    pub fn is_minimal(&self) -> bool {
        self.digits.is_minimal()
    }

    pub fn minimal(&self) -> RenyiExpansion {
        RenyiExpansion {
            digits: self.digits.minimal(),
        }
    }

    /// Number of gap values `Δ_0 … Δ_{m+p-1}` (alphabet size of `u_β`).
    /// For finite expansions only `Δ_0 … Δ_{m-1}` are positive.
    pub fn gap_count(&self) -> usize {
        if self.is_simple() {
            self.m()
        } else {
            self.m() + self.p()
        }
    }

    /// `(a, b)` when the expansion is `a b^ω` (after minimization).
    pub fn quadratic_params(&self) -> Option<QuadraticParams> {
        let min = self.digits.minimal();
        match (min.preperiod.as_slice(), min.period.as_slice()) {
            ([a], [b]) if *b >= 1 => QuadraticParams::new(*a, *b).ok(),
            _ => None,
        }
    }

    /// The quasi-greedy expansion `d*_β(1)`: equal to `d_β(1)` unless the
    /// expansion is finite, where `t_1 … t_m 0^ω` becomes `(t_1 … (t_m - 1))^ω`.
    pub fn quasi_greedy(&self) -> DigitSequence {
        if !self.is_simple() {
            return self.digits.clone();
        }
        let mut period = self.digits.preperiod.clone();
        while period.last() == Some(&0) {
            period.pop();
        }
        if let Some(last) = period.last_mut() {
            *last -= 1;
        }
        DigitSequence::new(Vec::new(), period)
    }
}

impl From<RenyiExpansion> for DigitSequence {
    fn from(r: RenyiExpansion) -> Self {
        r.digits
    }
}

impl<'de> Deserialize<'de> for RenyiExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let digits = DigitSequence::deserialize(deserializer)?;
        RenyiExpansion::new(digits).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RenyiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.digits.fmt(f)
    }
}

impl FromStr for RenyiExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RenyiExpansion::new(s.parse()?)
    }
}
