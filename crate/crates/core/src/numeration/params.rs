use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(a, b)` of a quadratic non-simple Parry number with Rényi
/// expansion of unity `a b^ω`, where `a - 1 >= b >= 1`.
///
/// β is the larger root of `x² - (a+1)x + (a-b)`. The boundary `b = a - 1`
/// yields a Sturmian fixed point and is accepted but flagged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadraticParams {
    a: u32,
    b: u32,
}

/// Parity class of `(a, b)`. The palindromic structure of the fixed point
/// depends only on this class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    /// `b` even, `a` odd.
    EvenBOddA,
    /// `a` and `b` even.
    BothEven,
    /// `b` odd, `a` even.
    OddBEvenA,
    /// `a` and `b` odd.
    BothOdd,
}

impl QuadraticParams {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if b < 1 {
            return Err(Error::InvalidParams {
                a,
                b,
                reason: "b must be at least 1".into(),
            });
        }
        if a < b + 1 {
            return Err(Error::InvalidParams {
                a,
                b,
                reason: "need a - 1 >= b".into(),
            });
        }
        // letter images are 0^a 1, keep them to sane sizes
        if a > 200 {
            return Err(Error::InvalidParams {
                a,
                b,
                reason: "a larger than 200 is not supported".into(),
            });
        }
        Ok(QuadraticParams { a, b })
    }

    /// Like [`QuadraticParams::new`] but additionally rejects the Sturmian
    /// boundary `b = a - 1`.
    pub fn non_sturmian(a: u32, b: u32) -> Result<Self> {
        let p = Self::new(a, b)?;
        p.require_non_sturmian()?;
        Ok(p)
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn is_sturmian(&self) -> bool {
        self.b + 1 == self.a
    }

    pub(crate) fn require_non_sturmian(&self) -> Result<()> {
        if self.is_sturmian() {
            Err(Error::unsupported(format!(
                "(a,b)=({},{}) is the Sturmian boundary b = a-1; only the oracle applies",
                self.a, self.b
            )))
        } else {
            Ok(())
        }
    }

    pub fn parity_class(&self) -> ParityClass {
        match (self.a.is_multiple_of(2), self.b.is_multiple_of(2)) {
            (false, true) => ParityClass::EvenBOddA,
            (true, true) => ParityClass::BothEven,
            (true, false) => ParityClass::OddBEvenA,
            (false, false) => ParityClass::BothOdd,
        }
    }

    /// All non-Sturmian points with `2 <= a <= a_max`, `1 <= b <= a - 2`, in
    /// grid order (a ascending, then b).
    pub fn grid(a_max: u32) -> Vec<QuadraticParams> {
        (2..=a_max)
            .flat_map(|a| (1..a.saturating_sub(1)).map(move |b| QuadraticParams { a, b }))
            .collect()
    }
}

impl fmt::Display for QuadraticParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraint() {
        assert!(QuadraticParams::new(3, 1).is_ok());
        assert!(QuadraticParams::new(2, 1).unwrap().is_sturmian());
        assert!(QuadraticParams::new(3, 3).is_err());
        assert!(QuadraticParams::new(3, 0).is_err());
        assert!(matches!(
            QuadraticParams::non_sturmian(2, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn default_grid_has_ten_points() {
        let g = QuadraticParams::grid(6);
        assert_eq!(g.len(), 10);
        assert_eq!(g[0], QuadraticParams::new(3, 1).unwrap());
        assert!(g.iter().all(|p| !p.is_sturmian()));
        assert!(QuadraticParams::grid(2).is_empty());
    }

    #[test]
    fn parity() {
        let class = |a, b| QuadraticParams::new(a, b).unwrap().parity_class();
        assert_eq!(class(3, 1), ParityClass::BothOdd);
        assert_eq!(class(4, 2), ParityClass::BothEven);
        assert_eq!(class(3, 2), ParityClass::EvenBOddA);
        assert_eq!(class(4, 1), ParityClass::OddBEvenA);
    }
}
