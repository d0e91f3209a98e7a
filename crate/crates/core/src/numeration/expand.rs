use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeration::beta::{int, to_f64, BetaValue, Real};

/// Greedy β-expansion digits `x_k x_{k-1} … x_{k-n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaExpansion {
    /// Exponent `k` of the leading digit.
    pub leading_exponent: i64,
    pub digits: Vec<u32>,
}

impl BetaExpansion {
    /// Exponent of `digits[i]`.
    pub fn exponent(&self, i: usize) -> i64 {
        self.leading_exponent - i as i64
    }

    /// Digits with nonnegative exponent, most significant first.
    pub fn integer_digits(&self) -> &[u32] {
        let n = (self.leading_exponent + 1).clamp(0, self.digits.len() as i64) as usize;
        &self.digits[..n]
    }

    /// `Σ x_i β^i`
    pub fn value(&self, beta: &BetaValue) -> Real {
        let precision = beta.precision();
        let b = beta.value();
        let one = int(1, precision);
        let inv = &one / b;
        let mut scale = if self.leading_exponent >= 0 {
            b.powi(self.leading_exponent.into())
        } else {
            inv.powi((-self.leading_exponent).into())
        };
        let mut acc = int(0, precision);
        for &d in &self.digits {
            acc += &scale * int(d as i64, precision);
            scale = &scale * &inv;
        }
        acc
    }
}

impl fmt::Display for BetaExpansion {
    /// Radix-point notation; digits of 10 or more are comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.digits.iter().any(|&d| d >= 10);
        let join = |ds: &[u32]| -> String {
            let parts: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
            parts.join(if wide { "," } else { "" })
        };
        if self.leading_exponent >= 0 {
            let int_part = self.integer_digits();
            let frac = &self.digits[int_part.len()..];
            write!(f, "{}", join(int_part))?;
            if !frac.is_empty() {
                write!(f, ".{}", join(frac))?;
            }
            Ok(())
        } else {
            let zeros = vec![0; (-self.leading_exponent - 1) as usize];
            let sep = if wide && !zeros.is_empty() { "," } else { "" };
            write!(f, "0.{}{}{}", join(&zeros), sep, join(&self.digits))
        }
    }
}

/// Greedy expansion of `x >= 0` by iterating `T_β(y) = βy - ⌊βy⌋` from
/// `y = x / β^{k+1}`, where `β^k <= x < β^{k+1}`.
///
/// Values within the working tolerance of an integer are snapped, so exact
/// β-polynomials such as `β + 1` come out with terminating digits.
pub fn beta_expand(x: &Real, beta: &BetaValue, digit_count: usize) -> Result<BetaExpansion> {
    if digit_count == 0 {
        return Err(Error::input("digit_count must be at least 1"));
    }
    let precision = beta.precision();
    let zero = int(0, precision);
    if *x < zero {
        return Err(Error::input(format!("cannot expand negative number {x}")));
    }
    let b = beta.value();
    let tol = beta.tolerance();
    if *x <= tol {
        return Ok(BetaExpansion {
            leading_exponent: 0,
            digits: vec![0; digit_count],
        });
    }
    let one = int(1, precision);

    // leading exponent: largest k with β^k <= x (up to tolerance)
    let mut k: i64 = 0;
    let mut power = one.clone();
    if x + &tol >= one {
        while &power * b <= x + &tol {
            power = &power * b;
            k += 1;
        }
    } else {
        while power > x + &tol {
            power = &power / b;
            k -= 1;
        }
    }

    let max_digit = beta.max_digit();
    let mut y = x / (&power * b);
    let mut digits = Vec::with_capacity(digit_count);
    for _ in 0..digit_count {
        let z = &y * b;
        let mut d = (&z + &tol).floor();
        let mut digit: i64 = d.to_int().value().try_into().unwrap_or(i64::MAX);
        if digit > max_digit as i64 {
            digit = max_digit as i64;
            d = int(digit, precision);
        }
        y = z - d;
        if y < zero {
            y = zero.clone();
        }
        digits.push(digit.max(0) as u32);
    }
    Ok(BetaExpansion {
        leading_exponent: k,
        digits,
    })
}

/// Nonnegative reals as f64, for display.
pub fn approx(x: &Real) -> f64 {
    to_f64(x)
}
