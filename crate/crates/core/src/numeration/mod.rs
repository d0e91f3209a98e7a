//! β-numeration for Parry numbers: Rényi expansions of unity, Parry's
//! admissibility criterion, greedy β-expansions, gap lengths `Δ_k` and
//! β-integers.

mod beta;
mod expand;
mod integers;
mod params;
mod renyi;

pub use beta::{
    beta_from_renyi, beta_of, check_precision, expansion_sum, gap_distances,
    half_precision_tolerance, series_value, BetaValue, GapDistances, QuadraticSurd, Real,
    DEFAULT_PRECISION,
};
pub use expand::{approx, beta_expand, BetaExpansion};
pub use integers::{beta_integers, BetaIntegerRow, BetaIntegers, GAP_TOLERANCE_EXP};
pub use params::{ParityClass, QuadraticParams};
pub use renyi::{DigitSequence, ParryCheck, RenyiExpansion};

/// Parses a decimal string into a working-precision real.
pub fn parse_real(s: &str, precision: usize) -> crate::Result<Real> {
    use std::str::FromStr;
    let x = Real::from_str(s.trim())
        .map_err(|e| crate::Error::InvalidInput(format!("bad number {s:?}: {e}")))?;
    Ok(x.with_precision(precision).value())
}

pub(crate) use beta::{int as real_int, pow10 as real_pow10};
