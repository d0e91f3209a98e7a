//! Infinite words associated with Parry numbers.
//!
//! * [`numeration`]: Rényi expansions of unity, the Parry admissibility
//!   test, greedy β-expansions and β-integers at arbitrary precision.
//! * [`substitution`]: words, the canonical substitutions, fixed points and
//!   factor languages.
//! * [`complexity`]: the U/V towers and factor complexity `C(n)` for
//!   `φ(0) = 0^a 1`, `φ(1) = 0^b 1`.
//! * [`palindrome`]: palindromic extensions, centers, infinite branches and
//!   palindromic complexity `P(n)`.
//! * [`verify`]: the invariant suite over a parameter grid.
//!
//! ```
//! use parry_core::{quadratic_substitution, factor_complexity, Mode, QuadraticParams};
//!
//! let sub = quadratic_substitution(QuadraticParams::new(3, 1).unwrap());
//! let t = factor_complexity(&sub, 12, Mode::ClosedForm).unwrap();
//! assert_eq!(t.c(12), 18);
//! ```

pub mod complexity;
mod error;
pub mod numeration;
pub mod palindrome;
pub mod substitution;
pub mod verify;

pub use complexity::{
    factor_complexity, uv_tower, ComplexityTable, Mode, SpecialFactorReport, UVTower,
};
pub use error::{Error, Result};
pub use numeration::{BetaValue, DigitSequence, ParityClass, QuadraticParams, RenyiExpansion};
pub use palindrome::{palindromic_complexity, Center, PalindromeRecord, PalindromeTable};
pub use substitution::{
    fixed_point_prefix, parry_substitution, quadratic_substitution, Language, Letter, Substitution,
    Word,
};
