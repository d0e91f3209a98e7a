//! Words, substitutions, fixed points and factor languages.

mod fixed_point;
mod language;
mod morphism;
mod word;

pub use fixed_point::{fixed_point_prefix, FixedPointStream};
pub use language::{factors_of_length, Language, PREFIX_FLOOR_FACTOR};
pub use morphism::{parry_substitution, quadratic_substitution, Substitution};
pub use word::{parse_letters, render_letters, Letter, Word};

pub(crate) use word::is_palindrome;
