//! Palindromic factors of Parry fixed points: extensions, centers, tower
//! centers, infinite palindromic branches, reversal closure, and `P(n)` by
//! enumeration or by the parity-class interval rules.

mod branches;
mod closure;
mod identities;
mod records;
mod table;

pub use branches::{
    branch_uniqueness, classify_tower_centers, infinite_branches, BranchGenerator, BranchSpec,
    BranchUniqueness, TowerCenterRow, BRANCH_PREFIX_FACTOR, DEFAULT_BRANCH_BUDGET,
};
pub use closure::{last_palindromic_length, reversal_closure_probe, ReversalReport};
pub use identities::{identity_rows, verify_identities, IdentityReport, IdentityRow};
pub use records::{
    center_evolution, center_of, palindrome_counts, palindromes_in, palindromes_of_length,
    palindromic_extensions, t_map_palindrome_check, Center, ExtensionKind, PalindromeRecord,
    PtCheck,
};
pub use table::{
    closed_form_palindrome_table, closed_form_palindromes, closed_form_palindromes_with,
    oracle_palindromes, palindromic_complexity, PalindromeRow, PalindromeTable,
};
