//! Enumeration: fillings of books, their gap vectors, the letter
//! permutations they correspond to, and the frozen-region check.
//!
//! Everything here is exact and deterministic.  Counting goes through the
//! down-set dynamic program in [`extensions`]; streaming enumeration goes
//! through backtracking engines with configurable budgets.

mod extensions;
mod filling;
mod freeze;
mod permutations;

pub use extensions::{
    count_linear_extensions, first_extension, linear_extension_iter, visit_linear_extensions,
    LinearExtensionIter,
};
pub use filling::{
    classify_by_gaps, count_fillings, enumerate_fillings, gap_census, is_valid_filling, Filling,
    FillingIter, GapVector,
};
pub use freeze::check_freeze;
pub use permutations::{
    book_to_permutation, count_selberg_permutations, enumerate_selberg_permutations,
    permutation_to_book, selberg_alphabet, PermutationIter, SelbergLetter, SelbergPermutation,
};
