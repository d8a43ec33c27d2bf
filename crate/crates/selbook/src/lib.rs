//! Exact combinatorics of Selberg books and Young books.
//!
//! A *book* is a stack of staircase-like diagrams (*pages*) glued along their
//! diagonal cells.  Filling the cells with `1..=N` subject to order
//! constraints gives *Selberg books* (entries grow toward the diagonal and
//! along it) or *Young books* (entries grow along every row and column of
//! every page).  Their counts evaluate Selberg-type integrals at half-integer
//! exponents, refine over the *gap vector* of the diagonal entries, and
//! biject with a class of pattern-constrained words we call Selberg
//! permutations.
//!
//! Everything here is exact: counts are big integers, integral values are
//! rationals times a power of √π, and every closed form ships with an
//! independent enumeration or determinant route that the [`verify`] module
//! replays.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`] — pages, books, and the order constraints their cells carry;
//! * [`dsl`] — the textual shape notation used by the CLI (`shifted:3,2,1`,
//!   `nrs:n=2,r=1,s=2`, `book:[...]`, …);
//! * [`combinat`] — filling enumeration, linear-extension counting, gap
//!   classification, Selberg permutations, and the freeze check;
//! * [`formulas`] — closed-form counts and exact integral evaluation;
//! * [`genfun`] — gap-refined generating functions and their moments;
//! * [`verify`] — dual-route identity checks, one per shipped claim.

pub mod budget;
pub mod combinat;
pub mod dsl;
pub mod error;
pub mod formulas;
pub mod genfun;
pub mod shapes;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
