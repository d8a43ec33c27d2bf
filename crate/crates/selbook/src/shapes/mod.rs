//! Diagrams and the order constraints their cells carry.
//!
//! The atoms are [`PageShape`]s: shifted diagrams, staircase diagrams with
//! row/column arms, their merged-diagonal generalisations, and the skew and
//! truncated shapes that appear as correspondence targets.  Pages that carry
//! diagonal cells glue into a [`BookShape`]; the cells of a book (or of a
//! single page) induce the [`OrderConstraints`] whose linear extensions are
//! exactly its valid fillings.

mod book;
mod correspond;
mod order;
mod page;

pub use book::{BookShape, GapForm};
pub use correspond::{
    from_square_tableau, to_skew_tableau, to_square_tableau, to_truncated_tableau, PageFilling,
};
pub use order::{ConstraintKind, OrderConstraints};
pub use page::{CellRole, PageCell, PageKind, PageShape};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Trailing zero parts in the input are accepted and dropped, so `(3, 1, 0)`
/// and `(3, 1)` denote the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting lists that are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(
                "zero part before a positive part".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts, i.e. the number of cells of the diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// True when the parts are strictly decreasing (a shifted diagram).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// True when `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// A finite list of non-negative integers, used for per-page arm widths
/// `r = (r_1, …, r_m)`, `s = (s_1, …, s_m)` and diagonal block sizes
/// `a = (a_1, …, a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        Composition { parts }
    }

    /// The all-`value` composition of the given length.
    pub fn repeat(value: u32, len: usize) -> Composition {
        Composition {
            parts: vec![value; len],
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_strips_trailing_zeros() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.size(), 4);
    }

    #[test]
    fn partition_rejects_increase() {
        assert!(Partition::new(vec![2, 3]).is_err());
    }

    #[test]
    fn partition_rejects_interior_zero() {
        assert!(Partition::new(vec![3, 0, 1]).is_err());
    }

    #[test]
    fn strictness_and_containment() {
        let delta = Partition::new(vec![3, 2, 1]).unwrap();
        assert!(delta.is_strict());
        assert!(!Partition::new(vec![3, 3, 1]).unwrap().is_strict());
        let mu = Partition::new(vec![2, 1]).unwrap();
        assert!(delta.contains(&mu));
        assert!(!mu.contains(&delta));
        assert!(delta.contains(&Partition::empty()));
    }

    #[test]
    fn out_of_range_part_reads_zero() {
        let p = Partition::new(vec![2]).unwrap();
        assert_eq!(p.part(5), 0);
    }
}
