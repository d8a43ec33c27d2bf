//! Fillings of books and their gap vectors.
//!
//! A filling labels the `N` cells of a book bijectively with `1..=N`.  It
//! is a *row-column* (young-kind) filling when every page is increasing
//! along rows and columns, and a *diagonal* (selberg-kind) filling when
//! every off-diagonal entry lies strictly between the diagonal entries of
//! its rows and its columns.  The diagonal labels `a_1 < … < a_n` induce
//! the gap vector `d_i = a_{i+1} - a_i - 1`, optionally extended by the
//! boundary gaps `d_0 = a_1 - 1` and `d_n = N - a_n` for books whose pages
//! have arms.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::shapes::{BookShape, ConstraintKind, GapForm, OrderConstraints};

/// A bijective labelling of `1..=N` on `N` cells, indexed by cell id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    labels: Vec<u32>,
}

impl Filling {
    /// Wraps a label vector, checking it is a permutation of `1..=len`.
    pub fn new(labels: Vec<u32>) -> Result<Filling> {
        let n = labels.len();
        let mut seen = vec![false; n];
        for &v in &labels {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidFilling(format!(
                    "label {v} outside 1..={n}"
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidFilling(format!("label {v} repeated")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Filling { labels })
    }

    /// The labels, indexed by cell id.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Label of one cell.
    pub fn label(&self, cell: usize) -> u32 {
        self.labels[cell]
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl std::fmt::Display for Filling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The gap vector of a filling: cells counted strictly between consecutive
/// diagonal labels, with boundary gaps included for arm-family books.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GapVector {
    pub gaps: Vec<u32>,
}

impl std::fmt::Display for GapVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.gaps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// True when `filling` satisfies the book's constraints of the given kind.
pub fn is_valid_filling(
    book: &BookShape,
    filling: &Filling,
    kind: ConstraintKind,
) -> Result<bool> {
    if filling.len() != book.total_cells() {
        return Err(Error::InvalidFilling(format!(
            "filling has {} labels for {} cells",
            filling.len(),
            book.total_cells()
        )));
    }
    let order = OrderConstraints::for_book(book, kind)?;
    Ok(order.is_satisfied_by(filling.labels()))
}

/// Gap vector of a filling, from its diagonal labels.
///
/// Books of plain shifted pages use the interior gaps `(d_1, …, d_{n-1})`;
/// arm-family books prepend `d_0 = a_1 - 1` and append `d_n = N - a_n`.
pub fn classify_by_gaps(book: &BookShape, filling: &Filling) -> Result<GapVector> {
    classify_labels(book, filling.labels()).map(|gaps| GapVector { gaps })
}

fn classify_labels(book: &BookShape, labels: &[u32]) -> Result<Vec<u32>> {
    if labels.len() != book.total_cells() {
        return Err(Error::InvalidFilling(format!(
            "filling has {} labels for {} cells",
            labels.len(),
            book.total_cells()
        )));
    }
    let n = book.diagonal_count();
    let diag: Vec<u32> = (0..n).map(|i| labels[book.diagonal_id(i)]).collect();
    for w in diag.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidFilling(format!(
                "diagonal labels {} and {} do not increase",
                w[0], w[1]
            )));
        }
    }
    let mut gaps = Vec::with_capacity(n + 1);
    if book.gap_form() == GapForm::Long {
        gaps.push(diag[0] - 1);
    }
    for w in diag.windows(2) {
        gaps.push(w[1] - w[0] - 1);
    }
    if book.gap_form() == GapForm::Long {
        gaps.push(book.total_cells() as u32 - diag[n - 1]);
    }
    Ok(gaps)
}

/// Number of valid fillings, by the down-set dynamic program.
pub fn count_fillings(book: &BookShape, kind: ConstraintKind, budget: &Budget) -> Result<BigUint> {
    let order = OrderConstraints::for_book(book, kind)?;
    super::extensions::count_extensions_raw(order.elements(), order.relations(), budget)
}

/// Streaming enumerator over all valid fillings of a book.
///
/// Fillings come out in lexicographic order of their label vectors (cell
/// id 0 first), each exactly once.  Without a `limit` the book must fit
/// the enumeration budget.
pub fn enumerate_fillings(
    book: &BookShape,
    kind: ConstraintKind,
    budget: &Budget,
    limit: Option<u64>,
) -> Result<FillingIter> {
    let order = OrderConstraints::for_book(book, kind)?;
    let cells = order.elements();
    if cells > 64 {
        return Err(Error::BudgetExceeded(format!(
            "{cells} cells exceed the 64-cell enumeration engine"
        )));
    }
    if limit.is_none() && cells > budget.max_enumeration_cells {
        return Err(Error::BudgetExceeded(format!(
            "enumerating {cells} cells exceeds the {}-cell budget; pass a limit or raise it",
            budget.max_enumeration_cells
        )));
    }
    // Split each cell's relations by its already-assigned partners: cells
    // are labelled in id order, so only partners with smaller ids matter
    // when cell `c` picks its label.
    let mut preds_lt = vec![Vec::new(); cells];
    let mut succs_lt = vec![Vec::new(); cells];
    for &(a, b) in order.relations() {
        if a < b {
            preds_lt[b].push(a);
        } else {
            succs_lt[a].push(b);
        }
    }
    Ok(FillingIter {
        preds_lt,
        succs_lt,
        cells,
        labels: vec![0; cells],
        used: 0,
        depth: 0,
        cursor: 1,
        remaining: limit,
        exhausted: false,
        started: false,
    })
}

/// Iterator state for [`enumerate_fillings`]; labels are assigned to cells
/// in id order, smallest feasible label first, which makes the stream
/// lexicographic in the label vector.
pub struct FillingIter {
    preds_lt: Vec<Vec<usize>>,
    succs_lt: Vec<Vec<usize>>,
    cells: usize,
    labels: Vec<u32>,
    used: u64,
    /// Cells `0..depth` hold labels.
    depth: usize,
    /// Next label value to try for the cell at `depth`.
    cursor: u32,
    remaining: Option<u64>,
    exhausted: bool,
    started: bool,
}

impl FillingIter {
    /// Advances to the next filling and lends its label vector.
    pub fn next_labels(&mut self) -> Option<&[u32]> {
        if self.exhausted {
            return None;
        }
        if let Some(rem) = &mut self.remaining {
            if *rem == 0 {
                self.exhausted = true;
                return None;
            }
            *rem -= 1;
        }
        if self.started && !self.backtrack() {
            return None;
        }
        self.started = true;
        loop {
            if self.depth == self.cells {
                // Complete assignment (also the unique filling of an empty
                // book on the first call).
                return Some(&self.labels);
            }
            match self.next_label_for(self.depth, self.cursor) {
                Some(v) => {
                    self.labels[self.depth] = v;
                    self.used |= 1 << (v - 1);
                    self.depth += 1;
                    self.cursor = 1;
                }
                None => {
                    if !self.backtrack() {
                        return None;
                    }
                }
            }
        }
    }

    /// Advances and clones the filling.
    pub fn next_filling(&mut self) -> Option<Filling> {
        self.next_labels().map(|labels| Filling {
            labels: labels.to_vec(),
        })
    }

    /// Pops the last assignment and positions the cursor after it; false
    /// when the stack is empty (enumeration done).
    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            self.exhausted = true;
            return false;
        }
        self.depth -= 1;
        let v = self.labels[self.depth];
        self.used &= !(1 << (v - 1));
        self.cursor = v + 1;
        true
    }

    /// Smallest feasible label `>= from` for `cell`, given cells `0..cell`
    /// are assigned: unused, above every assigned predecessor, below every
    /// assigned successor.
    fn next_label_for(&self, cell: usize, from: u32) -> Option<u32> {
        let mut lo = from;
        for &a in &self.preds_lt[cell] {
            lo = lo.max(self.labels[a] + 1);
        }
        let mut hi = self.cells as u32;
        for &b in &self.succs_lt[cell] {
            hi = hi.min(self.labels[b] - 1);
        }
        (lo..=hi).find(|&v| self.used & (1 << (v - 1)) == 0)
    }
}

/// Tally of valid fillings by gap vector, in deterministic order.
pub fn gap_census(
    book: &BookShape,
    kind: ConstraintKind,
    budget: &Budget,
) -> Result<BTreeMap<Vec<u32>, BigUint>> {
    let mut iter = enumerate_fillings(book, kind, budget, None)?;
    let mut census: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    while let Some(labels) = iter.next_labels() {
        let gaps = classify_labels(book, labels)?;
        *census.entry(gaps).or_default() += BigUint::one();
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::PageShape;

    fn staircase_book(n: usize, m: usize) -> BookShape {
        let pages: Vec<PageShape> = (0..m)
            .map(|_| PageShape::shifted_staircase(n).unwrap())
            .collect();
        BookShape::assemble(pages).unwrap()
    }

    #[test]
    fn new_rejects_non_permutations() {
        assert!(Filling::new(vec![1, 2, 2]).is_err());
        assert!(Filling::new(vec![0, 1, 2]).is_err());
        assert!(Filling::new(vec![1, 2, 4]).is_err());
        assert!(Filling::new(vec![]).is_ok());
    }

    #[test]
    fn two_diagonal_book_has_one_filling_with_gap_one() {
        let book = staircase_book(2, 1);
        let budget = Budget::default();
        assert_eq!(count_fillings(&book, ConstraintKind::Young, &budget).unwrap(), 1u32.into());
        let mut iter = enumerate_fillings(&book, ConstraintKind::Young, &budget, None).unwrap();
        let filling = iter.next_filling().unwrap();
        assert!(iter.next_filling().is_none());
        let gaps = classify_by_gaps(&book, &filling).unwrap();
        assert_eq!(gaps.gaps, vec![1]);
        assert_eq!(gaps.to_string(), "(1)");
    }

    #[test]
    fn selberg_fillings_of_three_diagonals() {
        // Diagonal-order fillings of the plain 3-staircase: 4 of them, with
        // gap multiset {(2,1) twice, (1,2) twice}.
        let book = staircase_book(3, 1);
        let budget = Budget::default();
        let census = gap_census(&book, ConstraintKind::Selberg, &budget).unwrap();
        assert_eq!(census.len(), 2);
        assert_eq!(census[&vec![1, 2]], 2u32.into());
        assert_eq!(census[&vec![2, 1]], 2u32.into());
        // The row-column fillings refine into the same gap classes, once each.
        let young = gap_census(&book, ConstraintKind::Young, &budget).unwrap();
        assert_eq!(young[&vec![1, 2]], 1u32.into());
        assert_eq!(young[&vec![2, 1]], 1u32.into());
    }

    #[test]
    fn enumeration_is_label_lexicographic_and_valid() {
        let book = staircase_book(3, 2);
        let budget = Budget::default();
        for kind in [ConstraintKind::Young, ConstraintKind::Selberg] {
            let mut iter = enumerate_fillings(&book, kind, &budget, None).unwrap();
            let mut all = Vec::new();
            while let Some(f) = iter.next_filling() {
                assert!(is_valid_filling(&book, &f, kind).unwrap());
                all.push(f.labels().to_vec());
            }
            let mut sorted = all.clone();
            sorted.sort();
            assert_eq!(all, sorted, "{kind} stream out of order");
            sorted.dedup();
            assert_eq!(sorted.len(), all.len(), "{kind} stream repeats");
            let count = count_fillings(&book, kind, &budget).unwrap();
            assert_eq!(count, BigUint::from(all.len() as u64));
        }
    }

    #[test]
    fn arm_books_use_boundary_gaps() {
        // One page, n = 1, arms r = s = 1, full: 4 cells.  The diagonal can
        // never take label 1 (an arm-row cell precedes it), so d_0 >= 1 in
        // every filling.
        let book = BookShape::assemble(vec![
            PageShape::nrs_staircase(1, 1, 1, false).unwrap(),
        ])
        .unwrap();
        let budget = Budget::default();
        let census = gap_census(&book, ConstraintKind::Selberg, &budget).unwrap();
        for gaps in census.keys() {
            assert_eq!(gaps.len(), 2);
            assert!(gaps[0] >= 1);
            assert_eq!(gaps.iter().sum::<u32>(), 3);
        }
        // Plain-staircase arm pages with r = s = 0 pin both boundary gaps to 0.
        let plain = BookShape::assemble(vec![
            PageShape::nrs_staircase(2, 0, 0, false).unwrap(),
        ])
        .unwrap();
        let census = gap_census(&plain, ConstraintKind::Young, &budget).unwrap();
        for gaps in census.keys() {
            assert_eq!(gaps.first(), Some(&0));
            assert_eq!(gaps.last(), Some(&0));
        }
    }

    #[test]
    fn invalid_gap_classification_is_rejected() {
        let book = staircase_book(2, 1);
        // Diagonal labels 3 and 1 decrease.
        let filling = Filling::new(vec![3, 1, 2]).unwrap();
        assert!(classify_by_gaps(&book, &filling).is_err());
        assert!(!is_valid_filling(&book, &filling, ConstraintKind::Young).unwrap());
    }

    #[test]
    fn limit_stops_early_and_bypasses_budget() {
        let book = staircase_book(4, 2);
        let tight = Budget {
            max_enumeration_cells: 4,
            ..Budget::default()
        };
        assert!(enumerate_fillings(&book, ConstraintKind::Selberg, &tight, None).is_err());
        let mut iter =
            enumerate_fillings(&book, ConstraintKind::Selberg, &tight, Some(3)).unwrap();
        let mut seen = 0;
        while iter.next_labels().is_some() {
            seen += 1;
        }
        assert_eq!(seen, 3);
    }
}
