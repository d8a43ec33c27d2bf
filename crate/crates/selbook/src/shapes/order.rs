//! Order constraints on cells, as explicit cover relations.
//!
//! A filling of a shape with `1..=N` is valid exactly when the labels form
//! a linear extension of one of two partial orders:
//!
//! * **row-column order**: labels grow along every row and down every
//!   column of every page (the usual tableau condition, with merged
//!   diagonal blocks comparing against everything sharing their rows or
//!   columns);
//! * **diagonal order**: each non-diagonal entry exceeds the diagonal of
//!   its rows and precedes the diagonal of its columns, and the diagonal
//!   entries increase along the staircase.
//!
//! The second one is defined only for books whose pages are staircases
//! (plain, with arms, or merged); general shifted pages have cells with no
//! diagonal in their columns, and no diagonal-order reading exists for them.

use std::collections::BTreeSet;

use super::book::BookShape;
use super::page::PageShape;
use crate::error::{Error, Result};

/// The two constraint systems a filling can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    /// Rows and columns increase on every page.
    Young,
    /// Entries grow toward, along, and away from the diagonal staircase.
    Selberg,
}

impl std::fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstraintKind::Young => write!(f, "young"),
            ConstraintKind::Selberg => write!(f, "selberg"),
        }
    }
}

/// A partial order on `0..elements`, stored as `(smaller, larger)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderConstraints {
    kind: ConstraintKind,
    elements: usize,
    relations: Vec<(usize, usize)>,
}

impl OrderConstraints {
    /// Row-column constraints of a whole book, on global cell ids.
    pub fn young_for_book(book: &BookShape) -> OrderConstraints {
        let mut rel = BTreeSet::new();
        for (p, page) in book.pages().iter().enumerate() {
            page_row_col_relations(page, |a, b| {
                rel.insert((book.cell_id(p, a), book.cell_id(p, b)));
            });
        }
        // A bare chain still orders its diagonals.
        if book.page_count() == 0 {
            for i in 1..book.diagonal_count() {
                rel.insert((i - 1, i));
            }
        }
        OrderConstraints {
            kind: ConstraintKind::Young,
            elements: book.total_cells(),
            relations: rel.into_iter().collect(),
        }
    }

    /// Diagonal constraints of a book of staircase-family pages.
    pub fn selberg_for_book(book: &BookShape) -> Result<OrderConstraints> {
        if !book.is_staircase_family() {
            return Err(Error::Unsupported(
                "diagonal-order constraints are only defined for staircase-family pages".into(),
            ));
        }
        let mut rel = BTreeSet::new();
        for i in 1..book.diagonal_count() {
            rel.insert((book.diagonal_id(i - 1), book.diagonal_id(i)));
        }
        for (p, page) in book.pages().iter().enumerate() {
            for (c, cell) in page.cells().iter().enumerate() {
                if cell.diagonal.is_some() {
                    continue;
                }
                let id = book.cell_id(p, c);
                if let Some(i) = page.row_diagonal(cell.row0) {
                    rel.insert((book.diagonal_id(i), id));
                }
                if let Some(j) = page.col_diagonal(cell.col0) {
                    rel.insert((id, book.diagonal_id(j)));
                }
            }
        }
        Ok(OrderConstraints {
            kind: ConstraintKind::Selberg,
            elements: book.total_cells(),
            relations: rel.into_iter().collect(),
        })
    }

    /// Order constraints of the requested kind.
    pub fn for_book(book: &BookShape, kind: ConstraintKind) -> Result<OrderConstraints> {
        match kind {
            ConstraintKind::Young => Ok(OrderConstraints::young_for_book(book)),
            ConstraintKind::Selberg => OrderConstraints::selberg_for_book(book),
        }
    }

    /// Row-column constraints of a single page, on page cell indices.
    pub fn young_for_page(page: &PageShape) -> OrderConstraints {
        let mut rel = BTreeSet::new();
        page_row_col_relations(page, |a, b| {
            rel.insert((a, b));
        });
        OrderConstraints {
            kind: ConstraintKind::Young,
            elements: page.cell_count(),
            relations: rel.into_iter().collect(),
        }
    }

    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    /// Number of elements being ordered.
    pub fn elements(&self) -> usize {
        self.elements
    }

    /// The stored `(smaller, larger)` pairs, deduplicated and sorted.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// True when `labels[e]` (values `1..=elements`) respects every relation.
    pub fn is_satisfied_by(&self, labels: &[u32]) -> bool {
        debug_assert_eq!(labels.len(), self.elements);
        self.relations.iter().all(|&(a, b)| labels[a] < labels[b])
    }

    /// Predecessor lists under the stored relations.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.elements];
        for &(a, b) in &self.relations {
            preds[b].push(a);
        }
        preds
    }

    /// Reflexive-transitive comparability matrix, for order-equality tests.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.elements;
        let mut reach = vec![vec![false; n]; n];
        for &(a, b) in &self.relations {
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    /// True when the relations contain no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let closure = self.closure();
        (0..self.elements).all(|i| !closure[i][i])
    }
}

/// Emits consecutive-cell relations along every row and column of a page.
///
/// Cells sharing a row (or column) through any part of their span are sorted
/// by start coordinate; each adjacent pair yields one relation.  Merged
/// blocks therefore compare against every cell that shares any of their rows
/// or columns, via transitivity along the runs.
fn page_row_col_relations(page: &PageShape, mut emit: impl FnMut(usize, usize)) {
    let max_row = page.cells().iter().map(|c| c.row1).max().unwrap_or(0);
    let max_col = page.cells().iter().map(|c| c.col1).max().unwrap_or(0);
    for row in 1..=max_row {
        let mut run: Vec<usize> = (0..page.cell_count())
            .filter(|&i| page.cell(i).touches_row(row))
            .collect();
        run.sort_by_key(|&i| page.cell(i).col0);
        for w in run.windows(2) {
            emit(w[0], w[1]);
        }
    }
    for col in 1..=max_col {
        let mut run: Vec<usize> = (0..page.cell_count())
            .filter(|&i| page.cell(i).touches_col(col))
            .collect();
        run.sort_by_key(|&i| page.cell(i).row0);
        for w in run.windows(2) {
            emit(w[0], w[1]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Composition, Partition};

    fn closure_eq(a: &OrderConstraints, b: &OrderConstraints) -> bool {
        a.elements() == b.elements() && a.closure() == b.closure()
    }

    #[test]
    fn two_diagonal_staircase_is_a_chain_both_ways() {
        let book = BookShape::assemble(vec![PageShape::shifted_staircase(2).unwrap()]).unwrap();
        let young = OrderConstraints::young_for_book(&book);
        let selberg = OrderConstraints::selberg_for_book(&book).unwrap();
        assert_eq!(young.elements(), 3);
        // Both orders force d1 < cell(1,2) < d2, i.e. the same chain.
        assert!(closure_eq(&young, &selberg));
        assert!(young.is_satisfied_by(&[1, 2, 3]));
        assert!(!young.is_satisfied_by(&[1, 3, 2]));
    }

    #[test]
    fn young_refines_selberg_on_staircase_books() {
        for (n, m) in [(3usize, 1usize), (3, 2), (4, 1)] {
            let pages: Vec<PageShape> = (0..m)
                .map(|_| PageShape::shifted_staircase(n).unwrap())
                .collect();
            let book = BookShape::assemble(pages).unwrap();
            let young = OrderConstraints::young_for_book(&book).closure();
            let selberg = OrderConstraints::selberg_for_book(&book).unwrap().closure();
            for a in 0..book.total_cells() {
                for b in 0..book.total_cells() {
                    if selberg[a][b] {
                        assert!(young[a][b], "selberg relation {a}<{b} missing from young");
                    }
                }
            }
        }
    }

    #[test]
    fn corner_cells_are_unconstrained() {
        let book =
            BookShape::assemble(vec![PageShape::nrs_staircase(1, 1, 1, false).unwrap()]).unwrap();
        let selberg = OrderConstraints::selberg_for_book(&book).unwrap();
        let corner = 3; // ids: diagonal 0, then row-major page cells
        let closure = selberg.closure();
        for other in 0..book.total_cells() {
            assert!(!closure[corner][other] && !closure[other][corner] || corner == other);
        }
    }

    #[test]
    fn selberg_rejects_general_shifted_pages() {
        let page = PageShape::shifted(Partition::new(vec![6, 2, 1]).unwrap()).unwrap();
        let book = BookShape::assemble(vec![page]).unwrap();
        assert!(OrderConstraints::selberg_for_book(&book).is_err());
        // The row-column order still exists.
        let young = OrderConstraints::young_for_book(&book);
        assert!(young.is_acyclic());
    }

    #[test]
    fn merged_block_compares_with_all_row_and_col_mates() {
        let page = PageShape::ars_staircase(Composition::new(vec![1, 2]), 1, 1, false).unwrap();
        let book = BookShape::assemble(vec![page.clone()]).unwrap();
        let closure = OrderConstraints::young_for_book(&book).closure();
        let block = book.cell_id(0, page.cell_at(3, 2).unwrap());
        // Above in its columns: (1,2) and (1,3); right in its rows: (3,4), (4,4).
        for (row, col, before) in [(1, 2, true), (1, 3, true), (3, 4, false), (4, 4, false)] {
            let other = book.cell_id(0, page.cell_at(row, col).unwrap());
            if before {
                assert!(closure[other][block], "({row},{col}) should precede the block");
            } else {
                assert!(closure[block][other], "({row},{col}) should follow the block");
            }
        }
    }

    #[test]
    fn orders_are_acyclic_across_the_family_grid() {
        for n in 1..=3usize {
            for m in 1..=2usize {
                for (r, s) in [(0, 0), (1, 0), (1, 2)] {
                    let pages: Vec<PageShape> = (0..m)
                        .map(|_| PageShape::nrs_staircase(n, r, s, false).unwrap())
                        .collect();
                    let book = BookShape::assemble(pages).unwrap();
                    assert!(OrderConstraints::young_for_book(&book).is_acyclic());
                    assert!(OrderConstraints::selberg_for_book(&book).unwrap().is_acyclic());
                }
            }
        }
    }

    #[test]
    fn page_order_counts_cells_only_once() {
        let page = PageShape::skew(
            Partition::new(vec![2, 2]).unwrap(),
            Partition::empty(),
        )
        .unwrap();
        let order = OrderConstraints::young_for_page(&page);
        assert_eq!(order.elements(), 4);
        assert_eq!(order.relations().len(), 4);
    }
}
