//! Books: pages glued along their diagonal cells.
//!
//! All pages of a book must carry the same number of diagonals with the
//! same block sizes; the `i`-th diagonals of all pages are identified into
//! a single cell.  Cells get global ids: diagonals first (in diagonal
//! order), then the remaining cells of page 1 in row-major order, then
//! page 2, and so on.

use super::page::{PageKind, PageShape};
use crate::error::{Error, Result};

/// Which gap-vector convention a book uses, decided by its page family.
///
/// Books of plain shifted pages use the interior gaps `(d_1, …, d_{n-1})`;
/// books with arms also track the cells before the first and after the last
/// diagonal, giving `(d_0, …, d_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapForm {
    Short,
    Long,
}

/// A glued stack of pages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookShape {
    pages: Vec<PageShape>,
    diagonal_spans: Vec<u32>,
    /// Global cell id of each diagonal, i.e. `0..n`.
    diagonal_ids: Vec<usize>,
    /// Per page, per page-cell index: the global cell id.
    cell_ids: Vec<Vec<usize>>,
    total_cells: usize,
    corner_cells: usize,
}

impl BookShape {
    /// Glues pages along their diagonals.
    ///
    /// Every page must have the same diagonal count and block sizes; pages
    /// without diagonal cells (skew, truncated) cannot be glued.
    pub fn assemble(pages: Vec<PageShape>) -> Result<BookShape> {
        if pages.is_empty() {
            return Err(Error::InvalidShape(
                "a book needs at least one page; use diagonal_chain for the degenerate case".into(),
            ));
        }
        let spans = pages[0].diagonal_spans();
        if spans.is_empty() {
            return Err(Error::InvalidShape(
                "pages without diagonal cells cannot be glued into a book".into(),
            ));
        }
        for (k, page) in pages.iter().enumerate() {
            if page.diagonal_spans() != spans {
                return Err(Error::InvalidShape(format!(
                    "page {} has diagonal blocks {:?}, expected {:?}",
                    k + 1,
                    page.diagonal_spans(),
                    spans
                )));
            }
        }
        let n = spans.len();
        let mut cell_ids = Vec::with_capacity(pages.len());
        let mut next_id = n;
        let mut corner_cells = 0;
        for page in &pages {
            let mut ids = Vec::with_capacity(page.cell_count());
            for cell in page.cells() {
                match cell.diagonal {
                    Some(i) => ids.push(i),
                    None => {
                        ids.push(next_id);
                        next_id += 1;
                    }
                }
            }
            corner_cells += page.corner_cell_count();
            cell_ids.push(ids);
        }
        Ok(BookShape {
            pages,
            diagonal_ids: (0..n).collect(),
            diagonal_spans: spans,
            cell_ids,
            total_cells: next_id,
            corner_cells,
        })
    }

    /// The book with `n` unit diagonal cells and no pages (`m = 0`).
    pub fn diagonal_chain(n: usize) -> Result<BookShape> {
        if n == 0 {
            return Err(Error::InvalidShape("a book needs n >= 1 diagonals".into()));
        }
        Ok(BookShape {
            pages: Vec::new(),
            diagonal_spans: vec![1; n],
            diagonal_ids: (0..n).collect(),
            cell_ids: Vec::new(),
            total_cells: n,
            corner_cells: 0,
        })
    }

    pub fn pages(&self) -> &[PageShape] {
        &self.pages
    }

    /// Number of pages `m`.
    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    /// Number of diagonals `n`.
    pub fn diagonal_count(&self) -> usize {
        self.diagonal_spans.len()
    }

    /// Shared diagonal block sizes `a_1, …, a_n`.
    pub fn diagonal_spans(&self) -> &[u32] {
        &self.diagonal_spans
    }

    /// Global cell id of the `i`-th diagonal (0-based); always equals `i`.
    pub fn diagonal_id(&self, i: usize) -> usize {
        self.diagonal_ids[i]
    }

    /// Global cell id of a page cell.
    pub fn cell_id(&self, page: usize, cell: usize) -> usize {
        self.cell_ids[page][cell]
    }

    /// Total number of glued cells `N`.
    pub fn total_cells(&self) -> usize {
        self.total_cells
    }

    /// `N` minus the unconstrained corner cells of full pages.
    pub fn minus_cells(&self) -> usize {
        self.total_cells - self.corner_cells
    }

    /// True when every page is free of unconstrained corner cells.
    pub fn is_minus(&self) -> bool {
        self.corner_cells == 0
    }

    /// True when every page belongs to the staircase families.
    pub fn is_staircase_family(&self) -> bool {
        self.pages.iter().all(|p| p.is_staircase_family())
    }

    /// Gap-vector convention for this book's fillings.
    pub fn gap_form(&self) -> GapForm {
        let plain = self
            .pages
            .iter()
            .all(|p| matches!(p.kind(), PageKind::Shifted { .. }));
        if plain {
            GapForm::Short
        } else {
            GapForm::Long
        }
    }

    /// Page-local `(page, cell)` address of every global id, diagonals
    /// mapping to their first page (or none for a bare chain).
    pub fn locate(&self, id: usize) -> Option<(usize, usize)> {
        for (p, ids) in self.cell_ids.iter().enumerate() {
            if let Some(c) = ids.iter().position(|&x| x == id) {
                return Some((p, c));
            }
        }
        None
    }

    /// Total arm widths `(r, s)` summed over pages, when every page is in
    /// the staircase families.
    pub fn total_arms(&self) -> Option<(u32, u32)> {
        let mut r = 0;
        let mut s = 0;
        for page in &self.pages {
            let (pr, ps) = page.arms()?;
            r += pr;
            s += ps;
        }
        Some((r, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Composition, Partition};

    #[test]
    fn single_page_book_shares_nothing() {
        let page = PageShape::shifted_staircase(3).unwrap();
        let book = BookShape::assemble(vec![page]).unwrap();
        assert_eq!(book.total_cells(), 6);
        assert_eq!(book.diagonal_count(), 3);
    }

    #[test]
    fn two_staircase_pages_glue_to_square_count() {
        // m staircase pages on n diagonals: n + m·n(n-1)/2 cells; for m = 2
        // that is n^2, matching the square the book unfolds into.
        for n in 1..=5 {
            let pages = vec![
                PageShape::shifted_staircase(n).unwrap(),
                PageShape::shifted_staircase(n).unwrap(),
            ];
            let book = BookShape::assemble(pages).unwrap();
            assert_eq!(book.total_cells(), n * n);
        }
    }

    #[test]
    fn general_shifted_four_page_book() {
        let parts = [vec![6, 2, 1], vec![5, 4, 1], vec![5, 2, 1], vec![4, 2, 1]];
        let pages: Vec<PageShape> = parts
            .iter()
            .map(|p| PageShape::shifted(Partition::new(p.clone()).unwrap()).unwrap())
            .collect();
        let book = BookShape::assemble(pages).unwrap();
        // 9 + 10 + 8 + 7 cells, minus 3 diagonals triple-counted.
        assert_eq!(book.total_cells(), 25);
        assert_eq!(book.diagonal_count(), 3);
        assert_eq!(book.gap_form(), GapForm::Short);
    }

    #[test]
    fn arm_book_counts_and_minus() {
        // N = (r+s+1)n + m·n(n-1)/2 + Σ r_k s_k over full pages.
        let pages = vec![
            PageShape::nrs_staircase(2, 1, 0, false).unwrap(),
            PageShape::nrs_staircase(2, 1, 2, false).unwrap(),
        ];
        let book = BookShape::assemble(pages).unwrap();
        let (r, s) = book.total_arms().unwrap();
        assert_eq!((r, s), (2, 2));
        let n = 2usize;
        let m = 2usize;
        let expect = (2 + 2 + 1) * n + m * n * (n - 1) / 2 + 0 + 2;
        assert_eq!(book.total_cells(), expect);
        assert_eq!(book.minus_cells(), expect - 2);
        assert_eq!(book.gap_form(), GapForm::Long);
    }

    #[test]
    fn merged_blocks_must_match_across_pages() {
        let p1 = PageShape::ars_staircase(Composition::new(vec![1, 2]), 0, 0, false).unwrap();
        let p2 = PageShape::ars_staircase(Composition::new(vec![2, 1]), 0, 0, false).unwrap();
        assert!(BookShape::assemble(vec![p1.clone(), p2]).is_err());
        let p3 = PageShape::ars_staircase(Composition::new(vec![1, 2]), 1, 1, true).unwrap();
        let book = BookShape::assemble(vec![p1, p3]).unwrap();
        assert_eq!(book.diagonal_spans(), &[1, 2]);
    }

    #[test]
    fn skew_pages_cannot_be_glued() {
        let lam = Partition::new(vec![2, 2]).unwrap();
        let page = PageShape::skew(lam, Partition::empty()).unwrap();
        assert!(BookShape::assemble(vec![page]).is_err());
    }

    #[test]
    fn bare_chain_has_only_diagonals() {
        let book = BookShape::diagonal_chain(4).unwrap();
        assert_eq!(book.total_cells(), 4);
        assert_eq!(book.page_count(), 0);
        assert!(BookShape::diagonal_chain(0).is_err());
    }

    #[test]
    fn mixed_plain_and_arm_pages_use_long_gaps() {
        let pages = vec![
            PageShape::shifted_staircase(2).unwrap(),
            PageShape::nrs_staircase(2, 0, 0, false).unwrap(),
        ];
        let book = BookShape::assemble(pages).unwrap();
        assert_eq!(book.gap_form(), GapForm::Long);
    }
}
