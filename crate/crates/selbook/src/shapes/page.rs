//! Single pages: the diagrams that books are glued from.
//!
//! A page is a finite set of cells in matrix coordinates (row 1 at the top,
//! column 1 at the left, both growing to the south-east).  Cells are usually
//! unit squares, but the merged-diagonal family has square blocks spanning
//! several rows and columns that count as a single cell.  Cells on the main
//! "staircase" carry a diagonal index; books glue pages along those.

use super::{Composition, Partition};
use crate::error::{Error, Result};

/// Which family a page belongs to, with its defining parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PageKind {
    /// Shifted diagram of a strict partition: row `i` spans columns
    /// `i ..= i + λ_i - 1`, with a diagonal cell at `(i, i)`.
    Shifted { parts: Partition },
    /// Staircase with `r` full rows on top and `s` extra columns on the
    /// right: diagonal `i` sits at `(r + i, i)`.  `minus` removes the
    /// unconstrained `r × s` north-east corner rectangle.
    Nrs { n: usize, r: u32, s: u32, minus: bool },
    /// Like `Nrs` but diagonal `i` is a merged `a_i × a_i` block.
    Ars {
        a: Composition,
        r: u32,
        s: u32,
        minus: bool,
    },
    /// Skew diagram `outer / inner`: row `i` spans `inner_i + 1 ..= outer_i`.
    Skew { outer: Partition, inner: Partition },
    /// Truncated diagram `outer \ inner`: `inner` is removed from the
    /// south-west corner, so the *bottom* row loses its leftmost `inner_1`
    /// cells, the row above loses `inner_2`, and so on.
    Truncated { outer: Partition, inner: Partition },
}

/// One cell of a page.  Row and column spans are inclusive and coincide
/// except for merged diagonal blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PageCell {
    pub row0: u32,
    pub row1: u32,
    pub col0: u32,
    pub col1: u32,
    /// 0-based diagonal index when this cell lies on the staircase.
    pub diagonal: Option<usize>,
}

impl PageCell {
    fn unit(row: u32, col: u32) -> PageCell {
        PageCell {
            row0: row,
            row1: row,
            col0: col,
            col1: col,
            diagonal: None,
        }
    }

    /// True when the cell's row span contains `row`.
    pub fn touches_row(&self, row: u32) -> bool {
        self.row0 <= row && row <= self.row1
    }

    /// True when the cell's column span contains `col`.
    pub fn touches_col(&self, col: u32) -> bool {
        self.col0 <= col && col <= self.col1
    }
}

/// How a cell sits relative to the diagonals of its page.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRole {
    /// The `i`-th diagonal cell itself.
    Diagonal(usize),
    /// Shares rows with diagonal `i` and columns with diagonal `j`, `i < j`.
    Between(usize, usize),
    /// Above the staircase in diagonal `i`'s columns; `row` is 1-based from
    /// the top of the page.
    AboveColumn(usize, u32),
    /// Right of the staircase in diagonal `i`'s rows; `offset` is 1-based
    /// from the first column past the staircase.
    RightOfRow(usize, u32),
    /// North-east corner cell of a full page: constrained by nothing.
    Corner,
}

/// A single page: its kind plus the cell list in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageShape {
    kind: PageKind,
    cells: Vec<PageCell>,
    /// Cell index of each diagonal, in diagonal order.
    diagonals: Vec<usize>,
}

impl PageShape {
    /// Shifted diagram of a strict partition.
    pub fn shifted(parts: Partition) -> Result<PageShape> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("shifted page needs at least one row".into()));
        }
        if !parts.is_strict() {
            return Err(Error::InvalidShape(format!(
                "shifted page needs strictly decreasing parts, got {parts}"
            )));
        }
        let mut cells = Vec::new();
        for i in 0..parts.len() {
            let row = (i + 1) as u32;
            for col in row..row + parts.part(i) {
                let mut cell = PageCell::unit(row, col);
                if col == row {
                    cell.diagonal = Some(i);
                }
                cells.push(cell);
            }
        }
        Ok(PageShape::from_cells(PageKind::Shifted { parts }, cells))
    }

    /// The shifted staircase `(n, n-1, …, 1)`.
    pub fn shifted_staircase(n: usize) -> Result<PageShape> {
        if n == 0 {
            return Err(Error::InvalidShape("staircase needs n >= 1".into()));
        }
        let parts: Vec<u32> = (1..=n as u32).rev().collect();
        PageShape::shifted(Partition::new(parts)?)
    }

    /// Staircase with `r` arm rows and `s` arm columns; `minus` drops the
    /// `r × s` corner.
    pub fn nrs_staircase(n: usize, r: u32, s: u32, minus: bool) -> Result<PageShape> {
        if n == 0 {
            return Err(Error::InvalidShape("staircase needs n >= 1".into()));
        }
        let n32 = n as u32;
        let mut cells = Vec::new();
        let top_width = if minus { n32 } else { n32 + s };
        for row in 1..=r {
            for col in 1..=top_width {
                cells.push(PageCell::unit(row, col));
            }
        }
        for i in 1..=n32 {
            let row = r + i;
            for col in i..=n32 + s {
                let mut cell = PageCell::unit(row, col);
                if col == i {
                    cell.diagonal = Some((i - 1) as usize);
                }
                cells.push(cell);
            }
        }
        Ok(PageShape::from_cells(PageKind::Nrs { n, r, s, minus }, cells))
    }

    /// Staircase whose `i`-th diagonal is a merged `a_i × a_i` block.
    ///
    /// Block `i` occupies rows `r + A_{i-1} + 1 ..= r + A_i` and columns
    /// `A_{i-1} + 1 ..= A_i`, where `A_i = a_1 + … + a_i`.
    pub fn ars_staircase(a: Composition, r: u32, s: u32, minus: bool) -> Result<PageShape> {
        if a.is_empty() {
            return Err(Error::InvalidShape("merged staircase needs n >= 1 blocks".into()));
        }
        if a.parts().iter().any(|&x| x == 0) {
            return Err(Error::InvalidShape("diagonal block sizes must be positive".into()));
        }
        let a_tot = a.sum() as u32;
        let mut cells = Vec::new();
        let top_width = if minus { a_tot } else { a_tot + s };
        for row in 1..=r {
            for col in 1..=top_width {
                cells.push(PageCell::unit(row, col));
            }
        }
        let mut prefix = 0u32;
        for i in 0..a.len() {
            let ai = a.part(i);
            let (row0, row1) = (r + prefix + 1, r + prefix + ai);
            let (col0, col1) = (prefix + 1, prefix + ai);
            cells.push(PageCell {
                row0,
                row1,
                col0,
                col1,
                diagonal: Some(i),
            });
            for row in row0..=row1 {
                for col in col1 + 1..=a_tot + s {
                    cells.push(PageCell::unit(row, col));
                }
            }
            prefix += ai;
        }
        Ok(PageShape::from_cells(PageKind::Ars { a, r, s, minus }, cells))
    }

    /// Skew diagram `outer / inner`.
    pub fn skew(outer: Partition, inner: Partition) -> Result<PageShape> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner shape {inner} does not fit inside {outer}"
            )));
        }
        let mut cells = Vec::new();
        for i in 0..outer.len() {
            let row = (i + 1) as u32;
            for col in inner.part(i) + 1..=outer.part(i) {
                cells.push(PageCell::unit(row, col));
            }
        }
        Ok(PageShape::from_cells(PageKind::Skew { outer, inner }, cells))
    }

    /// Truncated diagram `outer \ inner`, removing `inner` from the
    /// south-west corner (bottom row first).
    pub fn truncated(outer: Partition, inner: Partition) -> Result<PageShape> {
        let k = outer.len();
        if inner.len() > k {
            return Err(Error::InvalidShape(format!(
                "truncation {inner} has more rows than {outer}"
            )));
        }
        for t in 0..inner.len() {
            // inner_t is removed from row k - t (1-based), the t-th row from the bottom.
            if inner.part(t) > outer.part(k - 1 - t) {
                return Err(Error::InvalidShape(format!(
                    "truncation {inner} removes more than row {} of {outer} holds",
                    k - t
                )));
            }
        }
        let mut cells = Vec::new();
        for i in 0..k {
            let row = (i + 1) as u32;
            let removed = inner.part(k - 1 - i);
            for col in removed + 1..=outer.part(i) {
                cells.push(PageCell::unit(row, col));
            }
        }
        Ok(PageShape::from_cells(PageKind::Truncated { outer, inner }, cells))
    }

    fn from_cells(kind: PageKind, mut cells: Vec<PageCell>) -> PageShape {
        cells.sort_by_key(|c| (c.row0, c.col0));
        let mut diagonals = Vec::new();
        for (idx, cell) in cells.iter().enumerate() {
            if let Some(i) = cell.diagonal {
                debug_assert_eq!(i, diagonals.len());
                diagonals.push(idx);
            }
        }
        PageShape { kind, cells, diagonals }
    }

    pub fn kind(&self) -> &PageKind {
        &self.kind
    }

    pub fn cells(&self) -> &[PageCell] {
        &self.cells
    }

    pub fn cell(&self, idx: usize) -> &PageCell {
        &self.cells[idx]
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Number of diagonal cells.
    pub fn diagonal_count(&self) -> usize {
        self.diagonals.len()
    }

    /// Cell index of the `i`-th diagonal (0-based).
    pub fn diagonal_cell(&self, i: usize) -> usize {
        self.diagonals[i]
    }

    /// Side lengths `a_i` of the diagonal cells, in diagonal order.
    pub fn diagonal_spans(&self) -> Vec<u32> {
        self.diagonals
            .iter()
            .map(|&idx| {
                let c = &self.cells[idx];
                c.row1 - c.row0 + 1
            })
            .collect()
    }

    /// Index of the cell whose span contains `(row, col)`, if any.
    pub fn cell_at(&self, row: u32, col: u32) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.touches_row(row) && c.touches_col(col))
    }

    /// Diagonal index whose row span contains `row`, if any.
    pub fn row_diagonal(&self, row: u32) -> Option<usize> {
        self.diagonals
            .iter()
            .position(|&idx| self.cells[idx].touches_row(row))
    }

    /// Diagonal index whose column span contains `col`, if any.
    pub fn col_diagonal(&self, col: u32) -> Option<usize> {
        self.diagonals
            .iter()
            .position(|&idx| self.cells[idx].touches_col(col))
    }

    /// Number of unconstrained north-east corner cells (`r·s` on full
    /// staircase pages with arms, 0 otherwise).
    pub fn corner_cell_count(&self) -> usize {
        match &self.kind {
            PageKind::Nrs { r, s, minus: false, .. } => (*r as usize) * (*s as usize),
            PageKind::Ars { r, s, minus: false, .. } => (*r as usize) * (*s as usize),
            _ => 0,
        }
    }

    /// Arm widths `(r, s)` for pages in the staircase families; a plain
    /// staircase counts as `(0, 0)`.
    pub fn arms(&self) -> Option<(u32, u32)> {
        match &self.kind {
            PageKind::Shifted { .. } if self.is_delta_staircase() => Some((0, 0)),
            PageKind::Nrs { r, s, .. } => Some((*r, *s)),
            PageKind::Ars { r, s, .. } => Some((*r, *s)),
            _ => None,
        }
    }

    /// True for the shifted staircase `(n, n-1, …, 1)`.
    pub fn is_delta_staircase(&self) -> bool {
        match &self.kind {
            PageKind::Shifted { parts } => {
                let n = parts.len();
                (0..n).all(|i| parts.part(i) as usize == n - i)
            }
            _ => false,
        }
    }

    /// True for pages whose non-diagonal cells all relate to the staircase
    /// the way the diagonal-order constraints require (plain, arm, and
    /// merged staircases — not general shifted, skew, or truncated pages).
    pub fn is_staircase_family(&self) -> bool {
        match &self.kind {
            PageKind::Nrs { .. } | PageKind::Ars { .. } => true,
            PageKind::Shifted { .. } => self.is_delta_staircase(),
            _ => false,
        }
    }

    /// Where the cell sits relative to the page's diagonals.
    pub fn cell_role(&self, idx: usize) -> CellRole {
        let cell = &self.cells[idx];
        if let Some(i) = cell.diagonal {
            return CellRole::Diagonal(i);
        }
        let row_diag = self.row_diagonal(cell.row0);
        let col_diag = self.col_diagonal(cell.col0);
        match (row_diag, col_diag) {
            (Some(i), Some(j)) => {
                debug_assert!(i < j);
                CellRole::Between(i, j)
            }
            (None, Some(j)) => CellRole::AboveColumn(j, cell.row0),
            (Some(i), None) => {
                let staircase_width: u32 = self.diagonal_spans().iter().sum();
                CellRole::RightOfRow(i, cell.col0 - staircase_width)
            }
            (None, None) => CellRole::Corner,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shifted_staircase_cell_count() {
        // Triangular numbers: the staircase on n diagonals has n(n+1)/2 cells.
        for n in 1..=6 {
            let page = PageShape::shifted_staircase(n).unwrap();
            assert_eq!(page.cell_count(), n * (n + 1) / 2);
            assert_eq!(page.diagonal_count(), n);
        }
    }

    #[test]
    fn shifted_general_rows_start_on_diagonal() {
        let page = PageShape::shifted(part(&[6, 2, 1])).unwrap();
        assert_eq!(page.cell_count(), 9);
        assert!(page.cell_at(1, 1).is_some());
        assert!(page.cell_at(1, 6).is_some());
        assert!(page.cell_at(2, 1).is_none());
        assert!(page.cell_at(2, 3).is_some());
        assert!(page.cell_at(3, 3).is_some());
        assert!(page.cell_at(3, 4).is_none());
    }

    #[test]
    fn shifted_rejects_weak_decrease() {
        assert!(PageShape::shifted(part(&[3, 3, 1])).is_err());
    }

    #[test]
    fn nrs_cell_counts_match_closed_form() {
        // Full: (r+n)(n+s) - n(n-1)/2.  Minus drops the r·s corner.
        for n in 1..=4usize {
            for r in 0..=3u32 {
                for s in 0..=3u32 {
                    let full = PageShape::nrs_staircase(n, r, s, false).unwrap();
                    let expect = (r as usize + n) * (n + s as usize) - n * (n - 1) / 2;
                    assert_eq!(full.cell_count(), expect, "n={n} r={r} s={s}");
                    let minus = PageShape::nrs_staircase(n, r, s, true).unwrap();
                    assert_eq!(minus.cell_count(), expect - (r * s) as usize);
                    assert_eq!(full.corner_cell_count(), (r * s) as usize);
                    assert_eq!(minus.corner_cell_count(), 0);
                }
            }
        }
    }

    #[test]
    fn nrs_diagonal_positions() {
        let page = PageShape::nrs_staircase(2, 1, 2, false).unwrap();
        assert_eq!(page.diagonal_count(), 2);
        let d0 = page.cell(page.diagonal_cell(0));
        assert_eq!((d0.row0, d0.col0), (2, 1));
        let d1 = page.cell(page.diagonal_cell(1));
        assert_eq!((d1.row0, d1.col0), (3, 2));
    }

    #[test]
    fn nrs_with_single_cell() {
        let page = PageShape::nrs_staircase(1, 0, 0, false).unwrap();
        assert_eq!(page.cell_count(), 1);
        assert_eq!(page.cell_role(0), CellRole::Diagonal(0));
    }

    #[test]
    fn ars_geometry_with_two_blocks() {
        // a = (1,2), r = 1, s = 2: one arm row of width 5, a unit block,
        // a merged 2x2 block, and the cells to their right.
        let a = Composition::new(vec![1, 2]);
        let page = PageShape::ars_staircase(a, 1, 2, false).unwrap();
        assert_eq!(page.cell_count(), 15);
        let block = page.cell(page.diagonal_cell(1));
        assert_eq!((block.row0, block.row1), (3, 4));
        assert_eq!((block.col0, block.col1), (2, 3));
        // The merged block is one cell: both coordinates hit the same index.
        assert_eq!(page.cell_at(3, 2), page.cell_at(4, 3));
        assert_eq!(page.row_diagonal(4), Some(1));
        assert_eq!(page.col_diagonal(3), Some(1));
    }

    #[test]
    fn ars_cell_counts_match_closed_form() {
        // n + a(r+s) + sum_{i<j} a_i a_j + rs cells on a full page.
        for (a, r, s) in [
            (vec![1, 2], 1, 2),
            (vec![2, 2], 0, 1),
            (vec![3, 1, 2], 2, 0),
            (vec![1, 1, 1], 1, 1),
        ] {
            let n = a.len();
            let a_tot: u32 = a.iter().sum();
            let pair_sum: u32 = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| a[i] * a[j])
                .sum();
            let expect = n as u32 + a_tot * (r + s) + pair_sum + r * s;
            let page = PageShape::ars_staircase(Composition::new(a.clone()), r, s, false).unwrap();
            assert_eq!(page.cell_count() as u32, expect, "a={a:?} r={r} s={s}");
            let minus = PageShape::ars_staircase(Composition::new(a), r, s, true).unwrap();
            assert_eq!(minus.cell_count() as u32, expect - r * s);
        }
    }

    #[test]
    fn ars_of_unit_blocks_matches_nrs() {
        // Merging nothing reproduces the arm staircase cell for cell.
        for n in 1..=3usize {
            for (r, s) in [(0, 0), (1, 2), (2, 1)] {
                let ars =
                    PageShape::ars_staircase(Composition::repeat(1, n), r, s, false).unwrap();
                let nrs = PageShape::nrs_staircase(n, r, s, false).unwrap();
                assert_eq!(ars.cells(), nrs.cells());
            }
        }
    }

    #[test]
    fn skew_and_truncated_remove_opposite_corners() {
        let outer = part(&[6, 5, 5, 4]);
        let inner = part(&[3, 1]);
        let skew = PageShape::skew(outer.clone(), inner.clone()).unwrap();
        assert_eq!(skew.cell_count(), 16);
        assert!(skew.cell_at(1, 3).is_none()); // top row loses its left end
        assert!(skew.cell_at(1, 4).is_some());
        assert!(skew.cell_at(2, 1).is_none());
        assert!(skew.cell_at(4, 1).is_some());

        let trunc = PageShape::truncated(outer, inner).unwrap();
        assert_eq!(trunc.cell_count(), 16);
        assert!(trunc.cell_at(4, 3).is_none()); // bottom row loses its left end
        assert!(trunc.cell_at(4, 4).is_some());
        assert!(trunc.cell_at(3, 1).is_none());
        assert!(trunc.cell_at(1, 1).is_some());
    }

    #[test]
    fn skew_of_itself_is_empty() {
        let lam = part(&[3, 2]);
        let page = PageShape::skew(lam.clone(), lam).unwrap();
        assert_eq!(page.cell_count(), 0);
    }

    #[test]
    fn truncated_rejects_oversized_removal() {
        assert!(PageShape::truncated(part(&[2, 2]), part(&[3])).is_err());
    }

    #[test]
    fn skew_rejects_non_nested() {
        assert!(PageShape::skew(part(&[2, 2]), part(&[3])).is_err());
    }

    #[test]
    fn cell_roles_on_arm_staircase() {
        let page = PageShape::nrs_staircase(2, 1, 1, false).unwrap();
        let role_at = |row, col| page.cell_role(page.cell_at(row, col).unwrap());
        assert_eq!(role_at(2, 1), CellRole::Diagonal(0));
        assert_eq!(role_at(3, 2), CellRole::Diagonal(1));
        assert_eq!(role_at(2, 2), CellRole::Between(0, 1));
        assert_eq!(role_at(1, 1), CellRole::AboveColumn(0, 1));
        assert_eq!(role_at(2, 3), CellRole::RightOfRow(0, 1));
        assert_eq!(role_at(1, 3), CellRole::Corner);
    }
}
