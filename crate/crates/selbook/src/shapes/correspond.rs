//! Unfolding book fillings into ordinary tableaux.
//!
//! Three families of books are in cell-preserving bijection with classical
//! tableau families:
//!
//! * two plain staircase pages unfold into an `n × n` square (page 2 is
//!   transposed below the diagonal);
//! * two arm-staircase pages unfold into a skew shape, page 1 shifted right
//!   and page 2 transposed and shifted down;
//! * a single merged-staircase page with uniform block size `k` flattens
//!   onto a truncated shape, each block collapsing to its north-east corner.
//!
//! Each map sends the filling's labels along, so row-column fillings of the
//! book land on standard tableaux of the target shape.

use super::book::BookShape;
use super::order::OrderConstraints;
use super::page::{PageKind, PageShape};
use super::Partition;
use crate::combinat::Filling;
use crate::error::{Error, Result};

/// Labels on a single page, indexed like its row-major cell list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageFilling {
    pub labels: Vec<u32>,
}

fn require_young(book: &BookShape, filling: &Filling) -> Result<()> {
    if filling.labels().len() != book.total_cells() {
        return Err(Error::InvalidFilling(format!(
            "filling has {} labels for {} cells",
            filling.labels().len(),
            book.total_cells()
        )));
    }
    if !OrderConstraints::young_for_book(book).is_satisfied_by(filling.labels()) {
        return Err(Error::InvalidFilling(
            "labels violate the row-column constraints".into(),
        ));
    }
    Ok(())
}

/// Arm widths of an unfoldable page: plain staircases count as `(0, 0)`.
fn unfold_arms(page: &PageShape) -> Result<(u32, u32)> {
    match page.kind() {
        PageKind::Shifted { .. } if page.is_delta_staircase() => Ok((0, 0)),
        PageKind::Nrs { r, s, minus: false, .. } => Ok((*r, *s)),
        PageKind::Nrs { r, s, minus: true, .. } if r * s == 0 => Ok((*r, *s)),
        _ => Err(Error::Unsupported(
            "unfolding needs full arm-staircase (or plain staircase) pages".into(),
        )),
    }
}

/// Unfolds a two-page plain-staircase book filling into an `n × n` matrix.
///
/// Page 1 keeps its coordinates; page 2 is transposed below the diagonal.
pub fn to_square_tableau(book: &BookShape, filling: &Filling) -> Result<Vec<Vec<u32>>> {
    if book.page_count() != 2 || !book.pages().iter().all(|p| p.is_delta_staircase()) {
        return Err(Error::Unsupported(
            "square unfolding needs exactly two plain staircase pages".into(),
        ));
    }
    require_young(book, filling)?;
    let n = book.diagonal_count();
    let mut matrix = vec![vec![0u32; n]; n];
    for (p, page) in book.pages().iter().enumerate() {
        for (c, cell) in page.cells().iter().enumerate() {
            let label = filling.label(book.cell_id(p, c));
            let (i, j) = (cell.row0 as usize - 1, cell.col0 as usize - 1);
            if p == 0 {
                matrix[i][j] = label;
            } else {
                matrix[j][i] = label;
            }
        }
    }
    Ok(matrix)
}

/// Folds an `n × n` matrix back into a two-page book filling.
pub fn from_square_tableau(book: &BookShape, matrix: &[Vec<u32>]) -> Result<Filling> {
    if book.page_count() != 2 || !book.pages().iter().all(|p| p.is_delta_staircase()) {
        return Err(Error::Unsupported(
            "square folding needs exactly two plain staircase pages".into(),
        ));
    }
    let n = book.diagonal_count();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidFilling(format!("expected an {n} x {n} matrix")));
    }
    let mut labels = vec![0u32; book.total_cells()];
    for (p, page) in book.pages().iter().enumerate() {
        for (c, cell) in page.cells().iter().enumerate() {
            let (i, j) = (cell.row0 as usize - 1, cell.col0 as usize - 1);
            let value = if p == 0 { matrix[i][j] } else { matrix[j][i] };
            labels[book.cell_id(p, c)] = value;
        }
    }
    let filling = Filling::new(labels)?;
    require_young(book, &filling)?;
    Ok(filling)
}

/// Unfolds a two-page arm-staircase book filling into a skew tableau.
///
/// With arms `(r_1, s_1)` and `(r_2, s_2)`, page 1's cell `(i, j)` lands on
/// `(i, r_2 + j)` and page 2's cell `(i, j)` on `(r_1 + j, i)`; the target is
/// the skew shape
/// `((r_2+n+s_1)^{r_1+n}, (r_2+n)^{s_2}) / (r_2^{r_1})`.
pub fn to_skew_tableau(book: &BookShape, filling: &Filling) -> Result<(PageShape, PageFilling)> {
    if book.page_count() != 2 {
        return Err(Error::Unsupported("skew unfolding needs exactly two pages".into()));
    }
    let (r1, s1) = unfold_arms(&book.pages()[0])?;
    let (r2, s2) = unfold_arms(&book.pages()[1])?;
    require_young(book, filling)?;
    let n = book.diagonal_count() as u32;

    let mut outer = vec![r2 + n + s1; (r1 + n) as usize];
    outer.extend(std::iter::repeat(r2 + n).take(s2 as usize));
    let target = PageShape::skew(
        Partition::new(outer)?,
        Partition::new(vec![r2; r1 as usize])?,
    )?;

    let mut labels = vec![0u32; target.cell_count()];
    let mut seen = vec![false; target.cell_count()];
    for (p, page) in book.pages().iter().enumerate() {
        for (c, cell) in page.cells().iter().enumerate() {
            let (row, col) = (cell.row0, cell.col0);
            let (trow, tcol) = if p == 0 {
                (row, r2 + col)
            } else {
                (r1 + col, row)
            };
            let idx = target.cell_at(trow, tcol).ok_or_else(|| {
                Error::InvalidShape(format!("image cell ({trow},{tcol}) misses the skew target"))
            })?;
            let label = filling.label(book.cell_id(p, c));
            if seen[idx] && labels[idx] != label {
                return Err(Error::InvalidShape(format!(
                    "image cell ({trow},{tcol}) hit twice with different labels"
                )));
            }
            seen[idx] = true;
            labels[idx] = label;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidShape("skew target not fully covered".into()));
    }
    Ok((target, PageFilling { labels }))
}

/// Flattens a one-page merged-staircase book filling onto a truncated shape.
///
/// Requires uniform block size `a = (k, …, k)`.  Every unit cell keeps its
/// coordinates; block `i` collapses to its north-east corner
/// `(r + (i-1)k + 1, ik)`.
pub fn to_truncated_tableau(
    book: &BookShape,
    filling: &Filling,
) -> Result<(PageShape, PageFilling)> {
    if book.page_count() != 1 {
        return Err(Error::Unsupported("truncated flattening needs exactly one page".into()));
    }
    let page = &book.pages()[0];
    if !page.is_staircase_family() {
        return Err(Error::Unsupported(
            "truncated flattening needs a staircase-family page".into(),
        ));
    }
    let spans = page.diagonal_spans();
    let k = spans[0];
    if spans.iter().any(|&x| x != k) {
        return Err(Error::Unsupported(
            "truncated flattening needs uniform diagonal block sizes".into(),
        ));
    }
    let (r, s) = page.arms().expect("staircase-family page has arms");
    if page.corner_cell_count() == 0 && r * s > 0 {
        return Err(Error::Unsupported(
            "truncated flattening expects the full page, corners included".into(),
        ));
    }
    require_young(book, filling)?;
    let n = book.diagonal_count() as u32;

    let outer = Partition::new(vec![k * n + s; (r + k * n) as usize])?;
    // Bottom-up removals: below block i only columns past ik survive, except
    // the block's own top row which keeps its corner column ik.
    let mut removals = Vec::new();
    for i in (1..=n).rev() {
        removals.extend(std::iter::repeat(i * k).take(k as usize - 1));
        removals.push(i * k - 1);
    }
    let target = PageShape::truncated(outer, Partition::new(removals)?)?;

    let mut labels = vec![0u32; target.cell_count()];
    let mut seen = vec![false; target.cell_count()];
    for (c, cell) in page.cells().iter().enumerate() {
        let (trow, tcol) = match cell.diagonal {
            Some(i) => (r + i as u32 * k + 1, (i as u32 + 1) * k),
            None => (cell.row0, cell.col0),
        };
        let idx = target.cell_at(trow, tcol).ok_or_else(|| {
            Error::InvalidShape(format!(
                "image cell ({trow},{tcol}) misses the truncated target"
            ))
        })?;
        if seen[idx] {
            return Err(Error::InvalidShape(format!(
                "image cell ({trow},{tcol}) hit twice"
            )));
        }
        seen[idx] = true;
        labels[idx] = filling.label(book.cell_id(0, c));
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidShape("truncated target not fully covered".into()));
    }
    Ok((target, PageFilling { labels }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Composition;

    fn delta_book(n: usize, m: usize) -> BookShape {
        let pages: Vec<PageShape> = (0..m)
            .map(|_| PageShape::shifted_staircase(n).unwrap())
            .collect();
        BookShape::assemble(pages).unwrap()
    }

    #[test]
    fn square_unfolding_round_trips() {
        let book = delta_book(2, 2);
        // Cells: d1, d2, then (1,2) of each page.  Labels must put d1 first
        // and d2 last; the two middle labels are the off-diagonal cells.
        let filling = Filling::new(vec![1, 4, 2, 3]).unwrap();
        let matrix = to_square_tableau(&book, &filling).unwrap();
        assert_eq!(matrix, vec![vec![1, 2], vec![3, 4]]);
        let back = from_square_tableau(&book, &matrix).unwrap();
        assert_eq!(back, filling);
    }

    #[test]
    fn square_unfolding_rejects_invalid_filling() {
        let book = delta_book(2, 2);
        assert!(to_square_tableau(&book, &Filling::new(vec![4, 1, 2, 3]).unwrap()).is_err());
    }

    #[test]
    fn square_unfolding_needs_two_pages() {
        let book = delta_book(2, 1);
        let filling = Filling::new(vec![1, 3, 2]).unwrap();
        assert!(to_square_tableau(&book, &filling).is_err());
    }

    #[test]
    fn skew_unfolding_covers_target_once() {
        let pages = vec![
            PageShape::nrs_staircase(2, 1, 0, false).unwrap(),
            PageShape::nrs_staircase(2, 0, 1, false).unwrap(),
        ];
        let book = BookShape::assemble(pages).unwrap();
        let order = OrderConstraints::young_for_book(&book);
        let labels = crate::combinat::first_extension(&order);
        let filling = Filling::new(labels).unwrap();
        let (target, image) = to_skew_tableau(&book, &filling).unwrap();
        assert_eq!(target.cell_count(), book.total_cells());
        assert_eq!(image.labels.len(), book.total_cells());
    }

    #[test]
    fn truncated_flattening_is_identity_for_unit_blocks() {
        let page = PageShape::nrs_staircase(2, 1, 1, false).unwrap();
        let book = BookShape::assemble(vec![page.clone()]).unwrap();
        let order = OrderConstraints::young_for_book(&book);
        let filling = Filling::new(crate::combinat::first_extension(&order)).unwrap();
        let (target, image) = to_truncated_tableau(&book, &filling).unwrap();
        assert_eq!(target.cell_count(), page.cell_count());
        // Same coordinates cell for cell, so the same label multiset per row.
        for (c, cell) in page.cells().iter().enumerate() {
            let idx = target.cell_at(cell.row0, cell.col0).unwrap();
            assert_eq!(image.labels[idx], filling.label(book.cell_id(0, c)));
        }
    }

    #[test]
    fn truncated_flattening_collapses_blocks() {
        let page = PageShape::ars_staircase(Composition::new(vec![2, 2]), 0, 0, false).unwrap();
        let book = BookShape::assemble(vec![page]).unwrap();
        let order = OrderConstraints::young_for_book(&book);
        let filling = Filling::new(crate::combinat::first_extension(&order)).unwrap();
        let (target, _) = to_truncated_tableau(&book, &filling).unwrap();
        // Blocks shrink from k*k cells to one: 2 + 4 unit cells = 6 target cells.
        assert_eq!(target.cell_count(), 6);
        assert!(target.cell_at(1, 2).is_some());
        assert!(target.cell_at(4, 4).is_none());
    }
}
