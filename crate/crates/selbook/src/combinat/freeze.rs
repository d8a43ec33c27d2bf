//! The frozen-block check: on a single plain staircase page, a run of
//! forced gaps pins every entry of the corresponding diagonal block.
//!
//! When the gaps satisfy `d_{k+1} = 1, d_{k+2} = 2, …, d_{k+ℓ-1} = ℓ-1`,
//! the cells in rows and columns `k+1 ..= k+ℓ` admit no freedom at all for
//! row-column fillings: with `x` the label of the `(k+1)`-st diagonal
//! cell, the cell in row `k+i`, column `k+j` must hold exactly
//! `x - 1 + C(j,2) + i`.  Diagonal-order fillings keep freedom only within
//! columns: the entries of column `k+j` above the diagonal must form a
//! permutation of the same forced label set.

use crate::error::{Error, Result};
use crate::shapes::{BookShape, ConstraintKind};

use super::filling::Filling;

/// Checks the forced block in rows `k+1 ..= k+len` of a one-page plain
/// staircase book.
///
/// Requires the gap run `d_{k+t} = t` for `t = 1 .. len`; a filling whose
/// gaps break the run is a precondition error, not a `false`.  For the
/// row-column kind every block entry is compared against its forced value;
/// for the diagonal kind each column segment is compared as a set.
pub fn check_freeze(
    book: &BookShape,
    filling: &Filling,
    k: usize,
    len: usize,
    kind: ConstraintKind,
) -> Result<bool> {
    if book.page_count() != 1 || !book.pages()[0].is_delta_staircase() {
        return Err(Error::Unsupported(
            "the frozen-block property is stated for one-page plain staircase books".into(),
        ));
    }
    let n = book.diagonal_count();
    if len == 0 || k + len > n {
        return Err(Error::InvalidShape(format!(
            "block rows {}..{} fall outside the {n} diagonals",
            k + 1,
            k + len
        )));
    }
    if filling.len() != book.total_cells() {
        return Err(Error::InvalidFilling(format!(
            "filling has {} labels for {} cells",
            filling.len(),
            book.total_cells()
        )));
    }
    let diag: Vec<i64> = (0..n)
        .map(|i| filling.label(book.diagonal_id(i)) as i64)
        .collect();
    for t in 1..len {
        let gap = diag[k + t] - diag[k + t - 1] - 1;
        if gap != t as i64 {
            return Err(Error::InvalidFilling(format!(
                "gap d_{} is {gap}, the frozen block needs {t}",
                k + t
            )));
        }
    }

    let page = &book.pages()[0];
    let x = diag[k] as u32;
    let forced = |i: u32, j: u32| x - 1 + j * (j - 1) / 2 + i;
    let entry = |i: u32, j: u32| {
        let cell = page
            .cell_at(k as u32 + i, k as u32 + j)
            .expect("staircase block cell exists");
        filling.label(book.cell_id(0, cell))
    };
    match kind {
        ConstraintKind::Young => {
            for j in 1..=len as u32 {
                for i in 1..=j {
                    if entry(i, j) != forced(i, j) {
                        return Ok(false);
                    }
                }
            }
        }
        ConstraintKind::Selberg => {
            for j in 2..=len as u32 {
                let mut segment: Vec<u32> = (1..j).map(|i| entry(i, j)).collect();
                segment.sort_unstable();
                let expect: Vec<u32> = (1..j).map(|i| forced(i, j)).collect();
                if segment != expect {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::PageShape;

    fn staircase_book(n: usize) -> BookShape {
        BookShape::assemble(vec![PageShape::shifted_staircase(n).unwrap()]).unwrap()
    }

    // Cell ids for the n=3 staircase: diagonals 0,1,2, then (1,2), (1,3), (2,3).

    #[test]
    fn forced_three_block_passes_in_full() {
        let book = staircase_book(3);
        // Entries 1,2,4 / 3,5 / 6: gaps (1,2), so the whole book is one
        // frozen block with x = 1.
        let filling = Filling::new(vec![1, 3, 6, 2, 4, 5]).unwrap();
        assert!(check_freeze(&book, &filling, 0, 3, ConstraintKind::Young).unwrap());
        assert!(check_freeze(&book, &filling, 0, 3, ConstraintKind::Selberg).unwrap());
        // Sub-blocks of a frozen block are frozen too.
        assert!(check_freeze(&book, &filling, 0, 2, ConstraintKind::Young).unwrap());
        assert!(check_freeze(&book, &filling, 0, 1, ConstraintKind::Young).unwrap());
    }

    #[test]
    fn column_permutations_pass_only_the_selberg_kind() {
        let book = staircase_book(3);
        // Same diagonals, column 3 swapped: 1,2,5 / 3,4 / 6.
        let filling = Filling::new(vec![1, 3, 6, 2, 5, 4]).unwrap();
        assert!(!check_freeze(&book, &filling, 0, 3, ConstraintKind::Young).unwrap());
        assert!(check_freeze(&book, &filling, 0, 3, ConstraintKind::Selberg).unwrap());
    }

    #[test]
    fn shifted_blocks_use_the_later_diagonal() {
        let book = staircase_book(3);
        // Entries 1,2,3 / 4,5 / 6: gaps (2,1), so only rows 2..3 freeze,
        // with x = 4.
        let filling = Filling::new(vec![1, 4, 6, 2, 3, 5]).unwrap();
        assert!(check_freeze(&book, &filling, 1, 2, ConstraintKind::Young).unwrap());
        // The k=0 block needs d_1 = 1 but sees 2.
        assert!(check_freeze(&book, &filling, 0, 2, ConstraintKind::Young).is_err());
    }

    #[test]
    fn single_row_blocks_are_vacuous() {
        let book = staircase_book(2);
        let filling = Filling::new(vec![1, 3, 2]).unwrap();
        for k in 0..2 {
            assert!(check_freeze(&book, &filling, k, 1, ConstraintKind::Young).unwrap());
            assert!(check_freeze(&book, &filling, k, 1, ConstraintKind::Selberg).unwrap());
        }
    }

    #[test]
    fn swapped_pair_fails_the_young_check() {
        let book = staircase_book(3);
        // The frozen filling 1,2,4 / 3,5 / 6 with the row-1 entries 2 and 4
        // swapped: diagonals (and gaps) unchanged, block entries wrong.
        let filling = Filling::new(vec![1, 3, 6, 4, 2, 5]).unwrap();
        assert!(!check_freeze(&book, &filling, 0, 3, ConstraintKind::Young).unwrap());
        // The swap also breaks the column-segment sets.
        assert!(!check_freeze(&book, &filling, 0, 3, ConstraintKind::Selberg).unwrap());
    }

    #[test]
    fn multi_page_books_are_rejected() {
        let pages = vec![
            PageShape::shifted_staircase(2).unwrap(),
            PageShape::shifted_staircase(2).unwrap(),
        ];
        let book = BookShape::assemble(pages).unwrap();
        let filling = Filling::new(vec![1, 4, 2, 3]).unwrap();
        assert!(check_freeze(&book, &filling, 0, 2, ConstraintKind::Young).is_err());
        let bad_block = staircase_book(2);
        let filling = Filling::new(vec![1, 3, 2]).unwrap();
        assert!(check_freeze(&bad_block, &filling, 1, 2, ConstraintKind::Young).is_err());
    }
}
