//! Letter permutations: words over the alphabet `A(n, r, s, m)` obeying
//! the betweenness conditions, and their bijection with minus-book
//! fillings.
//!
//! The alphabet consists of the anchors `x_1, …, x_n`, the pair letters
//! `a_ij^(k)` (`i < j`, one copy per page `k = 1..m`), and the arm letters
//! `b_i^(k)` (`k = 1..r`) and `c_i^(k)` (`k = 1..s`).  A word over the full
//! alphabet is valid when the anchors appear in order, every `a_ij` lies
//! between `x_i` and `x_j`, every `b_i` precedes `x_i`, and every `c_i`
//! follows `x_i`.  Copies with different superscripts are distinct letters
//! with identical constraints.
//!
//! Reading a diagonal-order filling of a minus book position by position
//! spells exactly such a word: diagonal cells become anchors, the cell
//! sharing rows with diagonal `i` and columns with diagonal `j` on page
//! `k` becomes `a_ij^(k)`, and the arm cells become `b`/`c` letters with
//! copies numbered through the pages in order.

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::shapes::{BookShape, CellRole, ConstraintKind, PageShape};

use super::extensions::{count_extensions_raw, extension_iter_raw, LinearExtensionIter};
use super::filling::{is_valid_filling, Filling};

/// One letter of the alphabet `A(n, r, s, m)`.  The derived order sorts
/// anchors first, then pair letters by `(i, j, copy)`, then arm letters —
/// the canonical alphabet order used for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SelbergLetter {
    /// Anchor `x_i`, `1 <= i <= n`.
    X { i: u32 },
    /// Pair letter `a_ij^(copy)`, `1 <= i < j <= n`, one copy per page.
    A { i: u32, j: u32, copy: u32 },
    /// Row letter `b_i^(copy)`, constrained to precede `x_i`.
    B { i: u32, copy: u32 },
    /// Column letter `c_i^(copy)`, constrained to follow `x_i`.
    C { i: u32, copy: u32 },
}

impl std::fmt::Display for SelbergLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            SelbergLetter::X { i } => write!(f, "x{i}"),
            SelbergLetter::A { i, j, copy } if i < 10 && j < 10 => write!(f, "a{i}{j}^{copy}"),
            SelbergLetter::A { i, j, copy } => write!(f, "a{i},{j}^{copy}"),
            SelbergLetter::B { i, copy } => write!(f, "b{i}^{copy}"),
            SelbergLetter::C { i, copy } => write!(f, "c{i}^{copy}"),
        }
    }
}

/// The full alphabet `A(n, r, s, m)` in canonical order.
pub fn selberg_alphabet(n: u32, r: u32, s: u32, m: u32) -> Vec<SelbergLetter> {
    let mut letters = Vec::new();
    for i in 1..=n {
        letters.push(SelbergLetter::X { i });
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for copy in 1..=m {
                letters.push(SelbergLetter::A { i, j, copy });
            }
        }
    }
    for i in 1..=n {
        for copy in 1..=r {
            letters.push(SelbergLetter::B { i, copy });
        }
    }
    for i in 1..=n {
        for copy in 1..=s {
            letters.push(SelbergLetter::C { i, copy });
        }
    }
    letters
}

/// A word over the full alphabet `A(n, r, s, m)` satisfying the
/// betweenness conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelbergPermutation {
    n: u32,
    r: u32,
    s: u32,
    m: u32,
    word: Vec<SelbergLetter>,
}

impl SelbergPermutation {
    /// Validates a word: its letter multiset must equal `A(n, r, s, m)`
    /// and the four ordering conditions must hold.
    pub fn new(n: u32, r: u32, s: u32, m: u32, word: Vec<SelbergLetter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("need n >= 1 anchors".into()));
        }
        let mut sorted = word.clone();
        sorted.sort();
        if sorted != selberg_alphabet(n, r, s, m) {
            return Err(Error::InvalidPermutation(format!(
                "letter multiset differs from the ({n},{r},{s},{m}) alphabet"
            )));
        }
        let mut anchor_pos = vec![0usize; n as usize + 1];
        for (p, letter) in word.iter().enumerate() {
            if let SelbergLetter::X { i } = letter {
                anchor_pos[*i as usize] = p;
            }
        }
        for i in 1..n as usize {
            if anchor_pos[i] >= anchor_pos[i + 1] {
                return Err(Error::InvalidPermutation(format!(
                    "x{} does not precede x{}",
                    i,
                    i + 1
                )));
            }
        }
        for (p, letter) in word.iter().enumerate() {
            let ok = match *letter {
                SelbergLetter::X { .. } => true,
                SelbergLetter::A { i, j, .. } => {
                    anchor_pos[i as usize] < p && p < anchor_pos[j as usize]
                }
                SelbergLetter::B { i, .. } => p < anchor_pos[i as usize],
                SelbergLetter::C { i, .. } => p > anchor_pos[i as usize],
            };
            if !ok {
                return Err(Error::InvalidPermutation(format!(
                    "{letter} at position {} violates its anchor conditions",
                    p + 1
                )));
            }
        }
        Ok(SelbergPermutation { n, r, s, m, word })
    }

    /// Internal constructor for words produced position-by-position from
    /// structures that already guarantee validity.
    fn from_valid(n: u32, r: u32, s: u32, m: u32, word: Vec<SelbergLetter>) -> Self {
        debug_assert!(SelbergPermutation::new(n, r, s, m, word.clone()).is_ok());
        SelbergPermutation { n, r, s, m, word }
    }

    pub fn word(&self) -> &[SelbergLetter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The parameters `(n, r, s, m)` of the alphabet.
    pub fn params(&self) -> (u32, u32, u32, u32) {
        (self.n, self.r, self.s, self.m)
    }
}

impl std::fmt::Display for SelbergPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (p, letter) in self.word.iter().enumerate() {
            if p > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Cover relations of the letter poset on alphabet indices.
fn alphabet_relations(alphabet: &[SelbergLetter], n: u32) -> Vec<(usize, usize)> {
    // Anchors are the first n letters in canonical order.
    let anchor = |i: u32| (i - 1) as usize;
    let mut rel = Vec::new();
    for i in 1..n {
        rel.push((anchor(i), anchor(i + 1)));
    }
    for (t, letter) in alphabet.iter().enumerate() {
        match *letter {
            SelbergLetter::X { .. } => {}
            SelbergLetter::A { i, j, .. } => {
                rel.push((anchor(i), t));
                rel.push((t, anchor(j)));
            }
            SelbergLetter::B { i, .. } => rel.push((t, anchor(i))),
            SelbergLetter::C { i, .. } => rel.push((anchor(i), t)),
        }
    }
    rel
}

/// Number of valid words over `A(n, r, s, m)`, by the down-set DP.
pub fn count_selberg_permutations(
    n: u32,
    r: u32,
    s: u32,
    m: u32,
    budget: &Budget,
) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidPermutation("need n >= 1 anchors".into()));
    }
    let alphabet = selberg_alphabet(n, r, s, m);
    let relations = alphabet_relations(&alphabet, n);
    count_extensions_raw(alphabet.len(), &relations, budget)
}

/// Streaming enumerator over all valid words, each exactly once, in
/// word-lexicographic order under the canonical alphabet order.
pub fn enumerate_selberg_permutations(
    n: u32,
    r: u32,
    s: u32,
    m: u32,
    budget: &Budget,
    limit: Option<u64>,
) -> Result<PermutationIter> {
    if n == 0 {
        return Err(Error::InvalidPermutation("need n >= 1 anchors".into()));
    }
    let alphabet = selberg_alphabet(n, r, s, m);
    let relations = alphabet_relations(&alphabet, n);
    let inner = extension_iter_raw(alphabet.len(), &relations, budget, limit)?;
    Ok(PermutationIter {
        alphabet,
        inner,
        n,
        r,
        s,
        m,
    })
}

/// Iterator state for [`enumerate_selberg_permutations`].
pub struct PermutationIter {
    alphabet: Vec<SelbergLetter>,
    inner: LinearExtensionIter,
    n: u32,
    r: u32,
    s: u32,
    m: u32,
}

impl PermutationIter {
    pub fn next_permutation(&mut self) -> Option<SelbergPermutation> {
        let labels = self.inner.next_labels()?;
        let mut word = vec![self.alphabet[0]; self.alphabet.len()];
        for (e, &pos) in labels.iter().enumerate() {
            word[pos as usize - 1] = self.alphabet[e];
        }
        Some(SelbergPermutation::from_valid(
            self.n, self.r, self.s, self.m, word,
        ))
    }
}

/// The letter of one page cell, given the page's position in the book.
///
/// `b_prefix`/`c_prefix` are the total arm widths of the pages before this
/// one; copies of arm letters count through the pages in order.
fn cell_letter(
    page: &PageShape,
    cell: usize,
    page_index: usize,
    b_prefix: u32,
    c_prefix: u32,
) -> Result<SelbergLetter> {
    Ok(match page.cell_role(cell) {
        CellRole::Diagonal(i) => SelbergLetter::X { i: i as u32 + 1 },
        CellRole::Between(i, j) => SelbergLetter::A {
            i: i as u32 + 1,
            j: j as u32 + 1,
            copy: page_index as u32 + 1,
        },
        CellRole::AboveColumn(j, row) => SelbergLetter::B {
            i: j as u32 + 1,
            copy: b_prefix + row,
        },
        CellRole::RightOfRow(i, offset) => SelbergLetter::C {
            i: i as u32 + 1,
            copy: c_prefix + offset,
        },
        CellRole::Corner => {
            return Err(Error::InvalidShape(
                "corner cells have no letter image; use the minus book".into(),
            ))
        }
    })
}

/// Checks a book is in the letter-image family: staircase pages with unit
/// diagonal cells and no corner cells.
fn require_letter_book(book: &BookShape) -> Result<(u32, u32, u32, u32)> {
    if !book.is_staircase_family() {
        return Err(Error::Unsupported(
            "only staircase-family books correspond to letter permutations".into(),
        ));
    }
    if book.diagonal_spans().iter().any(|&a| a != 1) {
        return Err(Error::Unsupported(
            "merged diagonal blocks have no letter image".into(),
        ));
    }
    if !book.is_minus() {
        return Err(Error::InvalidShape(
            "corner cells have no letter image; use the minus book".into(),
        ));
    }
    let (r, s) = book
        .total_arms()
        .expect("staircase-family book has arm totals");
    Ok((
        book.diagonal_count() as u32,
        r,
        s,
        book.page_count() as u32,
    ))
}

/// Reads a diagonal-order filling of a minus book into its word: the
/// letter of the cell labelled `p` goes to position `p`.
pub fn book_to_permutation(book: &BookShape, filling: &Filling) -> Result<SelbergPermutation> {
    let (n, r, s, m) = require_letter_book(book)?;
    if !is_valid_filling(book, filling, ConstraintKind::Selberg)? {
        return Err(Error::InvalidFilling(
            "labels violate the diagonal-order constraints".into(),
        ));
    }
    let mut word = vec![SelbergLetter::X { i: 1 }; book.total_cells()];
    for i in 0..book.diagonal_count() {
        let pos = filling.label(book.diagonal_id(i)) as usize;
        word[pos - 1] = SelbergLetter::X { i: i as u32 + 1 };
    }
    let mut b_prefix = 0;
    let mut c_prefix = 0;
    for (p, page) in book.pages().iter().enumerate() {
        for c in 0..page.cell_count() {
            if page.cell(c).diagonal.is_some() {
                continue;
            }
            let letter = cell_letter(page, c, p, b_prefix, c_prefix)?;
            let pos = filling.label(book.cell_id(p, c)) as usize;
            word[pos - 1] = letter;
        }
        let (pr, ps) = page.arms().expect("staircase-family page");
        b_prefix += pr;
        c_prefix += ps;
    }
    Ok(SelbergPermutation::from_valid(n, r, s, m, word))
}

/// Rebuilds the minus-book filling a word came from.
///
/// The word only knows the total arm widths, so the split across pages is
/// passed explicitly: page `k` gets arms `(rvec[k], svec[k])`.
pub fn permutation_to_book(
    perm: &SelbergPermutation,
    rvec: &[u32],
    svec: &[u32],
) -> Result<(BookShape, Filling)> {
    let (n, r, s, m) = perm.params();
    if rvec.len() != m as usize || svec.len() != m as usize {
        return Err(Error::InvalidShape(format!(
            "need {m} page arm widths, got {} and {}",
            rvec.len(),
            svec.len()
        )));
    }
    if rvec.iter().sum::<u32>() != r || svec.iter().sum::<u32>() != s {
        return Err(Error::InvalidShape(format!(
            "page arms must sum to ({r},{s})"
        )));
    }
    let pages: Vec<PageShape> = rvec
        .iter()
        .zip(svec)
        .map(|(&pr, &ps)| PageShape::nrs_staircase(n as usize, pr, ps, true))
        .collect::<Result<_>>()?;
    let book = if pages.is_empty() {
        BookShape::diagonal_chain(n as usize)?
    } else {
        BookShape::assemble(pages)?
    };

    // Position of every letter in the word, then labels via the same
    // cell-to-letter map as the forward direction.
    let mut position = std::collections::HashMap::new();
    for (p, &letter) in perm.word().iter().enumerate() {
        position.insert(letter, p as u32 + 1);
    }
    let mut labels = vec![0u32; book.total_cells()];
    for i in 0..book.diagonal_count() {
        labels[book.diagonal_id(i)] = position[&SelbergLetter::X { i: i as u32 + 1 }];
    }
    let mut b_prefix = 0;
    let mut c_prefix = 0;
    for (p, page) in book.pages().iter().enumerate() {
        for c in 0..page.cell_count() {
            if page.cell(c).diagonal.is_some() {
                continue;
            }
            let letter = cell_letter(page, c, p, b_prefix, c_prefix)?;
            let pos = position.get(&letter).ok_or_else(|| {
                Error::InvalidPermutation(format!("word has no letter {letter}"))
            })?;
            labels[book.cell_id(p, c)] = *pos;
        }
        let (pr, ps) = page.arms().expect("staircase-family page");
        b_prefix += pr;
        c_prefix += ps;
    }
    let filling = Filling::new(labels)?;
    if !is_valid_filling(&book, &filling, ConstraintKind::Selberg)? {
        return Err(Error::InvalidPermutation(
            "word does not map to a diagonal-order filling".into(),
        ));
    }
    Ok((book, filling))
}
