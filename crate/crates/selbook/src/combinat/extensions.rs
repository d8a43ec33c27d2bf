//! Counting and enumerating linear extensions of small partial orders.
//!
//! Two independent engines work on the same cover lists:
//!
//! * an exact **count** by dynamic programming over down-sets (memoised on
//!   the bitmask of placed elements), which handles far more elements than
//!   enumeration could;
//! * a backtracking **enumerator** that streams every extension in a fixed
//!   order: at each step the available element with the smallest id is
//!   tried first, so the output is lexicographic in the sequence of chosen
//!   elements and bit-identical across runs.
//!
//! Both are capped by a [`Budget`]; enumeration with an explicit result
//! limit bypasses the cell cap since the stream stops early anyway.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::shapes::OrderConstraints;

/// Bitmask of the direct predecessors of every element.
fn predecessor_masks(elements: usize, relations: &[(usize, usize)]) -> Vec<u64> {
    let mut masks = vec![0u64; elements];
    for &(a, b) in relations {
        masks[b] |= 1 << a;
    }
    masks
}

/// Number of linear extensions of `order`, exactly.
pub fn count_linear_extensions(order: &OrderConstraints, budget: &Budget) -> Result<BigUint> {
    count_extensions_raw(order.elements(), order.relations(), budget)
}

pub(crate) fn count_extensions_raw(
    elements: usize,
    relations: &[(usize, usize)],
    budget: &Budget,
) -> Result<BigUint> {
    if elements > 64 {
        return Err(Error::BudgetExceeded(format!(
            "{elements} elements exceed the 64-element counting engine"
        )));
    }
    let preds = predecessor_masks(elements, relations);
    let full: u64 = if elements == 64 {
        u64::MAX
    } else {
        (1u64 << elements) - 1
    };
    let mut memo: HashMap<u64, BigUint> = HashMap::new();

    fn rec(
        mask: u64,
        full: u64,
        preds: &[u64],
        memo: &mut HashMap<u64, BigUint>,
        max_states: usize,
    ) -> Result<BigUint> {
        if mask == full {
            return Ok(BigUint::one());
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let mut total = BigUint::zero();
        for (e, &pred) in preds.iter().enumerate() {
            let bit = 1u64 << e;
            if mask & bit == 0 && pred & mask == pred {
                total += rec(mask | bit, full, preds, memo, max_states)?;
            }
        }
        if memo.len() >= max_states {
            return Err(Error::BudgetExceeded(format!(
                "down-set memo exceeded {max_states} states"
            )));
        }
        memo.insert(mask, total.clone());
        Ok(total)
    }

    rec(0, full, &preds, &mut memo, budget.max_dp_states)
}

/// Walks every linear extension of `order`, calling `f` with the label
/// vector (`labels[element] = position + 1`).  Returns the number of
/// extensions visited; `f` returning `false` or hitting `limit` stops the
/// walk early.
pub fn visit_linear_extensions<F: FnMut(&[u32]) -> bool>(
    order: &OrderConstraints,
    budget: &Budget,
    limit: Option<u64>,
    f: F,
) -> Result<u64> {
    visit_extensions_raw(order.elements(), order.relations(), budget, limit, f)
}

pub(crate) fn visit_extensions_raw<F: FnMut(&[u32]) -> bool>(
    elements: usize,
    relations: &[(usize, usize)],
    budget: &Budget,
    limit: Option<u64>,
    mut f: F,
) -> Result<u64> {
    let mut iter = extension_iter_raw(elements, relations, budget, limit)?;
    let mut seen = 0u64;
    while let Some(labels) = iter.next_labels() {
        seen += 1;
        if !f(labels) {
            break;
        }
    }
    Ok(seen)
}

/// Streaming enumerator over the linear extensions of a partial order.
///
/// `next_labels` lends the internal label vector; callers that need to keep
/// a copy must clone it.
pub struct LinearExtensionIter {
    preds: Vec<u64>,
    elements: usize,
    labels: Vec<u32>,
    stack: Vec<usize>,
    cursor: usize,
    placed: u64,
    remaining: Option<u64>,
    backtracking: bool,
    exhausted: bool,
}

/// Streaming enumerator for `order`; see [`LinearExtensionIter`].
pub fn linear_extension_iter(
    order: &OrderConstraints,
    budget: &Budget,
    limit: Option<u64>,
) -> Result<LinearExtensionIter> {
    extension_iter_raw(order.elements(), order.relations(), budget, limit)
}

pub(crate) fn extension_iter_raw(
    elements: usize,
    relations: &[(usize, usize)],
    budget: &Budget,
    limit: Option<u64>,
) -> Result<LinearExtensionIter> {
    if elements > 64 {
        return Err(Error::BudgetExceeded(format!(
            "{elements} elements exceed the 64-element enumeration engine"
        )));
    }
    if limit.is_none() && elements > budget.max_enumeration_cells {
        return Err(Error::BudgetExceeded(format!(
            "enumerating {elements} cells exceeds the {}-cell budget; pass a limit or raise it",
            budget.max_enumeration_cells
        )));
    }
    Ok(LinearExtensionIter {
        preds: predecessor_masks(elements, relations),
        elements,
        labels: vec![0; elements],
        stack: Vec::with_capacity(elements),
        cursor: 0,
        placed: 0,
        remaining: limit,
        backtracking: false,
        exhausted: false,
    })
}

impl LinearExtensionIter {
    /// Advances to the next extension and lends its label vector.
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
        loop {
            if self.backtracking {
                match self.stack.pop() {
                    None => {
                        self.exhausted = true;
                        return None;
                    }
                    Some(e) => {
                        self.placed &= !(1 << e);
                        self.cursor = e + 1;
                        self.backtracking = false;
                    }
                }
            }
            if self.stack.len() == self.elements {
                // Complete extension; resume by backtracking next time.
                self.backtracking = true;
                return Some(&self.labels);
            }
            match self.next_candidate() {
                Some(e) => {
                    self.placed |= 1 << e;
                    self.stack.push(e);
                    self.labels[e] = self.stack.len() as u32;
                    self.cursor = 0;
                }
                None => self.backtracking = true,
            }
        }
    }

    fn next_candidate(&self) -> Option<usize> {
        (self.cursor..self.elements).find(|&e| {
            let bit = 1u64 << e;
            self.placed & bit == 0 && self.preds[e] & self.placed == self.preds[e]
        })
    }
}

/// The lexicographically first extension: repeatedly place the available
/// element with the smallest id.
pub fn first_extension(order: &OrderConstraints) -> Vec<u32> {
    let n = order.elements();
    let preds = predecessor_masks(n, order.relations());
    let mut labels = vec![0u32; n];
    let mut placed = 0u64;
    for position in 1..=n as u32 {
        let e = (0..n)
            .find(|&e| {
                let bit = 1u64 << e;
                placed & bit == 0 && preds[e] & placed == preds[e]
            })
            .expect("acyclic order always has an available element");
        placed |= 1 << e;
        labels[e] = position;
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{BookShape, ConstraintKind, PageShape};

    fn staircase_order(n: usize, m: usize, kind: ConstraintKind) -> OrderConstraints {
        let pages: Vec<PageShape> = (0..m)
            .map(|_| PageShape::shifted_staircase(n).unwrap())
            .collect();
        let book = BookShape::assemble(pages).unwrap();
        OrderConstraints::for_book(&book, kind).unwrap()
    }

    #[test]
    fn chain_has_one_extension() {
        let order = staircase_order(2, 1, ConstraintKind::Young);
        let budget = Budget::default();
        assert_eq!(count_linear_extensions(&order, &budget).unwrap(), 1u32.into());
        let mut seen = 0;
        visit_linear_extensions(&order, &budget, None, |labels| {
            // Ids: the two diagonals first, then the middle cell; the chain
            // runs diagonal 1 < middle < diagonal 2.
            assert_eq!(labels, &[1, 3, 2][..]);
            seen += 1;
            true
        })
        .unwrap();
        assert_eq!(seen, 1);
        assert_eq!(first_extension(&order), vec![1, 3, 2]);
    }

    #[test]
    fn antichain_counts_permutations() {
        // Three incomparable corner cells: 3! orders for them.
        let book =
            BookShape::assemble(vec![PageShape::nrs_staircase(1, 3, 1, false).unwrap()]).unwrap();
        let order = OrderConstraints::selberg_for_book(&book).unwrap();
        // Cells: diagonal, 3 arm rows (chained to the diagonal), 1 arm col,
        // and 3 free corner cells.
        let count = count_linear_extensions(&order, &Budget::default()).unwrap();
        let brute = visit_linear_extensions(&order, &Budget::default(), None, |_| true).unwrap();
        assert_eq!(BigUint::from(brute), count);
    }

    #[test]
    fn shifted_staircase_extension_counts() {
        // Shifted standard tableaux of staircases: 1, 1, 2, 12, 286.
        let expected: [u64; 5] = [1, 1, 2, 12, 286];
        for (i, &want) in expected.iter().enumerate() {
            let order = staircase_order(i + 1, 1, ConstraintKind::Young);
            let got = count_linear_extensions(&order, &Budget::generous()).unwrap();
            assert_eq!(got, want.into(), "n={}", i + 1);
        }
    }

    #[test]
    fn dp_and_backtracking_agree() {
        for (n, m, kind) in [
            (3usize, 1usize, ConstraintKind::Young),
            (3, 1, ConstraintKind::Selberg),
            (3, 2, ConstraintKind::Young),
            (3, 2, ConstraintKind::Selberg),
            (4, 1, ConstraintKind::Selberg),
        ] {
            let order = staircase_order(n, m, kind);
            let budget = Budget::generous();
            let count = count_linear_extensions(&order, &budget).unwrap();
            let walked = visit_linear_extensions(&order, &budget, None, |_| true).unwrap();
            assert_eq!(count, BigUint::from(walked), "n={n} m={m} {kind}");
        }
    }

    #[test]
    fn limit_bypasses_cell_budget_and_stops() {
        let order = staircase_order(4, 2, ConstraintKind::Selberg);
        let tight = Budget {
            max_enumeration_cells: 4,
            ..Budget::default()
        };
        assert!(matches!(
            visit_linear_extensions(&order, &tight, None, |_| true),
            Err(Error::BudgetExceeded(_))
        ));
        let seen = visit_linear_extensions(&order, &tight, Some(5), |_| true).unwrap();
        assert_eq!(seen, 5);
    }

    #[test]
    fn dp_state_budget_triggers() {
        let order = staircase_order(4, 2, ConstraintKind::Selberg);
        let tiny = Budget {
            max_dp_states: 3,
            ..Budget::default()
        };
        assert!(matches!(
            count_linear_extensions(&order, &tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let order = staircase_order(3, 2, ConstraintKind::Selberg);
        let collect = || {
            let mut all = Vec::new();
            visit_linear_extensions(&order, &Budget::default(), None, |labels| {
                all.push(labels.to_vec());
                true
            })
            .unwrap();
            all
        };
        let first = collect();
        assert_eq!(first, collect());
        let mut sorted = first.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), first.len(), "no duplicates");
    }

    #[test]
    fn empty_order_has_single_empty_extension() {
        let page = PageShape::skew(
            crate::shapes::Partition::new(vec![1]).unwrap(),
            crate::shapes::Partition::new(vec![1]).unwrap(),
        )
        .unwrap();
        let order = OrderConstraints::young_for_page(&page);
        assert_eq!(
            count_linear_extensions(&order, &Budget::default()).unwrap(),
            BigUint::one()
        );
        let seen = visit_linear_extensions(&order, &Budget::default(), None, |labels| {
            assert!(labels.is_empty());
            true
        })
        .unwrap();
        assert_eq!(seen, 1);
    }
}
