//! Independent tableaux-counting oracles and a brute-force exact integral.
//!
//! Nothing in this file shares a code path with the closed-form counts in
//! [`crate::formulas::counts`]; these routines exist so that every product
//! formula can be checked against arithmetic of a completely different
//! shape (hook products, determinants, term-by-term integration).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::arith::{binomial, factorial, rational_to_integer};
use crate::shapes::Partition;

/// Number of standard Young tableaux of a straight shape, by the
/// hook-length product formula.
pub fn hook_count_straight(lambda: &Partition) -> Result<BigInt> {
    let rows = lambda.len();
    let conjugate: Vec<u32> = if rows == 0 {
        Vec::new()
    } else {
        (1..=lambda.part(0))
            .map(|c| (0..rows).filter(|&i| lambda.part(i) >= c).count() as u32)
            .collect()
    };
    let mut value = BigRational::from(factorial(lambda.size()));
    for i in 0..rows {
        for j in 0..lambda.part(i) as usize {
            let hook = u64::from(lambda.part(i)) - (j as u64 + 1)
                + u64::from(conjugate[j]) - (i as u64 + 1)
                + 1;
            value /= BigRational::from(BigInt::from(hook));
        }
    }
    rational_to_integer(value, "hook-length count")
}

/// Number of standard Young tableaux of a shifted shape (strict parts),
/// by the product formula `n!/(∏λᵢ!) · ∏_{i<j} (λᵢ-λⱼ)/(λᵢ+λⱼ)`.
pub fn hook_count_shifted(lambda: &Partition) -> Result<BigInt> {
    if !lambda.is_strict() {
        return Err(Error::InvalidShape(format!(
            "shifted count needs strictly decreasing parts, got {lambda}"
        )));
    }
    let mut value = BigRational::from(factorial(lambda.size()));
    for i in 0..lambda.len() {
        value /= BigRational::from(factorial(u64::from(lambda.part(i))));
        for j in i + 1..lambda.len() {
            let diff = u64::from(lambda.part(i) - lambda.part(j));
            let sum = u64::from(lambda.part(i) + lambda.part(j));
            value *= BigRational::new(BigInt::from(diff), BigInt::from(sum));
        }
    }
    rational_to_integer(value, "shifted hook count")
}

/// Number of standard Young tableaux of the skew shape `outer/inner`, by
/// the determinant `n! · det(1/(λᵢ-μⱼ-i+j)!)` evaluated with exact
/// rational Gaussian elimination.
pub fn skew_count_determinant(outer: &Partition, inner: &Partition) -> Result<BigInt> {
    if !outer.contains(inner) {
        return Err(Error::InvalidShape(format!(
            "{inner} does not fit inside {outer}"
        )));
    }
    let ell = outer.len();
    let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(ell);
    for i in 0..ell {
        let mut row = Vec::with_capacity(ell);
        for j in 0..ell {
            let arg = i64::from(outer.part(i)) - i64::from(inner.part(j)) - i as i64 + j as i64;
            row.push(if arg < 0 {
                BigRational::zero()
            } else {
                BigRational::new(BigInt::one(), factorial(arg as u64))
            });
        }
        matrix.push(row);
    }
    let cells = outer.size() - inner.size();
    let value = BigRational::from(factorial(cells)) * determinant(matrix);
    rational_to_integer(value, "skew determinant count")
}

fn determinant(mut matrix: Vec<Vec<BigRational>>) -> BigRational {
    let ell = matrix.len();
    let mut det = BigRational::one();
    for col in 0..ell {
        let Some(pivot) = (col..ell).find(|&r| !matrix[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            matrix.swap(pivot, col);
            det = -det;
        }
        let pivot_value = matrix[col][col].clone();
        det *= &pivot_value;
        for r in col + 1..ell {
            if matrix[r][col].is_zero() {
                continue;
            }
            let factor = &matrix[r][col] / &pivot_value;
            for c in col..ell {
                let delta = &factor * &matrix[col][c];
                matrix[r][c] -= delta;
            }
        }
    }
    det
}

/// Caps the number of monomials expanded per variable ordering in
/// [`box_integral_exact`].
const BOX_TERM_BUDGET: u64 = 500_000;

/// The exact value of
/// `∫_{[0,1]ⁿ} ∏ᵢ xᵢ^{p[i]} (1-xᵢ)^{q[i]} ∏_{i<j} |xᵢ-xⱼ|^{e[·]} dx`,
/// with `e` listing the pair exponents in lexicographic `(i,j)` order.
///
/// Works by splitting the cube into the `n!` orderings of the variables,
/// resolving each absolute value, expanding to monomials, and integrating
/// each monomial over the simplex in closed form.  Exponential in every
/// direction, hence the hard `n ≤ 4` and term-count limits; this is an
/// oracle, not a production integrator.
pub fn box_integral_exact(p: &[u64], q: &[u64], e: &[u64]) -> Result<BigRational> {
    let n = p.len();
    if n == 0 || n > 4 {
        return Err(Error::BudgetExceeded(format!(
            "{n} variables outside the supported range 1..=4"
        )));
    }
    if q.len() != n || e.len() != n * (n - 1) / 2 {
        return Err(Error::InvalidShape(format!(
            "expected {n} low exponents and {} pair exponents",
            n * (n - 1) / 2
        )));
    }
    let mut expanded: u64 = 1;
    for &qi in q.iter().chain(e) {
        expanded = expanded.saturating_mul(qi + 1);
        if expanded > BOX_TERM_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "monomial expansion beyond {BOX_TERM_BUDGET} terms"
            )));
        }
    }

    let pair_index = |i: usize, j: usize| -> usize {
        // (i, j) with i < j, lexicographic.
        (0..i).map(|t| n - 1 - t).sum::<usize>() + (j - i - 1)
    };

    let mut total = BigRational::zero();
    let mut order: Vec<usize> = (0..n).collect();
    permute(&mut order, 0, &mut |order| {
        // position_of[v] = t means x_v is the (t+1)-st smallest variable.
        let mut position_of = vec![0usize; n];
        for (t, &v) in order.iter().enumerate() {
            position_of[v] = t;
        }
        // Expandable factors: (1 - y_t)^{q} and (y_v - y_u)^{e}.
        enum Factor {
            OneMinus { pos: usize, exp: u64 },
            Diff { hi: usize, lo: usize, exp: u64 },
        }
        let mut factors = Vec::new();
        for i in 0..n {
            if q[i] > 0 {
                factors.push(Factor::OneMinus {
                    pos: position_of[i],
                    exp: q[i],
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let exp = e[pair_index(i, j)];
                if exp > 0 {
                    let (a, b) = (position_of[i], position_of[j]);
                    factors.push(Factor::Diff {
                        hi: a.max(b),
                        lo: a.min(b),
                        exp,
                    });
                }
            }
        }
        let mut exponents: Vec<u64> = vec![0; n];
        for i in 0..n {
            exponents[position_of[i]] = p[i];
        }
        // Depth-first expansion over the binomial choices of every factor.
        fn expand(
            factors: &[Factor],
            exponents: &mut Vec<u64>,
            coeff: BigInt,
            total: &mut BigRational,
        ) {
            match factors.split_first() {
                None => {
                    // Simplex integral of the monomial: the k-th innermost
                    // integration contributes 1/(prefix degree + k).
                    let mut value = BigRational::from(coeff);
                    let mut prefix = 0u64;
                    for (t, &c) in exponents.iter().enumerate() {
                        prefix += c;
                        value /= BigRational::from(BigInt::from(prefix + t as u64 + 1));
                    }
                    *total += value;
                }
                Some((factor, rest)) => {
                    let (var_hi, var_lo, exp, signed) = match *factor {
                        Factor::OneMinus { pos, exp } => (usize::MAX, pos, exp, false),
                        Factor::Diff { hi, lo, exp } => (hi, lo, exp, true),
                    };
                    for t in 0..=exp {
                        // Choose y_lo^t (with sign) out of the binomial.
                        let mut c = coeff.clone() * binomial(exp, t);
                        if t % 2 == 1 {
                            c = -c;
                        }
                        exponents[var_lo] += t;
                        if signed {
                            exponents[var_hi] += exp - t;
                        }
                        expand(rest, exponents, c, total);
                        exponents[var_lo] -= t;
                        if signed {
                            exponents[var_hi] -= exp - t;
                        }
                    }
                }
            }
        }
        expand(&factors, &mut exponents, BigInt::one(), &mut total);
    });
    Ok(total)
}

/// Calls `f` with every permutation of `items[at..]` (Heap-style recursion).
fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, at: usize, f: &mut F) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::counts::selberg_combinatorial;

    fn partition(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn straight_hook_counts() {
        assert_eq!(hook_count_straight(&partition(&[2, 2])).unwrap(), BigInt::from(2));
        assert_eq!(hook_count_straight(&partition(&[3, 2])).unwrap(), BigInt::from(5));
        assert_eq!(
            hook_count_straight(&partition(&[4, 3, 2, 1])).unwrap(),
            BigInt::from(768)
        );
        assert_eq!(hook_count_straight(&Partition::empty()).unwrap(), BigInt::one());
    }

    #[test]
    fn shifted_hook_counts() {
        assert_eq!(hook_count_shifted(&partition(&[3, 2, 1])).unwrap(), BigInt::from(2));
        assert_eq!(hook_count_shifted(&partition(&[4, 3, 2, 1])).unwrap(), BigInt::from(12));
        assert_eq!(hook_count_shifted(&partition(&[5, 2])).unwrap(), BigInt::from(5));
        assert!(hook_count_shifted(&partition(&[3, 3])).is_err());
    }

    #[test]
    fn skew_determinant_counts() {
        assert_eq!(
            skew_count_determinant(&partition(&[2, 2]), &Partition::empty()).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            skew_count_determinant(&partition(&[3, 2]), &partition(&[1])).unwrap(),
            BigInt::from(5)
        );
        // Empty skew shape: exactly the empty tableau.
        assert_eq!(
            skew_count_determinant(&partition(&[3, 1]), &partition(&[3, 1])).unwrap(),
            BigInt::one()
        );
        assert!(skew_count_determinant(&partition(&[2]), &partition(&[3])).is_err());
    }

    #[test]
    fn skew_determinant_matches_straight_hooks() {
        for parts in [vec![3u32, 2], vec![4, 2, 1], vec![2, 2, 2], vec![5, 1]] {
            let lambda = partition(&parts);
            assert_eq!(
                skew_count_determinant(&lambda, &Partition::empty()).unwrap(),
                hook_count_straight(&lambda).unwrap(),
                "disagreement at {lambda}"
            );
        }
    }

    #[test]
    fn box_integral_basics() {
        assert_eq!(box_integral_exact(&[0], &[0], &[]).unwrap(), rat(1, 1));
        assert_eq!(box_integral_exact(&[0, 0], &[0, 0], &[1]).unwrap(), rat(1, 3));
        // Single variable: the Beta integral r! s! / (r+s+1)!.
        assert_eq!(box_integral_exact(&[2], &[1], &[]).unwrap(), rat(1, 12));
        assert_eq!(box_integral_exact(&[3], &[2], &[]).unwrap(), rat(1, 60));
    }

    #[test]
    fn box_integral_matches_closed_form() {
        for m in 0..=3u64 {
            assert_eq!(
                box_integral_exact(&[0, 0], &[0, 0], &[m]).unwrap(),
                selberg_combinatorial(2, 0, 0, m).unwrap(),
                "pair exponent {m}"
            );
        }
        assert_eq!(
            box_integral_exact(&[1, 1], &[1, 1], &[2]).unwrap(),
            selberg_combinatorial(2, 1, 1, 2).unwrap()
        );
        assert_eq!(
            box_integral_exact(&[1, 1, 1], &[0, 0, 0], &[1, 1, 1]).unwrap(),
            selberg_combinatorial(3, 1, 0, 1).unwrap()
        );
    }

    #[test]
    fn box_integral_guards() {
        assert!(box_integral_exact(&[], &[], &[]).is_err());
        assert!(box_integral_exact(&[0, 0], &[0], &[1]).is_err());
        assert!(box_integral_exact(&[0, 0], &[0, 0], &[]).is_err());
        assert!(box_integral_exact(&[0; 5], &[0; 5], &[0; 10]).is_err());
        // Term budget: 2^40 monomials is out of reach.
        assert!(box_integral_exact(&[0, 0], &[40, 40], &[40]).is_err());
    }
}
