//! Sparse multivariate polynomials over exact rationals, and the
//! gap-generating functions of Selberg and Young books.
//!
//! A book's fillings, grouped by gap vector, are recorded by an
//! exponential generating function: the coefficient of
//! `t^d / (d₁!⋯d_k!)` counts the fillings with gap vector `d`.  The
//! builders here produce those generating functions directly as products
//! of variable-range sums; [`gap_count`] reads a single class back out and
//! [`exp_moment`] integrates the whole polynomial against an exponential
//! weight, which totals the classes with their multiplicities.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::GapVector;
use crate::error::{Error, Result};
use crate::formulas::{factorial, rational_to_integer, superfactorial};

/// A polynomial in a fixed number of variables `t0, …, t_{k-1}` with exact
/// rational coefficients, stored sparsely by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> MultiPoly {
        MultiPoly {
            vars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(vars: usize, value: BigRational) -> MultiPoly {
        let mut poly = MultiPoly::zero(vars);
        if !value.is_zero() {
            poly.terms.insert(vec![0; vars], value);
        }
        poly
    }

    pub fn one(vars: usize) -> MultiPoly {
        MultiPoly::constant(vars, BigRational::one())
    }

    /// The monomial `t_index`.  Panics when `index` is out of range: the
    /// builders below own every index they use.
    pub fn variable(vars: usize, index: usize) -> MultiPoly {
        assert!(index < vars, "variable t{index} outside {vars} variables");
        let mut exps = vec![0; vars];
        exps[index] = 1;
        let mut poly = MultiPoly::zero(vars);
        poly.terms.insert(exps, BigRational::one());
        poly
    }

    /// The sum `t_lo + t_{lo+1} + ⋯ + t_hi`.
    pub fn var_sum(vars: usize, lo: usize, hi: usize) -> MultiPoly {
        assert!(lo <= hi && hi < vars, "variable range t{lo}..t{hi} outside {vars} variables");
        let mut poly = MultiPoly::zero(vars);
        for index in lo..=hi {
            let mut exps = vec![0; vars];
            exps[index] = 1;
            poly.terms.insert(exps, BigRational::one());
        }
        poly
    }

    pub fn variable_count(&self) -> usize {
        self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the monomial with the given exponents (zero when
    /// absent).  The exponent vector must have the declared length.
    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        assert_eq!(exps.len(), self.vars, "exponent vector length mismatch");
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            let entry = terms.entry(exps.clone()).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut terms: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (a_exps, a_coeff) in &self.terms {
            for (b_exps, b_coeff) in &other.terms {
                let exps: Vec<u32> = a_exps.iter().zip(b_exps).map(|(a, b)| a + b).collect();
                let entry = terms.entry(exps).or_insert_with(BigRational::zero);
                *entry += a_coeff * b_coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }

    /// Binary exponentiation over exact multiplication.
    pub fn pow(&self, mut exp: u64) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, factor: &BigRational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Terms in graded lexicographic order (total degree, then exponents),
    /// the order used by every external emission.
    pub fn terms_sorted(&self) -> Vec<(Vec<u32>, BigRational)> {
        let mut terms: Vec<(Vec<u32>, BigRational)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| {
            let deg_a: u64 = a.iter().map(|&x| u64::from(x)).sum();
            let deg_b: u64 = b.iter().map(|&x| u64::from(x)).sum();
            deg_a.cmp(&deg_b).then_with(|| a.cmp(b))
        });
        terms
    }

    /// The common total degree of all terms, when one exists.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| u64::from(x)).sum::<u64>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl std::fmt::Display for MultiPoly {
    /// Terms as `c * t0^e0 t1^e1 …` joined by ` + `, graded lex order;
    /// zero-exponent variables are omitted, the zero polynomial prints `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms_sorted()
            .into_iter()
            .map(|(exps, coeff)| {
                let monomial: Vec<String> = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| format!("t{i}^{e}"))
                    .collect();
                if monomial.is_empty() {
                    format!("{coeff}")
                } else {
                    format!("{coeff} * {}", monomial.join(" "))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Gap generating function of Selberg books on `m` staircase pages of size
/// `n`: the product of `(t_i + ⋯ + t_{j-1})^m` over `1 ≤ i < j ≤ n`, in
/// the `n-1` interior gap variables `t1, …, t_{n-1}` (stored as variables
/// `0, …, n-2`; the display index is off by one from the gap subscript).
pub fn sb_genfun(n: u64, m: u64) -> MultiPoly {
    assert!(n >= 1, "at least one diagonal cell is required");
    let vars = (n - 1) as usize;
    let mut poly = MultiPoly::one(vars);
    for i in 1..=n {
        for j in i + 1..=n {
            // t_i + … + t_{j-1} in 1-based gap subscripts.
            let factor = MultiPoly::var_sum(vars, (i - 1) as usize, (j - 2) as usize);
            poly = poly.mul(&factor.pow(m));
        }
    }
    poly
}

/// Gap generating function of Young books on `m` staircase pages of size
/// `n`: each factor of [`sb_genfun`] divided by `j - i`, which scales the
/// whole polynomial by `superfactorial(n)^{-m}`.
pub fn yb_genfun(n: u64, m: u64) -> MultiPoly {
    assert!(n >= 1, "at least one diagonal cell is required");
    let vars = (n - 1) as usize;
    let mut poly = MultiPoly::one(vars);
    for i in 1..=n {
        for j in i + 1..=n {
            let scale = BigRational::new(BigInt::one(), BigInt::from(j - i));
            let factor = MultiPoly::var_sum(vars, (i - 1) as usize, (j - 2) as usize).scale(&scale);
            poly = poly.mul(&factor.pow(m));
        }
    }
    poly
}

fn check_arm_lists(rvec: &[u64], svec: &[u64]) -> Result<()> {
    if rvec.len() != svec.len() {
        return Err(Error::InvalidShape(format!(
            "row-arm list has {} entries but column-arm list has {}",
            rvec.len(),
            svec.len()
        )));
    }
    Ok(())
}

/// Gap generating function of full Selberg books with arms, in the `n+1`
/// boundary-inclusive gap variables `t0, …, tn`:
/// `∏ᵢ (t0+⋯+t_{i-1})^r (t_i+⋯+t_n)^s · (t0+⋯+t_n)^{Σ rₚsₚ} ·
/// ∏_{i<j} (t_i+⋯+t_{j-1})^m`.
pub fn sb_genfun_nrs(n: u64, rvec: &[u64], svec: &[u64]) -> Result<MultiPoly> {
    let corner: u64 = rvec.iter().zip(svec).map(|(a, b)| a * b).sum();
    let minus = sb_genfun_nrs_minus(n, rvec, svec)?;
    let vars = (n + 1) as usize;
    Ok(minus.mul(&MultiPoly::var_sum(vars, 0, n as usize).pow(corner)))
}

/// Gap generating function of corner-removed Selberg books with arms: the
/// full generating function without the `(t0+⋯+tn)^{Σ rₚsₚ}` corner
/// factor.
pub fn sb_genfun_nrs_minus(n: u64, rvec: &[u64], svec: &[u64]) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    check_arm_lists(rvec, svec)?;
    let m = rvec.len() as u64;
    let r: u64 = rvec.iter().sum();
    let s: u64 = svec.iter().sum();
    let vars = (n + 1) as usize;
    let mut poly = MultiPoly::one(vars);
    for i in 1..=n as usize {
        poly = poly.mul(&MultiPoly::var_sum(vars, 0, i - 1).pow(r));
        poly = poly.mul(&MultiPoly::var_sum(vars, i, n as usize).pow(s));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let factor = MultiPoly::var_sum(vars, i as usize, (j - 1) as usize);
            poly = poly.mul(&factor.pow(m));
        }
    }
    Ok(poly)
}

/// Gap generating function of full Young books with arms: [`sb_genfun_nrs`]
/// scaled by `∏ₚ F(rₚ) F(sₚ) / F(n+rₚ+sₚ)`, the reciprocal of the
/// class-wise Selberg-to-Young ratio.
pub fn yb_genfun_nrs(n: u64, rvec: &[u64], svec: &[u64]) -> Result<MultiPoly> {
    let poly = sb_genfun_nrs(n, rvec, svec)?;
    let mut scale = BigRational::one();
    for (&rp, &sp) in rvec.iter().zip(svec) {
        scale *= BigRational::from(superfactorial(rp) * superfactorial(sp))
            / BigRational::from(superfactorial(n + rp + sp));
    }
    Ok(poly.scale(&scale))
}

/// Recovers one gap class from a generating function: the coefficient of
/// `t^d` times `∏ dᵢ!`, asserted integral.
pub fn gap_count(poly: &MultiPoly, d: &GapVector) -> Result<BigInt> {
    if d.gaps.len() != poly.variable_count() {
        return Err(Error::InvalidShape(format!(
            "gap vector {} has {} entries but the polynomial has {} variables",
            d,
            d.gaps.len(),
            poly.variable_count()
        )));
    }
    let mut value = poly.coefficient(&d.gaps);
    for &g in &d.gaps {
        value *= BigRational::from(factorial(u64::from(g)));
    }
    rational_to_integer(value, "gap class count")
}

/// Integrates the polynomial against `e^{-t}` in every variable: each
/// monomial `c · ∏ tᵢ^{eᵢ}` contributes `c · ∏ eᵢ!`.  On a gap generating
/// function this totals all classes, recovering the plain count.
pub fn exp_moment(poly: &MultiPoly) -> BigRational {
    let mut total = BigRational::zero();
    for (exps, coeff) in &poly.terms {
        let mut value = coeff.clone();
        for &e in exps {
            value *= BigRational::from(factorial(u64::from(e)));
        }
        total += value;
    }
    total
}
