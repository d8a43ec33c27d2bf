//! Closed-form counts for Selberg permutations, Selberg/Young books, and
//! the standard-tableaux families they specialize to, plus exact Selberg
//! integral evaluation at (half-)integer parameters.
//!
//! Every formula is evaluated in exact rational arithmetic and, where the
//! result must be an integer, asserted integral — a remainder means a
//! transcription bug and is reported as a hard error, never truncated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::formulas::arith::{
    double_factorial, factorial, rational_to_integer, superfactorial, PiHalfScalar,
};

fn fact(n: u64) -> BigRational {
    factorial(n).into()
}

fn dfr(arg: u64) -> Result<BigRational> {
    let v = i64::try_from(arg)
        .map_err(|_| Error::BudgetExceeded(format!("double-factorial argument {arg} too large")))?;
    Ok(double_factorial(v)?.into())
}

fn sf(k: u64) -> BigRational {
    superfactorial(k).into()
}

fn check_same_length(rvec: &[u64], svec: &[u64]) -> Result<usize> {
    if rvec.len() != svec.len() {
        return Err(Error::InvalidShape(format!(
            "row-arm list has {} entries but column-arm list has {}",
            rvec.len(),
            svec.len()
        )));
    }
    Ok(rvec.len())
}

fn check_pages(rvec: &[u64], svec: &[u64]) -> Result<u64> {
    let m = check_same_length(rvec, svec)?;
    if m == 0 {
        return Err(Error::InvalidShape(
            "at least one page of arm parameters is required".into(),
        ));
    }
    Ok(m as u64)
}

/// Number of Selberg permutations with `n` anchors, `r` low letters and
/// `s` high letters per anchor, and `m` letters between each anchor pair.
pub fn sp_count(n: u64, r: u64, s: u64, m: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one anchor is required".into()));
    }
    let big_n = (r + s + 1) * n + m * n * (n - 1) / 2;
    let mut value = BigRational::from(BigInt::from(2).pow(n as u32)) * fact(big_n) / fact(n);
    for j in 1..=n {
        value *= dfr(j * m)? * dfr(2 * r + (j - 1) * m)? * dfr(2 * s + (j - 1) * m)?;
        value /= dfr(m)? * dfr(2 * r + 2 * s + 2 + (n + j - 2) * m)?;
    }
    rational_to_integer(value, "Selberg permutation count")
}

/// Number of Selberg books on `m` plain staircase pages of size `n`.
pub fn sb_count(n: u64, m: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    let big_n = n + m * n * (n - 1) / 2;
    let m_df = dfr(m)?;
    let mut value = BigRational::from(BigInt::from(2).pow(n as u32)) * fact(big_n) / fact(n);
    for j in 1..=n {
        let prev = dfr((j - 1) * m)?;
        value *= &prev * &prev * dfr(j * m)?;
        value /= &m_df * dfr(2 + (n + j - 2) * m)?;
    }
    rational_to_integer(value, "Selberg book count")
}

/// Number of Young books on `m` plain staircase pages of size `n`.
pub fn yb_count(n: u64, m: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    let big_n = n + m * n * (n - 1) / 2;
    let m_df = dfr(m)?;
    let mut value = BigRational::from(BigInt::from(2).pow(n as u32)) * fact(big_n) / fact(n);
    for j in 1..=n {
        let prev = dfr((j - 1) * m)?;
        value *= &prev * &prev * dfr(j * m)?;
        value /= &m_df * dfr(2 + (n + j - 2) * m)?;
        // Each page contributes an extra (j-1)! per diagonal index relative
        // to the Selberg-book count.
        let fj: BigRational = fact(j - 1);
        for _ in 0..m {
            value /= &fj;
        }
    }
    rational_to_integer(value, "Young book count")
}

/// Number of Young books whose pages are size-`n` staircases with row arms
/// `rvec` and column arms `svec` (page `p` gets arms `rvec[p]`, `svec[p]`).
pub fn yb_count_nrs(n: u64, rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    let m = check_pages(rvec, svec)?;
    let r: u64 = rvec.iter().sum();
    let s: u64 = svec.iter().sum();
    let corner: u64 = rvec.iter().zip(svec).map(|(a, b)| a * b).sum();
    let big_n = (r + s + 1) * n + m * n * (n - 1) / 2 + corner;

    let mut value = fact(big_n);
    for (&rp, &sp) in rvec.iter().zip(svec) {
        value *= sf(rp) * sf(sp) / sf(n + rp + sp);
    }
    value *= BigRational::from(BigInt::from(2).pow(n as u32)) / fact(n);
    for j in 1..=n {
        value *= dfr(j * m)? * dfr(2 * r + (j - 1) * m)? * dfr(2 * s + (j - 1) * m)?;
        value /= dfr(m)? * dfr(2 * r + 2 * s + 2 + (n + j - 2) * m)?;
    }
    rational_to_integer(value, "armed Young book count")
}

/// Number of standard Young tableaux of the truncated shape obtained from
/// the `(n+s) × (r+n)` rectangle by removing the staircase
/// `(n-1, n-2, …, 1)` from its southwest corner.
pub fn syt_truncated_staircase(n: u64, r: u64, s: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    let big_n = (r + s + 1) * n + n * (n - 1) / 2 + r * s;
    let mut value = fact(big_n) * BigRational::from(BigInt::from(2).pow(n as u32));
    value *= sf(r) * sf(s) / (fact(n) * sf(n + r + s));
    for j in 1..=n {
        value *= dfr(j)? * dfr(2 * r + j - 1)? * dfr(2 * s + j - 1)?;
        value /= dfr(2 * r + 2 * s + n + j)?;
    }
    rational_to_integer(value, "truncated staircase tableau count")
}

/// Number of standard Young tableaux of the skew shape
/// `((r₂+n+s₁)^{r₁+n}, (r₂+n)^{s₂}) / (r₂^{r₁})` — two arm-decorated
/// staircases glued along their diagonals and straightened into a skew
/// diagram.
pub fn syt_skew_double(n: u64, r1: u64, r2: u64, s1: u64, s2: u64) -> Result<BigInt> {
    yb_count_nrs(n, &[r1, r2], &[s1, s2])
}

/// A variant of [`syt_skew_double`] carrying an extra `2ⁿ` prefactor.
///
/// This closed form circulates alongside the correct one but is too large
/// by exactly `2ⁿ` (equivalently, it drops a `2` from each denominator
/// factor).  It is kept so the verification suite can demonstrate the
/// discrepancy against the determinant oracle; never use it for counting.
pub fn syt_skew_double_alternate(
    n: u64,
    r1: u64,
    r2: u64,
    s1: u64,
    s2: u64,
) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidShape("at least one diagonal cell is required".into()));
    }
    let r = r1 + r2;
    let s = s1 + s2;
    let big_n = (r + s) * n + n * n + r1 * s1 + r2 * s2;
    let mut value = fact(big_n) * BigRational::from(BigInt::from(2).pow(n as u32));
    value *= sf(r1) * sf(r2) * sf(s1) * sf(s2)
        / (fact(n) * sf(n + r1 + s1) * sf(n + r2 + s2));
    for j in 1..=n {
        value *= dfr(2 * j)? * dfr(2 * r + 2 * j - 2)? * dfr(2 * s + 2 * j - 2)?;
        value /= dfr(2 * r + 2 * s + 2 * n + 2 * j - 2)?;
    }
    rational_to_integer(value, "alternate double-arm tableau count")
}

/// Number of Young books whose pages are block staircases with every
/// diagonal merged into a `k × k` super-cell, with arms `rvec`/`svec`.
pub fn yb_count_ars_kn(k: u64, n: u64, rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidShape(
            "block size and diagonal count must be positive".into(),
        ));
    }
    let m = check_pages(rvec, svec)?;
    let r: u64 = rvec.iter().sum();
    let s: u64 = svec.iter().sum();
    let corner: u64 = rvec.iter().zip(svec).map(|(a, b)| a * b).sum();
    let kk = k * k;
    let big_n = (k * r + k * s + 1) * n + kk * m * n * (n - 1) / 2 + corner;

    let mut value = fact(big_n) * BigRational::from(BigInt::from(2).pow(n as u32)) / fact(n);
    let f_k_n = {
        let base = sf(k);
        let mut acc = BigRational::one();
        for _ in 0..n {
            acc *= &base;
        }
        acc
    };
    for (&rp, &sp) in rvec.iter().zip(svec) {
        value *= &f_k_n * sf(rp) * sf(sp) / sf(k * n + rp + sp);
    }
    for j in 1..=n {
        value *= dfr(j * kk * m)? * dfr(2 * k * r + (j - 1) * kk * m)?
            * dfr(2 * k * s + (j - 1) * kk * m)?;
        value /= dfr(kk * m)? * dfr(2 * k * r + 2 * k * s + 2 + (n + j - 2) * kk * m)?;
    }
    rational_to_integer(value, "block Young book count")
}

/// Number of standard Young tableaux of the truncated shape obtained from
/// the `(kn+s) × (r+kn)` rectangle by removing the fattened staircase
/// `((kn)^{k-1}, kn-1, (kn-k)^{k-1}, kn-k-1, …, k^{k-1}, k-1)` from its
/// southwest corner.
pub fn syt_truncated_panova(k: u64, n: u64, r: u64, s: u64) -> Result<BigInt> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidShape(
            "block size and diagonal count must be positive".into(),
        ));
    }
    let kk = k * k;
    let big_n = (k * r + k * s + 1) * n + kk * n * (n - 1) / 2 + r * s;
    let mut value = fact(big_n) * BigRational::from(BigInt::from(2).pow(n as u32)) / fact(n);
    let base = sf(k);
    for _ in 0..n {
        value *= &base;
    }
    value *= sf(r) * sf(s) / sf(k * n + r + s);
    for j in 1..=n {
        value *= dfr(j * kk)? * dfr(2 * k * r + (j - 1) * kk)? * dfr(2 * k * s + (j - 1) * kk)?;
        value /= dfr(kk)? * dfr(2 * k * r + 2 * k * s + 2 + (n + j - 2) * kk)?;
    }
    rational_to_integer(value, "block truncated tableau count")
}

/// Number of fillings of the corner-removed Selberg book with arms
/// `rvec`/`svec`: equal to the Selberg permutation count with the arms
/// summed.
pub fn sb_minus_count(n: u64, rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    let m = check_same_length(rvec, svec)? as u64;
    let r: u64 = rvec.iter().sum();
    let s: u64 = svec.iter().sum();
    sp_count(n, r, s, m)
}

/// Number of fillings of the full Selberg book with arms `rvec`/`svec`:
/// the corner-removed count times a rising ratio of factorials that
/// accounts for the corner rectangles.
pub fn sb_full_count(n: u64, rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    let m = check_same_length(rvec, svec)? as u64;
    let r: u64 = rvec.iter().sum();
    let s: u64 = svec.iter().sum();
    let corner: u64 = rvec.iter().zip(svec).map(|(a, b)| a * b).sum();
    let minus_cells = (r + s + 1) * n + m * n * (n - 1) / 2;
    let mut value = BigRational::from(sb_minus_count(n, rvec, svec)?);
    for t in minus_cells + 1..=minus_cells + corner {
        value *= BigRational::from(BigInt::from(t));
    }
    rational_to_integer(value, "full Selberg book count")
}

/// The gap-class-wise ratio of Selberg-book to Young-book counts for
/// unit-diagonal pages: `∏ᵢ F(n+rᵢ+sᵢ) / (F(rᵢ) F(sᵢ))`.
pub fn sb_yb_factor(n: u64, rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    check_same_length(rvec, svec)?;
    let mut value = BigRational::one();
    for (&rp, &sp) in rvec.iter().zip(svec) {
        value *= sf(n + rp + sp) / (sf(rp) * sf(sp));
    }
    rational_to_integer(value, "book count ratio")
}

/// The gap-class-wise ratio of Selberg-book to Young-book counts for
/// merged-diagonal pages with spans `a`:
/// `∏ᵢ F(|a|+rᵢ+sᵢ) / (F(a₁)⋯F(aₙ) F(rᵢ) F(sᵢ))`.
pub fn sb_yb_factor_ars(a: &[u64], rvec: &[u64], svec: &[u64]) -> Result<BigInt> {
    check_same_length(rvec, svec)?;
    if a.is_empty() {
        return Err(Error::InvalidShape("at least one diagonal span is required".into()));
    }
    let total: u64 = a.iter().sum();
    let span_product: BigRational = a.iter().map(|&ai| sf(ai)).product();
    let mut value = BigRational::one();
    for (&rp, &sp) in rvec.iter().zip(svec) {
        value *= sf(total + rp + sp) / (&span_product * sf(rp) * sf(sp));
    }
    rational_to_integer(value, "block book count ratio")
}

/// The exact rational value of the Selberg integral at `α = r+1`,
/// `β = s+1`, `γ = m/2`, computed from the permutation count:
/// `n! · sp_count(n,r,s,m) / N!` with `N` the alphabet size.
pub fn selberg_combinatorial(n: u64, r: u64, s: u64, m: u64) -> Result<BigRational> {
    let big_n = (r + s + 1) * n + m * n * (n - 1) / 2;
    Ok(fact(n) * BigRational::from(sp_count(n, r, s, m)?) / fact(big_n))
}

/// Parameters of the Selberg integral: dimension `n` and exponents
/// `α, β, γ`, each a rational with denominator at most 2 so the value
/// stays inside exact `√π`-tracking arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelbergParams {
    n: u64,
    alpha: BigRational,
    beta: BigRational,
    gamma: BigRational,
}

impl SelbergParams {
    pub fn new(n: u64, alpha: BigRational, beta: BigRational, gamma: BigRational) -> Result<SelbergParams> {
        if n == 0 {
            return Err(Error::InvalidShape("dimension must be positive".into()));
        }
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(Error::Unsupported(format!(
                "exponents alpha = {alpha}, beta = {beta} must be positive"
            )));
        }
        for (name, q) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            let denom = q.denom();
            if denom > &BigInt::from(2) {
                return Err(Error::Unsupported(format!(
                    "{name} = {q} has denominator above 2; only integers and half-integers are supported"
                )));
            }
        }
        Ok(SelbergParams { n, alpha, beta, gamma })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn gamma(&self) -> &BigRational {
        &self.gamma
    }
}

/// The Selberg integral
/// `∫…∫ ∏ xᵢ^{α-1} (1-xᵢ)^{β-1} ∏ |xᵢ-xⱼ|^{2γ} dx`
/// over the unit cube, as the exact Gamma-product
/// `∏ⱼ Γ(α+(j-1)γ) Γ(β+(j-1)γ) Γ(1+jγ) / (Γ(α+β+(n+j-2)γ) Γ(1+γ))`.
///
/// Every Gamma argument must come out a positive integer or half-integer;
/// anything else is reported as unsupported.
pub fn selberg_exact(params: &SelbergParams) -> Result<PiHalfScalar> {
    let n = params.n;
    let one = BigRational::one();
    let gamma_1 = PiHalfScalar::gamma(&(&one + &params.gamma))?;
    let mut value = PiHalfScalar::one();
    for j in 1..=n {
        let jm1 = BigRational::from(BigInt::from(j - 1));
        let jr = BigRational::from(BigInt::from(j));
        let njm2 = BigRational::from(BigInt::from(n + j - 2));
        value = value.mul(&PiHalfScalar::gamma(&(&params.alpha + &jm1 * &params.gamma))?);
        value = value.mul(&PiHalfScalar::gamma(&(&params.beta + &jm1 * &params.gamma))?);
        value = value.mul(&PiHalfScalar::gamma(&(&one + &jr * &params.gamma))?);
        value = value.div(&PiHalfScalar::gamma(
            &(&params.alpha + &params.beta + &njm2 * &params.gamma),
        )?);
        value = value.div(&gamma_1);
    }
    Ok(value)
}

/// Convenience: the Selberg integral at `α = r+1`, `β = s+1`, `γ = m/2`,
/// the parameter ray realized by letter-poset counts.
pub fn selberg_exact_half(n: u64, r: u64, s: u64, m: u64) -> Result<PiHalfScalar> {
    let params = SelbergParams::new(
        n,
        BigRational::from(BigInt::from(r + 1)),
        BigRational::from(BigInt::from(s + 1)),
        BigRational::new(BigInt::from(m), BigInt::from(2)),
    )?;
    selberg_exact(&params)
}
