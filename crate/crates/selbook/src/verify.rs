//! Cross-validation of the closed-form counts against independent oracles:
//! brute-force enumeration, down-set counting, determinant evaluation,
//! exact integrals, and the generating functions.
//!
//! The checks are grouped into named identity families (see
//! [`identity_names`]).  Each family sweeps a parameter grid bounded by
//! [`VerifyBounds`] and emits one [`VerifyCase`] per checked instance, so a
//! caller can render a whole run as a table and rerun it reproducibly: the
//! grids are walked in a fixed order and produce identical reports on every
//! run.
//!
//! A case that demonstrates a known discrepancy — an alternate closed form
//! kept for comparison, or a convention that had to be pinned down by
//! experiment — reports [`CaseStatus::ErratumNoted`] instead of a plain
//! pass.  Such cases count as successes but carry a warning flag.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::budget::Budget;
use crate::combinat::{
    book_to_permutation, check_freeze, count_fillings, count_linear_extensions,
    enumerate_fillings, enumerate_selberg_permutations, gap_census, permutation_to_book,
    Filling, GapVector,
};
use crate::error::{Error, Result};
use crate::formulas::{
    box_integral_exact, factorial, sb_count, selberg_combinatorial, selberg_exact,
    selberg_exact_half, skew_count_determinant, sp_count, superfactorial, syt_skew_double,
    syt_skew_double_alternate, syt_truncated_panova, syt_truncated_staircase, yb_count,
    yb_count_ars_kn, yb_count_nrs, SelbergParams,
};
use crate::genfun::{
    exp_moment, gap_count, sb_genfun, sb_genfun_nrs, sb_genfun_nrs_minus, yb_genfun,
    yb_genfun_nrs, MultiPoly,
};
use crate::shapes::{
    BookShape, Composition, ConstraintKind, OrderConstraints, PageShape, Partition,
};

/// Grid limits for the identity families.
///
/// The defaults match the everyday command-line run; raising them widens
/// the grids (and may require a larger [`Budget`] for the enumeration-backed
/// families).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyBounds {
    /// Largest number of diagonal cells `n`.
    pub max_n: u32,
    /// Largest number of pages `m`.
    pub max_m: u32,
    /// Largest arm width (and largest total arm width for per-page lists).
    pub max_rs: u32,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            max_n: 3,
            max_m: 2,
            max_rs: 2,
        }
    }
}

/// Outcome of a single checked instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseStatus {
    /// Both sides agreed.
    Pass,
    /// The sides disagreed, or the check could not be carried out.
    Fail,
    /// The check succeeded and, in doing so, confirmed a known discrepancy
    /// or a convention that documents one.  Counts as a pass, but callers
    /// should surface the warning.
    ErratumNoted,
}

impl CaseStatus {
    /// True only for [`CaseStatus::Fail`].
    pub fn is_failure(self) -> bool {
        matches!(self, CaseStatus::Fail)
    }
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::ErratumNoted => "erratum-noted",
        };
        f.write_str(text)
    }
}

/// One row of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyCase {
    /// Identity family the case belongs to (one of [`identity_names`]).
    pub identity: String,
    /// Which grid point or sub-check this row covers.
    pub detail: String,
    /// Rendered left-hand value.
    pub lhs: String,
    /// Rendered right-hand value.
    pub rhs: String,
    /// Outcome.
    pub status: CaseStatus,
}

/// An ordered list of verification cases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    /// True when no case failed (noted errata count as passes).
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| !c.status.is_failure())
    }

    /// Number of failing cases.
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| c.status.is_failure()).count()
    }

    /// Number of erratum-noted cases.
    pub fn errata(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.status == CaseStatus::ErratumNoted)
            .count()
    }
}

/// The identity families, in report order.
pub fn identity_names() -> &'static [&'static str] {
    &[
        "big-book",
        "skew-prime",
        "count-lattice",
        "gap-refinement",
        "permutation-bijection",
        "selberg-exact",
        "staircase-formulas",
        "skew-double-erratum",
        "integral-identities",
        "freeze",
    ]
}

/// Runs every identity family in order and concatenates the cases.
pub fn run_all(bounds: &VerifyBounds, budget: &Budget) -> VerifyReport {
    let mut cases = Vec::new();
    for name in identity_names() {
        let report = run_identity(name, bounds, budget).expect("listed identities are known");
        cases.extend(report.cases);
    }
    VerifyReport { cases }
}

/// Runs one identity family by name.
///
/// Unknown names are an error; grid points that cannot be checked (say,
/// because the budget is too small for an enumeration) surface as failing
/// cases rather than errors, so a report is always complete.
pub fn run_identity(name: &str, bounds: &VerifyBounds, budget: &Budget) -> Result<VerifyReport> {
    let cases = match name {
        "big-book" => verify_big_book(budget),
        "skew-prime" => verify_skew_prime(),
        "count-lattice" => verify_count_lattice(bounds, budget),
        "gap-refinement" => verify_gap_refinement(bounds, budget),
        "permutation-bijection" => verify_permutation_bijection(bounds, budget),
        "selberg-exact" => verify_selberg_exact(bounds),
        "staircase-formulas" => verify_staircase_formulas(bounds, budget),
        "skew-double-erratum" => verify_skew_double(bounds),
        "integral-identities" => verify_integral_identities(bounds, budget),
        "freeze" => verify_freeze(bounds, budget),
        other => {
            return Err(Error::Unsupported(format!(
                "unknown identity {other:?}; expected one of: {}",
                identity_names().join(", ")
            )))
        }
    };
    Ok(VerifyReport { cases })
}

// ---------------------------------------------------------------------------
// Case constructors.

fn case(identity: &str, detail: String, ok: bool, lhs: String, rhs: String) -> VerifyCase {
    VerifyCase {
        identity: identity.to_string(),
        detail,
        lhs,
        rhs,
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    }
}

/// Pass/fail case from two comparable values.
fn eq_case<T: PartialEq + fmt::Display>(
    identity: &str,
    detail: String,
    lhs: &T,
    rhs: &T,
) -> VerifyCase {
    case(identity, detail, lhs == rhs, lhs.to_string(), rhs.to_string())
}

/// Like [`eq_case`], but a successful comparison is reported as
/// [`CaseStatus::ErratumNoted`].
fn noted_case<T: PartialEq + fmt::Display>(
    identity: &str,
    detail: String,
    lhs: &T,
    rhs: &T,
) -> VerifyCase {
    let mut c = eq_case(identity, detail, lhs, rhs);
    if c.status == CaseStatus::Pass {
        c.status = CaseStatus::ErratumNoted;
    }
    c
}

fn error_case(identity: &str, detail: String, err: &Error) -> VerifyCase {
    VerifyCase {
        identity: identity.to_string(),
        detail,
        lhs: format!("error: {err}"),
        rhs: String::new(),
        status: CaseStatus::Fail,
    }
}

/// Extends `cases` with the result of a fallible grid point.
fn push_checked(
    cases: &mut Vec<VerifyCase>,
    identity: &str,
    detail: &str,
    result: Result<Vec<VerifyCase>>,
) {
    match result {
        Ok(mut new) => cases.append(&mut new),
        Err(e) => cases.push(error_case(identity, detail.to_string(), &e)),
    }
}

// ---------------------------------------------------------------------------
// Shared grid helpers.

fn widen(v: &[u32]) -> Vec<u64> {
    v.iter().map(|&x| x as u64).collect()
}

/// Book of `m` plain staircase pages on `n` diagonals.
fn plain_book(n: usize, m: usize) -> Result<BookShape> {
    let pages: Vec<PageShape> = (0..m)
        .map(|_| PageShape::shifted_staircase(n))
        .collect::<Result<_>>()?;
    BookShape::assemble(pages)
}

/// Book of armed staircase pages, page `p` carrying arms `(rvec[p], svec[p])`.
fn nrs_book(n: usize, rvec: &[u32], svec: &[u32], minus: bool) -> Result<BookShape> {
    let pages: Vec<PageShape> = rvec
        .iter()
        .zip(svec)
        .map(|(&r, &s)| PageShape::nrs_staircase(n, r, s, minus))
        .collect::<Result<_>>()?;
    BookShape::assemble(pages)
}

/// Book of armed block-staircase pages with every diagonal block of size `k`.
fn block_book(k: u32, n: usize, rvec: &[u32], svec: &[u32]) -> Result<BookShape> {
    let pages: Vec<PageShape> = rvec
        .iter()
        .zip(svec)
        .map(|(&r, &s)| PageShape::ars_staircase(Composition::repeat(k, n), r, s, false))
        .collect::<Result<_>>()?;
    BookShape::assemble(pages)
}

/// Counts fillings by running the backtracking enumerator to exhaustion,
/// independently of the down-set recursion used by [`count_fillings`].
fn count_by_enumeration(
    book: &BookShape,
    kind: ConstraintKind,
    budget: &Budget,
) -> Result<BigUint> {
    let mut iter = enumerate_fillings(book, kind, budget, None)?;
    let mut total = BigUint::zero();
    while iter.next_labels().is_some() {
        total += 1u32;
    }
    Ok(total)
}

/// All arm-width vectors of the given length with entries summing to at
/// most `max_total`, in lexicographic order.
fn arm_vectors(pages: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; pages];
    rec(0, max_total, &mut cur, &mut out);
    out
}

/// Splits total arms `(r, s)` over `m` pages: all of `r` on the first page,
/// all of `s` on the last.  Any split gives the same counts; this one keeps
/// multi-page grids honest without enlarging them.
fn split_arms(r: u32, s: u32, m: usize) -> (Vec<u32>, Vec<u32>) {
    let mut rvec = vec![0u32; m];
    let mut svec = vec![0u32; m];
    if m > 0 {
        rvec[0] = r;
        svec[m - 1] = s;
    }
    (rvec, svec)
}

// ---------------------------------------------------------------------------
// big-book: down-set count of a fixed four-page shifted book.

fn verify_big_book(budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "big-book";
    let text = "book:[shifted:6,2,1;shifted:5,4,1;shifted:5,2,1;shifted:4,2,1]";
    let detail = format!("row-column fillings of {text}");
    let run = || -> Result<Vec<VerifyCase>> {
        let book = crate::dsl::parse_book(text)?;
        let counted = BigInt::from(count_fillings(&book, ConstraintKind::Young, budget)?);
        let factors: [(u32, u32); 8] = [
            (2, 4),
            (3, 1),
            (5, 2),
            (7, 1),
            (17, 1),
            (19, 1),
            (23, 1),
            (1_649_819, 1),
        ];
        let expected: BigInt = factors
            .iter()
            .map(|&(p, e)| BigInt::from(p).pow(e))
            .product();
        Ok(vec![eq_case(IDENT, detail.clone(), &counted, &expected)])
    };
    let mut cases = Vec::new();
    push_checked(&mut cases, IDENT, &detail, run());
    cases
}

// ---------------------------------------------------------------------------
// skew-prime: a determinant evaluation with a known large prime factor.

fn verify_skew_prime() -> Vec<VerifyCase> {
    const IDENT: &str = "skew-prime";
    let detail = "standard tableaux of (7,7,7,7,7,5,5)/(4,4), residue mod 9173".to_string();
    let run = || -> Result<Vec<VerifyCase>> {
        let outer = Partition::new(vec![7, 7, 7, 7, 7, 5, 5])?;
        let inner = Partition::new(vec![4, 4])?;
        let count = skew_count_determinant(&outer, &inner)?;
        let remainder = &count % BigInt::from(9173u32);
        Ok(vec![case(
            IDENT,
            format!("{detail} (count {count})"),
            remainder == BigInt::zero(),
            remainder.to_string(),
            "0".to_string(),
        )])
    };
    let mut cases = Vec::new();
    push_checked(&mut cases, IDENT, &detail, run());
    cases
}

// ---------------------------------------------------------------------------
// count-lattice: plain-book closed forms against enumeration, and the
// superfactorial ratio between the two filling kinds.

fn verify_count_lattice(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "count-lattice";
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n as usize {
        for m in 1..=bounds.max_m as usize {
            let detail = format!("n={n}, m={m}");
            let run = || -> Result<Vec<VerifyCase>> {
                let book = plain_book(n, m)?;
                let sb = sb_count(n as u64, m as u64)?;
                let yb = yb_count(n as u64, m as u64)?;
                let ratio = &yb * superfactorial(n as u64).pow(m as u32);
                let mut out = vec![eq_case(
                    IDENT,
                    format!("{detail}: selberg count = young count * superfactorial(n)^m"),
                    &sb,
                    &ratio,
                )];
                if book.total_cells() <= budget.max_enumeration_cells {
                    let sb_enum =
                        BigInt::from(count_by_enumeration(&book, ConstraintKind::Selberg, budget)?);
                    let yb_enum =
                        BigInt::from(count_by_enumeration(&book, ConstraintKind::Young, budget)?);
                    out.push(eq_case(
                        IDENT,
                        format!("{detail}: selberg formula vs enumeration"),
                        &sb,
                        &sb_enum,
                    ));
                    out.push(eq_case(
                        IDENT,
                        format!("{detail}: young formula vs enumeration"),
                        &yb,
                        &yb_enum,
                    ));
                }
                Ok(out)
            };
            push_checked(&mut cases, IDENT, &detail, run());
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// gap-refinement: the census of fillings by gap vector against the
// generating-function coefficients, class by class.

/// Compares an enumerated gap census against a generating function: every
/// census class must match its coefficient count and every monomial must
/// appear in the census.
fn census_against_genfun(
    identity: &str,
    detail: String,
    poly: &MultiPoly,
    book: &BookShape,
    kind: ConstraintKind,
    budget: &Budget,
    noted: bool,
) -> VerifyCase {
    let run = || -> Result<(bool, String, String)> {
        let census = gap_census(book, kind, budget)?;
        let mut ok = true;
        let mut note = String::new();
        for (gaps, count) in &census {
            let d = GapVector { gaps: gaps.clone() };
            let want = BigInt::from(count.clone());
            let got = gap_count(poly, &d)?;
            if got != want && note.is_empty() {
                ok = false;
                note = format!("; class {d} enumerates {want}, coefficient gives {got}");
            }
        }
        let mut classes = 0usize;
        for (exps, _) in poly.terms_sorted() {
            classes += 1;
            if !census.contains_key(&exps) && note.is_empty() {
                ok = false;
                let d = GapVector { gaps: exps };
                note = format!("; class {d} has a coefficient but no fillings");
            }
        }
        let mut total = BigUint::zero();
        for count in census.values() {
            total += count;
        }
        let lhs = format!("{} classes / {} fillings", census.len(), total);
        let rhs = format!("{} classes / {} fillings", classes, exp_moment(poly));
        let ok = ok && lhs == rhs;
        Ok((ok, lhs, format!("{rhs}{note}")))
    };
    match run() {
        Ok((ok, lhs, rhs)) => {
            let mut c = case(identity, detail, ok, lhs, rhs);
            if noted && c.status == CaseStatus::Pass {
                c.status = CaseStatus::ErratumNoted;
            }
            c
        }
        Err(e) => error_case(identity, detail, &e),
    }
}

fn verify_gap_refinement(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "gap-refinement";
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n as usize {
        for m in 1..=bounds.max_m as usize {
            let detail = format!("n={n}, m={m}");
            let run = |cases: &mut Vec<VerifyCase>| -> Result<()> {
                let book = plain_book(n, m)?;
                if book.total_cells() > budget.max_enumeration_cells {
                    return Ok(());
                }
                cases.push(census_against_genfun(
                    IDENT,
                    format!("{detail}: selberg census vs genfun"),
                    &sb_genfun(n as u64, m as u64),
                    &book,
                    ConstraintKind::Selberg,
                    budget,
                    false,
                ));
                cases.push(census_against_genfun(
                    IDENT,
                    format!("{detail}: young census vs genfun"),
                    &yb_genfun(n as u64, m as u64),
                    &book,
                    ConstraintKind::Young,
                    budget,
                    false,
                ));
                Ok(())
            };
            if let Err(e) = run(&mut cases) {
                cases.push(error_case(IDENT, detail, &e));
            }
        }
    }

    // Armed books use the long gap form, whose leading entry is carried by
    // the variable t0.  The first case is marked as an erratum note: the
    // boundary-variable convention is pinned down by this very comparison.
    let armed: [(usize, Vec<u32>, Vec<u32>); 3] = [
        (1, vec![1], vec![0]),
        (2, vec![1], vec![1]),
        (2, vec![1, 0], vec![1, 0]),
    ];
    for (idx, (n, rvec, svec)) in armed.iter().enumerate() {
        let base = format!("n={n}, r={rvec:?}, s={svec:?}");
        let run = |cases: &mut Vec<VerifyCase>| -> Result<()> {
            let book = nrs_book(*n, rvec, svec, false)?;
            if book.total_cells() > budget.max_enumeration_cells {
                return Ok(());
            }
            let sb_poly = sb_genfun_nrs(*n as u64, &widen(rvec), &widen(svec))?;
            let yb_poly = yb_genfun_nrs(*n as u64, &widen(rvec), &widen(svec))?;
            let note = if idx == 0 {
                "; leading boundary gap carried by t0"
            } else {
                ""
            };
            cases.push(census_against_genfun(
                IDENT,
                format!("{base}: selberg census vs genfun{note}"),
                &sb_poly,
                &book,
                ConstraintKind::Selberg,
                budget,
                idx == 0,
            ));
            cases.push(census_against_genfun(
                IDENT,
                format!("{base}: young census vs genfun"),
                &yb_poly,
                &book,
                ConstraintKind::Young,
                budget,
                false,
            ));
            Ok(())
        };
        if let Err(e) = run(&mut cases) {
            cases.push(error_case(IDENT, base, &e));
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// permutation-bijection: letter words against minus-book fillings, with
// both directions of the correspondence round-tripped.

fn verify_permutation_bijection(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "permutation-bijection";
    const ALPHABET_CAP: u32 = 10;
    let mut cases = Vec::new();
    for n in 1..=ALPHABET_CAP {
        // At n = 1 the alphabet size is independent of m, so the page count
        // only redistributes arms; cap it at the grid bound.
        let m_cap = if n == 1 { bounds.max_m } else { ALPHABET_CAP };
        for m in 0..=m_cap {
            for r in 0..=ALPHABET_CAP {
                for s in 0..=ALPHABET_CAP {
                    let letters = (r + s + 1) * n + m * (n * (n - 1) / 2);
                    if letters > ALPHABET_CAP {
                        continue;
                    }
                    // Without pages there is nowhere to hang arm cells.
                    if m == 0 && (r > 0 || s > 0) {
                        continue;
                    }
                    let detail = format!("n={n}, r={r}, s={s}, m={m}");
                    let result = bijection_point(n, r, s, m, budget);
                    match result {
                        Ok(c) => cases.push(with_identity(IDENT, detail, c)),
                        Err(e) => cases.push(error_case(IDENT, detail, &e)),
                    }
                }
            }
        }
    }
    cases
}

struct PointOutcome {
    ok: bool,
    lhs: String,
    rhs: String,
}

fn with_identity(identity: &str, detail: String, outcome: PointOutcome) -> VerifyCase {
    case(identity, detail, outcome.ok, outcome.lhs, outcome.rhs)
}

fn bijection_point(n: u32, r: u32, s: u32, m: u32, budget: &Budget) -> Result<PointOutcome> {
    let formula = sp_count(n as u64, r as u64, s as u64, m as u64)?;
    let (rvec, svec) = split_arms(r, s, m as usize);
    let book = if m == 0 {
        BookShape::diagonal_chain(n as usize)?
    } else {
        nrs_book(n as usize, &rvec, &svec, true)?
    };

    let mut trips_ok = true;

    // Fillings map to valid words and back to themselves.
    let mut filling_count = 0u64;
    let mut iter = enumerate_fillings(&book, ConstraintKind::Selberg, budget, None)?;
    while let Some(labels) = iter.next_labels() {
        filling_count += 1;
        let filling = Filling::new(labels.to_vec())?;
        let word = book_to_permutation(&book, &filling)?;
        let (_, back) = permutation_to_book(&word, &rvec, &svec)?;
        if back.labels() != filling.labels() {
            trips_ok = false;
        }
    }

    // Words map to valid fillings and back to themselves.
    let mut word_count = 0u64;
    let mut iter = enumerate_selberg_permutations(n, r, s, m, budget, None)?;
    while let Some(word) = iter.next_permutation() {
        word_count += 1;
        let (image, filling) = permutation_to_book(&word, &rvec, &svec)?;
        let back = book_to_permutation(&image, &filling)?;
        if back.word() != word.word() {
            trips_ok = false;
        }
    }

    let lhs = format!(
        "{word_count} words / {filling_count} fillings / round trips {}",
        if trips_ok { "ok" } else { "broken" }
    );
    let rhs = format!("{formula} words / {formula} fillings / round trips ok");
    Ok(PointOutcome {
        ok: lhs == rhs,
        lhs,
        rhs,
    })
}

// ---------------------------------------------------------------------------
// selberg-exact: the gamma-factor evaluation at half-integer parameters
// against the counting ratio, with every root of pi cancelling.

fn verify_selberg_exact(bounds: &VerifyBounds) -> Vec<VerifyCase> {
    const IDENT: &str = "selberg-exact";
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n as u64 {
        for r in 0..=bounds.max_rs as u64 {
            for s in 0..=bounds.max_rs as u64 {
                for m in 0..=bounds.max_m as u64 {
                    let detail = format!("n={n}, alpha={}, beta={}, gamma={m}/2", r + 1, s + 1);
                    let run = || -> Result<Vec<VerifyCase>> {
                        let exact = selberg_exact_half(n, r, s, m)?;
                        let mut out = vec![eq_case(
                            IDENT,
                            format!("{detail}: residual pi power"),
                            &exact.half_pi_power(),
                            &0i64,
                        )];
                        if exact.half_pi_power() == 0 {
                            let value = exact.into_rational()?;
                            let ratio = selberg_combinatorial(n, r, s, m)?;
                            out.push(eq_case(
                                IDENT,
                                format!("{detail}: gamma product vs counting ratio"),
                                &value,
                                &ratio,
                            ));
                        }
                        Ok(out)
                    };
                    push_checked(&mut cases, IDENT, &detail, run());
                }
            }
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// staircase-formulas: the armed, blocked and truncated closed forms
// against down-set counts of their assembled books.

fn verify_staircase_formulas(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "staircase-formulas";
    let mut cases = Vec::new();
    let cell_cap = budget.max_enumeration_cells;

    // Armed staircase books, any split of arms over the pages.
    for n in 1..=bounds.max_n as usize {
        for m in 1..=bounds.max_m as usize {
            for rvec in arm_vectors(m, bounds.max_rs) {
                for svec in arm_vectors(m, bounds.max_rs) {
                    let detail = format!("arm book n={n}, r={rvec:?}, s={svec:?}");
                    let run = || -> Result<Vec<VerifyCase>> {
                        let book = nrs_book(n, &rvec, &svec, false)?;
                        if book.total_cells() > cell_cap {
                            return Ok(Vec::new());
                        }
                        let formula = yb_count_nrs(n as u64, &widen(&rvec), &widen(&svec))?;
                        let dp =
                            BigInt::from(count_fillings(&book, ConstraintKind::Young, budget)?);
                        Ok(vec![eq_case(IDENT, detail.clone(), &formula, &dp)])
                    };
                    push_checked(&mut cases, IDENT, &detail, run());
                }
            }
        }
    }

    // The one-page closed form written directly in double factorials.
    for n in 1..=bounds.max_n as u64 {
        for r in 0..=bounds.max_rs as u64 {
            for s in 0..=bounds.max_rs as u64 {
                let detail = format!("staircase with arms n={n}, r={r}, s={s}");
                let run = || -> Result<Vec<VerifyCase>> {
                    let book = nrs_book(n as usize, &[r as u32], &[s as u32], false)?;
                    if book.total_cells() > cell_cap {
                        return Ok(Vec::new());
                    }
                    let formula = syt_truncated_staircase(n, r, s)?;
                    let dp = BigInt::from(count_fillings(&book, ConstraintKind::Young, budget)?);
                    Ok(vec![eq_case(IDENT, detail.clone(), &formula, &dp)])
                };
                push_checked(&mut cases, IDENT, &detail, run());
            }
        }
    }

    // Doubled-block books (every diagonal block of size k = 2).
    for n in 1..=bounds.max_n as usize {
        for m in 1..=bounds.max_m as usize {
            for rvec in arm_vectors(m, bounds.max_rs) {
                for svec in arm_vectors(m, bounds.max_rs) {
                    let detail = format!("doubled blocks k=2, n={n}, r={rvec:?}, s={svec:?}");
                    let run = || -> Result<Vec<VerifyCase>> {
                        let book = block_book(2, n, &rvec, &svec)?;
                        if book.total_cells() > cell_cap {
                            return Ok(Vec::new());
                        }
                        let formula =
                            yb_count_ars_kn(2, n as u64, &widen(&rvec), &widen(&svec))?;
                        let dp =
                            BigInt::from(count_fillings(&book, ConstraintKind::Young, budget)?);
                        Ok(vec![eq_case(IDENT, detail.clone(), &formula, &dp)])
                    };
                    push_checked(&mut cases, IDENT, &detail, run());
                }
            }
        }
    }

    // Truncated diagrams: the k = 2 closed form against both the one-page
    // block book and the equivalent truncated shape itself.
    for n in 1..=bounds.max_n as u32 {
        for r in 0..=bounds.max_rs {
            for s in 0..=bounds.max_rs {
                let detail = format!("truncated k=2, n={n}, r={r}, s={s}");
                let run = || -> Result<Vec<VerifyCase>> {
                    let book = block_book(2, n as usize, &[r], &[s])?;
                    if book.total_cells() > cell_cap {
                        return Ok(Vec::new());
                    }
                    let formula = syt_truncated_panova(2, n as u64, r as u64, s as u64)?;
                    let dp = BigInt::from(count_fillings(&book, ConstraintKind::Young, budget)?);
                    let mut out = vec![eq_case(
                        IDENT,
                        format!("{detail}: block book"),
                        &formula,
                        &dp,
                    )];
                    let outer = Partition::new(vec![2 * n + s; (r + 2 * n) as usize])?;
                    let inner = truncation_inner(2, n)?;
                    let page = PageShape::truncated(outer, inner)?;
                    let order = OrderConstraints::young_for_page(&page);
                    let tableaux = BigInt::from(count_linear_extensions(&order, budget)?);
                    out.push(eq_case(
                        IDENT,
                        format!("{detail}: truncated diagram"),
                        &formula,
                        &tableaux,
                    ));
                    Ok(out)
                };
                push_checked(&mut cases, IDENT, &detail, run());
            }
        }
    }

    // The doubled-block closed form rests on reading the pairwise exponent
    // as k^2 m; reconstruct one value from the exact integral to pin the
    // convention down, and mark the row as an erratum note.
    {
        let detail =
            "doubled blocks k=2, n=2, r=[1], s=[0]: pair exponent k^2*m, checked via the exact integral"
                .to_string();
        let run = || -> Result<Vec<VerifyCase>> {
            let (n, k, r, s) = (2u64, 2u64, 1u64, 0u64);
            let book = block_book(k as u32, n as usize, &[r as u32], &[s as u32])?;
            let cells = book.total_cells() as u64;
            let formula = BigRational::from(yb_count_ars_kn(k, n, &[r], &[s])?);
            let params = SelbergParams::new(
                n,
                BigRational::from(BigInt::from(k * r + 1)),
                BigRational::from(BigInt::from(k * s + 1)),
                BigRational::new(BigInt::from(k * k), BigInt::from(2u32)),
            )?;
            let integral = selberg_exact(&params)?.into_rational()?;
            let mut factor = BigRational::from(factorial(cells) / factorial(n));
            let f = |x: u64| BigRational::from(superfactorial(x));
            factor *= f(k).pow(n as i32) * f(r) * f(s) / f(k * n + r + s);
            let reconstructed = factor * integral;
            Ok(vec![noted_case(
                IDENT,
                detail.clone(),
                &formula,
                &reconstructed,
            )])
        };
        push_checked(&mut cases, IDENT, &detail, run());
    }

    cases
}

/// South-west truncation pattern for the `k`-blocked staircase on `n`
/// diagonal blocks: reading up from the bottom row, `k - 1` rows lose `k*i`
/// cells and the next one loses `k*i - 1`, for `i = 1, …, n`.
fn truncation_inner(k: u32, n: u32) -> Result<Partition> {
    let mut parts = Vec::new();
    for i in (1..=n).rev() {
        for _ in 0..k - 1 {
            parts.push(k * i);
        }
        parts.push(k * i - 1);
    }
    Partition::new(parts)
}

// ---------------------------------------------------------------------------
// skew-double-erratum: the alternate two-arm closed form differs from the
// correct one by exactly 2^n, while the correct one matches the
// determinant count of its skew shape.

fn verify_skew_double(bounds: &VerifyBounds) -> Vec<VerifyCase> {
    const IDENT: &str = "skew-double-erratum";
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n as u64 {
        for r1 in 0..=bounds.max_rs as u64 {
            for r2 in 0..=bounds.max_rs as u64 {
                for s1 in 0..=bounds.max_rs as u64 {
                    for s2 in 0..=bounds.max_rs as u64 {
                        let detail = format!("n={n}, r=({r1},{r2}), s=({s1},{s2})");
                        let run = || -> Result<Vec<VerifyCase>> {
                            let good = syt_skew_double(n, r1, r2, s1, s2)?;
                            let alt = syt_skew_double_alternate(n, r1, r2, s1, s2)?;
                            let doubled = &good * BigInt::from(2u32).pow(n as u32);
                            let mut out = vec![noted_case(
                                IDENT,
                                format!("{detail}: alternate form = 2^n * pair formula"),
                                &alt,
                                &doubled,
                            )];
                            let mut outer =
                                vec![(r2 + n + s1) as u32; (r1 + n) as usize];
                            outer.extend(std::iter::repeat((r2 + n) as u32).take(s2 as usize));
                            let inner = vec![r2 as u32; r1 as usize];
                            let det = skew_count_determinant(
                                &Partition::new(outer)?,
                                &Partition::new(inner)?,
                            )?;
                            out.push(eq_case(
                                IDENT,
                                format!("{detail}: pair formula vs skew determinant"),
                                &good,
                                &det,
                            ));
                            Ok(out)
                        };
                        push_checked(&mut cases, IDENT, &detail, run());
                    }
                }
            }
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// integral-identities: moments of the open-cell generating function, and
// the box-integral form of the block-diagonal count.

fn verify_integral_identities(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "integral-identities";
    let mut cases = Vec::new();

    // Moment identity: substituting 1 for every variable after dividing by
    // the gap factorials turns the open-cell genfun into the gamma-product
    // value, scaled by cells!/n!.
    for n in 1..=bounds.max_n as u64 {
        for m in 1..=bounds.max_m as usize {
            for r in 0..=bounds.max_rs as u64 {
                for s in 0..=bounds.max_rs as u64 {
                    let detail = format!("moment n={n}, m={m}, r={r}, s={s}");
                    let run = || -> Result<Vec<VerifyCase>> {
                        let (rvec, svec) = split_arms(r as u32, s as u32, m);
                        let poly = sb_genfun_nrs_minus(n, &widen(&rvec), &widen(&svec))?;
                        let moment = exp_moment(&poly);
                        let cells = (r + s + 1) * n + (m as u64) * n * (n - 1) / 2;
                        let selberg = selberg_exact_half(n, r, s, m as u64)?.into_rational()?;
                        let expected =
                            BigRational::from(factorial(cells) / factorial(n)) * selberg;
                        Ok(vec![eq_case(IDENT, detail.clone(), &moment, &expected)])
                    };
                    push_checked(&mut cases, IDENT, &detail, run());
                }
            }
        }
    }

    // Box integral: the fillings of a small block-diagonal book, scaled by
    // n!/cells!, equal the integral of the matching weight over the cube.
    for r in 0..=1u32 {
        for s in 0..=1u32 {
            let detail = format!("box integral a=(1,2), r={r}, s={s}, m=1");
            let run = || -> Result<Vec<VerifyCase>> {
                let page =
                    PageShape::ars_staircase(Composition::new(vec![1, 2]), r, s, true)?;
                let book = BookShape::assemble(vec![page])?;
                let count = BigInt::from(count_fillings(&book, ConstraintKind::Selberg, budget)?);
                let cells = book.total_cells() as u64;
                let lhs = BigRational::from(count * factorial(2)) / BigRational::from(factorial(cells));
                let p = [r as u64, 2 * r as u64];
                let q = [s as u64, 2 * s as u64];
                let e = [2u64];
                let integral = box_integral_exact(&p, &q, &e)?;
                Ok(vec![eq_case(IDENT, detail.clone(), &lhs, &integral)])
            };
            push_checked(&mut cases, IDENT, &detail, run());
        }
    }

    cases
}

// ---------------------------------------------------------------------------
// freeze: every filling whose gaps run 1, 2, …, ℓ-1 from diagonal k+1 has
// its whole diagonal block forced, and any tampering is caught.

fn verify_freeze(bounds: &VerifyBounds, budget: &Budget) -> Vec<VerifyCase> {
    const IDENT: &str = "freeze";
    let mut cases = Vec::new();
    for n in 2..=bounds.max_n as usize {
        let detail = format!("single staircase page, n={n}");
        let run = |cases: &mut Vec<VerifyCase>| -> Result<()> {
            let book = plain_book(n, 1)?;
            if book.total_cells() > budget.max_enumeration_cells {
                return Ok(());
            }
            for kind in [ConstraintKind::Young, ConstraintKind::Selberg] {
                let (qualifying, frozen, mutants, caught) =
                    freeze_sweep(&book, n, kind, budget)?;
                cases.push(case(
                    IDENT,
                    format!("{detail}: {kind} fillings with a qualifying gap run freeze"),
                    qualifying > 0 && frozen == qualifying,
                    format!("{frozen} frozen"),
                    format!("{qualifying} qualifying (expected all, nonzero)"),
                ));
                if mutants > 0 {
                    cases.push(case(
                        IDENT,
                        format!("{detail}: {kind} fillings, tampered blocks are detected"),
                        caught == mutants,
                        format!("{caught} caught"),
                        format!("{mutants} tampered"),
                    ));
                }
            }
            Ok(())
        };
        if let Err(e) = run(&mut cases) {
            cases.push(error_case(IDENT, detail, &e));
        }
    }
    cases
}

/// Walks every filling of a one-page staircase book and every diagonal
/// window with the qualifying gap run, returning `(qualifying, frozen,
/// mutants, caught)` for the frozen-block check and its tampered variants.
fn freeze_sweep(
    book: &BookShape,
    n: usize,
    kind: ConstraintKind,
    budget: &Budget,
) -> Result<(u64, u64, u64, u64)> {
    let mut qualifying = 0u64;
    let mut frozen = 0u64;
    let mut mutants = 0u64;
    let mut caught = 0u64;
    let page = &book.pages()[0];
    let mut iter = enumerate_fillings(book, kind, budget, None)?;
    while let Some(labels) = iter.next_labels() {
        let filling = Filling::new(labels.to_vec())?;
        let diag: Vec<i64> = (0..n)
            .map(|i| filling.label(book.diagonal_id(i)) as i64)
            .collect();
        for k in 0..n {
            for len in 2..=n - k {
                let runs = (1..len).all(|t| diag[k + t] - diag[k + t - 1] - 1 == t as i64);
                if !runs {
                    continue;
                }
                qualifying += 1;
                if check_freeze(book, &filling, k, len, kind)? {
                    frozen += 1;
                }
                // Swap the first block cell with any other off-diagonal
                // cell: the gaps survive, the forced entry cannot.
                let target = book.cell_id(
                    0,
                    page.cell_at(k as u32 + 1, k as u32 + 2)
                        .expect("staircase block cell exists"),
                );
                if let Some(partner) = (n..book.total_cells()).find(|&id| id != target) {
                    let mut tampered = filling.labels().to_vec();
                    tampered.swap(target, partner);
                    mutants += 1;
                    if !check_freeze(book, &Filling::new(tampered)?, k, len, kind)? {
                        caught += 1;
                    }
                }
            }
        }
    }
    Ok((qualifying, frozen, mutants, caught))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> VerifyBounds {
        VerifyBounds {
            max_n: 2,
            max_m: 1,
            max_rs: 1,
        }
    }

    fn assert_clean(report: &VerifyReport) {
        for case in &report.cases {
            assert!(
                !case.status.is_failure(),
                "{} [{}]: {} vs {}",
                case.identity,
                case.detail,
                case.lhs,
                case.rhs
            );
        }
        assert!(!report.cases.is_empty());
    }

    #[test]
    fn unknown_identity_is_an_error() {
        let err = run_identity("no-such-identity", &VerifyBounds::default(), &Budget::default());
        assert!(err.is_err());
        assert_eq!(identity_names().len(), 10);
    }

    #[test]
    fn skew_prime_divides() {
        let report = run_identity("skew-prime", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
        assert_eq!(report.cases.len(), 1);
    }

    #[test]
    fn count_lattice_small_grid() {
        let report = run_identity("count-lattice", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
    }

    #[test]
    fn gap_refinement_notes_the_boundary_convention_once() {
        let report = run_identity("gap-refinement", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
        assert_eq!(report.errata(), 1);
    }

    #[test]
    fn selberg_exact_small_grid() {
        let report = run_identity("selberg-exact", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
    }

    #[test]
    fn staircase_formulas_small_grid() {
        let report = run_identity("staircase-formulas", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
        // The integral reconstruction of the pair exponent is always noted.
        assert_eq!(report.errata(), 1);
    }

    #[test]
    fn skew_double_notes_every_grid_point() {
        let bounds = tiny();
        let report = run_identity("skew-double-erratum", &bounds, &Budget::default()).unwrap();
        assert_clean(&report);
        // One noted row and one determinant row per grid point.
        let points = (bounds.max_n as usize) * 16;
        assert_eq!(report.cases.len(), 2 * points);
        assert_eq!(report.errata(), points);
    }

    #[test]
    fn integral_identities_small_grid() {
        let report = run_identity("integral-identities", &tiny(), &Budget::default()).unwrap();
        assert_clean(&report);
    }

    #[test]
    fn freeze_sweep_detects_tampering() {
        let bounds = VerifyBounds {
            max_n: 3,
            max_m: 1,
            max_rs: 1,
        };
        let report = run_identity("freeze", &bounds, &Budget::default()).unwrap();
        assert_clean(&report);
        // n = 3 admits tampering cases for both filling kinds.
        assert!(report
            .cases
            .iter()
            .any(|c| c.detail.contains("tampered") && c.status == CaseStatus::Pass));
    }

    #[test]
    fn reports_are_deterministic() {
        let bounds = tiny();
        let budget = Budget::default();
        let first = run_identity("gap-refinement", &bounds, &budget).unwrap();
        let second = run_identity("gap-refinement", &bounds, &budget).unwrap();
        assert_eq!(first, second);
    }
}
