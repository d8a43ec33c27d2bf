//! Exact evaluation of every closed-form count in the library, the Selberg
//! integral at (half-)integer parameters, and independent counting oracles
//! to check them against.

mod arith;
mod counts;
mod oracles;

pub use arith::{
    binomial, double_factorial, factorial, rational_to_integer, superfactorial, PiHalfScalar,
};
pub use counts::{
    sb_count, sb_full_count, sb_minus_count, sb_yb_factor, sb_yb_factor_ars,
    selberg_combinatorial, selberg_exact, selberg_exact_half, sp_count, syt_skew_double,
    syt_skew_double_alternate, syt_truncated_panova, syt_truncated_staircase, yb_count,
    yb_count_ars_kn, yb_count_nrs, SelbergParams,
};
pub use oracles::{
    box_integral_exact, hook_count_shifted, hook_count_straight, skew_count_determinant,
};
