//! Closed forms for the consecutive sums `S_n = Σ_{i=1..n} T_i`.
//!
//! The shape of the closed form depends on whether `p - q = 1`:
//!
//! * on the line `p - q = 1` the roots are `q` and `1`, geometric series
//!   identities apply, and
//!   `S_n(U) = (q·U_n - n)/(q - 1)` (for `q ≠ 1`),
//!   `S_n(V) = U_{n+1} + n - 1`;
//! * off the line, the recurrence itself telescopes into
//!   `S_n(U) = (U_{n+1} - q·U_n - 1)/(p - q - 1)`,
//!   `S_n(V) = (V_{n+1} - q·V_n - p + 2q)/(p - q - 1)`.
//!
//! The off-line forms are pure recurrence algebra, so they hold for *every*
//! pair with `p - q ≠ 1`, degenerate pairs included; the on-line forms hold
//! for every pair with `p - q = 1` except that the first kind has no closed
//! form at `(p, q) = (2, 1)` (the divisor `q - 1` vanishes and the sum
//! `Σ i` is genuinely quadratic, not of the formula's shape).

use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{Branch, SumResult};
use crate::sequence_core::{pair_window, term_fast, Kind, SequenceParams};
use crate::ExactInt;

/// Evaluates `Σ_{i=1..n} T_i` in closed form.
///
/// `n = 0` is accepted as the empty sum and returns `0` (a documented
/// extension of the `n ≥ 1` identities).
///
/// # Errors
///
/// [`Error::UnsupportedCase`] for the first kind at `(p, q) = (2, 1)` —
/// the only point where neither branch's formula applies.
pub fn consecutive_sum(params: SequenceParams, kind: Kind, n: u64) -> Result<SumResult> {
    let branch = params.branch();
    if n == 0 {
        return Ok(SumResult::whole(ExactInt::zero(), branch));
    }
    match (branch, kind) {
        (Branch::PMinusQIsOne, Kind::FirstKind) => {
            let q = params.q();
            if q == 1 {
                return Err(Error::UnsupportedCase(format!(
                    "the consecutive sum of the first kind has no closed form of this \
                     shape at {params}: p - q = 1 requires q != 1"
                )));
            }
            let u_n = term_fast(params, Kind::FirstKind, n);
            let numerator = u_n * q - ExactInt::from(n);
            SumResult::from_division(numerator, ExactInt::from(q) - 1, branch)
        }
        (Branch::PMinusQIsOne, Kind::SecondKind) => {
            let u_next = term_fast(params, Kind::FirstKind, n + 1);
            Ok(SumResult::whole(u_next + ExactInt::from(n) - 1, branch))
        }
        (Branch::PMinusQIsNotOne, _) => {
            let [_, (u_n, v_n), (u_next, v_next)] = pair_window(params, n);
            let q = params.q();
            let numerator = match kind {
                Kind::FirstKind => u_next - u_n * q - 1,
                // Σ V telescopes to (V_{n+1} - q·V_n - V_1 + q·V_0 ... ) with
                // seed terms p - 2q.
                Kind::SecondKind => {
                    v_next - v_n * q - ExactInt::from(params.p() as i128 - 2 * params.q() as i128)
                }
            };
            let denominator = ExactInt::from(params.p() as i128 - params.q() as i128 - 1);
            SumResult::from_division(numerator, denominator, branch)
        }
    }
}

/// Alternative closed form for `Σ_{i=1..n} U_i` on the line `p - q = 1`,
/// written purely in powers of `q`:
/// `(q^{n+1} - (q - 1)·n - q) / (q - 1)²`.
///
/// It evaluates no sequence terms at all, which makes it an independent
/// cross-check of [`consecutive_sum`] on the shared domain.
///
/// # Errors
///
/// [`Error::UnsupportedCase`] unless `p - q = 1` and `q ≠ 1`.
pub fn consecutive_sum_powerform(params: SequenceParams, n: u64) -> Result<SumResult> {
    if params.branch() != Branch::PMinusQIsOne {
        return Err(Error::UnsupportedCase(format!(
            "the power form of the consecutive sum requires p - q = 1; got {params}"
        )));
    }
    if params.q() == 1 {
        return Err(Error::UnsupportedCase(format!(
            "the power form of the consecutive sum requires q != 1; got {params}"
        )));
    }
    let q = ExactInt::from(params.q());
    let q_minus_1 = &q - 1;
    let numerator = Pow::pow(&q, n + 1) - &q_minus_1 * ExactInt::from(n) - &q;
    let denominator = &q_minus_1 * &q_minus_1;
    SumResult::from_division(numerator, denominator, Branch::PMinusQIsOne)
}
